// bstar: build, embed, enumerate, verify and sweep cycles of bubble-sort star graphs.
//
// Exit status: 0 success, 1 violations or internal failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bstar/certificate.hpp"
#include "bstar/checker.hpp"
#include "bstar/embedder.hpp"
#include "bstar/sweep.hpp"
#include "bstar/topology.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kDefaultMaxN = 10;
constexpr int kMaxMaterializedN = 8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int effective_max_n(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("BST_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("BST_MAX_N is not an integer: ") + env);
    }
  }
  return kDefaultMaxN;
}

void check_dimension(int n, int max_n) {
  if (n < 3) throw UsageError("n must be at least 3");
  if (n > max_n) {
    throw UsageError("n = " + std::to_string(n) + " exceeds the dimension cap " + std::to_string(max_n) +
                     " (raise with --max-n or BST_MAX_N)");
  }
}

// Writes to the named file, or stdout for "" / "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

bstar::EdgeRef parse_edge_flag(int n, const std::string& text) {
  try {
    return bstar::parse_edge(n, text);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(std::string("--edge: ") + ex.what());
  }
}

std::vector<std::uint64_t> parse_lengths(const std::string& text) {
  std::vector<std::uint64_t> out;
  if (text == "all") return out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw UsageError("--lengths: bad length '" + token + "'");
    }
  }
  if (out.empty()) throw UsageError("--lengths: empty list");
  return out;
}

struct GenArgs {
  int n = 0;
  std::string format = "edgelist";
  std::string out;
};

int run_gen(const GenArgs& a) {
  std::cerr << "# gen n=" << a.n << " format=" << a.format << " out=" << (a.out.empty() ? "-" : a.out) << '\n';
  if (a.n < 2 || a.n > kMaxMaterializedN) {
    throw UsageError("gen materializes the whole graph; n must be in [2, " + std::to_string(kMaxMaterializedN) + "]");
  }
  Output out(a.out);
  if (a.format == "jsonl") {
    bstar::write_edge_jsonl(out.stream(), a.n);
  } else {
    bstar::write_edge_list(out.stream(), a.n);
  }
  return 0;
}

struct EmbedArgs {
  int n = 0;
  std::string edge;
  std::uint64_t length = 0;
  std::size_t count = 4;
  std::string out;
  int max_n = 0;
};

int run_embed(const EmbedArgs& a) {
  const int max_n = effective_max_n(a.max_n);
  std::cerr << "# embed n=" << a.n << " edge=" << a.edge << " length=" << a.length << " count=" << a.count
            << " out=" << (a.out.empty() ? "-" : a.out) << " max_n=" << max_n << '\n';
  check_dimension(a.n, max_n);
  const bstar::EdgeRef e = parse_edge_flag(a.n, a.edge);
  if (a.length < 4 || a.length % 2 != 0 || a.length > bstar::factorial(a.n)) {
    throw UsageError("--length must be an even number in [4, n!]");
  }
  if (a.count == 0) throw UsageError("--count must be positive");

  const auto cycles = bstar::embed(bstar::EmbedRequest{a.n, e, a.length, a.count});
  std::set<std::vector<std::uint64_t>> distinct;
  for (const auto& c : cycles) {
    if (const auto bad = bstar::validate(c, e, a.length)) {
      std::cerr << "internal error: produced an invalid cycle: " << bad->detail << '\n';
      return kExitViolation;
    }
    distinct.insert(bstar::canonical_key(c));
  }
  if (distinct.size() != cycles.size()) {
    std::cerr << "internal error: produced duplicate cycles\n";
    return kExitViolation;
  }
  Output out(a.out);
  for (const auto& c : cycles) out.stream() << bstar::to_jsonl(bstar::make_certificate(e, c)) << '\n';
  std::cerr << "wrote " << cycles.size() << " distinct certificates of length " << a.length << " through ("
            << bstar::format_perm(e.u) << ", " << bstar::format_perm(e.v) << ") [" << e.cls.to_string() << "]\n";
  return 0;
}

struct OracleArgs {
  int n = 0;
  std::string edge;
  std::uint64_t length = 0;
  std::size_t limit = 0;
  bool force = false;
  std::string out;
  int max_n = 0;
};

int run_oracle(const OracleArgs& a) {
  const int max_n = effective_max_n(a.max_n);
  std::cerr << "# oracle n=" << a.n << " edge=" << a.edge << " length=" << a.length
            << " limit=" << (a.limit == 0 ? std::string("none") : std::to_string(a.limit))
            << " force=" << (a.force ? "yes" : "no") << " out=" << (a.out.empty() ? "-" : a.out) << '\n';
  check_dimension(a.n, max_n);
  const bstar::EdgeRef e = parse_edge_flag(a.n, a.edge);
  std::vector<bstar::CycleWitness> cycles;
  try {
    cycles = bstar::enumerate_cycles(a.n, e, a.length,
                                     a.limit == 0 ? std::numeric_limits<std::size_t>::max() : a.limit, a.force);
  } catch (const bstar::TractabilityError& ex) {
    throw UsageError(std::string(ex.what()) + "; pass --force to run anyway");
  }
  Output out(a.out);
  for (const auto& c : cycles) {
    out.stream() << bstar::to_jsonl(bstar::make_certificate(e, bstar::canonical_form(c))) << '\n';
  }
  std::cerr << "found " << cycles.size() << " cycles of length " << a.length << '\n';
  return 0;
}

struct VerifyArgs {
  std::string file;
  std::string edge;
  std::uint64_t length = 0;
};

int run_verify(const VerifyArgs& a) {
  std::cerr << "# verify file=" << a.file << " edge=" << (a.edge.empty() ? "any" : a.edge)
            << " length=" << (a.length == 0 ? std::string("any") : std::to_string(a.length)) << '\n';
  std::ifstream in(a.file);
  if (!in) throw UsageError("cannot open " + a.file);

  std::size_t checked = 0;
  std::size_t violations = 0;
  std::set<std::pair<std::string, std::vector<std::uint64_t>>> distinct;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    ++checked;
    auto report = [&](const std::string& why) {
      ++violations;
      std::cout << a.file << ":" << line_no << ": " << why << '\n';
    };
    try {
      const bstar::Certificate cert = bstar::parse_certificate(line);
      const bstar::EdgeRef e = bstar::classify_edge(cert.edge_u, cert.edge_v);
      if (cert.n != e.dimension() || cert.cycle.dimension() != cert.n) {
        report("dimension field does not match the vertices");
        continue;
      }
      if (!a.edge.empty() && !(bstar::parse_edge(cert.n, a.edge) == e)) {
        report("certificate is for a different edge");
        continue;
      }
      if (a.length != 0 && cert.length != a.length) {
        report("certificate length " + std::to_string(cert.length) + " differs from " + std::to_string(a.length));
        continue;
      }
      if (const auto bad = bstar::validate(cert.cycle, e, cert.length)) {
        report(bad->detail);
        continue;
      }
      distinct.emplace(bstar::format_perm(e.u) + ":" + bstar::format_perm(e.v) + "/" + std::to_string(cert.length),
                       bstar::canonical_key(cert.cycle));
    } catch (const std::exception& ex) {
      report(ex.what());
    }
  }
  std::cout << "checked " << checked << " certificates, " << distinct.size() << " distinct valid, " << violations
            << " violations\n";
  return violations == 0 ? 0 : kExitViolation;
}

struct SweepArgs {
  int n = 0;
  std::string edges = "all";
  std::string lengths = "all";
  std::size_t require = 4;
  unsigned workers = 1;
  std::string out;
  int max_n = 0;
};

int run_sweep(const SweepArgs& a) {
  const int max_n = effective_max_n(a.max_n);
  std::cerr << "# sweep n=" << a.n << " edges=" << a.edges << " lengths=" << a.lengths << " require=" << a.require
            << " workers=" << a.workers << " out=" << (a.out.empty() ? "-" : a.out) << " max_n=" << max_n << '\n';
  check_dimension(a.n, max_n);
  bstar::SweepOptions options;
  options.n = a.n;
  try {
    options.edges = bstar::EdgeSelection::parse(a.edges);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(std::string("--edges: ") + ex.what());
  }
  if (options.edges.all && a.n > kMaxMaterializedN) throw UsageError("--edges all needs n <= 8; use sample:K:SEED");
  options.lengths = parse_lengths(a.lengths);
  for (auto l : options.lengths) {
    if (l < 4 || l % 2 != 0 || l > bstar::factorial(a.n)) throw UsageError("--lengths: " + std::to_string(l) + " is not an even number in [4, n!]");
  }
  options.required = a.require;
  options.workers = a.workers;

  const bstar::SweepReport report = bstar::sweep(options);
  Output out(a.out);
  out.stream() << bstar::report_json(report) << '\n';
  std::cerr << (report.passed() ? "PASS" : "FAIL") << ": " << report.cases << " cases, " << report.failures.size()
            << " failures, " << static_cast<long long>(report.elapsed_ms) << " ms\n";
  return report.passed() ? 0 : kExitViolation;
}

int run_info(int n) {
  std::cerr << "# info n=" << n << '\n';
  if (n < 2) throw UsageError("n must be at least 2");
  const auto [even, odd] = bstar::bipartition_sizes(n);
  std::cout << "n " << n << '\n'
            << "vertices " << bstar::count_vertices(n) << '\n'
            << "degree " << 2 * n - 3 << '\n'
            << "edges " << bstar::count_edges(n) << '\n'
            << "bipartition " << even << ' ' << odd << '\n'
            << "subgraphs " << n << " x BS_" << n - 1 << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycles of every even length through any edge of the bubble-sort star graph BS_n"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write the full edge list of BS_n");
  gen_cmd->add_option("--n", gen.n, "Dimension")->required();
  gen_cmd->add_option("--format", gen.format, "edgelist or jsonl")->check(CLI::IsMember({"edgelist", "jsonl"}));
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  EmbedArgs emb;
  auto* embed_cmd = app.add_subcommand("embed", "Emit distinct cycle certificates through an edge");
  embed_cmd->add_option("--n", emb.n, "Dimension")->required();
  embed_cmd->add_option("--edge", emb.edge, "Edge u:v")->required();
  embed_cmd->add_option("--length", emb.length, "Even cycle length in [4, n!]")->required();
  embed_cmd->add_option("--count", emb.count, "Number of distinct cycles");
  embed_cmd->add_option("--out", emb.out, "Certificate file (default stdout)");
  embed_cmd->add_option("--max-n", emb.max_n, "Dimension cap (default BST_MAX_N or 10)");

  OracleArgs ora;
  auto* oracle_cmd = app.add_subcommand("oracle", "Enumerate cycles through an edge by brute force");
  oracle_cmd->add_option("--n", ora.n, "Dimension")->required();
  oracle_cmd->add_option("--edge", ora.edge, "Edge u:v")->required();
  oracle_cmd->add_option("--length", ora.length, "Cycle length")->required();
  oracle_cmd->add_option("--limit", ora.limit, "Stop after this many cycles (0 = no limit)");
  oracle_cmd->add_flag("--force", ora.force, "Skip the tractability guard (n <= 5 or length <= 12)");
  oracle_cmd->add_option("--out", ora.out, "Certificate file (default stdout)");
  oracle_cmd->add_option("--max-n", ora.max_n, "Dimension cap (default BST_MAX_N or 10)");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Re-check a certificate file");
  verify_cmd->add_option("--file", ver.file, "JSONL certificate file")->required();
  verify_cmd->add_option("--edge", ver.edge, "Require every certificate to be for this edge");
  verify_cmd->add_option("--length", ver.length, "Require every certificate to have this length");

  SweepArgs swp;
  auto* sweep_cmd = app.add_subcommand("sweep", "Embed and check every (edge, length) case");
  sweep_cmd->add_option("--n", swp.n, "Dimension")->required();
  sweep_cmd->add_option("--edges", swp.edges, "all or sample:K:SEED");
  sweep_cmd->add_option("--lengths", swp.lengths, "all or a comma-separated list");
  sweep_cmd->add_option("--require", swp.require, "Distinct cycles required per case");
  sweep_cmd->add_option("--workers", swp.workers, "Worker threads");
  sweep_cmd->add_option("--out", swp.out, "Report file (default stdout)");
  sweep_cmd->add_option("--max-n", swp.max_n, "Dimension cap (default BST_MAX_N or 10)");

  int info_n = 0;
  auto* info_cmd = app.add_subcommand("info", "Print vertex, edge and degree counts");
  info_cmd->add_option("--n", info_n, "Dimension")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*embed_cmd) return run_embed(emb);
    if (*oracle_cmd) return run_oracle(ora);
    if (*verify_cmd) return run_verify(ver);
    if (*sweep_cmd) return run_sweep(swp);
    if (*info_cmd) return run_info(info_n);
  } catch (const UsageError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}
