#include "bstar/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "bstar/certificate.hpp"
#include "bstar/checker.hpp"
#include "bstar/embedder.hpp"

namespace bstar {

namespace {

std::uint64_t parse_unsigned(std::string_view text, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string("bad ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t fnv1a(std::uint64_t h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

struct CaseResult {
  std::size_t certificates = 0;
  std::uint64_t digest = kFnvOffset;
  std::optional<std::string> failure;
};

CaseResult run_case(int n, const EdgeRef& e, std::uint64_t l, std::size_t required, std::vector<char>* cover) {
  CaseResult result;
  std::vector<CycleWitness> cycles;
  try {
    cycles = embed(EmbedRequest{n, e, l, required});
  } catch (const std::exception& ex) {
    result.failure = std::string("embed failed: ") + ex.what();
    return result;
  }
  std::set<std::vector<std::uint64_t>> distinct;
  for (const auto& c : cycles) {
    if (const auto bad = validate(c, e, l)) {
      result.failure = "invalid certificate: " + bad->detail;
      return result;
    }
    distinct.insert(canonical_key(c));
    result.digest = fnv1a(result.digest, to_jsonl(make_certificate(e, c)));
    result.digest = fnv1a(result.digest, "\n");
    if (cover != nullptr) {
      for (const auto& x : c.vertices) (*cover)[static_cast<std::size_t>(rank(x))] = 1;
    }
  }
  result.certificates = cycles.size();
  if (distinct.size() < required) {
    result.failure = "only " + std::to_string(distinct.size()) + " distinct cycles, required " +
                     std::to_string(required);
  }
  return result;
}

}  // namespace

EdgeSelection EdgeSelection::parse(std::string_view text) {
  if (text == "all") return EdgeSelection{};
  constexpr std::string_view prefix = "sample:";
  if (text.substr(0, prefix.size()) != prefix) {
    throw std::invalid_argument("edge selection must be 'all' or 'sample:K:SEED'");
  }
  const std::string_view rest = text.substr(prefix.size());
  const auto colon = rest.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("edge selection must be 'sample:K:SEED'");
  EdgeSelection sel;
  sel.all = false;
  sel.sample = static_cast<std::size_t>(parse_unsigned(rest.substr(0, colon), "sample size"));
  sel.seed = parse_unsigned(rest.substr(colon + 1), "seed");
  return sel;
}

std::vector<EdgeRef> sample_edges(int n, std::size_t count, std::uint64_t seed) {
  if (count > count_edges(n)) throw std::invalid_argument("sample larger than the edge set");
  std::mt19937_64 rng(seed);
  const std::uint64_t order = count_vertices(n);
  const auto degree = static_cast<std::uint64_t>(2 * n - 3);
  std::set<EdgeKey> taken;
  std::vector<EdgeRef> out;
  while (out.size() < count) {
    const Permutation x = unrank(n, rng() % order);
    const Permutation y = neighbors(x)[static_cast<std::size_t>(rng() % degree)];
    if (taken.insert(edge_key(x, y)).second) out.push_back(classify_edge(x, y));
  }
  std::sort(out.begin(), out.end(), [](const EdgeRef& a, const EdgeRef& b) { return edge_key(a) < edge_key(b); });
  return out;
}

SweepReport sweep(const SweepOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const int n = options.n;
  if (n < 3) throw std::invalid_argument("sweep needs n >= 3");

  SweepReport report;
  report.n = n;
  report.required = options.required;
  const std::uint64_t order = count_vertices(n);
  if (options.lengths.empty()) {
    for (std::uint64_t l = 4; l <= order; l += 2) report.lengths.push_back(l);
  } else {
    report.lengths = options.lengths;
    std::sort(report.lengths.begin(), report.lengths.end());
    report.lengths.erase(std::unique(report.lengths.begin(), report.lengths.end()), report.lengths.end());
  }

  std::vector<EdgeRef> edges;
  if (options.edges.all) {
    edges = all_edges(n);
  } else {
    edges = sample_edges(n, options.edges.sample, options.edges.seed);
    report.seed = options.edges.seed;
  }
  report.edges_checked = edges.size();

  const std::size_t per_edge = report.lengths.size();
  const std::size_t cases = edges.size() * per_edge;
  report.cases = cases;
  const bool track_vertices = options.edges.all && n <= 6;

  std::vector<CaseResult> results(cases);
  const unsigned workers = std::max(1U, options.workers);
  std::vector<std::vector<std::vector<char>>> cover(workers);
  std::atomic<std::size_t> next{0};
  auto work = [&](unsigned worker) {
    auto& mine = cover[worker];
    if (track_vertices) mine.assign(per_edge, std::vector<char>(static_cast<std::size_t>(order), 0));
    for (std::size_t k = next++; k < cases; k = next++) {
      const std::size_t li = k % per_edge;
      results[k] = run_case(n, edges[k / per_edge], report.lengths[li], options.required,
                            track_vertices ? &mine[li] : nullptr);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  std::uint64_t digest = kFnvOffset;
  report.min_certificates_per_case = cases == 0 ? 0 : results.front().certificates;
  for (std::size_t k = 0; k < cases; ++k) {
    const auto& r = results[k];
    report.certificates += r.certificates;
    report.min_certificates_per_case = std::min(report.min_certificates_per_case, r.certificates);
    digest ^= r.digest;
    digest *= kFnvPrime;
    if (r.failure) report.failures.push_back(SweepFailure{edges[k / per_edge], report.lengths[k % per_edge], *r.failure});
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(digest));
  report.certificate_digest = hex;

  if (track_vertices) {
    bool every_vertex = true;
    bool every_length = true;
    for (std::size_t li = 0; li < per_edge; ++li) {
      std::size_t covered = 0;
      for (std::size_t r = 0; r < order; ++r) {
        bool hit = false;
        for (const auto& mine : cover) hit = hit || (!mine.empty() && mine[li][r] != 0);
        covered += hit ? 1 : 0;
      }
      every_vertex = every_vertex && covered == order;
      every_length = every_length && covered > 0;
    }
    report.vertex_bipancyclic = every_vertex && report.passed();
    report.bipancyclic = every_length && report.passed();
  }

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

std::string report_json(const SweepReport& report, bool with_timing) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["cases"] = report.cases;
  auto& failures = j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"edge", {format_perm(f.edge.u), format_perm(f.edge.v)}},
                        {"length", f.length},
                        {"reason", f.reason}});
  }
  j["seed"] = report.seed ? nlohmann::ordered_json(*report.seed) : nlohmann::ordered_json(nullptr);
  if (with_timing) j["elapsed_ms"] = static_cast<std::int64_t>(report.elapsed_ms);
  j["passed"] = report.passed();
  j["required"] = report.required;
  j["edges_checked"] = report.edges_checked;
  j["lengths"] = report.lengths;
  j["certificates"] = report.certificates;
  j["min_certificates_per_case"] = report.min_certificates_per_case;
  j["certificate_digest"] = report.certificate_digest;
  if (report.vertex_bipancyclic) j["vertex_bipancyclic"] = *report.vertex_bipancyclic;
  if (report.bipancyclic) j["bipancyclic"] = *report.bipancyclic;
  return j.dump();
}

}  // namespace bstar
