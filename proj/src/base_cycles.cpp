#include "bstar/base_cycles.hpp"

#include <fstream>
#include <set>
#include <tuple>

#include <nlohmann/json.hpp>

#include "bstar/checker.hpp"
#include "bstar/detail/memo.hpp"

namespace bstar {

std::vector<FixtureTable> load_fixtures(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file " + path.string());
  std::vector<FixtureTable> tables;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(line_no);
    try {
      const auto record = nlohmann::json::parse(line);
      const auto name = record.at("table").get<std::string>();
      const auto endpoints = record.at("edge").get<std::vector<std::string>>();
      if (endpoints.size() != 2) throw std::runtime_error("edge must have two endpoints");
      const EdgeRef edge = classify_edge(parse_perm(endpoints[0]), parse_perm(endpoints[1]));
      CycleWitness row;
      for (const auto& v : record.at("vertices")) row.vertices.push_back(parse_perm(v.get<std::string>()));
      if (const auto bad = validate(row, edge)) throw std::runtime_error(bad->detail);

      if (tables.empty() || tables.back().name != name) {
        tables.push_back(FixtureTable{name, edge, {}});
      } else if (!(tables.back().target_edge == edge)) {
        throw std::runtime_error("row edge differs from its table's edge");
      }
      for (const auto& other : tables.back().rows) {
        if (canonical_key(other) == canonical_key(row)) throw std::runtime_error("duplicate row");
      }
      tables.back().rows.push_back(std::move(row));
    } catch (const std::exception& ex) {
      throw std::runtime_error(where + ": " + ex.what());
    }
  }
  return tables;
}

namespace {

// Adjacency by rank for BS_3 / BS_4, in topology's neighbor order.
class SmallGraph {
 public:
  explicit SmallGraph(int n) : n_(n) {
    const auto order = factorial(n);
    adjacency_.resize(order);
    for (std::uint64_t r = 0; r < order; ++r) {
      for (const auto& y : neighbors(unrank(n, r))) adjacency_[r].push_back(static_cast<int>(rank(y)));
    }
  }

  int dimension() const { return n_; }
  std::size_t order() const { return adjacency_.size(); }
  const std::vector<int>& adjacent(int r) const { return adjacency_[static_cast<std::size_t>(r)]; }

 private:
  int n_;
  std::vector<std::vector<int>> adjacency_;
};

const SmallGraph& small_graph(int n) {
  static const SmallGraph bs3(3);
  static const SmallGraph bs4(4);
  return n == 3 ? bs3 : bs4;
}

// Simple paths from `from` to `to` with exactly l-1 edges, iterative DFS.
std::vector<CycleWitness> search(const SmallGraph& g, int to, int from, std::size_t l, std::size_t limit) {
  std::vector<CycleWitness> out;
  std::vector<char> on_path(g.order(), 0);
  std::vector<int> path{from};
  std::vector<std::size_t> cursor{0};
  on_path[static_cast<std::size_t>(from)] = 1;
  on_path[static_cast<std::size_t>(to)] = 1;
  while (!path.empty() && out.size() < limit) {
    const int w = path.back();
    auto& next = cursor.back();
    const auto& adj = g.adjacent(w);
    if (next == adj.size()) {
      on_path[static_cast<std::size_t>(w)] = 0;
      path.pop_back();
      cursor.pop_back();
      continue;
    }
    const int y = adj[next++];
    const std::size_t edges_after = path.size();  // edges used once y is appended
    if (y == to) {
      if (edges_after == l - 1) {
        CycleWitness c;
        c.vertices.push_back(unrank(g.dimension(), static_cast<std::uint64_t>(to)));
        for (int r : path) c.vertices.push_back(unrank(g.dimension(), static_cast<std::uint64_t>(r)));
        out.push_back(canonical_form(c));
      }
      continue;
    }
    if (on_path[static_cast<std::size_t>(y)] || edges_after >= l - 1) continue;
    on_path[static_cast<std::size_t>(y)] = 1;
    path.push_back(y);
    cursor.push_back(0);
  }
  on_path[static_cast<std::size_t>(to)] = 0;
  return out;
}

struct Entry {
  std::vector<CycleWitness> cycles;
  std::size_t limit;
  bool complete() const { return cycles.size() < limit; }
};

using Key = std::tuple<int, std::uint64_t, std::uint64_t>;

detail::MemoTable<Key, Entry>& cache() {
  static detail::MemoTable<Key, Entry> table;
  return table;
}

std::shared_ptr<const Entry> canonical_cycles(int n, const Permutation& v, std::uint64_t l, std::size_t limit) {
  const Key key{n, rank(v), l};
  auto entry = cache().find(key);
  if (entry && (entry->complete() || entry->limit >= limit)) return entry;
  const SmallGraph& g = small_graph(n);
  auto fresh = std::make_shared<Entry>(Entry{search(g, 0, static_cast<int>(rank(v)), l, limit), limit});
  return cache().publish(key, std::move(fresh), [&](const Entry& existing) {
    return existing.complete() || existing.limit >= limit;
  });
}

}  // namespace

std::vector<CycleWitness> base_cycles_up_to(int n, const EdgeRef& e, std::uint64_t l, std::size_t limit) {
  if (n != 3 && n != 4) throw std::invalid_argument("base cycles exist only for n = 3, 4");
  if (e.dimension() != n) throw std::invalid_argument("base_cycles: edge dimension mismatch");
  if (l < 4 || l % 2 != 0 || l > factorial(n)) {
    throw std::invalid_argument("length " + std::to_string(l) + " is not an even number in [4, n!]");
  }
  const CanonicalEdge canon = canonicalize_edge(e);
  const auto entry = canonical_cycles(n, canon.edge.v, l, limit);
  const Permutation back = canon.pi.inverse();
  std::vector<CycleWitness> out;
  for (std::size_t k = 0; k < entry->cycles.size() && k < limit; ++k) {
    CycleWitness c;
    for (const auto& x : entry->cycles[k].vertices) c.vertices.push_back(relabel(x, back));
    out.push_back(canonical_form(c));
  }
  return out;
}

std::vector<CycleWitness> base_cycles(int n, const EdgeRef& e, std::uint64_t l, std::size_t count) {
  auto out = base_cycles_up_to(n, e, l, count);
  if (out.size() < count) {
    throw InsufficientCycles("only " + std::to_string(out.size()) + " cycles of length " + std::to_string(l) +
                             " through (" + format_perm(e.u) + ", " + format_perm(e.v) + ")");
  }
  return out;
}

void clear_base_cycle_cache() { cache().clear(); }

}  // namespace bstar
