#include "bstar/embedder.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <tuple>
#include <unordered_set>

#include "bstar/base_cycles.hpp"
#include "bstar/checker.hpp"
#include "bstar/detail/memo.hpp"

namespace bstar {

namespace {

std::string edge_text(const Permutation& a, const Permutation& b) {
  return "(" + format_perm(a) + ", " + format_perm(b) + ")";
}

// All vertices of c, from a to b, along the arc that avoids the edge (a, b).
std::vector<Permutation> arc_without_edge(const CycleWitness& c, const Permutation& a, const Permutation& b) {
  const std::size_t l = c.length();
  const auto it = std::find(c.vertices.begin(), c.vertices.end(), a);
  if (it == c.vertices.end()) throw std::invalid_argument(format_perm(a) + " is not on the cycle");
  const auto start = static_cast<std::size_t>(it - c.vertices.begin());
  std::size_t step = 0;
  if (c.vertices[(start + 1) % l] == b) {
    step = l - 1;
  } else if (c.vertices[(start + l - 1) % l] == b) {
    step = 1;
  } else {
    throw std::invalid_argument("edge " + edge_text(a, b) + " is not on the cycle");
  }
  std::vector<Permutation> out;
  out.reserve(l);
  for (std::size_t k = 0; k < l; ++k) out.push_back(c.vertices[(start + k * step) % l]);
  return out;
}

CycleWitness checked(std::vector<Permutation> vertices, std::size_t expected_length, const char* what) {
  CycleWitness c{std::move(vertices)};
  if (const auto bad = validate(c, std::nullopt, expected_length)) {
    throw ConstructionError(std::string(what) + " produced an invalid cycle: " + bad->detail);
  }
  return c;
}

void require_adjacent(const Permutation& a, const Permutation& b) {
  if (!is_adjacent(a, b)) throw std::invalid_argument(edge_text(a, b) + " is not an edge");
}

}  // namespace

CycleWitness merge_shared_edge(const CycleWitness& c1, const CycleWitness& c2, const EdgeRef& e) {
  const std::unordered_set<Permutation> first(c1.vertices.begin(), c1.vertices.end());
  std::size_t shared = 0;
  for (const auto& x : c2.vertices) {
    if (first.count(x) == 0) continue;
    if (!e.has_endpoint(x)) {
      throw std::invalid_argument("cycles share vertex " + format_perm(x) + " besides the merge edge");
    }
    ++shared;
  }
  if (shared != 2) throw std::invalid_argument("both cycles must contain the merge edge's endpoints");
  const auto a = arc_without_edge(c1, e.u, e.v);
  const auto b = arc_without_edge(c2, e.u, e.v);
  std::vector<Permutation> out = a;
  for (std::size_t k = b.size() - 2; k >= 1; --k) out.push_back(b[k]);
  return checked(std::move(out), c1.length() + c2.length() - 2, "merge_shared_edge");
}

CycleWitness merge_bridged(const CycleWitness& c1, const CoupledPair& pair, const CycleWitness& c2) {
  const std::unordered_set<Permutation> first(c1.vertices.begin(), c1.vertices.end());
  for (const auto& x : c2.vertices) {
    if (first.count(x) != 0) throw std::invalid_argument("cycles to bridge share vertex " + format_perm(x));
  }
  require_adjacent(pair.x, pair.x_prime);
  require_adjacent(pair.y, pair.y_prime);
  auto out = arc_without_edge(c1, pair.x, pair.y);
  const auto b = arc_without_edge(c2, pair.y_prime, pair.x_prime);
  out.insert(out.end(), b.begin(), b.end());
  return checked(std::move(out), c1.length() + c2.length(), "merge_bridged");
}

CycleWitness extend_two(const CycleWitness& c, const CoupledPair& pair) {
  for (const auto& x : c.vertices) {
    if (x == pair.x_prime || x == pair.y_prime) {
      throw std::invalid_argument("detour vertex " + format_perm(x) + " is already on the cycle");
    }
  }
  require_adjacent(pair.x_prime, pair.y_prime);
  require_adjacent(pair.x, pair.x_prime);
  require_adjacent(pair.y, pair.y_prime);
  auto out = arc_without_edge(c, pair.x, pair.y);
  out.push_back(pair.y_prime);
  out.push_back(pair.x_prime);
  return checked(std::move(out), c.length() + 2, "extend_two");
}

std::array<CycleWitness, 4> minus_edge_four_cycles(const Permutation& u) {
  const int n = u.dimension();
  if (n < 5) throw std::invalid_argument("the (u, u^-) 4-cycle family needs n >= 5");
  const Permutation um = minus(u);
  const std::array<std::pair<int, int>, 4> swaps{{{1, 2}, {1, 3}, {2, 3}, {1, n - 1}}};
  std::array<CycleWitness, 4> out;
  for (std::size_t k = 0; k < swaps.size(); ++k) {
    const auto [i, j] = swaps[k];
    out[k].vertices = {u, um, um.swapped(i, j), u.swapped(i, j)};
  }
  return out;
}

std::array<CycleWitness, 4> plus_edge_four_cycles(const Permutation& u) {
  const int n = u.dimension();
  if (n < 5) throw std::invalid_argument("the (u, u^+) 4-cycle family needs n >= 5");
  const Permutation up = plus(u);
  std::array<CycleWitness, 4> out;
  out[0].vertices = {u, up, up.swapped(2, 3), u.swapped(2, 3)};
  out[1].vertices = {u, up, up.swapped(3, 4), u.swapped(3, 4)};
  out[2].vertices = {u, up, up.swapped(n - 1, n), u.swapped(n - 1, n)};
  out[3].vertices = {u, up, up.swapped(n - 1, n), u.swapped(1, n - 1)};
  return out;
}

LengthSplit decompose_length(int n, std::uint64_t l) {
  const std::uint64_t block = factorial(n - 1);
  if (l % 2 != 0 || l <= block || l > block * static_cast<std::uint64_t>(n)) {
    throw std::invalid_argument("length " + std::to_string(l) + " is not an even number in ((n-1)!, n!]");
  }
  const std::uint64_t q = (l - 2) / block;
  return LengthSplit{q, l - q * block};
}

namespace {

using CycleList = std::vector<CycleWitness>;
using Key = std::tuple<int, std::uint64_t, std::uint64_t, std::size_t>;

detail::MemoTable<Key, CycleList>& cache() {
  static detail::MemoTable<Key, CycleList> table;
  return table;
}

std::shared_ptr<const CycleList> canonical_cycles(int n, const Permutation& v, std::uint64_t l, std::size_t want);

// Cycles through an arbitrary edge, served from the canonical-edge memo and
// relabeled on access.
class EdgeCycles {
 public:
  EdgeCycles(const EdgeRef& e, std::uint64_t l, std::size_t want) {
    const CanonicalEdge canon = canonicalize_edge(e);
    back_ = canon.pi.inverse();
    list_ = canonical_cycles(e.dimension(), canon.edge.v, l, want);
  }

  std::size_t size() const { return list_->size(); }

  CycleWitness at(std::size_t k) const {
    CycleWitness c;
    c.vertices.reserve((*list_)[k].length());
    for (const auto& x : (*list_)[k].vertices) c.vertices.push_back(relabel(x, back_));
    return c;
  }

 private:
  Permutation back_;
  std::shared_ptr<const CycleList> list_;
};

// Cycles of BS_n(j) through an edge f inside it, via BS_n(j) ~ BS_{n-1}.
class SubgraphCycles {
 public:
  SubgraphCycles(int j, const EdgeRef& f, std::uint64_t l, std::size_t want)
      : sub_{j}, inner_(classify_edge(project(f.u, sub_), project(f.v, sub_)), l, want) {}

  std::size_t size() const { return inner_.size(); }

  CycleWitness at(std::size_t k) const {
    CycleWitness c = inner_.at(k);
    for (auto& x : c.vertices) x = inject(x, sub_);
    return c;
  }

 private:
  SubgraphId sub_;
  EdgeCycles inner_;
};

using Choice = std::span<const std::size_t>;
using Builder = std::function<std::optional<CycleWitness>(Choice)>;

// Walks the mixed-radix choice space with the first digit varying fastest and
// keeps the first `want` pairwise distinct results.
CycleList gather(const EdgeRef& e, std::uint64_t l, const std::vector<std::size_t>& radices, std::size_t want,
                 const Builder& build) {
  CycleList out;
  if (std::any_of(radices.begin(), radices.end(), [](std::size_t r) { return r == 0; })) return out;
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<std::size_t> choice(radices.size(), 0);
  while (out.size() < want) {
    if (auto c = build(choice)) {
      if (const auto bad = validate(*c, e, l)) {
        throw ConstructionError("cycle for " + edge_text(e.u, e.v) + ", l = " + std::to_string(l) +
                                " failed validation: " + bad->detail);
      }
      CycleWitness canon = canonical_form(*c);
      if (seen.insert(canonical_key(canon)).second) out.push_back(std::move(canon));
    }
    std::size_t d = 0;
    while (d < choice.size() && ++choice[d] == radices[d]) choice[d++] = 0;
    if (d == choice.size()) break;
  }
  return out;
}

// A cycle that fully spans the occupied subgraphs. Every spanning cycle's
// edges are on `cycle` except those in `blocked`, which also holds edges that
// must never be removed (the target edge).
struct ChainState {
  int n = 0;
  CycleWitness cycle;
  std::vector<int> occupied;
  std::map<int, CycleWitness> spanning;
  EdgeSet blocked;

  std::vector<int> free_subgraphs() const {
    std::vector<int> out;
    for (int j = 1; j <= n; ++j) {
      if (std::find(occupied.begin(), occupied.end(), j) == occupied.end()) out.push_back(j);
    }
    return out;
  }
};

CoupledPair bridge_into(const ChainState& s, int j) {
  for (int k : s.occupied) {
    const auto it = s.spanning.find(k);
    if (it == s.spanning.end()) continue;
    try {
      return find_bridge(it->second, SubgraphId{j}, s.blocked).pair;
    } catch (const BridgeExhausted&) {
    }
  }
  // Any surviving edge inside an occupied subgraph will do.
  const std::size_t l = s.cycle.length();
  for (std::size_t k = 0; k < l; ++k) {
    const auto& a = s.cycle.vertices[k];
    const auto& b = s.cycle.vertices[(k + 1) % l];
    if (a.last() != b.last() || s.blocked.count(edge_key(a, b)) != 0) continue;
    for (const auto& pair : coupled_pair_edges(classify_edge(a, b))) {
      if (pair.x_prime.last() == j) return pair;
    }
  }
  throw ConstructionError("no bridge from the chain into BS_n(" + std::to_string(j) + ")");
}

void attach_whole(ChainState& s, int j, std::size_t want) {
  const CoupledPair pair = bridge_into(s, j);
  const SubgraphCycles spanning(j, pair.e_prime(), factorial(s.n - 1), want);
  CycleWitness h = spanning.at(0);
  s.cycle = merge_bridged(s.cycle, pair, h);
  s.occupied.push_back(j);
  s.spanning.emplace(j, std::move(h));
  s.blocked.insert(edge_key(pair.x, pair.y));
  s.blocked.insert(edge_key(pair.x_prime, pair.y_prime));
}

std::vector<CoupledPair> extension_sites(const ChainState& s) {
  std::vector<CoupledPair> out;
  const auto free = s.free_subgraphs();
  for (int k : s.occupied) {
    const auto it = s.spanning.find(k);
    if (it == s.spanning.end()) continue;
    for (int j : free) {
      try {
        out.push_back(find_bridge(it->second, SubgraphId{j}, s.blocked).pair);
      } catch (const BridgeExhausted&) {
      }
    }
  }
  return out;
}

// Adds the last p vertices: a two-vertex detour (p = 2) at the choice-th
// extension site, or the choice-th p-cycle of the next free subgraph.
std::optional<CycleWitness> finish(const ChainState& s, std::uint64_t p, std::size_t choice, std::size_t want) {
  const auto free = s.free_subgraphs();
  if (free.empty()) throw ConstructionError("chain has no free subgraph left");
  if (p == 2) {
    const auto sites = extension_sites(s);
    if (choice >= sites.size()) return std::nullopt;
    return extend_two(s.cycle, sites[choice]);
  }
  const CoupledPair pair = bridge_into(s, free.front());
  const SubgraphCycles pieces(free.front(), pair.e_prime(), p, want);
  if (choice >= pieces.size()) return std::nullopt;
  return merge_bridged(s.cycle, pair, pieces.at(choice));
}

// Lazily built, reused across choice combinations that share a prefix.
template <typename T>
class Lazy {
 public:
  explicit Lazy(std::size_t size) : slots_(size) {}

  template <typename Make>
  const T& get(std::size_t k, Make make) {
    if (!slots_[k]) slots_[k].emplace(make());
    return *slots_[k];
  }

 private:
  std::vector<std::optional<T>> slots_;
};

// Case: e = (identity, v) inside BS_n(n).
CycleList build_inner(int n, const EdgeRef& e, std::uint64_t l, std::size_t want) {
  const std::uint64_t block = factorial(n - 1);
  if (l <= block) {
    const SubgraphCycles inside(n, e, l, want);
    return gather(e, l, {inside.size()}, want, [&](Choice c) { return inside.at(c[0]); });
  }
  const LengthSplit split = decompose_length(n, l);
  const SubgraphCycles starts(n, e, block, want);
  Lazy<ChainState> chains(starts.size());
  auto chain = [&](std::size_t start) -> const ChainState& {
    return chains.get(start, [&] {
      ChainState s;
      s.n = n;
      s.cycle = starts.at(start);
      s.occupied = {n};
      s.spanning.emplace(n, s.cycle);
      s.blocked.insert(edge_key(e));
      for (std::uint64_t k = 1; k < split.q; ++k) attach_whole(s, s.free_subgraphs().front(), want);
      return s;
    });
  };
  if (split.p == 2) {
    const std::size_t sites = static_cast<std::size_t>(split.q) * static_cast<std::size_t>(n - split.q);
    return gather(e, l, {starts.size(), sites}, want,
                  [&](Choice c) { return finish(chain(c[0]), 2, c[1], want); });
  }
  return gather(e, l, {want, starts.size()}, want,
                [&](Choice c) { return finish(chain(c[1]), split.p, c[0], want); });
}

// One of the fixed 4-cycles through a cross edge, split into the edge it
// shares with BS_n(n) and the edge it has inside a neighboring subgraph.
struct Gluing {
  CycleWitness row;
  EdgeRef inner;
  EdgeRef outer;
  int neighbor;
};

// Case: e = (identity, identity^-) or (identity, identity^+).
CycleList build_cross(int n, const EdgeRef& e, std::uint64_t l, std::size_t want) {
  const Permutation& u = e.u;
  const auto rows = e.cls.kind == EdgeClass::Kind::kMinus ? minus_edge_four_cycles(u) : plus_edge_four_cycles(u);
  if (l == 4) {
    return gather(e, l, {rows.size()}, want, [&](Choice c) { return rows[c[0]]; });
  }

  std::vector<Gluing> gluings;
  for (const auto& row : rows) {
    const auto& v = row.vertices;
    if (v[3].last() == n && v[1].last() == v[2].last() && v[1].last() != n) {
      gluings.push_back(Gluing{row, classify_edge(v[0], v[3]), classify_edge(v[1], v[2]), v[1].last()});
    }
  }

  const std::uint64_t block = factorial(n - 1);
  if (l <= block + 2) {
    Lazy<SubgraphCycles> inside(gluings.size());
    return gather(e, l, {want, gluings.size()}, want, [&](Choice c) -> std::optional<CycleWitness> {
      const Gluing& g = gluings[c[1]];
      const auto& pieces = inside.get(c[1], [&] { return SubgraphCycles(n, g.inner, l - 2, want); });
      if (c[0] >= pieces.size()) return std::nullopt;
      return merge_shared_edge(g.row, pieces.at(c[0]), g.inner);
    });
  }

  Lazy<SubgraphCycles> home(gluings.size());
  auto home_cycles = [&](std::size_t g) -> const SubgraphCycles& {
    return home.get(g, [&] { return SubgraphCycles(n, gluings[g].inner, block, want); });
  };
  auto glued = [&](std::size_t g, std::size_t start) -> std::optional<CycleWitness> {
    const auto& hs = home_cycles(g);
    if (start >= hs.size()) return std::nullopt;
    return merge_shared_edge(gluings[g].row, hs.at(start), gluings[g].inner);
  };

  if (l <= 2 * block) {
    Lazy<SubgraphCycles> away(gluings.size());
    return gather(e, l, {want, want, gluings.size()}, want, [&](Choice c) -> std::optional<CycleWitness> {
      const Gluing& g = gluings[c[2]];
      const auto base = glued(c[2], c[1]);
      if (!base) return std::nullopt;
      const auto& pieces = away.get(c[2], [&] { return SubgraphCycles(g.neighbor, g.outer, l - block, want); });
      if (c[0] >= pieces.size()) return std::nullopt;
      return merge_shared_edge(*base, pieces.at(c[0]), g.outer);
    });
  }

  const LengthSplit split = decompose_length(n, l);
  std::map<std::pair<std::size_t, std::size_t>, ChainState> chains;
  auto chain = [&](std::size_t g, std::size_t start) -> const ChainState* {
    const auto key = std::make_pair(g, start);
    if (const auto it = chains.find(key); it != chains.end()) return &it->second;
    const auto base = glued(g, start);
    if (!base) return nullptr;
    const Gluing& gl = gluings[g];
    const SubgraphCycles away(gl.neighbor, gl.outer, block, want);
    ChainState s;
    s.n = n;
    const CycleWitness h_away = away.at(0);
    s.cycle = merge_shared_edge(*base, h_away, gl.outer);
    s.occupied = {n, gl.neighbor};
    s.spanning.emplace(n, home_cycles(g).at(start));
    s.spanning.emplace(gl.neighbor, h_away);
    s.blocked = {edge_key(e), edge_key(gl.inner), edge_key(gl.outer)};
    for (std::uint64_t k = 2; k < split.q; ++k) attach_whole(s, s.free_subgraphs().front(), want);
    return &chains.emplace(key, std::move(s)).first->second;
  };

  if (split.p == 2) {
    const std::size_t sites = static_cast<std::size_t>(split.q) * static_cast<std::size_t>(n - split.q);
    return gather(e, l, {want, sites, gluings.size()}, want, [&](Choice c) -> std::optional<CycleWitness> {
      const ChainState* s = chain(c[2], c[0]);
      if (s == nullptr) return std::nullopt;
      return finish(*s, 2, c[1], want);
    });
  }
  return gather(e, l, {want, want, gluings.size()}, want, [&](Choice c) -> std::optional<CycleWitness> {
    const ChainState* s = chain(c[2], c[1]);
    if (s == nullptr) return std::nullopt;
    return finish(*s, split.p, c[0], want);
  });
}

CycleList build(int n, const Permutation& v, std::uint64_t l, std::size_t want) {
  const EdgeRef e = classify_edge(Permutation::identity(n), v);
  if (n <= 4) return base_cycles_up_to(n, e, l, want);
  switch (e.cls.kind) {
    case EdgeClass::Kind::kMinus:
    case EdgeClass::Kind::kPlus:
      return build_cross(n, e, l, want);
    default:
      return build_inner(n, e, l, want);
  }
}

std::shared_ptr<const CycleList> canonical_cycles(int n, const Permutation& v, std::uint64_t l, std::size_t want) {
  const Key key{n, rank(v), l, want};
  if (auto hit = cache().find(key)) return hit;
  auto fresh = std::make_shared<const CycleList>(build(n, v, l, want));
  return cache().publish(key, std::move(fresh), [](const CycleList&) { return true; });
}

}  // namespace

std::vector<CycleWitness> embed(const EmbedRequest& req) {
  const int n = req.n;
  if (n < 3 || n > Permutation::kMaxDimension) {
    throw std::invalid_argument("embedding needs 3 <= n <= " + std::to_string(Permutation::kMaxDimension));
  }
  if (req.edge.dimension() != n || !is_adjacent(req.edge.u, req.edge.v)) {
    throw std::invalid_argument("request edge is not an edge of BS_" + std::to_string(n));
  }
  if (req.length < 4 || req.length % 2 != 0 || req.length > factorial(n)) {
    throw std::invalid_argument("length " + std::to_string(req.length) + " is not an even number in [4, " +
                                std::to_string(n) + "!]");
  }
  if (req.count == 0) throw std::invalid_argument("count must be positive");

  const std::size_t want = std::max<std::size_t>(req.count, 4);
  const EdgeCycles found(req.edge, req.length, want);
  if (found.size() < req.count) {
    throw InsufficientCycles("found " + std::to_string(found.size()) + " of " + std::to_string(req.count) +
                             " requested cycles of length " + std::to_string(req.length));
  }
  std::vector<CycleWitness> out;
  out.reserve(req.count);
  for (std::size_t k = 0; k < req.count; ++k) out.push_back(canonical_form(found.at(k)));
  return out;
}

CycleWitness hamiltonian(int n, const EdgeRef& e) {
  if (n < 3) throw std::invalid_argument("BS_n is Hamiltonian only for n >= 3");
  return embed(EmbedRequest{n, e, factorial(n), 1}).front();
}

void clear_embed_cache() {
  cache().clear();
  clear_base_cycle_cache();
}

}  // namespace bstar
