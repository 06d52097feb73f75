#include "bstar/topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace bstar {

std::string EdgeClass::to_string() const {
  switch (kind) {
    case Kind::kOverlap: return "Overlap";
    case Kind::kStar: return "Star(" + std::to_string(index) + ")";
    case Kind::kAdjacent: return "Adjacent(" + std::to_string(index) + ")";
    case Kind::kMinus: return "MinusEdge";
    case Kind::kPlus: return "PlusEdge";
  }
  return "?";
}

EdgeClass classify_swap(int n, int i, int j) {
  if (i == 1 && j == 2) return {EdgeClass::Kind::kOverlap, 2};
  if (i == n - 1 && j == n) return {EdgeClass::Kind::kMinus, n};
  if (i == 1 && j == n) return {EdgeClass::Kind::kPlus, n};
  if (i == 1) return {EdgeClass::Kind::kStar, j};
  return {EdgeClass::Kind::kAdjacent, j};
}

EdgeKey edge_key(const Permutation& a, const Permutation& b) {
  const auto ra = rank(a);
  const auto rb = rank(b);
  return ra < rb ? EdgeKey{ra, rb} : EdgeKey{rb, ra};
}

std::vector<Permutation> neighbors(const Permutation& x) {
  const int n = x.dimension();
  std::vector<Permutation> out;
  if (n < 2) return out;
  out.reserve(static_cast<std::size_t>(2 * n - 3));
  out.push_back(x.swapped(1, 2));
  for (int i = 3; i <= n; ++i) out.push_back(x.swapped(1, i));
  for (int i = 3; i <= n; ++i) out.push_back(x.swapped(i - 1, i));
  return out;
}

namespace {

// Positions where x and y differ, if exactly two; {0, 0} otherwise.
std::pair<int, int> differing_pair(const Permutation& x, const Permutation& y) {
  int first = 0;
  int second = 0;
  for (int k = 1; k <= x.dimension(); ++k) {
    if (x[k] == y[k]) continue;
    if (first == 0) {
      first = k;
    } else if (second == 0) {
      second = k;
    } else {
      return {0, 0};
    }
  }
  if (second == 0 || x[first] != y[second] || x[second] != y[first]) return {0, 0};
  return {first, second};
}

bool is_generator(int i, int j) { return i == 1 || j == i + 1; }

}  // namespace

bool is_adjacent(const Permutation& x, const Permutation& y) {
  if (x.dimension() != y.dimension()) {
    throw std::invalid_argument("is_adjacent: dimension mismatch");
  }
  const auto [i, j] = differing_pair(x, y);
  return i != 0 && is_generator(i, j);
}

EdgeRef classify_edge(const Permutation& x, const Permutation& y) {
  if (x.dimension() != y.dimension()) {
    throw std::invalid_argument("classify_edge: dimension mismatch");
  }
  const auto [i, j] = differing_pair(x, y);
  if (i == 0 || !is_generator(i, j)) {
    throw std::invalid_argument("(" + format_perm(x) + ", " + format_perm(y) + ") is not an edge");
  }
  const EdgeClass cls = classify_swap(x.dimension(), i, j);
  if (rank(x) < rank(y)) return EdgeRef{x, y, cls};
  return EdgeRef{y, x, cls};
}

SubgraphId subgraph_of(const Permutation& x) { return SubgraphId{x.last()}; }

Permutation project(const Permutation& x, SubgraphId sub) {
  const int n = x.dimension();
  if (n < 2 || x.last() != sub.i) {
    throw std::invalid_argument(format_perm(x) + " is not in BS_n(" + std::to_string(sub.i) + ")");
  }
  std::array<int, Permutation::kMaxDimension> symbols{};
  for (int k = 1; k < n; ++k) {
    symbols[static_cast<std::size_t>(k - 1)] = x[k] > sub.i ? x[k] - 1 : x[k];
  }
  return Permutation::from_symbols(std::span<const int>(symbols.data(), static_cast<std::size_t>(n - 1)));
}

Permutation inject(const Permutation& y, SubgraphId sub) {
  const int m = y.dimension();
  if (m + 1 > Permutation::kMaxDimension || sub.i < 1 || sub.i > m + 1) {
    throw std::invalid_argument("inject: subgraph " + std::to_string(sub.i) + " invalid for dimension " +
                                std::to_string(m + 1));
  }
  std::array<int, Permutation::kMaxDimension> symbols{};
  for (int k = 1; k <= m; ++k) {
    symbols[static_cast<std::size_t>(k - 1)] = y[k] >= sub.i ? y[k] + 1 : y[k];
  }
  symbols[static_cast<std::size_t>(m)] = sub.i;
  return Permutation::from_symbols(std::span<const int>(symbols.data(), static_cast<std::size_t>(m + 1)));
}

CanonicalEdge canonicalize_edge(const EdgeRef& e) {
  const Permutation pi = e.u.inverse();
  const Permutation id = Permutation::identity(e.dimension());
  const Permutation v = relabel(e.v, pi);
  return CanonicalEdge{pi, EdgeRef{id, v, e.cls}};
}

std::uint64_t count_vertices(int n) {
  if (n < 2) throw std::invalid_argument("BS_n requires n >= 2");
  return factorial(n);
}

std::uint64_t count_edges(int n) {
  const std::uint64_t half = count_vertices(n) / 2;
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(half, static_cast<std::uint64_t>(2 * n - 3), &out)) {
    throw std::overflow_error("edge count of BS_" + std::to_string(n) + " does not fit in 64 bits");
  }
  return out;
}

std::pair<std::uint64_t, std::uint64_t> bipartition_sizes(int n) {
  const std::uint64_t half = count_vertices(n) / 2;
  return {half, half};
}

std::vector<EdgeRef> all_edges(int n) {
  const std::uint64_t order = count_vertices(n);
  std::vector<EdgeRef> out;
  out.reserve(static_cast<std::size_t>(count_edges(n)));
  for (std::uint64_t r = 0; r < order; ++r) {
    const Permutation x = unrank(n, r);
    for (const auto& y : neighbors(x)) {
      if (rank(y) > r) out.push_back(classify_edge(x, y));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const EdgeRef& a, const EdgeRef& b) { return edge_key(a) < edge_key(b); });
  return out;
}

EdgeRef parse_edge(int n, std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("edge literal must look like u:v, got '" + std::string(text) + "'");
  }
  const Permutation u = parse_perm(text.substr(0, colon));
  const Permutation v = parse_perm(text.substr(colon + 1));
  if (u.dimension() != n || v.dimension() != n) {
    throw std::invalid_argument("edge '" + std::string(text) + "' does not have dimension " + std::to_string(n));
  }
  return classify_edge(u, v);
}

}  // namespace bstar
