#ifndef BSTAR_TOPOLOGY_HPP
#define BSTAR_TOPOLOGY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bstar/permutation.hpp"

namespace bstar {

// The bubble-sort star graph BS_n is never materialized. Two permutations are
// adjacent iff one is the other with positions (1,i) or (i-1,i) swapped.
// Neighbor order is fixed: (1,2), then (1,i) for i = 3..n, then (i-1,i) for
// i = 3..n.

/// Generator class of an edge, determined by the pair of positions that differ.
struct EdgeClass {
  enum class Kind {
    kOverlap,   // (1,2): both a star and a bubble move
    kStar,      // (1,i), 3 <= i <= n-1
    kAdjacent,  // (i-1,i), 3 <= i <= n-1
    kMinus,     // (n-1,n): v = u^-
    kPlus,      // (1,n): v = u^+
  };

  Kind kind = Kind::kOverlap;
  int index = 2;  // i for kStar / kAdjacent

  std::string to_string() const;
  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

/// Classification of the transposition (i, j) in dimension n; assumes it is a generator.
EdgeClass classify_swap(int n, int i, int j);

/// Undirected edge of BS_n, stored with rank(u) < rank(v).
struct EdgeRef {
  Permutation u;
  Permutation v;
  EdgeClass cls;

  int dimension() const { return u.dimension(); }
  bool has_endpoint(const Permutation& x) const { return x == u || x == v; }
  friend bool operator==(const EdgeRef& a, const EdgeRef& b) { return a.u == b.u && a.v == b.v; }
};

/// (rank(u), rank(v)) with the smaller rank first; identifies an undirected edge.
using EdgeKey = std::pair<std::uint64_t, std::uint64_t>;

EdgeKey edge_key(const Permutation& a, const Permutation& b);
inline EdgeKey edge_key(const EdgeRef& e) { return edge_key(e.u, e.v); }

struct EdgeKeyHash {
  std::size_t operator()(const EdgeKey& k) const noexcept {
    return static_cast<std::size_t>(k.first * 0x9E3779B97F4A7C15ULL ^ (k.second + 0x632BE59BD9B4E019ULL));
  }
};

/// Symbol i of the induced subgraph BS_n(i) = { x : x_n = i }.
struct SubgraphId {
  int i;
  friend bool operator==(const SubgraphId&, const SubgraphId&) = default;
};

std::vector<Permutation> neighbors(const Permutation& x);

bool is_adjacent(const Permutation& x, const Permutation& y);

/// Throws std::invalid_argument if (x, y) is not an edge.
EdgeRef classify_edge(const Permutation& x, const Permutation& y);

SubgraphId subgraph_of(const Permutation& x);

/// BS_n(i) -> BS_{n-1}: drop the last symbol and compress the rest to 1..n-1
/// preserving order. inject is the inverse.
Permutation project(const Permutation& x, SubgraphId sub);
Permutation inject(const Permutation& y, SubgraphId sub);

struct CanonicalEdge {
  Permutation pi;      // symbol map sending e.u to the identity
  EdgeRef edge;        // (identity, relabel(e.v, pi))
};

CanonicalEdge canonicalize_edge(const EdgeRef& e);

std::uint64_t count_vertices(int n);
std::uint64_t count_edges(int n);
std::pair<std::uint64_t, std::uint64_t> bipartition_sizes(int n);

/// Every edge of BS_n, sorted by (rank(u), rank(v)).
std::vector<EdgeRef> all_edges(int n);

/// "u:v"
EdgeRef parse_edge(int n, std::string_view text);

}  // namespace bstar

#endif  // BSTAR_TOPOLOGY_HPP
