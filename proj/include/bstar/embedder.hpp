#ifndef BSTAR_EMBEDDER_HPP
#define BSTAR_EMBEDDER_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bstar/coupled_edges.hpp"
#include "bstar/cycle.hpp"
#include "bstar/topology.hpp"

namespace bstar {

/// An internal consistency check failed while building a cycle. Always a defect.
struct ConstructionError : std::logic_error {
  using std::logic_error::logic_error;
};

struct EmbedRequest {
  int n = 3;
  EdgeRef edge;
  std::uint64_t length = 4;
  std::size_t count = 4;
};

// Splices. Each result is validated; precondition failures throw
// std::invalid_argument, a splice that does not yield a cycle throws
// ConstructionError.

/// Edge set E(c1) + E(c2) - {e}; c1 and c2 must share exactly e's endpoints.
/// Length len(c1) + len(c2) - 2.
CycleWitness merge_shared_edge(const CycleWitness& c1, const CycleWitness& c2, const EdgeRef& e);

/// E(c1) + E(c2) + bridges - {pair.e, pair.e'}; c1, c2 vertex-disjoint.
/// Length len(c1) + len(c2).
CycleWitness merge_bridged(const CycleWitness& c1, const CoupledPair& pair, const CycleWitness& c2);

/// E(c) + {e', bridges} - {pair.e}: detours through x' and y'. Length len(c) + 2.
CycleWitness extend_two(const CycleWitness& c, const CoupledPair& pair);

/// The four 4-cycles u, u^-, u^- o s, u o s for s in (1,2), (1,3), (2,3), (1,n-1). n >= 5.
std::array<CycleWitness, 4> minus_edge_four_cycles(const Permutation& u);

/// The four 4-cycles through (u, u^+):
///   u, u^+, u^+ o (2,3),   u o (2,3)
///   u, u^+, u^+ o (3,4),   u o (3,4)
///   u, u^+, u^+ o (n-1,n), u o (n-1,n)
///   u, u^+, u^+ o (n-1,n), u o (1,n-1)
/// n >= 5.
std::array<CycleWitness, 4> plus_edge_four_cycles(const Permutation& u);

struct LengthSplit {
  std::uint64_t q;
  std::uint64_t p;
};

/// l = q (n-1)! + p with 1 <= q <= n-1 and 2 <= p <= (n-1)!, for (n-1)! < l <= n!, l even.
LengthSplit decompose_length(int n, std::uint64_t l);

/// At least req.count pairwise distinct cycles of length req.length through
/// req.edge, each validated and in canonical form. Deterministic.
///
/// Edges are first moved to u = identity by symbol relabeling. Then:
///  - n <= 4: bounded search (base_cycles).
///  - e inside BS_n(n), l <= (n-1)!: recurse inside BS_n(n) via project/inject.
///  - e inside BS_n(n), l > (n-1)!: start from a Hamiltonian cycle of BS_n(n)
///    through e and chain whole subgraphs BS_n(1), BS_n(2), ... through
///    coupled pair-edges, finishing with a p-cycle (merge_bridged) or a
///    two-vertex detour (extend_two).
///  - e = (u, u^-) or (u, u^+): a fixed 4-cycle through e glued to cycles of
///    BS_n(n) along a shared edge, then to cycles of the neighboring subgraph,
///    then chained like the inner case.
/// Throws std::invalid_argument for bad requests, InsufficientCycles if fewer
/// than req.count cycles come out, ConstructionError on internal failures.
std::vector<CycleWitness> embed(const EmbedRequest& req);

/// First cycle of embed(n, e, n!, 1).
CycleWitness hamiltonian(int n, const EdgeRef& e);

void clear_embed_cache();

}  // namespace bstar

#endif  // BSTAR_EMBEDDER_HPP
