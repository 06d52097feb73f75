#ifndef BSTAR_COUPLED_EDGES_HPP
#define BSTAR_COUPLED_EDGES_HPP

#include <array>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "bstar/cycle.hpp"
#include "bstar/topology.hpp"

namespace bstar {

/// x^+ = x o (1,n)
Permutation plus(const Permutation& x);
/// x^- = x o (n-1,n)
Permutation minus(const Permutation& x);

/// An edge e = (x, y) inside BS_n(i) together with a coupled pair-edge
/// e' = (x', y') inside BS_n(j), j != i, where x' is x^+ or x^- and likewise y'.
/// The bridges (x, x') and (y, y') are PlusEdge/MinusEdge edges.
struct CoupledPair {
  Permutation x;
  Permutation y;
  Permutation x_prime;
  Permutation y_prime;

  EdgeRef e() const { return classify_edge(x, y); }
  EdgeRef e_prime() const { return classify_edge(x_prime, y_prime); }
  std::array<EdgeRef, 2> bridges() const { return {classify_edge(x, x_prime), classify_edge(y, y_prime)}; }
};

/// All coupled pair-edges of an edge lying inside one subgraph, in the order
/// (-/-, -/+, +/-, +/+). Throws std::invalid_argument for cross-subgraph edges.
std::vector<CoupledPair> coupled_pair_edges(const EdgeRef& e);

/// Raised when a bridge cannot be produced. Under the construction's
/// preconditions this never happens, so it marks a defect upstream.
struct BridgeExhausted : std::logic_error {
  using std::logic_error::logic_error;
};

struct Lemma23Selection {
  Permutation v;
  EdgeRef e;
  CoupledPair pair;
};

/// Given a Hamiltonian cycle H of BS_n(k) and a vertex u on H whose (n-1)-th
/// symbol is m != k, picks an H-neighbor v of u such that (u, v) has a coupled
/// pair-edge in BS_n(m):
///   - if some H-neighbor v has v_{n-1} = m (smaller rank on ties), e' = (u^-, v^-);
///   - otherwise v = u o (1,n-1), which must be an H-neighbor, and e' = (u^-, v^+).
/// Preconditions are checked (std::invalid_argument); a failed postcondition
/// throws BridgeExhausted.
Lemma23Selection lemma23_select(const CycleWitness& hamiltonian, const Permutation& u, SubgraphId m);

using EdgeSet = std::unordered_set<EdgeKey, EdgeKeyHash>;

/// Scans H from its lowest-rank vertex toward the smaller-rank neighbor, applies
/// lemma23_select at every vertex whose (n-1)-th symbol is j, and returns the
/// first selection whose edge is not forbidden. Throws BridgeExhausted if none.
Lemma23Selection find_bridge(const CycleWitness& hamiltonian, SubgraphId j, const EdgeSet& forbidden);

}  // namespace bstar

#endif  // BSTAR_COUPLED_EDGES_HPP
