#ifndef BSTAR_CYCLE_HPP
#define BSTAR_CYCLE_HPP

#include <cstddef>
#include <vector>

#include "bstar/permutation.hpp"

namespace bstar {

/// v_1 v_2 ... v_l with the closing edge v_l v_1 implicit. Validity (distinct,
/// cyclically adjacent, even length) is checked by validate() in checker.hpp,
/// not on construction.
struct CycleWitness {
  std::vector<Permutation> vertices;

  std::size_t length() const { return vertices.size(); }
  int dimension() const { return vertices.empty() ? 0 : vertices.front().dimension(); }

  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

}  // namespace bstar

#endif  // BSTAR_CYCLE_HPP
