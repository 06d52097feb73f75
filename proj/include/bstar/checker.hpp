#ifndef BSTAR_CHECKER_HPP
#define BSTAR_CHECKER_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bstar/cycle.hpp"
#include "bstar/topology.hpp"

// Independent checking side. Nothing here may depend on the embedder or on the
// coupled-edge machinery: validation and enumeration use only neighbors() and
// is_adjacent().

namespace bstar {

struct Violation {
  enum class Kind {
    kTooShort,
    kOddLength,
    kTooLong,
    kDimensionMismatch,
    kDuplicateVertex,
    kNotAdjacent,
    kMissingEdge,
    kWrongLength,
  };

  Kind kind;
  std::string detail;
};

/// First violation found, or nullopt if `c` is a cycle of BS_n satisfying the expectations.
std::optional<Violation> validate(const CycleWitness& c, const std::optional<EdgeRef>& expect_edge = std::nullopt,
                                  std::optional<std::uint64_t> expect_length = std::nullopt);

/// Rotate so the minimum-rank vertex comes first, then orient toward its
/// smaller-rank cycle neighbor. Equal canonical forms <=> equal edge sets.
CycleWitness canonical_form(const CycleWitness& c);

/// Rank sequence of the canonical form; a compact identity for distinctness sets.
std::vector<std::uint64_t> canonical_key(const CycleWitness& c);

/// Thrown when enumerate_cycles is asked for an intractable search without override.
struct TractabilityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Brute-force DFS over simple paths from e.v back to e.u of l-1 edges; each
/// closes through e into an l-cycle. Deduplicated by canonical form, returned
/// in discovery order, at most `limit` cycles.
/// Refuses (n > 5 and l > 12) unless `override_guard`.
std::vector<CycleWitness> enumerate_cycles(int n, const EdgeRef& e, std::uint64_t l,
                                           std::size_t limit = std::numeric_limits<std::size_t>::max(),
                                           bool override_guard = false);

}  // namespace bstar

#endif  // BSTAR_CHECKER_HPP
