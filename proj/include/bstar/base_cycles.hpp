#ifndef BSTAR_BASE_CYCLES_HPP
#define BSTAR_BASE_CYCLES_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "bstar/cycle.hpp"
#include "bstar/topology.hpp"

namespace bstar {

/// A named group of hand-listed cycles through a common edge.
struct FixtureTable {
  std::string name;
  EdgeRef target_edge;
  std::vector<CycleWitness> rows;
};

/// Reads JSONL records {"table", "row", "edge": [u, v], "vertices": [...]} and
/// groups them by table, preserving file order. Every row must validate as a
/// cycle through its table's edge and rows must be pairwise distinct;
/// otherwise std::runtime_error.
std::vector<FixtureTable> load_fixtures(const std::filesystem::path& path);

struct InsufficientCycles : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// At least `count` distinct l-cycles through e in BS_3 or BS_4, found by a
/// depth-first search over a materialized adjacency table. Results are
/// memoized per canonical edge and relabeled back, so they come out in
/// canonical form. Throws InsufficientCycles if fewer exist.
std::vector<CycleWitness> base_cycles(int n, const EdgeRef& e, std::uint64_t l, std::size_t count = 4);

/// Same search, returning up to `limit` cycles without complaining about a shortfall.
std::vector<CycleWitness> base_cycles_up_to(int n, const EdgeRef& e, std::uint64_t l, std::size_t limit);

void clear_base_cycle_cache();

}  // namespace bstar

#endif  // BSTAR_BASE_CYCLES_HPP
