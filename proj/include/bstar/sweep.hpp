#ifndef BSTAR_SWEEP_HPP
#define BSTAR_SWEEP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bstar/topology.hpp"

namespace bstar {

struct EdgeSelection {
  bool all = true;
  std::size_t sample = 0;
  std::uint64_t seed = 0;

  /// "all" or "sample:K:SEED"
  static EdgeSelection parse(std::string_view text);
};

/// `count` distinct edges drawn with mt19937_64(seed), returned sorted.
std::vector<EdgeRef> sample_edges(int n, std::size_t count, std::uint64_t seed);

struct SweepOptions {
  int n = 3;
  EdgeSelection edges;
  std::vector<std::uint64_t> lengths;  // empty: every even length in [4, n!]
  std::size_t required = 4;
  unsigned workers = 1;
};

struct SweepFailure {
  EdgeRef edge;
  std::uint64_t length;
  std::string reason;
};

struct SweepReport {
  int n = 0;
  std::size_t required = 0;
  std::size_t edges_checked = 0;
  std::vector<std::uint64_t> lengths;
  std::size_t cases = 0;
  std::size_t certificates = 0;
  std::size_t min_certificates_per_case = 0;
  std::vector<SweepFailure> failures;  // sorted by (edge, length)
  std::optional<std::uint64_t> seed;
  /// Only filled when every edge was swept and n <= 6.
  std::optional<bool> vertex_bipancyclic;
  std::optional<bool> bipancyclic;
  /// FNV-1a over every certificate line, in case order.
  std::string certificate_digest;
  double elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

/// Runs embed for every (edge, length) case and re-validates each result:
/// count, cycle validity, edge membership, length, pairwise distinctness.
/// Cases run on `workers` threads; the report does not depend on scheduling.
SweepReport sweep(const SweepOptions& options);

/// {"n", "cases", "failures", "seed", "elapsed_ms", ...}; elapsed_ms is
/// omitted when `with_timing` is false so reports can be compared bytewise.
std::string report_json(const SweepReport& report, bool with_timing = true);

}  // namespace bstar

#endif  // BSTAR_SWEEP_HPP
