#ifndef BSTAR_CERTIFICATE_HPP
#define BSTAR_CERTIFICATE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bstar/cycle.hpp"
#include "bstar/topology.hpp"

namespace bstar {

/// One line of a certificate file:
///   {"n": 4, "length": 8, "edge": ["1234", "1324"], "vertices": ["1234", ...]}
/// Parsing checks only the shape; whether the cycle is genuine is validate()'s job.
struct Certificate {
  int n = 0;
  std::uint64_t length = 0;
  Permutation edge_u;
  Permutation edge_v;
  CycleWitness cycle;
};

Certificate make_certificate(const EdgeRef& e, const CycleWitness& c);

std::string to_jsonl(const Certificate& cert);

/// Throws std::invalid_argument on malformed lines.
Certificate parse_certificate(std::string_view line);

/// Header `# bs n=<n> vertices=<n!> edges=<count>` then one `u<TAB>v` line per
/// edge, sorted by (rank(u), rank(v)).
void write_edge_list(std::ostream& out, int n);

/// One {"u": ..., "v": ..., "class": ...} object per line, same order.
void write_edge_jsonl(std::ostream& out, int n);

}  // namespace bstar

#endif  // BSTAR_CERTIFICATE_HPP
