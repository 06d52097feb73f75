#include "bstar/checker.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace bstar {

namespace {

Violation violation(Violation::Kind kind, std::string detail) { return Violation{kind, std::move(detail)}; }

}  // namespace

std::optional<Violation> validate(const CycleWitness& c, const std::optional<EdgeRef>& expect_edge,
                                  std::optional<std::uint64_t> expect_length) {
  const std::size_t l = c.length();
  if (l < 4) return violation(Violation::Kind::kTooShort, "cycle has " + std::to_string(l) + " vertices");
  const int n = c.dimension();
  for (std::size_t k = 0; k < l; ++k) {
    if (c.vertices[k].dimension() != n) {
      return violation(Violation::Kind::kDimensionMismatch, "vertex " + std::to_string(k) + " has dimension " +
                                                                std::to_string(c.vertices[k].dimension()));
    }
  }
  if (l % 2 != 0) return violation(Violation::Kind::kOddLength, "length " + std::to_string(l) + " is odd");
  if (n <= 20 && l > factorial(n)) {
    return violation(Violation::Kind::kTooLong, "length " + std::to_string(l) + " exceeds n!");
  }

  std::vector<std::pair<std::uint64_t, std::size_t>> ranked;
  ranked.reserve(l);
  for (std::size_t k = 0; k < l; ++k) ranked.emplace_back(rank(c.vertices[k]), k);
  std::sort(ranked.begin(), ranked.end());
  for (std::size_t k = 1; k < l; ++k) {
    if (ranked[k].first == ranked[k - 1].first) {
      return violation(Violation::Kind::kDuplicateVertex,
                       "duplicate vertex " + format_perm(c.vertices[ranked[k].second]) + " at positions " +
                           std::to_string(ranked[k - 1].second) + " and " + std::to_string(ranked[k].second));
    }
  }

  for (std::size_t k = 0; k < l; ++k) {
    const auto& a = c.vertices[k];
    const auto& b = c.vertices[(k + 1) % l];
    if (!is_adjacent(a, b)) {
      return violation(Violation::Kind::kNotAdjacent, "consecutive vertices " + format_perm(a) + " and " +
                                                          format_perm(b) + " are not adjacent");
    }
  }

  if (expect_length && l != *expect_length) {
    return violation(Violation::Kind::kWrongLength,
                     "length " + std::to_string(l) + ", expected " + std::to_string(*expect_length));
  }
  if (expect_edge) {
    bool found = false;
    for (std::size_t k = 0; k < l && !found; ++k) {
      const auto& a = c.vertices[k];
      const auto& b = c.vertices[(k + 1) % l];
      found = (a == expect_edge->u && b == expect_edge->v) || (a == expect_edge->v && b == expect_edge->u);
    }
    if (!found) {
      return violation(Violation::Kind::kMissingEdge, "edge (" + format_perm(expect_edge->u) + ", " +
                                                          format_perm(expect_edge->v) + ") is not on the cycle");
    }
  }
  return std::nullopt;
}

CycleWitness canonical_form(const CycleWitness& c) {
  const std::size_t l = c.length();
  if (l == 0) return c;
  std::vector<std::uint64_t> ranks(l);
  for (std::size_t k = 0; k < l; ++k) ranks[k] = rank(c.vertices[k]);
  const auto start = static_cast<std::size_t>(std::min_element(ranks.begin(), ranks.end()) - ranks.begin());
  const bool forward = l < 3 || ranks[(start + 1) % l] < ranks[(start + l - 1) % l];
  CycleWitness out;
  out.vertices.reserve(l);
  for (std::size_t k = 0; k < l; ++k) {
    const std::size_t idx = forward ? (start + k) % l : (start + l - k) % l;
    out.vertices.push_back(c.vertices[idx]);
  }
  return out;
}

std::vector<std::uint64_t> canonical_key(const CycleWitness& c) {
  const CycleWitness canon = canonical_form(c);
  std::vector<std::uint64_t> key;
  key.reserve(canon.length());
  for (const auto& v : canon.vertices) key.push_back(rank(v));
  return key;
}

namespace {

constexpr int kMaxDistanceTable = 7;

// BFS distances from `target` over the whole graph, indexed by rank.
std::vector<int> distances_to(const Permutation& target) {
  const int n = target.dimension();
  std::vector<int> dist(static_cast<std::size_t>(factorial(n)), -1);
  std::deque<Permutation> queue{target};
  dist[static_cast<std::size_t>(rank(target))] = 0;
  while (!queue.empty()) {
    const Permutation x = queue.front();
    queue.pop_front();
    const int dx = dist[static_cast<std::size_t>(rank(x))];
    for (const auto& y : neighbors(x)) {
      auto& dy = dist[static_cast<std::size_t>(rank(y))];
      if (dy < 0) {
        dy = dx + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

class PathSearch {
 public:
  PathSearch(const EdgeRef& e, std::uint64_t l, std::size_t limit)
      : target_(e.u), edges_needed_(l - 1), limit_(limit) {
    if (target_.dimension() <= kMaxDistanceTable) dist_ = distances_to(target_);
    path_.push_back(e.v);
    visited_.insert(e.v);
    visited_.insert(e.u);
  }

  std::vector<CycleWitness> run() {
    descend(e_v());
    return std::move(found_);
  }

 private:
  const Permutation& e_v() const { return path_.front(); }

  void descend(const Permutation& w) {
    if (found_.size() >= limit_) return;
    const std::uint64_t used = path_.size() - 1;
    const std::uint64_t remaining = edges_needed_ - used;
    for (const auto& y : neighbors(w)) {
      if (y == target_) {
        if (remaining == 1) record();
        continue;
      }
      if (remaining == 1 || visited_.count(y) != 0) continue;
      if (!dist_.empty() && static_cast<std::uint64_t>(dist_[static_cast<std::size_t>(rank(y))]) > remaining - 1) {
        continue;
      }
      visited_.insert(y);
      path_.push_back(y);
      descend(y);
      path_.pop_back();
      visited_.erase(y);
      if (found_.size() >= limit_) return;
    }
  }

  void record() {
    CycleWitness c;
    c.vertices.reserve(path_.size() + 1);
    c.vertices.push_back(target_);
    c.vertices.insert(c.vertices.end(), path_.begin(), path_.end());
    if (seen_.insert(canonical_key(c)).second) found_.push_back(std::move(c));
  }

  Permutation target_;
  std::uint64_t edges_needed_;
  std::size_t limit_;
  std::vector<int> dist_;
  std::vector<Permutation> path_;
  std::unordered_set<Permutation> visited_;
  std::set<std::vector<std::uint64_t>> seen_;
  std::vector<CycleWitness> found_;
};

}  // namespace

std::vector<CycleWitness> enumerate_cycles(int n, const EdgeRef& e, std::uint64_t l, std::size_t limit,
                                           bool override_guard) {
  if (e.dimension() != n) throw std::invalid_argument("enumerate_cycles: edge dimension mismatch");
  if (!override_guard && n > 5 && l > 12) {
    throw TractabilityError("exhaustive enumeration refused for n = " + std::to_string(n) + ", l = " +
                            std::to_string(l) + " (needs n <= 5 or l <= 12)");
  }
  if (l < 4 || l % 2 != 0 || l > factorial(n) || limit == 0) return {};
  return PathSearch(e, l, limit).run();
}

}  // namespace bstar
