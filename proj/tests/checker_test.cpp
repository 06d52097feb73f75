#include "bstar/checker.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace bstar {
namespace {

using testing::C;
using testing::E;
using testing::P;

std::set<EdgeKey> edge_set(const CycleWitness& c) {
  std::set<EdgeKey> out;
  for (std::size_t k = 0; k < c.length(); ++k) out.insert(edge_key(c.vertices[k], c.vertices[(k + 1) % c.length()]));
  return out;
}

Violation::Kind kind_of(const CycleWitness& c, const std::optional<EdgeRef>& e = std::nullopt,
                        std::optional<std::uint64_t> l = std::nullopt) {
  const auto bad = validate(c, e, l);
  EXPECT_TRUE(bad.has_value());
  return bad ? bad->kind : Violation::Kind::kTooShort;
}

TEST(CheckerTest, AcceptsGenuineCycles) {
  const auto c = C({"1234", "1324", "3124", "3214", "2314", "2134", "2143", "1243"});
  EXPECT_FALSE(validate(c).has_value());
  EXPECT_FALSE(validate(c, E("1234", "1324"), 8).has_value());
  EXPECT_FALSE(validate(c, E("1243", "1234"), 8).has_value());  // closing edge counts
}

TEST(CheckerTest, Violations) {
  using K = Violation::Kind;
  EXPECT_EQ(kind_of(C({"1234", "1324"})), K::kTooShort);
  EXPECT_EQ(kind_of(C({"1234", "1324", "3124", "3214", "2314"})), K::kOddLength);
  EXPECT_EQ(kind_of(C({"1234", "1243", "2143", "2134", "1234", "1243"})), K::kDuplicateVertex);
  EXPECT_EQ(kind_of(C({"1234", "1243", "2143", "1324"})), K::kNotAdjacent);
  EXPECT_EQ(kind_of(C({"1234", "1243", "2143", "2134"}), E("1234", "1324")), K::kMissingEdge);
  EXPECT_EQ(kind_of(C({"1234", "1243", "2143", "2134"}), std::nullopt, 6), K::kWrongLength);
  EXPECT_EQ(kind_of(C({"1234", "1243", "2143", "213"})), K::kDimensionMismatch);
  EXPECT_EQ(kind_of(C({"123", "132", "312", "321", "231", "213", "123", "132"})), K::kTooLong);
}

TEST(CheckerTest, CanonicalFormRotationAndReflection) {
  const auto c = C({"2134", "2314", "3214", "3124", "1324", "1234"});
  const auto canon = canonical_form(c);
  EXPECT_EQ(canon, C({"1234", "1324", "3124", "3214", "2314", "2134"}));
  auto reversed = c;
  std::reverse(reversed.vertices.begin(), reversed.vertices.end());
  EXPECT_EQ(canonical_form(reversed), canon);
  EXPECT_EQ(canonical_form(canon), canon);
  EXPECT_EQ(canonical_key(c), canonical_key(reversed));
}

// Random rotations and reflections, plus random different cycles: canonical
// forms agree exactly when edge sets agree.
TEST(CheckerTest, CanonicalFormMatchesEdgeSets) {
  std::mt19937_64 rng(5);
  const auto pool = enumerate_cycles(4, E("1234", "1324"), 10, 60);
  ASSERT_EQ(pool.size(), 60U);
  for (int trial = 0; trial < 1000; ++trial) {
    CycleWitness a = pool[rng() % pool.size()];
    CycleWitness b = rng() % 2 == 0 ? a : pool[rng() % pool.size()];
    std::rotate(b.vertices.begin(), b.vertices.begin() + static_cast<std::ptrdiff_t>(rng() % b.length()),
                b.vertices.end());
    if (rng() % 2 == 0) std::reverse(b.vertices.begin(), b.vertices.end());
    EXPECT_EQ(edge_set(a) == edge_set(b), canonical_form(a) == canonical_form(b));
    EXPECT_EQ(edge_set(canonical_form(b)), edge_set(b));
  }
}

TEST(CheckerTest, EnumerationCountsOnThreeDimensions) {
  EXPECT_EQ(all_edges(3).size(), 9U);
  for (const auto& e : all_edges(3)) {
    EXPECT_EQ(enumerate_cycles(3, e, 4).size(), 4U);
    EXPECT_EQ(enumerate_cycles(3, e, 6).size(), 4U);
  }
}

TEST(CheckerTest, EnumerationCountsOnFourDimensions) {
  struct Row {
    const char* v;
    std::size_t counts[4];
  };
  const Row rows[] = {{"1243", {5, 68, 829, 9092}},
                      {"1324", {5, 68, 829, 9092}},
                      {"2134", {5, 68, 829, 9092}},
                      {"4231", {5, 68, 829, 9092}},
                      {"3214", {8, 56, 708, 8232}}};
  for (const auto& row : rows) {
    const auto e = E("1234", row.v);
    for (std::size_t k = 0; k < 4; ++k) {
      const std::uint64_t l = 4 + 2 * k;
      EXPECT_EQ(enumerate_cycles(4, e, l).size(), row.counts[k]) << row.v << " l=" << l;
    }
  }
}

TEST(CheckerTest, EnumerationFourCyclesOnFiveDimensions) {
  EXPECT_EQ(enumerate_cycles(5, E("12345", "12354"), 4).size(), 7U);
  EXPECT_EQ(enumerate_cycles(5, E("12345", "52341"), 4).size(), 6U);
}

TEST(CheckerTest, EnumerationOutputIsValidAndDistinct) {
  const auto e = E("1234", "3214");
  const auto found = enumerate_cycles(4, e, 8);
  std::set<std::vector<std::uint64_t>> seen;
  for (const auto& c : found) {
    EXPECT_FALSE(validate(c, e, 8).has_value());
    seen.insert(canonical_key(c));
  }
  EXPECT_EQ(seen.size(), found.size());
  EXPECT_EQ(enumerate_cycles(4, e, 8, 3).size(), 3U);
}

TEST(CheckerTest, TractabilityGuard) {
  EXPECT_THROW(enumerate_cycles(6, E("123456", "213456"), 14), TractabilityError);
  EXPECT_NO_THROW(enumerate_cycles(6, E("123456", "213456"), 14, 1, true));
  EXPECT_NO_THROW(enumerate_cycles(6, E("123456", "213456"), 12, 1));
}

}  // namespace
}  // namespace bstar
