#include "bstar/embedder.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "bstar/base_cycles.hpp"
#include "bstar/checker.hpp"
#include "test_util.hpp"

namespace bstar {
namespace {

using testing::C;
using testing::E;
using testing::P;

const CycleWitness kC8 = C({"1234", "1324", "3124", "3214", "2314", "2134", "2143", "1243"});
const CycleWitness kH4 = C({"1234", "1324", "3124", "3214", "2314", "2134"});

// First l-cycle through e whose vertices all lie in BS_n(j).
CycleWitness inside(const EdgeRef& e, std::uint64_t l, int j) {
  for (const auto& c : enumerate_cycles(e.dimension(), e, l)) {
    if (std::all_of(c.vertices.begin(), c.vertices.end(), [&](const Permutation& x) { return x.last() == j; })) {
      return c;
    }
  }
  throw std::runtime_error("no such cycle");
}

bool visits(const CycleWitness& c, const Permutation& x) {
  return std::find(c.vertices.begin(), c.vertices.end(), x) != c.vertices.end();
}

CoupledPair pair_of(std::string_view x, std::string_view y, std::string_view xp, std::string_view yp) {
  return CoupledPair{P(x), P(y), P(xp), P(yp)};
}

TEST(EmbedderTest, MergeSharedEdge) {
  const auto c2 = inside(E("2143", "1243"), 4, 3);
  const auto ten = merge_shared_edge(kC8, c2, E("2143", "1243"));
  EXPECT_FALSE(validate(ten, E("1234", "1324"), 10).has_value());

  const auto c4 = C({"1234", "1243", "2143", "2134"});
  const auto six = inside(E("2134", "1234"), 6, 4);
  const auto eight = merge_shared_edge(c4, six, E("2134", "1234"));
  EXPECT_FALSE(validate(eight, E("1234", "1243"), 8).has_value());

  EXPECT_THROW(merge_shared_edge(kC8, kC8, E("1234", "1324")), std::invalid_argument);
  EXPECT_THROW(merge_shared_edge(c4, c2, E("1234", "1324")), std::invalid_argument);
}

TEST(EmbedderTest, MergeBridgedAndExtend) {
  const auto pair = pair_of("1234", "2134", "1243", "2143");
  const auto h3 = inside(pair.e_prime(), 6, 3);
  const auto c12 = merge_bridged(kH4, pair, h3);
  EXPECT_FALSE(validate(c12, E("1234", "1324"), 12).has_value());
  EXPECT_THROW(merge_bridged(kH4, pair, kH4), std::invalid_argument);

  // 14: a two-vertex detour from the BS_4(4) part into BS_4(1).
  const auto into_one = find_bridge(kH4, SubgraphId{1}, {edge_key(pair.x, pair.y)});
  const auto c14 = extend_two(c12, into_one.pair);
  EXPECT_FALSE(validate(c14, E("1234", "1324"), 14).has_value());
  EXPECT_TRUE(visits(c14, into_one.pair.x_prime));
  EXPECT_THROW(extend_two(c14, into_one.pair), std::invalid_argument);

  // 18 then 20: attach all of BS_4(1), then detour into BS_4(2).
  const auto h1 = inside(into_one.pair.e_prime(), 6, 1);
  const auto c18 = merge_bridged(c12, into_one.pair, h1);
  EXPECT_FALSE(validate(c18, E("1234", "1324"), 18).has_value());
  EdgeSet used{edge_key(pair.x, pair.y), edge_key(into_one.pair.x, into_one.pair.y), edge_key(E("1234", "1324"))};
  const auto into_two = find_bridge(kH4, SubgraphId{2}, used);
  const auto c20 = extend_two(c18, into_two.pair);
  EXPECT_FALSE(validate(c20, E("1234", "1324"), 20).has_value());
}

TEST(EmbedderTest, ExtendThenMergeEqualsMergeBridged) {
  for (int j = 1; j <= 3; ++j) {
    const auto sel = find_bridge(kH4, SubgraphId{j}, {});
    const auto far = inside(sel.pair.e_prime(), 6, j);
    const auto direct = merge_bridged(kH4, sel.pair, far);
    const auto stepwise = merge_shared_edge(extend_two(kH4, sel.pair), far, sel.pair.e_prime());
    EXPECT_EQ(canonical_form(direct), canonical_form(stepwise));
    EXPECT_EQ(direct.length(), 12U);
  }
}

TEST(EmbedderTest, SpliceRejectsNonEdges) {
  EXPECT_THROW(extend_two(kH4, pair_of("1234", "2134", "1243", "1234")), std::invalid_argument);
  EXPECT_THROW(extend_two(kH4, pair_of("1234", "3124", "1243", "3142")), std::invalid_argument);
}

TEST(EmbedderTest, DecomposeLength) {
  const auto a = decompose_length(5, 26);
  EXPECT_EQ(a.q, 1U);
  EXPECT_EQ(a.p, 2U);
  const auto b = decompose_length(5, 120);
  EXPECT_EQ(b.q, 4U);
  EXPECT_EQ(b.p, 24U);
  const auto c = decompose_length(5, 48);
  EXPECT_EQ(c.q, 1U);
  EXPECT_EQ(c.p, 24U);
  EXPECT_THROW(decompose_length(5, 24), std::invalid_argument);
  EXPECT_THROW(decompose_length(5, 27), std::invalid_argument);
  EXPECT_THROW(decompose_length(5, 122), std::invalid_argument);
  for (int n = 4; n <= 7; ++n) {
    const std::uint64_t block = factorial(n - 1);
    for (std::uint64_t l = block + 2; l <= block * static_cast<std::uint64_t>(n); l += 2) {
      const auto s = decompose_length(n, l);
      EXPECT_EQ(s.q * block + s.p, l);
      EXPECT_GE(s.q, 1U);
      EXPECT_LE(s.q, static_cast<std::uint64_t>(n - 1));
      EXPECT_GE(s.p, 2U);
      EXPECT_LE(s.p, block);
      EXPECT_EQ(s.p % 2, 0U);
    }
  }
}

TEST(EmbedderTest, CrossEdgeFourCycles) {
  const Permutation u = Permutation::identity(5);
  for (const auto& c : minus_edge_four_cycles(u)) EXPECT_FALSE(validate(c, E("12345", "12354"), 4).has_value());
  for (const auto& c : plus_edge_four_cycles(u)) EXPECT_FALSE(validate(c, E("12345", "52341"), 4).has_value());
  std::set<std::vector<std::uint64_t>> minus_keys;
  std::set<std::vector<std::uint64_t>> plus_keys;
  for (const auto& c : minus_edge_four_cycles(u)) minus_keys.insert(canonical_key(c));
  for (const auto& c : plus_edge_four_cycles(u)) plus_keys.insert(canonical_key(c));
  EXPECT_EQ(minus_keys.size(), 4U);
  EXPECT_EQ(plus_keys.size(), 4U);
  EXPECT_THROW(minus_edge_four_cycles(P("1234")), std::invalid_argument);
  // Random vertices of BS_6.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = testing::random_perm(6, rng);
    for (const auto& c : minus_edge_four_cycles(x)) EXPECT_FALSE(validate(c, classify_edge(x, minus(x)), 4).has_value());
    for (const auto& c : plus_edge_four_cycles(x)) EXPECT_FALSE(validate(c, classify_edge(x, plus(x)), 4).has_value());
  }
}

TEST(EmbedderTest, SmallRequests) {
  const auto e = E("1234", "1324");
  const auto eight = embed(EmbedRequest{4, e, 8, 4});
  ASSERT_EQ(eight.size(), 4U);
  std::set<std::vector<std::uint64_t>> keys;
  for (const auto& c : eight) {
    EXPECT_FALSE(validate(c, e, 8).has_value());
    EXPECT_EQ(c, canonical_form(c));
    keys.insert(canonical_key(c));
  }
  EXPECT_EQ(keys.size(), 4U);

  const auto k33 = embed(EmbedRequest{3, E("123", "132"), 4, 4});
  std::set<std::vector<std::uint64_t>> found;
  for (const auto& c : k33) found.insert(canonical_key(c));
  std::set<std::vector<std::uint64_t>> oracle;
  for (const auto& c : enumerate_cycles(3, E("123", "132"), 4)) oracle.insert(canonical_key(c));
  EXPECT_EQ(found, oracle);
}

TEST(EmbedderTest, RejectsBadRequests) {
  const auto e = E("1234", "1324");
  EXPECT_THROW(embed(EmbedRequest{4, e, 7, 4}), std::invalid_argument);
  EXPECT_THROW(embed(EmbedRequest{4, e, 2, 4}), std::invalid_argument);
  EXPECT_THROW(embed(EmbedRequest{4, e, 26, 4}), std::invalid_argument);
  EXPECT_THROW(embed(EmbedRequest{5, e, 8, 4}), std::invalid_argument);
  EXPECT_THROW(embed(EmbedRequest{4, e, 8, 0}), std::invalid_argument);
  EXPECT_THROW(embed(EmbedRequest{3, E("123", "132"), 4, 5}), InsufficientCycles);
}

TEST(EmbedderTest, FiveDimensionalSoundness) {
  const std::vector<EdgeRef> edges{E("12345", "21345"), E("12345", "32145"), E("12345", "42315"),
                                   E("12345", "13245"), E("12345", "12435"), E("12345", "12354"),
                                   E("12345", "52341"), E("31524", "13524")};
  for (const auto& e : edges) {
    for (std::uint64_t l = 4; l <= 120; l += 2) {
      const auto cycles = embed(EmbedRequest{5, e, l, 4});
      ASSERT_EQ(cycles.size(), 4U);
      std::set<std::vector<std::uint64_t>> keys;
      for (const auto& c : cycles) {
        EXPECT_FALSE(validate(c, e, l).has_value()) << format_perm(e.u) << ":" << format_perm(e.v) << " l=" << l;
        keys.insert(canonical_key(c));
      }
      EXPECT_EQ(keys.size(), 4U);
    }
  }
}

TEST(EmbedderTest, Deterministic) {
  const auto e = E("21345", "12345");
  const auto first = embed(EmbedRequest{5, e, 74, 4});
  clear_embed_cache();
  (void)embed(EmbedRequest{5, e, 74, 6});
  EXPECT_EQ(embed(EmbedRequest{5, e, 74, 4}), first);
  clear_embed_cache();
  EXPECT_EQ(embed(EmbedRequest{5, e, 74, 4}), first);
}

TEST(EmbedderTest, Hamiltonian) {
  const auto h3 = hamiltonian(3, E("123", "213"));
  EXPECT_FALSE(validate(h3, E("123", "213"), 6).has_value());
  for (int n = 4; n <= 7; ++n) {
    const Permutation u = Permutation::identity(n);
    for (const auto& v : {neighbors(u).front(), minus(u), plus(u)}) {
      const auto e = classify_edge(u, v);
      const auto h = hamiltonian(n, e);
      EXPECT_FALSE(validate(h, e, factorial(n)).has_value()) << n;
    }
  }
  EXPECT_THROW(hamiltonian(2, E("12", "21")), std::invalid_argument);
}

}  // namespace
}  // namespace bstar
