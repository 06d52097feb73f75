#include "bstar/topology.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace bstar {
namespace {

using testing::E;
using testing::P;

std::set<Permutation, bool (*)(const Permutation&, const Permutation&)> as_set(const std::vector<Permutation>& v) {
  std::set<Permutation, bool (*)(const Permutation&, const Permutation&)> s(
      [](const Permutation& a, const Permutation& b) { return rank(a) < rank(b); });
  s.insert(v.begin(), v.end());
  return s;
}

TEST(TopologyTest, NeighborsOfIdentity) {
  EXPECT_EQ(neighbors(P("1234")), (std::vector<Permutation>{P("2134"), P("3214"), P("4231"), P("1324"), P("1243")}));
  EXPECT_EQ(neighbors(P("123")), (std::vector<Permutation>{P("213"), P("321"), P("132")}));
}

TEST(TopologyTest, ClassifyEdge) {
  EXPECT_EQ(E("1234", "1324").cls, (EdgeClass{EdgeClass::Kind::kAdjacent, 3}));
  EXPECT_EQ(E("1234", "4231").cls.kind, EdgeClass::Kind::kPlus);
  EXPECT_EQ(E("1234", "1243").cls.kind, EdgeClass::Kind::kMinus);
  EXPECT_EQ(E("1234", "2134").cls.kind, EdgeClass::Kind::kOverlap);
  EXPECT_EQ(E("1234", "3214").cls, (EdgeClass{EdgeClass::Kind::kStar, 3}));
  EXPECT_EQ(E("12345", "42315").cls, (EdgeClass{EdgeClass::Kind::kStar, 4}));
  EXPECT_EQ(E("12345", "12435").cls, (EdgeClass{EdgeClass::Kind::kAdjacent, 4}));
  EXPECT_FALSE(is_adjacent(P("1234"), P("4321")));
  EXPECT_FALSE(is_adjacent(P("1234"), P("1432")));  // (2,4) is not a generator
  EXPECT_FALSE(is_adjacent(P("12345"), P("14325")));
  EXPECT_THROW(classify_edge(P("1234"), P("4321")), std::invalid_argument);
  EXPECT_THROW(is_adjacent(P("123"), P("1234")), std::invalid_argument);
  // Stored with the smaller rank first regardless of argument order.
  EXPECT_EQ(classify_edge(P("1324"), P("1234")).u, P("1234"));
}

TEST(TopologyTest, Subgraphs) {
  EXPECT_EQ(subgraph_of(P("1234")).i, 4);
  EXPECT_EQ(subgraph_of(P("2143")).i, 3);
  EXPECT_EQ(subgraph_of(P("4132")).i, 2);
}

TEST(TopologyTest, ProjectInject) {
  EXPECT_EQ(project(P("1324"), SubgraphId{4}), P("132"));
  EXPECT_EQ(project(P("1432"), SubgraphId{2}), P("132"));
  EXPECT_EQ(inject(P("132"), SubgraphId{2}), P("1432"));
  EXPECT_THROW(project(P("1432"), SubgraphId{3}), std::invalid_argument);
  EXPECT_THROW(inject(P("132"), SubgraphId{5}), std::invalid_argument);
}

TEST(TopologyTest, CanonicalizeEdge) {
  const auto c = canonicalize_edge(E("2134", "2314"));
  EXPECT_EQ(c.pi, P("2134"));
  EXPECT_EQ(c.edge.u, P("1234"));
  EXPECT_EQ(c.edge.v, P("1324"));
  EXPECT_EQ(c.edge.cls, E("2134", "2314").cls);

  const auto id = canonicalize_edge(E("1234", "1243"));
  EXPECT_EQ(id.pi, P("1234"));
  EXPECT_EQ(id.edge, E("1234", "1243"));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const EdgeRef e = testing::random_edge(5, rng);
    const auto canon = canonicalize_edge(e);
    EXPECT_EQ(canon.edge.u, Permutation::identity(5));
    EXPECT_EQ(canon.edge.cls, e.cls);
    EXPECT_EQ(classify_edge(canon.edge.u, canon.edge.v).cls, e.cls);
    const Permutation back = canon.pi.inverse();
    EXPECT_EQ(classify_edge(relabel(canon.edge.u, back), relabel(canon.edge.v, back)), e);
    // Relabeling maps the neighborhood of u bijectively onto that of the identity.
    std::vector<Permutation> mapped;
    for (const auto& y : neighbors(e.u)) mapped.push_back(relabel(y, canon.pi));
    EXPECT_EQ(as_set(mapped), as_set(neighbors(canon.edge.u)));
  }
}

TEST(TopologyTest, Counts) {
  EXPECT_EQ(count_vertices(4), 24U);
  EXPECT_EQ(count_edges(4), 60U);
  EXPECT_EQ(count_edges(2), 1U);
  EXPECT_EQ(bipartition_sizes(3), (std::pair<std::uint64_t, std::uint64_t>{3, 3}));
  EXPECT_EQ(count_edges(19), 121645100408832000ULL / 2 * 35);
  EXPECT_EQ(count_vertices(20), 2432902008176640000ULL);
  EXPECT_THROW(count_edges(20), std::overflow_error);
  EXPECT_THROW(count_vertices(21), std::overflow_error);
  EXPECT_THROW(count_vertices(1), std::invalid_argument);
  EXPECT_EQ(all_edges(4).size(), 60U);
}

TEST(TopologyTest, ParseEdge) {
  EXPECT_EQ(parse_edge(4, "1234:1324"), E("1234", "1324"));
  EXPECT_THROW(parse_edge(4, "1234:4321"), std::invalid_argument);
  EXPECT_THROW(parse_edge(4, "1234-1324"), std::invalid_argument);
  EXPECT_THROW(parse_edge(5, "1234:1324"), std::invalid_argument);
}

// Exhaustive: regularity, symmetry, bipartiteness, and which classes cross subgraphs.
TEST(TopologyTest, StructureUpToSix) {
  for (int n = 2; n <= 6; ++n) {
    std::uint64_t even = 0;
    for (std::uint64_t r = 0; r < factorial(n); ++r) {
      const Permutation x = unrank(n, r);
      if (parity(x) == Parity::kEven) ++even;
      const auto ns = neighbors(x);
      ASSERT_EQ(ns.size(), static_cast<std::size_t>(2 * n - 3));
      EXPECT_EQ(as_set(ns).size(), ns.size());
      for (const auto& y : ns) {
        EXPECT_TRUE(is_adjacent(y, x));
        EXPECT_NE(parity(x), parity(y));
        const auto cls = classify_edge(x, y).cls.kind;
        if (n >= 3) {
          const bool crosses = cls == EdgeClass::Kind::kMinus || cls == EdgeClass::Kind::kPlus;
          EXPECT_EQ(crosses, x.last() != y.last());
        }
      }
    }
    EXPECT_EQ(even, factorial(n) / 2);
  }
}

// BS_n(i) projects bijectively onto BS_{n-1}, preserving adjacency both ways.
TEST(TopologyTest, SubgraphIsomorphismUpToFive) {
  for (int n = 3; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      std::set<std::uint64_t> images;
      for (std::uint64_t r = 0; r < factorial(n); ++r) {
        const Permutation x = unrank(n, r);
        if (x.last() != i) continue;
        const Permutation px = project(x, SubgraphId{i});
        images.insert(rank(px));
        EXPECT_EQ(inject(px, SubgraphId{i}), x);
        for (std::uint64_t s = 0; s < factorial(n); ++s) {
          const Permutation y = unrank(n, s);
          if (y.last() != i) continue;
          EXPECT_EQ(is_adjacent(x, y), is_adjacent(px, project(y, SubgraphId{i})));
        }
      }
      EXPECT_EQ(images.size(), factorial(n - 1));
    }
  }
}

}  // namespace
}  // namespace bstar
