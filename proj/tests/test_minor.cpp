#include "support.hpp"

#include <gtest/gtest.h>

using namespace linklab;
using namespace linklab::testing;

TEST(Minor, CompleteGraphs) {
  EXPECT_TRUE(has_k6_minor(k6()));
  EXPECT_TRUE(has_k6_minor(complete_graph(7)));
  EXPECT_FALSE(has_k6_minor(complete_graph(5)));
  const auto full = k6();
  Graph missing(6);
  for (const auto &[u, v] : full.edges())
    if (!(u == 0 && v == 1))
      missing.add_edge(u, v);
  EXPECT_FALSE(has_k6_minor(missing));
}

TEST(Minor, Subdivisions) {
  EXPECT_TRUE(has_k6_minor(subdivide(k6(), {{0, 1}})));
  EXPECT_TRUE(has_k6_minor(subdivide(k6(), {{0, 1}, {2, 3}, {4, 5}})));
  EXPECT_TRUE(has_k6_minor(subdivide(k6(), {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}})));
}

TEST(Minor, Petersen) {
  const auto p = petersen_graph();
  // Counting argument: 15 edges and maximum degree 3. Branch sets covering
  // m vertices use at least m - 6 internal edges, so all 15 edges must join
  // distinct singleton branch sets, which needs degree 5.
  EXPECT_EQ(p.edge_count(), 15u);
  for (Vertex v = 0; v < 10; ++v)
    EXPECT_EQ(p.degree(v), 3u);
  EXPECT_FALSE(has_k6_minor(p));
}

TEST(Minor, PlanarSixVertexGraphs) {
  for (const auto &[name, g] : planar_six_vertex_samples()) {
    EXPECT_FALSE(has_k6_minor(g)) << name;
    EXPECT_FALSE(has_k6_minor_bruteforce(g)) << name;
  }
}

TEST(Minor, AgreesWithBranchSetEnumeration) {
  Rng rng(2024);
  int positives = 0;
  for (int i = 0; i < 120; ++i) {
    const auto n = static_cast<std::size_t>(rng.uniform(6, 8));
    const auto g = random_graph(rng, n, static_cast<int>(rng.uniform(55, 95)));
    const bool expected = has_k6_minor_bruteforce(g);
    positives += expected;
    EXPECT_EQ(has_k6_minor(g), expected) << "trial " << i;
  }
  EXPECT_GT(positives, 10);
  EXPECT_LT(positives, 110);
}

TEST(Minor, MonotoneUnderEdgeAddition) {
  Rng rng(7);
  for (int chain = 0; chain < 20; ++chain) {
    const auto n = static_cast<std::size_t>(rng.uniform(6, 10));
    Graph g = random_graph(rng, n, 30);
    bool before = has_k6_minor(g);
    for (int step = 0; step < 12; ++step) {
      const auto u = static_cast<Vertex>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
      const auto v = static_cast<Vertex>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
      if (u == v || !g.add_edge(u, v))
        continue;
      const bool after = has_k6_minor(g);
      EXPECT_TRUE(!before || after);
      before = after;
    }
  }
}

TEST(Minor, LimitIsEnforced) {
  EXPECT_THROW(has_k6_minor(complete_graph(13)), LimitExceeded);
}
