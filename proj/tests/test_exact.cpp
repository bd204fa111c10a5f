#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "swapset/exact.hpp"
#include "swapset/graph.hpp"

using namespace swapset;

TEST(DdmExact, PathOnFourVertices) {
  DdmResult r = dd_m_exact(path_graph(4));
  ASSERT_EQ(r.status, DdmStatus::finite);
  EXPECT_EQ(*r.k, 2);
  EXPECT_TRUE(verify_certificate(path_graph(4), *r.certificate));
}

TEST(DdmExact, ClawHasNoSwapSet) {
  EXPECT_EQ(dd_m_exact(star_graph(3)).status, DdmStatus::infinite);
}

// Commonly cited as swap-set free, but D = {0,1,5}, D' = {2,3,4} works:
// both subdivision vertices on the 0-1 side are matched to 0 and 1, and the
// branch vertex 2 is matched to a neighbour on the 0-2 side.
TEST(DdmExact, SubdividedDoubledTriangleHasSwapSetOfSizeThree) {
  Graph g = subdivided_doubled_triangle();
  EXPECT_EQ(g.order(), 9U);
  EXPECT_EQ(independence_number(g), 6);
  SearchOptions opt;
  opt.strong_shortcut = false;
  DdmResult r = dd_m_search(g, opt);
  ASSERT_TRUE(r.finite());
  EXPECT_EQ(*r.k, 3);
  EXPECT_EQ(oracle::ddm(g), std::optional<int>(3));
  SwapCertificate c = certificate_from_pairs(9, {{0, 3}, {1, 4}, {5, 2}});
  EXPECT_TRUE(verify_certificate(g, c));
}

TEST(DdmExact, FourCycle) {
  DdmResult r = dd_m_exact(cycle_graph(4));
  ASSERT_TRUE(r.finite());
  EXPECT_EQ(*r.k, 2);
}

TEST(DdmExact, SingleEdge) {
  DdmResult r = dd_m_exact(path_graph(2));
  ASSERT_TRUE(r.finite());
  EXPECT_EQ(*r.k, 1);
  EXPECT_EQ(r.certificate->d.members(), std::vector<Vertex>{0});
  EXPECT_EQ(r.certificate->d_prime.members(), std::vector<Vertex>{1});
}

TEST(DdmExact, TrivialGraphIsInfinite) {
  EXPECT_EQ(dd_m_exact(path_graph(1)).status, DdmStatus::infinite);
}

TEST(DdmExact, EmptyGraphRejected) { EXPECT_THROW(dd_m_exact(Graph(0, {})), ContractError); }

TEST(DdmExact, BudgetExceededIsReported) {
  DdmResult r = dd_m_exact(grid_graph(6, 6), 1);
  EXPECT_EQ(r.status, DdmStatus::budget_exceeded);
  EXPECT_FALSE(r.certificate);
}

TEST(DdmExact, LexicographicallyLeastCertificateOnP4) {
  DdmResult r = dd_m_exact(path_graph(4));
  EXPECT_EQ(r.certificate->d.members(), (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(r.certificate->d_prime.members(), (std::vector<Vertex>{1, 3}));
}

TEST(HasSwapSet, Examples) {
  EXPECT_EQ(has_swap_set(path_graph(3)).answer, SwapAnswer::no);
  EXPECT_EQ(has_swap_set(star_graph(4)).answer, SwapAnswer::no);
  EXPECT_EQ(has_swap_set(path_graph(4)).answer, SwapAnswer::yes);
  EXPECT_EQ(has_swap_set(cycle_graph(5)).answer, SwapAnswer::yes);
}

TEST(DdmExact, MatchesBruteForceOnRandomGraphs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 2 + trial % 9;
    Graph g = oracle::random_graph(n, 0.2 + 0.05 * (trial % 10), rng);
    DdmResult r = dd_m_exact(g);
    auto expect = oracle::ddm(g);
    ASSERT_EQ(r.finite(), expect.has_value()) << to_edge_list(g);
    if (!expect) continue;
    EXPECT_EQ(*r.k, *expect) << to_edge_list(g);
    EXPECT_TRUE(verify_certificate(g, *r.certificate));
    EXPECT_GE(*r.k, oracle::gamma(g));
  }
}

TEST(DdmExact, NoSmallerCertificateOnTwelveVertices) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    Graph g = oracle::random_graph(12, 0.3, rng);
    DdmResult r = dd_m_exact(g);
    if (!r.finite()) continue;
    EXPECT_TRUE(verify_certificate(g, *r.certificate));
    if (*r.k > 1) EXPECT_FALSE(oracle::swap_of_size(g, *r.k - 1)) << to_edge_list(g);
  }
}

TEST(DdmExact, StrongShortcutNeverChangesTheAnswer) {
  std::mt19937 rng(3);
  int strong_seen = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 3 + trial % 8;
    Graph g = trial % 2 ? oracle::random_tree(n, rng) : oracle::random_graph(n, 0.3, rng);
    SearchOptions off;
    off.strong_shortcut = false;
    DdmResult a = dd_m_exact(g), b = dd_m_search(g, off);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.k, b.k);
    if (is_strong_graph(g)) {
      ++strong_seen;
      EXPECT_EQ(b.status, DdmStatus::infinite) << to_edge_list(g);
    }
  }
  EXPECT_GT(strong_seen, 10);
}

TEST(DdmExact, SpanningSubgraphCertificateLiftsToSupergraph) {
  std::mt19937 rng(5);
  std::bernoulli_distribution keep(0.7);
  int lifted = 0;
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = oracle::random_graph(4 + trial % 7, 0.5, rng);
    std::vector<Edge> sub;
    for (auto e : g.edges())
      if (keep(rng)) sub.push_back(e);
    Graph h(g.order(), sub);
    DdmResult rh = dd_m_exact(h);
    if (!rh.finite()) continue;
    ++lifted;
    EXPECT_TRUE(verify_certificate(g, *rh.certificate));
    DdmResult rg = dd_m_exact(g);
    ASSERT_TRUE(rg.finite());
    EXPECT_LE(*rg.k, *rh.k);
  }
  EXPECT_GT(lifted, 10);
}

TEST(DdmExact, Deterministic) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = oracle::random_graph(9, 0.35, rng);
    DdmResult a = dd_m_exact(g), b = dd_m_exact(g);
    EXPECT_EQ(a.k, b.k);
    EXPECT_EQ(a.certificate, b.certificate);
  }
}

TEST(DdmSearch, CandidateRestriction) {
  // P4 restricted to the middle and one end: no swap set.
  SearchOptions opt;
  opt.candidates = VertexSet(4, {0, 1, 2});
  EXPECT_EQ(dd_m_search(path_graph(4), opt).status, DdmStatus::infinite);
}

TEST(StarPartitionOracle, Examples) {
  EXPECT_EQ(star_partition_weight_oracle(path_graph(4)).weight, 2);
  EXPECT_EQ(star_partition_weight_oracle(path_graph(2)).weight, 1);
  WeightedPartition claw = star_partition_weight_oracle(star_graph(3));
  EXPECT_EQ(claw.weight, 3);
  ASSERT_EQ(claw.partition.parts.size(), 1U);
  EXPECT_EQ(claw.partition.parts[0].center, 0);
}

TEST(StarPartitionOracle, Contract) {
  EXPECT_THROW(star_partition_weight_oracle(path_graph(1)), ContractError);
  EXPECT_THROW(star_partition_weight_oracle(cycle_graph(4)), ContractError);
}
