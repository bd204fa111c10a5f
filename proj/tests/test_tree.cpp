#include <gtest/gtest.h>

#include "oracles.hpp"
#include "swapset/enumerate.hpp"
#include "swapset/exact.hpp"
#include "swapset/tree.hpp"

using namespace swapset;

namespace {

// Centre 0 with legs 0-1-2, 0-3-4, 0-5-6.
Graph spider3() { return Graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}); }

// Path 0-1-2 with leaves 3,4 on 0 and 5,6 on 2.
Graph double_broom() { return Graph(7, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 5}, {2, 6}}); }

const std::vector<Graph>& all_trees() {
  static const std::vector<Graph> trees = nontrivial_trees_up_to(10);
  return trees;
}

} // namespace

TEST(TreeEnumeration, CountsPerOrder) {
  const std::vector<std::size_t> expect{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(enumerate_trees(n).size(), expect[static_cast<std::size_t>(n - 1)]) << n;
  EXPECT_EQ(all_trees().size(), 200U);
}

TEST(IsWeakTree, Examples) {
  EXPECT_TRUE(is_weak_tree(path_graph(6)));
  EXPECT_FALSE(is_weak_tree(star_graph(3)));
  EXPECT_TRUE(is_weak_tree(spider3()));
  EXPECT_THROW(is_weak_tree(cycle_graph(4)), ContractError);
}

TEST(WeakReduction, Examples) {
  WeakReduction claw = weak_reduction(star_graph(3));
  EXPECT_EQ(claw.reduced, path_graph(2));
  EXPECT_EQ(claw.removed, (std::vector<std::pair<Vertex, Vertex>>{{0, 2}, {0, 3}}));

  WeakReduction p5 = weak_reduction(path_graph(5));
  EXPECT_EQ(p5.reduced, path_graph(5));
  EXPECT_TRUE(p5.removed.empty());

  WeakReduction broom = weak_reduction(double_broom());
  EXPECT_EQ(broom.removed.size(), 2U);
  EXPECT_EQ(broom.reduced.order(), 5U);
  EXPECT_EQ(canonical_id(broom.reduced), canonical_id(path_graph(5)));
}

TEST(SWeight, Examples) {
  EXPECT_EQ(s_weight(path_graph(4)).weight, 2);
  EXPECT_EQ(s_weight(path_graph(2)).weight, 1);
  WeightedPartition claw = s_weight(star_graph(3));
  EXPECT_EQ(claw.weight, 3);
  ASSERT_EQ(claw.partition.parts.size(), 1U);
  EXPECT_EQ(claw.partition.parts[0].center, 0);
  EXPECT_THROW(s_weight(path_graph(1)), ContractError);
}

TEST(SwapSetFromPartition, Examples) {
  Graph p4 = path_graph(4);
  StarPartition two_edges = make_partition({make_part(p4, {0, 1}), make_part(p4, {2, 3})});
  SwapCertificate c = swap_set_from_partition(p4, two_edges);
  EXPECT_TRUE(verify_certificate(p4, c));
  EXPECT_EQ(c.size(), 2U);

  Graph p6 = path_graph(6);
  SwapCertificate c6 = swap_set_from_partition(p6, s_weight(p6).partition);
  EXPECT_TRUE(verify_certificate(p6, c6));
  EXPECT_EQ(c6.size(), 3U);

  SwapCertificate c2 = swap_set_from_partition(path_graph(2), make_partition({make_part(path_graph(2), {0, 1})}));
  EXPECT_EQ(c2.d.members(), std::vector<Vertex>{0});
  EXPECT_EQ(c2.d_prime.members(), std::vector<Vertex>{1});
}

TEST(SwapSetFromPartition, RejectsBadInput) {
  Graph claw = star_graph(3);
  EXPECT_THROW(swap_set_from_partition(claw, s_weight(claw).partition), ContractError);
  Graph p4 = path_graph(4);
  StarPartition bad = make_partition({make_part(p4, {0}), make_part(p4, {1, 2}), make_part(p4, {3})});
  EXPECT_THROW(swap_set_from_partition(p4, bad), ContractError);
  Graph p5 = path_graph(5);
  StarPartition big = make_partition({make_part(p5, {0, 1}), make_part(p5, {2, 3, 4})});
  EXPECT_THROW(swap_set_from_partition(p5, big), ContractError);
}

TEST(SwapSetFromPartition, NeedsRelabelling) {
  // Two K1 vertices (0 and 5) sharing K2 neighbours: 0 sees {1,3}, 5 sees
  // {4,6}; the K2 parts 1-2, 3-4, 6-7 force the second K1 to flip a side.
  Graph t(9, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 8}});
  WeightedPartition w = s_weight(t);
  SwapCertificate c = swap_set_from_partition(t, w.partition);
  EXPECT_TRUE(verify_certificate(t, c));
  EXPECT_EQ(static_cast<int>(c.size()), w.weight);
}

TEST(DdmTree, Examples) {
  DdmResult p4 = dd_m_tree(path_graph(4));
  ASSERT_TRUE(p4.finite());
  EXPECT_EQ(*p4.k, 2);
  EXPECT_EQ(dd_m_tree(star_graph(3)).status, DdmStatus::infinite);
  EXPECT_THROW(dd_m_tree(cycle_graph(5)), ContractError);
  EXPECT_THROW(dd_m_tree(path_graph(1)), ContractError);
}

TEST(HatGraph, Examples) {
  EXPECT_EQ(canonical_id(hat_graph(path_graph(2))), canonical_id(path_graph(4)));
  EXPECT_EQ(hat_graph(path_graph(1)), path_graph(2));
  Graph h3 = hat_graph(path_graph(3));
  EXPECT_EQ(h3.order(), 6U);
  EXPECT_EQ(oracle::gamma(h3), 3);
  EXPECT_EQ(oracle::alpha(h3), 3);
}

TEST(Characterisations, Examples) {
  EXPECT_TRUE(four_way_equality(path_graph(4)));
  EXPECT_FALSE(four_way_equality(path_graph(5)));
  EXPECT_FALSE(four_way_equality(path_graph(6)));
  EXPECT_TRUE(alpha_equals_ddm(path_graph(4)));
  EXPECT_FALSE(alpha_equals_ddm(path_graph(5)));
  EXPECT_FALSE(alpha_equals_ddm(star_graph(3)));
  EXPECT_TRUE(alpha_equals_eviction(path_graph(4)));
  EXPECT_TRUE(alpha_equals_eviction(star_graph(3)));
  EXPECT_FALSE(alpha_equals_eviction(path_graph(5)));
  EXPECT_EQ(oracle::alpha(star_graph(3)), s_weight(star_graph(3)).weight);
}

// --- exhaustive properties over every tree with at most ten vertices -------

TEST(TreesExhaustive, SWeightMatchesPartitionOracle) {
  for (const Graph& t : all_trees()) {
    WeightedPartition w = s_weight(t);
    EXPECT_EQ(w.weight, star_partition_weight_oracle(t).weight) << to_edge_list(t);
    EXPECT_EQ(check_simple_star_partition(t, w.partition), "") << to_edge_list(t);
  }
}

TEST(TreesExhaustive, SwapSetConstructionIsSound) {
  for (const Graph& t : all_trees()) {
    if (!is_weak_tree(t)) continue;
    WeightedPartition w = s_weight(t);
    SwapCertificate c = swap_set_from_partition(t, w.partition);
    EXPECT_TRUE(verify_certificate(t, c)) << to_edge_list(t);
    EXPECT_EQ(static_cast<int>(c.size()), w.weight);
  }
}

TEST(TreesExhaustive, TreeSwapNumberMatchesExactSearch) {
  for (const Graph& t : all_trees()) {
    DdmResult a = dd_m_tree(t), b = dd_m_exact(t);
    EXPECT_EQ(a.status, b.status) << to_edge_list(t);
    EXPECT_EQ(a.k, b.k) << to_edge_list(t);
    EXPECT_EQ(has_swap_set(t).answer == SwapAnswer::yes, is_weak_tree(t));
  }
}

TEST(TreesExhaustive, WeakReductionAdditivity) {
  for (const Graph& t : all_trees()) {
    WeakReduction red = weak_reduction(t);
    EXPECT_TRUE(is_weak_tree(red.reduced));
    EXPECT_EQ(s_weight(t).weight, s_weight(red.reduced).weight + static_cast<int>(red.removed.size())) << to_edge_list(t);
  }
}

TEST(TreesExhaustive, IndependenceCharacterisations) {
  for (const Graph& t : all_trees()) {
    const int alpha = oracle::alpha(t);
    const int s = s_weight(t).weight;
    EXPECT_EQ(alpha_equals_eviction(t), alpha == s) << to_edge_list(t);
    auto ddm = oracle::ddm(t);
    EXPECT_EQ(alpha_equals_ddm(t), ddm && *ddm == alpha) << to_edge_list(t);
    if (ddm) EXPECT_LE(*ddm, alpha);
    EXPECT_EQ(four_way_equality(t), oracle::gamma(t) == alpha) << to_edge_list(t);
  }
}
