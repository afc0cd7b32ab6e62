#include <gtest/gtest.h>

#include <chrono>

#include "gerry/error.hpp"
#include "gerry/evaluate.hpp"
#include "gerry/oracle.hpp"
#include "gerry/reductions.hpp"
#include "test_support.hpp"

namespace gerry {
namespace {

std::size_t expected_vertices(const CliquePathParams& P) {
  const std::size_t base = P.n * (4 * P.N - 1) + 4 * P.m + (P.N + 1) + (P.N - (P.n - P.l));
  return P.connected ? base + (P.z - 1) * P.M : base;
}

TEST(CliqueToPath, K3Disconnected) {
  const CliquePathOutput out = clique_to_path(complete_graph(3), 3, false);
  EXPECT_EQ(out.params.N, 36U);
  EXPECT_EQ(out.params.z, 79U);
  EXPECT_EQ(out.params.k, 88U);
  EXPECT_EQ(out.instance.k, 88U);
  EXPECT_EQ(components_without(out.instance, {}).size(), 79U);
  ASSERT_EQ(out.gadgets.vertex_paths.size(), 3U);
  for (const auto& vp : out.gadgets.vertex_paths) EXPECT_EQ(vp.size(), 143U);
  EXPECT_EQ(out.gadgets.edge_paths.size(), 3U);
  EXPECT_EQ(out.gadgets.independent_set.size(), 73U);
  EXPECT_TRUE(out.instance.allow_disconnected);
  EXPECT_TRUE(validate_clique_path(out).empty());
}

TEST(CliqueToPath, K3Connected) {
  const CliquePathOutput out = clique_to_path(complete_graph(3), 3, true);
  EXPECT_EQ(out.instance.vertex_count, 34912U);
  EXPECT_EQ(out.instance.k, 34485U);
  EXPECT_EQ(out.params.M, 441U);
  EXPECT_EQ(out.gadgets.connectors.size(), 78U);
  const ShapeReport shape = classify_shape(out.instance);
  EXPECT_TRUE(shape.is_path);
  EXPECT_TRUE(validate_clique_path(out).empty());
}

TEST(CliqueToPath, StructureForSeveralGraphs) {
  for (const bool connected : {false, true}) {
    for (const auto& [g, l] : {std::pair{complete_graph(3), std::size_t{2}}, std::pair{cycle_graph(5), std::size_t{2}},
                               std::pair{cycle_graph(4), std::size_t{3}}, std::pair{complete_graph(4), std::size_t{1}}}) {
      const CliquePathOutput out = clique_to_path(g, l, connected);
      EXPECT_TRUE(validate_clique_path(out).empty());
      EXPECT_EQ(out.instance.vertex_count, expected_vertices(out.params));
      for (const Weight w : out.instance.weight) ASSERT_EQ(w, 1);
    }
  }
}

TEST(CliqueToPath, RejectsBadSources) {
  SimpleGraph path3{3, {{0, 1}, {1, 2}}};
  EXPECT_THROW((void)clique_to_path(path3, 2, false), std::invalid_argument);
  EXPECT_THROW((void)clique_to_path(complete_graph(3), 0, false), std::invalid_argument);
  EXPECT_THROW((void)clique_to_path(complete_graph(3), 4, false), std::invalid_argument);
  SimpleGraph loop{2, {{0, 0}, {1, 1}}};
  EXPECT_THROW((void)clique_to_path(loop, 1, false), std::invalid_argument);
}

TEST(ValidateCliquePath, DetectsTampering) {
  CliquePathOutput out = clique_to_path(complete_graph(3), 3, false);
  out.instance.weight[5] = 2;
  out.instance.k += 1;
  const auto bad = validate_clique_path(out);
  EXPECT_EQ(bad.size(), 2U);
}

void expect_clique_witness(const SimpleGraph& g, std::size_t l, const std::vector<Vertex>& clique,
                           bool connected) {
  const CliquePathOutput out = clique_to_path(g, l, connected);
  const Partition part = clique_witness(out, g, clique);
  const EvalReport rep = evaluate_partition(out.instance, part);
  EXPECT_TRUE(rep.is_solution) << rep.violation.value_or("");
  EXPECT_EQ(rep.uniquely_p_count, out.params.N + 1);
  const ColorId q = static_cast<ColorId>(
      std::find(out.instance.colors.begin(), out.instance.colors.end(), "q") - out.instance.colors.begin());
  EXPECT_EQ(rep.colored_count.at(q), out.params.N);
  EXPECT_EQ(part.size(), out.params.k);
}

TEST(CliqueWitness, K3AllVertices) {
  const CliquePathOutput out = clique_to_path(complete_graph(3), 3, false);
  const std::vector<Vertex> k{0, 1, 2};
  const Partition part = clique_witness(out, complete_graph(3), k);
  EXPECT_EQ(part.size(), 88U);
  const EvalReport rep = evaluate_partition(out.instance, part);
  EXPECT_TRUE(rep.is_solution);
  EXPECT_EQ(rep.uniquely_p_count, 37U);
}

TEST(CliqueWitness, SolutionsInBothModes) {
  for (const bool connected : {false, true}) {
    expect_clique_witness(complete_graph(3), 3, {0, 1, 2}, connected);
    expect_clique_witness(complete_graph(3), 2, {2, 0}, connected);
    expect_clique_witness(cycle_graph(5), 2, {3, 4}, connected);
    expect_clique_witness(cycle_graph(5), 1, {4}, connected);
    expect_clique_witness(complete_graph(4), 3, {0, 1, 3}, connected);
  }
}

TEST(CliqueWitness, RejectsNonCliques) {
  const std::vector<Vertex> two{0, 1};
  EXPECT_THROW((void)clique_witness(complete_graph(3), 3, two, false), std::invalid_argument);
  const std::vector<Vertex> far{0, 2};
  EXPECT_THROW((void)clique_witness(cycle_graph(5), 2, far, false), std::invalid_argument);
  const std::vector<Vertex> dup{1, 1};
  EXPECT_THROW((void)clique_witness(cycle_graph(5), 2, dup, false), std::invalid_argument);
}

TEST(CliqueWitness, ConnectedK3EvaluatesQuickly) {
  const CliquePathOutput out = clique_to_path(complete_graph(3), 3, true);
  const std::vector<Vertex> k{0, 1, 2};
  const Partition part = clique_witness(out, complete_graph(3), k);
  const auto start = std::chrono::steady_clock::now();
  const EvalReport rep = evaluate_partition(out.instance, part);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_TRUE(rep.is_solution);
  EXPECT_LT(secs, 5.0);
}

TEST(PartitionToTree, TwoTwoWeights) {
  const std::vector<Weight> a{2, 2};
  const PartitionTreeOutput out = partition_to_tree(a);
  const auto& P = out.params;
  EXPECT_EQ(P.N, 5);
  EXPECT_EQ(P.M, 64);
  EXPECT_EQ(P.k, 4U);
  EXPECT_EQ(P.scale, 1);
  const auto& w = out.instance.weight;
  EXPECT_EQ(w[P.center], 131);
  ASSERT_EQ(P.leaves.size(), 1U);
  EXPECT_EQ(w[P.leaves[0]], 1);
  ASSERT_EQ(P.gadgets.size(), 2U);
  const auto& g1 = P.gadgets[0];
  const auto& g2 = P.gadgets[1];
  EXPECT_EQ((std::array<Weight, 4>{w[g1.xq], w[g1.xr], w[g1.yr], w[g1.yq]}), (std::array<Weight, 4>{76, 54, 76, 54}));
  EXPECT_EQ((std::array<Weight, 4>{w[g2.xq], w[g2.xr], w[g2.yr], w[g2.yq]}), (std::array<Weight, 4>{86, 44, 86, 44}));
  EXPECT_TRUE(is_tree(out.instance));
  EXPECT_EQ(out.instance.color_count(), 3U);
}

TEST(PartitionToTree, OneOneParameters) {
  const std::vector<Weight> a{1, 1};
  const PartitionTreeOutput out = partition_to_tree(a);
  EXPECT_EQ(out.params.N, 3);
  EXPECT_EQ(out.params.M, 39);
  EXPECT_EQ(out.params.k, 4U);
}

TEST(PartitionToTree, ScalesWhenSumNotDivisible) {
  const std::vector<Weight> a{1, 2};
  const PartitionTreeOutput out = partition_to_tree(a);
  EXPECT_EQ(out.params.scale, 2);
  EXPECT_EQ(out.params.elements, (std::vector<Weight>{2, 4}));
  EXPECT_EQ(out.params.s, 6);
}

TEST(PartitionToTree, RejectsBadInput) {
  EXPECT_THROW((void)partition_to_tree(std::vector<Weight>{1, 2, 3}), std::invalid_argument);
  EXPECT_THROW((void)partition_to_tree(std::vector<Weight>{}), std::invalid_argument);
  EXPECT_THROW((void)partition_to_tree(std::vector<Weight>{1, -1}), std::invalid_argument);
  EXPECT_THROW((void)partition_to_tree(std::vector<Weight>(62, 1)), CapacityError);
}

TEST(PartitionWitness, TwoTwoTallies) {
  const std::vector<Weight> a{2, 2};
  const PartitionTreeOutput out = partition_to_tree(a);
  for (const std::size_t i : {1U, 2U}) {
    const std::vector<std::size_t> chosen{i};
    const Partition part = partition_witness(out, chosen);
    EXPECT_EQ(part.size(), 4U);
    const EvalReport rep = evaluate_partition(out.instance, part);
    EXPECT_TRUE(rep.is_solution);
    const BlockTally t = block_tally(out.instance, part.blocks.front());
    EXPECT_EQ(t.weight_by_color, (std::vector<Weight>{131, 130, 130}));
  }
  const std::vector<std::size_t> both{1, 2};
  EXPECT_THROW((void)partition_witness(out, both), std::invalid_argument);
  const std::vector<std::size_t> zero{0};
  EXPECT_THROW((void)partition_witness(out, zero), std::invalid_argument);
}

TEST(PartitionWitness, ValidForEveryBalancedChoice) {
  const std::vector<Weight> a{3, 1, 4, 2, 2, 0};
  const PartitionTreeOutput out = partition_to_tree(a);
  std::size_t found = 0;
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) != 3) continue;
    Weight s = 0;
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < 6; ++i) {
      if (mask & (1U << i)) {
        s += a[i];
        chosen.push_back(i + 1);
      }
    }
    if (2 * s != 12) continue;
    ++found;
    EXPECT_TRUE(evaluate_partition(out.instance, partition_witness(out, chosen)).is_solution);
  }
  EXPECT_GT(found, 0U);
}

TEST(PartitionToTree, RoundTripTwoElements) {
  for (const auto& a : testing::multisets(2, 0, 4)) {
    Weight s = a[0] + a[1];
    if (s % 2 != 0) continue;
    const PartitionTreeOutput out = partition_to_tree(a);
    EXPECT_EQ(solve_brute_force(out.instance).answer, testing::has_balanced_half(a));
  }
}

TEST(PartitionToTree, RoundTripSomeFourElementSets) {
  for (const auto& a : {std::vector<Weight>{1, 1, 1, 1}, std::vector<Weight>{0, 0, 0, 4},
                        std::vector<Weight>{1, 2, 2, 3}, std::vector<Weight>{0, 1, 3, 4}}) {
    const PartitionTreeOutput out = partition_to_tree(a);
    EXPECT_EQ(solve_brute_force(out.instance).answer, testing::has_balanced_half(a));
  }
}

}  // namespace
}  // namespace gerry
