#include <gtest/gtest.h>

#include <random>

#include "gerry/error.hpp"
#include "gerry/evaluate.hpp"
#include "gerry/io.hpp"
#include "gerry/oracle.hpp"
#include "gerry/star_diam.hpp"
#include "test_support.hpp"

namespace gerry {
namespace {

using testing::make_instance;
using testing::small_star;

TEST(BetaCount, HandSums) {
  const std::vector<Weight> w{5, 3, 1};
  EXPECT_EQ(beta_count(w, 4, false), 1U);
  EXPECT_EQ(beta_count(w, 4, true), 2U);
  EXPECT_EQ(beta_count(w, 9, false), 0U);
  EXPECT_EQ(beta_count(w, 100, true), 0U);
  EXPECT_EQ(beta_count(w, 0, true), 3U);
  EXPECT_THROW((void)beta_count(std::vector<Weight>{1, 2}, 0, false), std::invalid_argument);
}

TEST(SolveStar, TiedCenterExamples) {
  EXPECT_FALSE(solve_star(small_star(2)).answer);
  const OracleResult r = solve_star(small_star(4));
  ASSERT_TRUE(r.answer);
  EXPECT_TRUE(evaluate_partition(small_star(4), *r.witness).is_solution);
}

TEST(SolveStar, NoTargetWeightMeansNo) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const Instance inst = make_instance({"p", "q"}, "p", k, {{"q", 2}, {"q", 1}, {"q", 3}, {"q", 1}},
                                        {{0, 1}, {0, 2}, {0, 3}});
    EXPECT_FALSE(solve_star(inst).answer);
  }
}

TEST(SolveStar, TinyTrees) {
  const Instance one = make_instance({"p", "q"}, "p", 1, {{"p", 1}}, {});
  EXPECT_TRUE(solve_star(one).answer);
  const Instance two = make_instance({"p", "q"}, "p", 2, {{"q", 1}, {"p", 1}}, {{0, 1}});
  EXPECT_FALSE(solve_star(two).answer);
}

TEST(SolveStar, RejectsWrongShape) {
  EXPECT_THROW((void)solve_star(random_diameter3_instance(6, 3, 3, 2, 1)), UnsupportedInstance);
  EXPECT_THROW((void)solve_diameter3(small_star(2)), UnsupportedInstance);
  EXPECT_THROW((void)solve_star(testing::six_vertex_instance()), UnsupportedInstance);
}

Instance two_centers(std::size_t k) {
  return make_instance({"p", "q"}, "p", k, {{"q", 1}, {"q", 1}, {"p", 3}, {"p", 3}},
                       {{0, 1}, {0, 2}, {1, 3}});
}

TEST(SolveDiameter3, TwoCenterExamples) {
  const OracleResult r = solve_diameter3(two_centers(2));
  ASSERT_TRUE(r.answer);
  EXPECT_TRUE(evaluate_partition(two_centers(2), *r.witness).is_solution);
  EXPECT_FALSE(solve_diameter3(two_centers(4)).answer);
}

TEST(SolveDiameter3, WholeTreeUniquelyTarget) {
  const Instance inst = make_instance({"p", "q", "r"}, "p", 1,
                                      {{"p", 5}, {"q", 1}, {"r", 2}, {"p", 1}, {"q", 1}},
                                      {{0, 1}, {0, 2}, {1, 3}, {1, 4}});
  EXPECT_TRUE(solve_diameter3(inst).answer);
}

struct Sweep {
  std::size_t colors;
  Weight min_w;
  Weight max_w;
};

void check_against_oracle(const Instance& inst, const OracleResult& got) {
  const OracleResult want = solve_brute_force(inst);
  ASSERT_EQ(got.answer, want.answer);
  if (got.answer) ASSERT_TRUE(evaluate_partition(inst, *got.witness).is_solution);
}

Instance reweight(Instance inst, std::mt19937_64& rng, Weight lo, Weight hi) {
  for (auto& w : inst.weight) w = lo + static_cast<Weight>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  return inst;
}

TEST(SolveStar, AgreesWithOracle) {
  std::mt19937_64 rng(41);
  for (const Sweep s : {Sweep{2, 1, 6}, Sweep{3, 1, 6}, Sweep{4, 1, 6}, Sweep{3, 0, 2}, Sweep{1, 0, 2}}) {
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t n = 1 + rng() % 10;
      const Instance base = reweight(random_star_instance(n, s.colors, 1, 1, rng()), rng, s.min_w, s.max_w);
      for (std::size_t k = 1; k <= n; ++k) {
        Instance inst = base;
        inst.k = k;
        SCOPED_TRACE(write_instance(inst));
        check_against_oracle(inst, solve_star(inst));
      }
    }
  }
}

TEST(SolveDiameter3, AgreesWithOracle) {
  std::mt19937_64 rng(43);
  for (const Sweep s : {Sweep{2, 1, 6}, Sweep{3, 1, 6}, Sweep{4, 1, 6}, Sweep{3, 0, 2}, Sweep{1, 0, 2}}) {
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 4 + rng() % 8;
      const Instance base =
          reweight(random_diameter3_instance(n, s.colors, 1, 1, rng()), rng, s.min_w, s.max_w);
      for (std::size_t k = 1; k <= n; ++k) {
        Instance inst = base;
        inst.k = k;
        SCOPED_TRACE(write_instance(inst));
        check_against_oracle(inst, solve_diameter3(inst));
      }
    }
  }
}

// The guess read off any solution, with its actual split-off counts, is
// accepted even though the evaluator only ever keeps the heaviest q* leaves
// and removes the heaviest target leaves.
CaseGuess guess_from_solution(const Instance& inst, const StarLayout& layout, const Partition& part) {
  std::vector<std::size_t> block_of(inst.vertex_count);
  for (std::size_t b = 0; b < part.blocks.size(); ++b) {
    for (const Vertex v : part.blocks[b]) block_of[v] = b;
  }
  CaseGuess g;
  g.kind = layout.groups.size() == 1 ? GuessCase::merged : GuessCase::split;
  const ColorId p = inst.target;
  for (const CenterGroup& cg : layout.groups) {
    const BlockTally t = block_tally(inst, part.blocks[block_of[cg.centers.front()]]);
    ColorId qs = p;
    if (t.uniquely != p) {
      for (const ColorId c : t.colored_as) {
        if (c != p) {
          qs = c;
          break;
        }
      }
    }
    std::size_t ap = 0, aq = 0;
    for (const Vertex v : cg.leaves) {
      if (part.blocks[block_of[v]].size() != 1 || inst.weight[v] == 0) continue;
      if (inst.color_of[v] == p) ++ap;
      else if (inst.color_of[v] == qs) ++aq;
    }
    g.q_star.push_back(qs);
    g.alpha_p.push_back(ap);
    g.alpha_qstar.push_back(qs == p ? 0 : aq);
  }
  for (const auto& b : part.blocks) {
    if (b.size() == 1 && inst.weight[b.front()] == 0 &&
        std::none_of(layout.groups.begin(), layout.groups.end(), [&](const CenterGroup& cg) {
          return std::find(cg.centers.begin(), cg.centers.end(), b.front()) != cg.centers.end();
        })) {
      ++g.zero_removed;
    }
  }
  return g;
}

TEST(GuessEvaluator, EverySolutionInducesAFeasibleGuess) {
  std::mt19937_64 rng(47);
  std::size_t checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const bool star = trial % 2 == 0;
    const std::size_t n = star ? 2 + rng() % 7 : 4 + rng() % 5;
    const std::size_t colors = 1 + rng() % 4;
    const Weight lo = trial % 5 == 0 ? 0 : 1;
    Instance inst = star ? random_star_instance(n, colors, 1, 1, rng())
                         : random_diameter3_instance(n, colors, 1, 1, rng());
    inst = reweight(inst, rng, lo, 4);
    inst.k = 1 + rng() % n;
    (void)enumerate_connected_partitions(inst, inst.k, [&](const Partition& part) {
      if (!evaluate_partition(inst, part).is_solution) return;
      StarLayout layout;
      if (star) {
        layout = star_layout(inst);
      } else {
        const auto d = diameter3_layout(inst, GuessCase::merged);
        const auto& c = d.groups.front().centers;
        const bool together = std::any_of(part.blocks.begin(), part.blocks.end(), [&](const auto& b) {
          return std::find(b.begin(), b.end(), c[0]) != b.end() &&
                 std::find(b.begin(), b.end(), c[1]) != b.end();
        });
        layout = together ? d : diameter3_layout(inst, GuessCase::split);
      }
      const CaseGuess g = guess_from_solution(inst, layout, part);
      const FeasibilityOutcome out = evaluate_guess(inst, layout, g);
      ASSERT_TRUE(out.feasible) << write_instance(inst);
      ASSERT_TRUE(evaluate_partition(inst, *out.partition).is_solution);
      ++checked;
    });
  }
  EXPECT_GT(checked, 100U);
}

TEST(GuessEvaluator, GuessCountStaysPolynomial) {
  // Diameter 3, two groups, |C| = 4, n = 30: at most |C|^2 n^4 guesses.
  const Instance inst = random_diameter3_instance(30, 4, 6, 12, 5);
  const OracleResult r = solve_diameter3(inst);
  EXPECT_LE(r.partitions_examined, 16U * 30U * 30U * 30U * 30U);
}

TEST(GuessEvaluator, RejectsMismatchedGuess) {
  const Instance inst = small_star(2);
  CaseGuess g;
  g.q_star = {0, 1};
  g.alpha_p = {0};
  g.alpha_qstar = {0};
  EXPECT_THROW((void)evaluate_guess(inst, star_layout(inst), g), std::invalid_argument);
}

}  // namespace
}  // namespace gerry
