#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gerry/instance.hpp"
#include "gerry/oracle.hpp"

namespace gerry {

/// Smallest b such that the sum of all but the b heaviest weights is at most
/// `budget` (strictly below it when `strict`). Returns the list length when no
/// b qualifies. Throws std::invalid_argument if `sorted_desc` is not
/// non-increasing.
[[nodiscard]] std::size_t beta_count(std::span<const Weight> sorted_desc, Weight budget,
                                     bool strict);

/// A block holding one or two adjacent centers together with those of their
/// leaves that are not split off. Every other block is a single leaf.
struct CenterGroup {
  std::vector<Vertex> centers;
  std::vector<Vertex> leaves;
};

/// Trees of diameter <= 3 seen as center groups. A star has one group; a
/// diameter-3 tree has one group when its centers share a block (merged)
/// and two when they do not (split).
struct StarLayout {
  std::vector<CenterGroup> groups;
};

enum class GuessCase { merged, split };

/// One iteration of the guessing scheme. Vectors are indexed by group.
///   q_star[g]      color the block of group g is won by (uniquely when it
///                  is the target).
///   alpha_p[g]     positive-weight target leaves split off from group g.
///   alpha_qstar[g] positive-weight q_star[g] leaves split off (0 when
///                  q_star[g] is the target).
///   zero_removed   zero-weight leaves split off, from any group.
struct CaseGuess {
  GuessCase kind = GuessCase::merged;
  std::vector<ColorId> q_star;
  std::vector<std::size_t> alpha_p;
  std::vector<std::size_t> alpha_qstar;
  std::size_t zero_removed = 0;
};

struct FeasibilityOutcome {
  bool feasible = false;
  std::size_t x = 0;               // uniquely-target parts
  std::vector<std::size_t> beta;   // per color, summed over groups
  std::optional<Partition> partition;
};

/// Star layout of a tree with diameter <= 2. The center is the unique vertex
/// of degree > 1, or vertex 0 when there is none.
[[nodiscard]] StarLayout star_layout(const Instance& inst);

/// Layout of a diameter-3 tree for the given case.
[[nodiscard]] StarLayout diameter3_layout(const Instance& inst, GuessCase kind);

/// Checks one guess against a layout. Precomputes per-group sorted leaf
/// weights once so that many guesses can be tested cheaply.
class GuessEvaluator {
 public:
  GuessEvaluator(const Instance& inst, StarLayout layout);

  [[nodiscard]] const StarLayout& layout() const { return layout_; }

  /// Sizes of the guess ranges for group g.
  [[nodiscard]] std::size_t target_leaf_count(std::size_t g) const;
  [[nodiscard]] std::size_t positive_leaf_count(std::size_t g, ColorId c) const;
  [[nodiscard]] std::size_t zero_leaf_count() const { return zero_leaves_.size(); }

  /// When `build_partition` is set and the guess is feasible, the outcome
  /// carries a partition assembled from it (not yet verified).
  [[nodiscard]] FeasibilityOutcome evaluate(const CaseGuess& guess, bool build_partition) const;

  /// Runs every guess in lexicographic order (q_star per group, alpha_p per
  /// group, alpha_qstar per group, zero_removed) and stops at the first
  /// feasible one. Returns it together with its verified partition.
  [[nodiscard]] std::optional<std::pair<CaseGuess, FeasibilityOutcome>> search(
      std::uint64_t& guesses_examined) const;

 private:
  struct GroupData {
    std::vector<Weight> center_weight;                   // per color
    std::vector<std::vector<Vertex>> leaves_desc;        // positive leaves per color, heaviest first
    std::vector<std::vector<Weight>> weights_desc;       // weights of leaves_desc
    std::vector<std::vector<Weight>> prefix;             // prefix sums of weights_desc
  };

  [[nodiscard]] Weight leaf_sum(const GroupData& g, ColorId c, std::size_t skip_heaviest) const;

  const Instance* inst_;
  StarLayout layout_;
  std::vector<GroupData> groups_;
  std::vector<Vertex> zero_leaves_;
};

/// Convenience wrapper: builds an evaluator and tests a single guess.
[[nodiscard]] FeasibilityOutcome evaluate_guess(const Instance& inst, const StarLayout& layout,
                                                const CaseGuess& guess);

/// Exact decision for trees of diameter <= 2, any number of colors.
[[nodiscard]] OracleResult solve_star(const Instance& inst);

/// Exact decision for trees of diameter exactly 3: the merged case first,
/// then the split case.
[[nodiscard]] OracleResult solve_diameter3(const Instance& inst);

}  // namespace gerry
