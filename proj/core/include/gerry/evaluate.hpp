#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gerry/instance.hpp"

namespace gerry {

/// Per-color weight of one block and the colors it is won by.
struct BlockTally {
  std::vector<Weight> weight_by_color;  // indexed by ColorId, covers all of C
  std::vector<ColorId> colored_as;      // argmax set over C, ascending
  std::optional<ColorId> uniquely;      // strict winner, if any
};

/// Throws std::out_of_range for an unknown vertex, std::invalid_argument for
/// an empty block.
[[nodiscard]] BlockTally block_tally(const Instance& inst, std::span<const Vertex> block);

struct EvalReport {
  bool valid = false;
  std::optional<std::string> violation;
  std::size_t uniquely_p_count = 0;
  std::vector<std::size_t> colored_count;  // indexed by ColorId
  bool is_solution = false;
};

/// Checks that `part` is a connected k-partition of the instance and whether
/// the target color wins. Counts are filled whenever the blocks partition V,
/// even if the block count or connectivity is wrong. Runs in O(n + m + |C|).
[[nodiscard]] EvalReport evaluate_partition(const Instance& inst, const Partition& part);

}  // namespace gerry
