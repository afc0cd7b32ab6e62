#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gerry/instance.hpp"

namespace gerry {

/// Outcome of any exact solver. `witness` is present iff `answer` is true and
/// always evaluates as a solution. `partitions_examined` counts whatever unit
/// of work the solver enumerates (edge subsets, guesses).
struct OracleResult {
  bool answer = false;
  std::optional<Partition> witness;
  std::uint64_t partitions_examined = 0;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// C(n, r), saturating at UINT64_MAX.
[[nodiscard]] std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

/// Exhaustive search over all (k-1)-subsets of tree edges, edges ordered by
/// (min endpoint, max endpoint) and subsets lexicographically. Returns the
/// first solution found. Throws UnsupportedInstance for non-trees and
/// CapacityError when C(n-1, k-1) exceeds `cap`.
[[nodiscard]] OracleResult solve_brute_force(const Instance& inst,
                                             std::uint64_t cap = kDefaultEnumerationCap);

using PartitionVisitor = std::function<void(const Partition&)>;

/// Counts (and optionally visits) every connected `parts`-partition of a tree.
[[nodiscard]] std::uint64_t enumerate_connected_partitions(
    const Instance& inst, std::size_t parts, const PartitionVisitor& visit = {},
    std::uint64_t cap = kDefaultEnumerationCap);

/// Standard Prüfer decoding; `sequence` has n-2 entries in [0, n).
[[nodiscard]] std::vector<Edge> decode_pruefer(std::size_t n, std::span<const Vertex> sequence);

/// Uniform random labeled tree on n vertices, deterministic per seed.
[[nodiscard]] std::vector<Edge> random_tree(std::size_t n, std::uint64_t seed);

/// Names used by the random generators: "p", "q", "r", "s", then "c4", "c5", ...
[[nodiscard]] std::vector<std::string> default_color_names(std::size_t count);

/// Random tree with uniform colors and weights in [1, max_weight]; target is
/// the first color.
[[nodiscard]] Instance random_instance(std::size_t n, std::size_t num_colors, Weight max_weight,
                                       std::size_t k, std::uint64_t seed);

/// Star on n vertices (center 0) with random colors and weights.
[[nodiscard]] Instance random_star_instance(std::size_t n, std::size_t num_colors,
                                            Weight max_weight, std::size_t k,
                                            std::uint64_t seed);

/// Tree of diameter exactly 3 on n >= 4 vertices: centers 0 and 1, every
/// other vertex a leaf of one of them, each center with at least one leaf.
[[nodiscard]] Instance random_diameter3_instance(std::size_t n, std::size_t num_colors,
                                                 Weight max_weight, std::size_t k,
                                                 std::uint64_t seed);

}  // namespace gerry
