#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gerry/instance.hpp"
#include "gerry/oracle.hpp"

namespace gerry {

/// One cell of the two-color tree DP for a rooted subtree slice split into a
/// fixed number of parts.
///   decided_wins: uniquely-target parts among those not containing the
///                 slice root.
///   margin:       best target-minus-other weight of the root's part among
///                 partitions attaining `decided_wins`.
struct DpEntry {
  std::int64_t decided_wins = 0;
  Weight margin = 0;

  friend bool operator==(const DpEntry&, const DpEntry&) = default;
};

enum class DpStep : std::uint8_t { init, cut, merge };

struct DpBackpointer {
  DpStep step = DpStep::init;
  std::uint32_t split = 0;  // parts assigned to the previous child prefix
};

/// Tables for every vertex u and child prefix i (children in ascending id
/// order), indexed by part count 1..min(|slice|, k).
class DpTable {
 public:
  [[nodiscard]] Vertex root() const { return root_; }
  [[nodiscard]] std::size_t parts() const { return k_; }
  [[nodiscard]] std::span<const Vertex> children(Vertex u) const { return children_[u]; }

  /// Vertices in the slice made of u and its first `prefix` children's subtrees.
  [[nodiscard]] std::size_t slice_size(Vertex u, std::size_t prefix) const;

  /// Entry for slice (u, prefix) with `parts` blocks; parts is 1-based.
  [[nodiscard]] const DpEntry& entry(Vertex u, std::size_t prefix, std::size_t parts) const;
  [[nodiscard]] const DpBackpointer& backpointer(Vertex u, std::size_t prefix,
                                                 std::size_t parts) const;

  /// Entries for u with all children merged, i.e. the full subtree of u.
  [[nodiscard]] std::span<const DpEntry> completed(Vertex u) const;

  /// Partition of the whole tree into `parts` blocks that realizes
  /// entry(root, all children, parts).
  [[nodiscard]] Partition reconstruct(std::size_t parts) const;

 private:
  friend DpTable dp_tables(const Instance& inst, Vertex root);

  [[nodiscard]] std::size_t cell(Vertex u, std::size_t prefix, std::size_t parts) const;

  Vertex root_ = 0;
  std::size_t k_ = 0;
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::vector<std::size_t>> layer_offset_;  // per u, per prefix; one extra at end
  std::vector<std::vector<std::size_t>> layer_size_;    // slice sizes per u, per prefix
  std::vector<DpEntry> entries_;
  std::vector<DpBackpointer> back_;
};

/// Fills the tables bottom-up. Requires a tree with exactly two colors.
[[nodiscard]] DpTable dp_tables(const Instance& inst, Vertex root);

/// Decides the instance in O(n^2 k) time. `root` defaults to vertex 0. The
/// witness, when present, has been checked with evaluate_partition.
[[nodiscard]] OracleResult solve_two_color_tree(const Instance& inst,
                                                std::optional<Vertex> root = std::nullopt);

}  // namespace gerry
