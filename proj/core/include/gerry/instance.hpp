#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gerry {

using Vertex = std::uint32_t;
using ColorId = std::uint32_t;
using Weight = std::int64_t;

/// Undirected edge. Order of endpoints is not significant.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  [[nodiscard]] Edge normalized() const { return u <= v ? *this : Edge{v, u}; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A vertex-colored, vertex-weighted graph with a target color and a district
/// count. Vertices are 0..vertex_count-1; colors are indices into `colors`.
struct Instance {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<Weight> weight;      // per vertex, >= 0
  std::vector<ColorId> color_of;   // per vertex
  std::vector<std::string> colors; // the color set, in declaration order
  ColorId target = 0;
  std::size_t k = 1;
  // Set only for intermediate reduction output that is a disjoint union of
  // paths. Such instances are accepted by the evaluator, refused by solvers.
  bool allow_disconnected = false;

  [[nodiscard]] std::size_t color_count() const { return colors.size(); }
  [[nodiscard]] const std::string& color_name(ColorId c) const { return colors.at(c); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Ordered list of disjoint, non-empty vertex blocks.
struct Partition {
  std::vector<std::vector<Vertex>> blocks;

  [[nodiscard]] std::size_t size() const { return blocks.size(); }
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Compressed adjacency (CSR) built once per instance.
class Adjacency {
 public:
  explicit Adjacency(const Instance& inst);

  [[nodiscard]] std::size_t vertex_count() const { return offsets_.size() - 1; }
  [[nodiscard]] std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Neighbors of v; paired with the index of the connecting edge in Instance::edges.
  [[nodiscard]] std::pair<const Vertex*, const Vertex*> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  [[nodiscard]] const std::uint32_t* edge_ids(Vertex v) const {
    return edge_ids_.data() + offsets_[v];
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<std::uint32_t> edge_ids_;
};

/// Structural problems with an instance, as human-readable strings.
/// Empty result means the instance is valid.
[[nodiscard]] std::vector<std::string> validate_instance(const Instance& inst);

enum class Shape { path, star, diam3_tree, tree, general_connected };

[[nodiscard]] const char* to_string(Shape s);

struct ShapeReport {
  bool is_tree = false;
  bool is_path = false;
  std::size_t diameter = 0;
  Shape shape = Shape::general_connected;
};

/// Requires a valid (connected) instance. Diameter is exact.
[[nodiscard]] ShapeReport classify_shape(const Instance& inst);

[[nodiscard]] bool is_tree(const Instance& inst);

/// Connected components of (V, E minus `cut`). Blocks are ordered by their
/// smallest vertex and sorted ascending internally. Works on any graph.
[[nodiscard]] Partition components_without(const Instance& inst, const std::vector<Edge>& cut);

/// Tree-only: the partition obtained by deleting `cut` (|cut| + 1 blocks).
/// Throws UnsupportedInstance for non-trees, std::invalid_argument for an
/// edge not in E or a repeated edge.
[[nodiscard]] Partition partition_from_edge_cut(const Instance& inst, const std::vector<Edge>& cut);

/// Adds a color name to the instance if absent and returns its id.
ColorId intern_color(Instance& inst, const std::string& name);

}  // namespace gerry
