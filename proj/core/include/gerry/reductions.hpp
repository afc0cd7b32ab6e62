#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gerry/instance.hpp"

namespace gerry {

/// Plain undirected graph used as the source of the path construction.
struct SimpleGraph {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
};

[[nodiscard]] SimpleGraph complete_graph(std::size_t n);
[[nodiscard]] SimpleGraph cycle_graph(std::size_t n);

/// The common degree if every vertex has it.
[[nodiscard]] std::optional<std::size_t> regular_degree(const SimpleGraph& g);

struct CliquePathParams {
  std::size_t n = 0;      // source vertices
  std::size_t m = 0;      // source edges
  std::size_t d = 0;      // source degree
  std::size_t l = 0;      // sought clique size
  std::size_t N = 0;      // 4 n^2
  std::size_t M = 0;      // 4 N n + 3 m, connector length
  std::size_t z = 0;      // components of the disjoint union
  bool connected = false;
  std::size_t k = 0;
};

/// Vertex ids of every gadget. Ids are assigned along the final path:
/// vertex gadgets in source order, then edge gadgets in source edge order,
/// then the isolated set (target-colored first), with a connector after each
/// component but the last in connected mode.
struct CliquePathGadgets {
  std::vector<std::vector<Vertex>> vertex_paths;    // 4N-1 vertices each
  std::vector<std::array<Vertex, 4>> edge_paths;    // c_u, r, r, c_v
  std::vector<Vertex> independent_set;
  std::vector<std::vector<Vertex>> connectors;      // M vertices each
};

struct CliquePathOutput {
  Instance instance;
  CliquePathParams params;
  CliquePathGadgets gadgets;
};

/// Unit-weight path (or disjoint union of paths) that has a solution iff the
/// d-regular source graph has a clique of size l. Throws
/// std::invalid_argument for a non-regular graph or l outside [1, n].
[[nodiscard]] CliquePathOutput clique_to_path(const SimpleGraph& g, std::size_t l, bool connected);

/// Structural violations of a generated path instance (component count,
/// unit weights, k formula, color budget of the isolated set). Empty = ok.
[[nodiscard]] std::vector<std::string> validate_clique_path(const CliquePathOutput& out);

/// Solution partition for a clique `clique` of size l. Throws
/// std::invalid_argument if it is not a clique of that size.
[[nodiscard]] Partition clique_witness(const CliquePathOutput& out, const SimpleGraph& g,
                                       std::span<const Vertex> clique);
[[nodiscard]] Partition clique_witness(const SimpleGraph& g, std::size_t l,
                                       std::span<const Vertex> clique, bool connected);

struct PartitionTreeGadget {
  Vertex xq = 0, xr = 0, yq = 0, yr = 0;
};

struct PartitionTreeParams {
  std::vector<Weight> elements;  // after scaling
  Weight scale = 1;              // 1, or n when the sum was not divisible by n
  std::size_t n = 0;
  Weight s = 0;
  Weight N = 0;
  Weight M = 0;
  std::size_t k = 0;
  Vertex center = 0;
  std::vector<Vertex> leaves;
  std::vector<PartitionTreeGadget> gadgets;  // gadgets[i-1] for element i
};

struct PartitionTreeOutput {
  Instance instance;
  PartitionTreeParams params;
};

/// Three-color tree that has a solution iff some n/2 of the elements sum to
/// half the total. Throws std::invalid_argument for empty input, odd n or
/// negative elements, CapacityError when weights overflow 64 bits.
[[nodiscard]] PartitionTreeOutput partition_to_tree(std::span<const Weight> elements);

/// Solution partition for 1-based indices `chosen`. Throws
/// std::invalid_argument unless |chosen| = n/2 and they sum to half the total.
[[nodiscard]] Partition partition_witness(const PartitionTreeOutput& out,
                                          std::span<const std::size_t> chosen);
[[nodiscard]] Partition partition_witness(std::span<const Weight> elements,
                                          std::span<const std::size_t> chosen);

}  // namespace gerry
