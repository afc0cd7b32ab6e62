#include "gerry/evaluate.hpp"

#include <algorithm>
#include <stdexcept>

namespace gerry {

BlockTally block_tally(const Instance& inst, std::span<const Vertex> block) {
  if (block.empty()) throw std::invalid_argument("empty block");
  BlockTally t;
  t.weight_by_color.assign(inst.color_count(), 0);
  for (const Vertex v : block) {
    if (v >= inst.vertex_count) throw std::out_of_range("unknown vertex " + std::to_string(v));
    t.weight_by_color[inst.color_of[v]] += inst.weight[v];
  }
  const Weight best = *std::max_element(t.weight_by_color.begin(), t.weight_by_color.end());
  for (ColorId c = 0; c < t.weight_by_color.size(); ++c) {
    if (t.weight_by_color[c] == best) t.colored_as.push_back(c);
  }
  if (t.colored_as.size() == 1) t.uniquely = t.colored_as.front();
  return t;
}

EvalReport evaluate_partition(const Instance& inst, const Partition& part) {
  EvalReport rep;
  const std::size_t n = inst.vertex_count;
  const std::size_t colors = inst.color_count();
  rep.colored_count.assign(colors, 0);

  constexpr auto unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> block_of(n, unassigned);
  for (std::size_t b = 0; b < part.blocks.size(); ++b) {
    if (part.blocks[b].empty()) {
      rep.violation = "not a partition: block " + std::to_string(b) + " is empty";
      return rep;
    }
    for (const Vertex v : part.blocks[b]) {
      if (v >= n) {
        rep.violation = "not a partition: unknown vertex " + std::to_string(v);
        return rep;
      }
      if (block_of[v] != unassigned) {
        rep.violation = "not a partition: vertex " + std::to_string(v) + " appears twice";
        return rep;
      }
      block_of[v] = b;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (block_of[v] == unassigned) {
      rep.violation = "not a partition: vertex " + std::to_string(v) + " is not covered";
      return rep;
    }
  }

  // Tallies. Colors absent from a block have weight 0 there, so they only
  // matter when the block's maximum is 0; such blocks are colored as all of C.
  std::vector<Weight> scratch(colors, 0);
  std::vector<char> is_touched(colors, 0);
  std::vector<ColorId> touched;
  std::size_t all_zero_blocks = 0;
  for (const auto& block : part.blocks) {
    touched.clear();
    for (const Vertex v : block) {
      const ColorId c = inst.color_of[v];
      if (!is_touched[c]) {
        is_touched[c] = 1;
        touched.push_back(c);
      }
      scratch[c] += inst.weight[v];
    }
    Weight best = 0;
    for (const ColorId c : touched) best = std::max(best, scratch[c]);
    if (best == 0) {
      ++all_zero_blocks;
      if (colors == 1) ++rep.uniquely_p_count;
    } else {
      std::size_t winners = 0;
      ColorId winner = 0;
      for (const ColorId c : touched) {
        if (scratch[c] == best) {
          ++rep.colored_count[c];
          ++winners;
          winner = c;
        }
      }
      if (winners == 1 && winner == inst.target) ++rep.uniquely_p_count;
    }
    for (const ColorId c : touched) {
      scratch[c] = 0;
      is_touched[c] = 0;
    }
  }
  if (all_zero_blocks > 0) {
    for (auto& count : rep.colored_count) count += all_zero_blocks;
  }

  // Induced connectivity of every block.
  const Adjacency adj(inst);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack;
  for (std::size_t b = 0; b < part.blocks.size() && !rep.violation; ++b) {
    const auto& block = part.blocks[b];
    stack.assign(1, block.front());
    seen[block.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      auto [it, end] = adj.neighbors(v);
      for (; it != end; ++it) {
        if (block_of[*it] == b && !seen[*it]) {
          seen[*it] = 1;
          ++reached;
          stack.push_back(*it);
        }
      }
    }
    if (reached != block.size()) {
      rep.violation = "block " + std::to_string(b) + " does not induce a connected subgraph";
    }
  }
  if (!rep.violation && part.blocks.size() != inst.k) {
    rep.violation = "wrong block count: " + std::to_string(part.blocks.size()) + " instead of " +
                    std::to_string(inst.k);
  }

  rep.valid = !rep.violation.has_value();
  if (rep.valid) {
    rep.is_solution = true;
    for (ColorId c = 0; c < colors; ++c) {
      if (c != inst.target && rep.uniquely_p_count <= rep.colored_count[c]) {
        rep.is_solution = false;
        break;
      }
    }
  }
  return rep;
}

}  // namespace gerry
