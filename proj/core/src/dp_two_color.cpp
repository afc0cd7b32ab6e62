#include "gerry/dp_two_color.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gerry/error.hpp"
#include "gerry/evaluate.hpp"

namespace gerry {

std::size_t DpTable::cell(Vertex u, std::size_t prefix, std::size_t parts) const {
  const std::size_t width = std::min(layer_size_.at(u).at(prefix), k_);
  if (parts < 1 || parts > width) {
    throw std::out_of_range("DpTable: part count " + std::to_string(parts) + " outside [1, " +
                            std::to_string(width) + "]");
  }
  return layer_offset_[u][prefix] + parts - 1;
}

std::size_t DpTable::slice_size(Vertex u, std::size_t prefix) const {
  return layer_size_.at(u).at(prefix);
}

const DpEntry& DpTable::entry(Vertex u, std::size_t prefix, std::size_t parts) const {
  return entries_[cell(u, prefix, parts)];
}

const DpBackpointer& DpTable::backpointer(Vertex u, std::size_t prefix, std::size_t parts) const {
  return back_[cell(u, prefix, parts)];
}

std::span<const DpEntry> DpTable::completed(Vertex u) const {
  const std::size_t last = children_.at(u).size();
  const std::size_t width = std::min(layer_size_[u][last], k_);
  return {entries_.data() + layer_offset_[u][last], width};
}

Partition DpTable::reconstruct(std::size_t parts) const {
  struct Task {
    Vertex u;
    std::size_t prefix;
    std::size_t parts;
    std::size_t block;
  };
  std::vector<std::vector<Vertex>> blocks(1);
  std::vector<Task> stack{{root_, children_[root_].size(), parts, 0}};
  while (!stack.empty()) {
    const Task t = stack.back();
    stack.pop_back();
    if (t.prefix == 0) {
      blocks[t.block].push_back(t.u);
      continue;
    }
    const DpBackpointer& bp = backpointer(t.u, t.prefix, t.parts);
    const Vertex child = children_[t.u][t.prefix - 1];
    const std::size_t child_all = children_[child].size();
    if (bp.step == DpStep::cut) {
      blocks.emplace_back();
      stack.push_back({child, child_all, t.parts - bp.split, blocks.size() - 1});
    } else {
      stack.push_back({child, child_all, t.parts - bp.split + 1, t.block});
    }
    stack.push_back({t.u, t.prefix - 1, bp.split, t.block});
  }
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return Partition{std::move(blocks)};
}

DpTable dp_tables(const Instance& inst, Vertex root) {
  if (inst.allow_disconnected || !is_tree(inst)) {
    throw UnsupportedInstance("two-color DP requires a tree");
  }
  if (inst.color_count() != 2) {
    throw UnsupportedInstance("two-color DP requires exactly two colors, got " +
                              std::to_string(inst.color_count()));
  }
  const std::size_t n = inst.vertex_count;
  if (root >= n) throw std::invalid_argument("root out of range");

  DpTable t;
  t.root_ = root;
  t.k_ = inst.k;
  const std::size_t k = inst.k;

  // Root the tree; children in ascending id order.
  const Adjacency adj(inst);
  t.children_.assign(n, {});
  std::vector<Vertex> order{root};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex v = order[head];
    auto [it, end] = adj.neighbors(v);
    for (; it != end; ++it) {
      if (!seen[*it]) {
        seen[*it] = 1;
        t.children_[v].push_back(*it);
        order.push_back(*it);
      }
    }
    std::sort(t.children_[v].begin(), t.children_[v].end());
  }

  std::vector<std::size_t> subtree(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (const Vertex c : t.children_[*it]) subtree[*it] += subtree[c];
  }

  t.layer_offset_.assign(n, {});
  t.layer_size_.assign(n, {});
  std::size_t total = 0;
  for (Vertex u = 0; u < n; ++u) {
    auto& sizes = t.layer_size_[u];
    auto& offsets = t.layer_offset_[u];
    sizes.push_back(1);
    for (const Vertex c : t.children_[u]) sizes.push_back(sizes.back() + subtree[c]);
    for (const std::size_t s : sizes) {
      offsets.push_back(total);
      total += std::min(s, k);
    }
    offsets.push_back(total);
  }
  t.entries_.resize(total);
  t.back_.resize(total);

  const ColorId target = inst.target;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex u = *it;
    const Weight own = inst.color_of[u] == target ? inst.weight[u] : -inst.weight[u];
    t.entries_[t.layer_offset_[u][0]] = DpEntry{0, own};
    t.back_[t.layer_offset_[u][0]] = DpBackpointer{DpStep::init, 0};

    for (std::size_t i = 1; i <= t.children_[u].size(); ++i) {
      const Vertex child = t.children_[u][i - 1];
      const std::span<const DpEntry> sub = t.completed(child);
      const DpEntry* prev = t.entries_.data() + t.layer_offset_[u][i - 1];
      const std::size_t prev_width = std::min(t.layer_size_[u][i - 1], k);
      const std::size_t sub_width = sub.size();
      const std::size_t width = std::min(t.layer_size_[u][i], k);
      DpEntry* out = t.entries_.data() + t.layer_offset_[u][i];
      DpBackpointer* bp = t.back_.data() + t.layer_offset_[u][i];

      for (std::size_t parts = 1; parts <= width; ++parts) {
        bool have = false;
        DpEntry best;
        DpBackpointer best_bp;
        auto offer = [&](DpEntry cand, DpStep step, std::size_t j) {
          if (!have || cand.decided_wins > best.decided_wins ||
              (cand.decided_wins == best.decided_wins && cand.margin > best.margin)) {
            have = true;
            best = cand;
            best_bp = DpBackpointer{step, static_cast<std::uint32_t>(j)};
          }
        };
        // Edge to the child removed: the child's open part is closed off.
        if (parts >= 2) {
          const std::size_t lo = parts > sub_width ? parts - sub_width : 1;
          const std::size_t hi = std::min(prev_width, parts - 1);
          for (std::size_t j = lo; j <= hi; ++j) {
            const DpEntry& a = prev[j - 1];
            const DpEntry& b = sub[parts - j - 1];
            offer({a.decided_wins + b.decided_wins + (b.margin > 0 ? 1 : 0), a.margin},
                  DpStep::cut, j);
          }
        }
        // Edge kept: the child's open part joins u's open part.
        {
          const std::size_t lo = parts + 1 > sub_width ? parts + 1 - sub_width : 1;
          const std::size_t hi = std::min(prev_width, parts);
          for (std::size_t j = lo; j <= hi; ++j) {
            const DpEntry& a = prev[j - 1];
            const DpEntry& b = sub[parts - j];
            offer({a.decided_wins + b.decided_wins, a.margin + b.margin}, DpStep::merge, j);
          }
        }
        if (!have) throw std::logic_error("two-color DP: no feasible split");
        out[parts - 1] = best;
        bp[parts - 1] = best_bp;
      }
    }
  }
  return t;
}

OracleResult solve_two_color_tree(const Instance& inst, std::optional<Vertex> root) {
  const DpTable table = dp_tables(inst, root.value_or(0));
  const Vertex r = table.root();
  const DpEntry& top = table.entry(r, table.children(r).size(), inst.k);

  OracleResult res;
  for (Vertex u = 0; u < inst.vertex_count; ++u) res.partitions_examined += table.completed(u).size();
  const std::int64_t wins = top.decided_wins + (top.margin > 0 ? 1 : 0);
  res.answer = 2 * wins > static_cast<std::int64_t>(inst.k);
  if (res.answer) {
    res.witness = table.reconstruct(inst.k);
    const EvalReport rep = evaluate_partition(inst, *res.witness);
    if (!rep.is_solution) {
      throw std::logic_error("two-color DP witness failed verification: " +
                             rep.violation.value_or("target does not win"));
    }
  }
  return res;
}

}  // namespace gerry
