#include "gerry/instance.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gerry/error.hpp"

namespace gerry {

Adjacency::Adjacency(const Instance& inst) : offsets_(inst.vertex_count + 1, 0) {
  const std::size_t n = inst.vertex_count;
  for (const Edge& e : inst.edges) {
    if (e.u >= n || e.v >= n) throw std::out_of_range("edge endpoint out of range");
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  targets_.resize(offsets_.back());
  edge_ids_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::uint32_t i = 0; i < inst.edges.size(); ++i) {
    const Edge& e = inst.edges[i];
    targets_[fill[e.u]] = e.v;
    edge_ids_[fill[e.u]++] = i;
    targets_[fill[e.v]] = e.u;
    edge_ids_[fill[e.v]++] = i;
  }
}

namespace {

// Number of vertices reachable from 0 (graph assumed to have valid endpoints).
std::size_t reachable_from_zero(const Adjacency& adj) {
  const std::size_t n = adj.vertex_count();
  if (n == 0) return 0;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    auto [it, end] = adj.neighbors(v);
    for (; it != end; ++it) {
      if (!seen[*it]) {
        seen[*it] = 1;
        ++count;
        stack.push_back(*it);
      }
    }
  }
  return count;
}

// BFS distances from `source`; returns (farthest vertex, its distance).
std::pair<Vertex, std::size_t> farthest(const Adjacency& adj, Vertex source,
                                        std::vector<std::size_t>& dist) {
  constexpr auto unseen = static_cast<std::size_t>(-1);
  dist.assign(adj.vertex_count(), unseen);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  Vertex best = source;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    if (dist[v] > dist[best]) best = v;
    auto [it, end] = adj.neighbors(v);
    for (; it != end; ++it) {
      if (dist[*it] == unseen) {
        dist[*it] = dist[v] + 1;
        queue.push_back(*it);
      }
    }
  }
  return {best, dist[best]};
}

}  // namespace

std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> out;
  const std::size_t n = inst.vertex_count;
  if (n == 0) out.emplace_back("empty vertex set");
  if (inst.weight.size() != n) out.emplace_back("weight table size differs from vertex count");
  if (inst.color_of.size() != n) out.emplace_back("color table size differs from vertex count");
  if (inst.colors.empty()) out.emplace_back("empty color set");
  if (inst.target >= inst.colors.size()) out.emplace_back("target color not in color set");
  if (inst.k < 1 || inst.k > n) out.emplace_back("k out of range");

  {
    std::set<std::string> names;
    for (const auto& c : inst.colors) {
      if (!names.insert(c).second) {
        out.push_back("duplicate color " + c);
      }
    }
  }
  for (std::size_t v = 0; v < std::min(n, inst.color_of.size()); ++v) {
    if (inst.color_of[v] >= inst.colors.size()) {
      out.push_back("vertex " + std::to_string(v) + " has a color outside the color set");
    }
  }
  for (std::size_t v = 0; v < std::min(n, inst.weight.size()); ++v) {
    if (inst.weight[v] < 0) out.push_back("vertex " + std::to_string(v) + " has negative weight");
  }

  bool endpoints_ok = true;
  std::set<Edge> seen;
  for (const Edge& e : inst.edges) {
    if (e.u >= n || e.v >= n) {
      out.push_back("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                    " references an unknown vertex");
      endpoints_ok = false;
      continue;
    }
    if (e.u == e.v) {
      out.push_back("self-loop at " + std::to_string(e.u));
      continue;
    }
    if (!seen.insert(e.normalized()).second) {
      out.push_back("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
  }
  if (endpoints_ok && n > 0 && !inst.allow_disconnected) {
    if (reachable_from_zero(Adjacency(inst)) != n) out.emplace_back("disconnected");
  }
  return out;
}

const char* to_string(Shape s) {
  switch (s) {
    case Shape::path: return "path";
    case Shape::star: return "star";
    case Shape::diam3_tree: return "diam3-tree";
    case Shape::tree: return "tree";
    case Shape::general_connected: return "general-connected";
  }
  return "unknown";
}

bool is_tree(const Instance& inst) {
  if (inst.vertex_count == 0 || inst.edges.size() + 1 != inst.vertex_count) return false;
  return reachable_from_zero(Adjacency(inst)) == inst.vertex_count;
}

ShapeReport classify_shape(const Instance& inst) {
  ShapeReport rep;
  const Adjacency adj(inst);
  const std::size_t n = inst.vertex_count;
  rep.is_tree = inst.edges.size() + 1 == n && reachable_from_zero(adj) == n;

  std::vector<std::size_t> dist;
  if (rep.is_tree) {
    // Double sweep is exact on trees.
    const auto [far, d0] = farthest(adj, 0, dist);
    rep.diameter = farthest(adj, far, dist).second;
    std::size_t max_degree = 0;
    for (Vertex v = 0; v < n; ++v) max_degree = std::max(max_degree, adj.degree(v));
    rep.is_path = max_degree <= 2;
  } else {
    for (Vertex v = 0; v < n; ++v) rep.diameter = std::max(rep.diameter, farthest(adj, v, dist).second);
  }

  if (rep.is_path) rep.shape = Shape::path;
  else if (rep.is_tree && rep.diameter <= 2) rep.shape = Shape::star;
  else if (rep.is_tree && rep.diameter == 3) rep.shape = Shape::diam3_tree;
  else if (rep.is_tree) rep.shape = Shape::tree;
  else rep.shape = Shape::general_connected;
  return rep;
}

Partition components_without(const Instance& inst, const std::vector<Edge>& cut) {
  const Adjacency adj(inst);
  const std::size_t n = inst.vertex_count;
  std::set<Edge> removed;
  for (const Edge& e : cut) removed.insert(e.normalized());

  // Mark removed edges by index so that parallel lookups stay O(1).
  std::vector<char> edge_removed(inst.edges.size(), 0);
  if (!removed.empty()) {
    for (std::size_t i = 0; i < inst.edges.size(); ++i) {
      edge_removed[i] = removed.count(inst.edges[i].normalized()) ? 1 : 0;
    }
  }

  Partition part;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> block;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      block.push_back(v);
      auto [it, end] = adj.neighbors(v);
      const std::uint32_t* ids = adj.edge_ids(v);
      for (std::size_t j = 0; it != end; ++it, ++j) {
        if (edge_removed[ids[j]] || seen[*it]) continue;
        seen[*it] = 1;
        stack.push_back(*it);
      }
    }
    std::sort(block.begin(), block.end());
    part.blocks.push_back(std::move(block));
  }
  return part;
}

Partition partition_from_edge_cut(const Instance& inst, const std::vector<Edge>& cut) {
  if (!is_tree(inst)) throw UnsupportedInstance("partition_from_edge_cut requires a tree");
  std::set<Edge> present;
  for (const Edge& e : inst.edges) present.insert(e.normalized());
  std::set<Edge> used;
  for (const Edge& e : cut) {
    const Edge ne = e.normalized();
    if (!present.count(ne)) {
      throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                  " is not in the graph");
    }
    if (!used.insert(ne).second) {
      throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                  " repeated in cut");
    }
  }
  return components_without(inst, cut);
}

ColorId intern_color(Instance& inst, const std::string& name) {
  const auto it = std::find(inst.colors.begin(), inst.colors.end(), name);
  if (it != inst.colors.end()) return static_cast<ColorId>(it - inst.colors.begin());
  inst.colors.push_back(name);
  return static_cast<ColorId>(inst.colors.size() - 1);
}

}  // namespace gerry
