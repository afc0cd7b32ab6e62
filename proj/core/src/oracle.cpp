#include "gerry/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>

#include "gerry/error.hpp"
#include "gerry/evaluate.hpp"

namespace gerry {

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  constexpr auto top = std::numeric_limits<std::uint64_t>::max();
  __extension__ using Wide = unsigned __int128;
  Wide acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > top) return top;
  }
  return static_cast<std::uint64_t>(acc);
}

namespace {

// Evaluates edge cuts of a fixed tree without materializing partitions.
class CutEvaluator {
 public:
  explicit CutEvaluator(const Instance& inst) : inst_(inst) {
    const std::size_t n = inst.vertex_count;
    sorted_edges_ = inst.edges;
    for (Edge& e : sorted_edges_) e = e.normalized();
    std::sort(sorted_edges_.begin(), sorted_edges_.end());

    std::vector<std::vector<std::pair<Vertex, std::uint32_t>>> adj(n);
    for (std::uint32_t i = 0; i < sorted_edges_.size(); ++i) {
      adj[sorted_edges_[i].u].emplace_back(sorted_edges_[i].v, i);
      adj[sorted_edges_[i].v].emplace_back(sorted_edges_[i].u, i);
    }
    parent_.assign(n, 0);
    parent_edge_.assign(n, 0);
    order_.reserve(n);
    std::vector<char> seen(n, 0);
    order_.push_back(0);
    seen[0] = 1;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      const Vertex v = order_[head];
      for (const auto& [u, id] : adj[v]) {
        if (seen[u]) continue;
        seen[u] = 1;
        parent_[u] = v;
        parent_edge_[u] = id;
        order_.push_back(u);
      }
    }
    comp_.assign(n, 0);
    cut_.assign(sorted_edges_.size(), 0);
  }

  [[nodiscard]] const std::vector<Edge>& sorted_edges() const { return sorted_edges_; }

  // Labels components for the cut given as sorted edge indices.
  std::size_t label(std::span<const std::uint32_t> chosen) {
    for (const auto id : chosen) cut_[id] = 1;
    std::size_t next = 1;
    comp_[order_[0]] = 0;
    for (std::size_t i = 1; i < order_.size(); ++i) {
      const Vertex v = order_[i];
      comp_[v] = cut_[parent_edge_[v]] ? next++ : comp_[parent_[v]];
    }
    for (const auto id : chosen) cut_[id] = 0;
    return next;
  }

  bool is_solution(std::span<const std::uint32_t> chosen) {
    const std::size_t parts = label(chosen);
    const std::size_t colors = inst_.color_count();
    tally_.assign(parts * colors, 0);
    for (Vertex v = 0; v < inst_.vertex_count; ++v) {
      tally_[comp_[v] * colors + inst_.color_of[v]] += inst_.weight[v];
    }
    counts_.assign(colors, 0);
    std::size_t wins = 0;
    for (std::size_t b = 0; b < parts; ++b) {
      const Weight* row = tally_.data() + b * colors;
      const Weight best = *std::max_element(row, row + colors);
      std::size_t winners = 0;
      for (std::size_t c = 0; c < colors; ++c) {
        if (row[c] == best) {
          ++counts_[c];
          ++winners;
        }
      }
      if (winners == 1 && row[inst_.target] == best) ++wins;
    }
    for (std::size_t c = 0; c < colors; ++c) {
      if (c != inst_.target && wins <= counts_[c]) return false;
    }
    return true;
  }

  [[nodiscard]] std::vector<Edge> edges_of(std::span<const std::uint32_t> chosen) const {
    std::vector<Edge> out;
    out.reserve(chosen.size());
    for (const auto id : chosen) out.push_back(sorted_edges_[id]);
    return out;
  }

 private:
  const Instance& inst_;
  std::vector<Edge> sorted_edges_;
  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
  std::vector<std::uint32_t> parent_edge_;
  std::vector<std::size_t> comp_;
  std::vector<char> cut_;
  std::vector<Weight> tally_;
  std::vector<std::size_t> counts_;
};

// Advances `idx` to the next r-combination of [0, m) in lexicographic order.
bool next_combination(std::vector<std::uint32_t>& idx, std::size_t m) {
  const std::size_t r = idx.size();
  std::size_t i = r;
  while (i > 0) {
    --i;
    if (idx[i] < m - r + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void require_enumerable_tree(const Instance& inst, std::size_t parts, std::uint64_t cap,
                             const char* who) {
  if (inst.allow_disconnected || !is_tree(inst)) {
    throw UnsupportedInstance(std::string(who) + " requires a tree");
  }
  if (parts < 1 || parts > inst.vertex_count) {
    throw std::invalid_argument(std::string(who) + ": part count out of range");
  }
  const std::uint64_t total = binomial(inst.vertex_count - 1, parts - 1);
  if (total > cap) {
    throw CapacityError(std::string(who) + ": " + std::to_string(total) +
                        " edge subsets exceed the enumeration cap of " + std::to_string(cap));
  }
}

std::vector<std::uint32_t> first_combination(std::size_t r) {
  std::vector<std::uint32_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0U);
  return idx;
}

}  // namespace

OracleResult solve_brute_force(const Instance& inst, std::uint64_t cap) {
  require_enumerable_tree(inst, inst.k, cap, "solve_brute_force");
  CutEvaluator eval(inst);
  const std::size_t m = eval.sorted_edges().size();
  OracleResult res;
  auto idx = first_combination(inst.k - 1);
  do {
    ++res.partitions_examined;
    if (eval.is_solution(idx)) {
      res.answer = true;
      res.witness = partition_from_edge_cut(inst, eval.edges_of(idx));
      if (!evaluate_partition(inst, *res.witness).is_solution) {
        throw std::logic_error("brute force witness failed verification");
      }
      return res;
    }
  } while (next_combination(idx, m));
  return res;
}

std::uint64_t enumerate_connected_partitions(const Instance& inst, std::size_t parts,
                                             const PartitionVisitor& visit, std::uint64_t cap) {
  require_enumerable_tree(inst, parts, cap, "enumerate_connected_partitions");
  CutEvaluator eval(inst);
  const std::size_t m = eval.sorted_edges().size();
  std::uint64_t count = 0;
  auto idx = first_combination(parts - 1);
  do {
    ++count;
    if (visit) visit(components_without(inst, eval.edges_of(idx)));
  } while (next_combination(idx, m));
  return count;
}

std::vector<Edge> decode_pruefer(std::size_t n, std::span<const Vertex> sequence) {
  if (n == 0) throw std::invalid_argument("decode_pruefer: n must be positive");
  if (n == 1) {
    if (!sequence.empty()) throw std::invalid_argument("decode_pruefer: sequence must be empty");
    return {};
  }
  if (sequence.size() != n - 2) {
    throw std::invalid_argument("decode_pruefer: sequence length must be n-2");
  }
  std::vector<std::size_t> degree(n, 1);
  for (const Vertex v : sequence) {
    if (v >= n) throw std::invalid_argument("decode_pruefer: entry out of range");
    ++degree[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (const Vertex v : sequence) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back(Edge{leaf, v}.normalized());
    if (--degree[v] == 1) leaves.push(v);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  const Vertex b = leaves.top();
  edges.push_back(Edge{a, b}.normalized());
  return edges;
}

std::vector<Edge> random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_tree: n must be positive");
  if (n == 1) return {};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> seq(n - 2);
  for (auto& v : seq) v = pick(rng);
  return decode_pruefer(n, seq);
}

std::vector<std::string> default_color_names(std::size_t count) {
  static const char* const named[] = {"p", "q", "r", "s"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.emplace_back(i < 4 ? std::string(named[i]) : "c" + std::to_string(i));
  }
  return out;
}

namespace {

void check_random_args(std::size_t n, std::size_t num_colors, Weight max_weight, std::size_t k) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (num_colors == 0) throw std::invalid_argument("num_colors must be positive");
  if (max_weight < 1) throw std::invalid_argument("max_weight must be positive");
  if (k < 1 || k > n) throw std::invalid_argument("k must lie in [1, n]");
}

Instance decorate(std::size_t n, std::vector<Edge> edges, std::size_t num_colors,
                  Weight max_weight, std::size_t k, std::mt19937_64& rng) {
  Instance inst;
  inst.vertex_count = n;
  inst.edges = std::move(edges);
  inst.colors = default_color_names(num_colors);
  inst.target = 0;
  inst.k = k;
  std::uniform_int_distribution<ColorId> color(0, static_cast<ColorId>(num_colors - 1));
  std::uniform_int_distribution<Weight> weight(1, max_weight);
  inst.color_of.resize(n);
  inst.weight.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    inst.color_of[v] = color(rng);
    inst.weight[v] = weight(rng);
  }
  return inst;
}

// Relabels vertices by a random permutation and sorts the edge list.
std::vector<Edge> shuffle_labels(std::size_t n, std::vector<Edge> edges, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (Edge& e : edges) e = Edge{perm[e.u], perm[e.v]}.normalized();
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

Instance random_instance(std::size_t n, std::size_t num_colors, Weight max_weight, std::size_t k,
                         std::uint64_t seed) {
  check_random_args(n, num_colors, max_weight, k);
  std::mt19937_64 rng(seed);
  auto edges = random_tree(n, rng());
  return decorate(n, std::move(edges), num_colors, max_weight, k, rng);
}

Instance random_star_instance(std::size_t n, std::size_t num_colors, Weight max_weight,
                              std::size_t k, std::uint64_t seed) {
  check_random_args(n, num_colors, max_weight, k);
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  edges = shuffle_labels(n, std::move(edges), rng);
  return decorate(n, std::move(edges), num_colors, max_weight, k, rng);
}

Instance random_diameter3_instance(std::size_t n, std::size_t num_colors, Weight max_weight,
                                   std::size_t k, std::uint64_t seed) {
  check_random_args(n, num_colors, max_weight, k);
  if (n < 4) throw std::invalid_argument("a diameter-3 tree needs at least 4 vertices");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 3}};
  std::bernoulli_distribution side(0.5);
  for (Vertex v = 4; v < n; ++v) edges.push_back({side(rng) ? Vertex{0} : Vertex{1}, v});
  edges = shuffle_labels(n, std::move(edges), rng);
  return decorate(n, std::move(edges), num_colors, max_weight, k, rng);
}

}  // namespace gerry
