#include "gerry/reductions.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "gerry/error.hpp"

namespace gerry {

namespace {

__extension__ using Wide = __int128;

constexpr Wide kWeightMax = std::numeric_limits<Weight>::max();

void check_simple(const SimpleGraph& g) {
  std::set<Edge> seen;
  for (const Edge& e : g.edges) {
    if (e.u >= g.vertex_count || e.v >= g.vertex_count) {
      throw std::invalid_argument("source graph edge references an unknown vertex");
    }
    if (e.u == e.v) throw std::invalid_argument("source graph has a self-loop");
    if (!seen.insert(e.normalized()).second) {
      throw std::invalid_argument("source graph has a duplicate edge");
    }
  }
}

std::size_t choose2(std::size_t l) { return l * (l - 1) / 2; }

}  // namespace

SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g{n, {}};
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.edges.push_back({u, v});
  }
  return g;
}

SimpleGraph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  SimpleGraph g{n, {}};
  for (Vertex u = 0; u < n; ++u) g.edges.push_back(Edge{u, static_cast<Vertex>((u + 1) % n)}.normalized());
  return g;
}

std::optional<std::size_t> regular_degree(const SimpleGraph& g) {
  if (g.vertex_count == 0) return std::nullopt;
  std::vector<std::size_t> deg(g.vertex_count, 0);
  for (const Edge& e : g.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  if (std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) != deg.end()) {
    return std::nullopt;
  }
  return deg.front();
}

CliquePathOutput clique_to_path(const SimpleGraph& g, std::size_t l, bool connected) {
  check_simple(g);
  const auto degree = regular_degree(g);
  if (!degree) throw std::invalid_argument("source graph is not regular");
  const std::size_t n = g.vertex_count;
  if (l < 1 || l > n) throw std::invalid_argument("clique size must lie in [1, n]");

  CliquePathParams P;
  P.n = n;
  P.m = g.edges.size();
  P.d = *degree;
  P.l = l;
  P.N = 4 * n * n;
  P.M = 4 * P.N * n + 3 * P.m;
  P.z = 2 * P.N + l + P.m + 1;
  P.connected = connected;
  const std::size_t base = (n - l) * 3 * P.N + P.d * l + choose2(l);
  P.k = connected ? base + (P.z - 1) * (P.M + 1) : base + P.z;

  const Wide vertices = Wide(n) * (4 * P.N - 1) + Wide(4) * P.m + (2 * P.N - (n - l) + 1) +
                        (connected ? Wide(P.z - 1) * P.M : Wide(0));
  if (vertices > std::numeric_limits<Vertex>::max()) {
    throw CapacityError("clique_to_path: instance would have too many vertices");
  }

  CliquePathOutput out;
  out.params = P;
  Instance& inst = out.instance;
  inst.colors = {"p", "q", "r"};
  const ColorId p = 0, q = 1, r = 2;
  for (std::size_t v = 0; v < n; ++v) inst.colors.push_back("cv_" + std::to_string(v));
  auto cv = [](std::size_t v) { return static_cast<ColorId>(3 + v); };
  std::size_t fresh_count = 0;
  auto fresh = [&]() {
    inst.colors.push_back("fresh_" + std::to_string(fresh_count++));
    return static_cast<ColorId>(inst.colors.size() - 1);
  };
  auto add_vertex = [&](ColorId c) {
    inst.color_of.push_back(c);
    inst.weight.push_back(1);
    return static_cast<Vertex>(inst.color_of.size() - 1);
  };

  bool first_component = true;
  Vertex tail = 0;
  // In connected mode every component after the first is preceded by a
  // connector path hanging off the previous tail.
  auto begin_component = [&]() {
    if (!connected || first_component) return;
    std::vector<Vertex> conn(P.M);
    for (auto& c : conn) c = add_vertex(fresh());
    inst.edges.push_back({tail, conn.front()});
    for (std::size_t i = 0; i + 1 < conn.size(); ++i) inst.edges.push_back({conn[i], conn[i + 1]});
    tail = conn.back();
    out.gadgets.connectors.push_back(std::move(conn));
  };

  auto add_path = [&](const std::vector<ColorId>& colors) {
    begin_component();
    std::vector<Vertex> ids;
    ids.reserve(colors.size());
    for (std::size_t i = 0; i < colors.size(); ++i) {
      const Vertex v = add_vertex(colors[i]);
      if (i > 0 || (connected && !first_component)) inst.edges.push_back({tail, v});
      tail = v;
      ids.push_back(v);
    }
    first_component = false;
    return ids;
  };

  for (std::size_t v = 0; v < n; ++v) {
    std::vector<ColorId> colors(P.N - 1, q);
    for (std::size_t i = 1; i <= P.N; ++i) {
      colors.push_back(fresh());
      colors.push_back(fresh());
      colors.push_back(cv(v));
    }
    out.gadgets.vertex_paths.push_back(add_path(colors));
  }
  for (const Edge& e : g.edges) {
    const auto ids = add_path({cv(e.u), r, r, cv(e.v)});
    out.gadgets.edge_paths.push_back({ids[0], ids[1], ids[2], ids[3]});
  }
  for (std::size_t i = 0; i < P.N + 1; ++i) out.gadgets.independent_set.push_back(add_path({p}).front());
  for (std::size_t i = 0; i < P.N - (n - l); ++i) {
    out.gadgets.independent_set.push_back(add_path({q}).front());
  }

  inst.vertex_count = inst.color_of.size();
  inst.target = p;
  inst.k = P.k;
  inst.allow_disconnected = !connected;
  return out;
}

std::vector<std::string> validate_clique_path(const CliquePathOutput& out) {
  std::vector<std::string> bad = validate_instance(out.instance);
  const Instance& inst = out.instance;
  const CliquePathParams& P = out.params;

  if (P.N != 4 * P.n * P.n) bad.emplace_back("N differs from 4n^2");
  if (P.M != 4 * P.N * P.n + 3 * P.m) bad.emplace_back("M differs from 4Nn + 3m");
  if (P.z != 2 * P.N + P.l + P.m + 1) bad.emplace_back("z differs from 2N + l + m + 1");
  const std::size_t base = (P.n - P.l) * 3 * P.N + P.d * P.l + choose2(P.l);
  const std::size_t k = P.connected ? base + (P.z - 1) * (P.M + 1) : base + P.z;
  if (inst.k != k || P.k != k) bad.emplace_back("k differs from the construction formula");
  if (std::any_of(inst.weight.begin(), inst.weight.end(), [](Weight w) { return w != 1; })) {
    bad.emplace_back("non-unit weight");
  }

  // Components and maximum degree.
  const Adjacency adj(inst);
  std::size_t max_degree = 0;
  for (Vertex v = 0; v < inst.vertex_count; ++v) max_degree = std::max(max_degree, adj.degree(v));
  if (max_degree > 2) bad.emplace_back("vertex of degree > 2");
  const std::size_t components = components_without(inst, {}).size();
  if (P.connected) {
    if (components != 1 || inst.edges.size() + 1 != inst.vertex_count) bad.emplace_back("not a single path");
  } else if (components != P.z) {
    bad.push_back("expected " + std::to_string(P.z) + " components, found " +
                  std::to_string(components));
  }

  std::size_t p_count = 0, q_count = 0;
  for (const Vertex v : out.gadgets.independent_set) {
    if (inst.color_of[v] == inst.target) ++p_count;
    else if (inst.color_name(inst.color_of[v]) == "q") ++q_count;
  }
  if (p_count != P.N + 1) bad.emplace_back("isolated set must hold N+1 target vertices");
  if (q_count != P.N - (P.n - P.l)) bad.emplace_back("isolated set must hold N-(n-l) q vertices");
  return bad;
}

Partition clique_witness(const CliquePathOutput& out, const SimpleGraph& g,
                         std::span<const Vertex> clique) {
  const CliquePathParams& P = out.params;
  std::vector<char> in_k(P.n, 0);
  for (const Vertex v : clique) {
    if (v >= P.n) throw std::invalid_argument("clique vertex out of range");
    if (in_k[v]) throw std::invalid_argument("clique vertex repeated");
    in_k[v] = 1;
  }
  if (clique.size() != P.l) {
    throw std::invalid_argument("clique must have exactly " + std::to_string(P.l) + " vertices");
  }
  std::set<Edge> source_edges;
  for (const Edge& e : g.edges) source_edges.insert(e.normalized());
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) {
      if (!source_edges.count(Edge{clique[i], clique[j]}.normalized())) {
        throw std::invalid_argument("vertex set is not a clique");
      }
    }
  }

  std::vector<Edge> cut;
  for (std::size_t v = 0; v < P.n; ++v) {
    if (in_k[v]) continue;
    const auto& path = out.gadgets.vertex_paths[v];
    for (std::size_t i = P.N - 2; i + 1 < path.size(); ++i) cut.push_back({path[i], path[i + 1]});
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    const auto& ep = out.gadgets.edge_paths[i];
    if (in_k[e.u]) cut.push_back({ep[0], ep[1]});
    if (in_k[e.v]) cut.push_back({ep[2], ep[3]});
    if (in_k[e.u] && in_k[e.v]) cut.push_back({ep[1], ep[2]});
  }
  if (P.connected) {
    // Cutting every connector edge would give k + 1 parts. The first two
    // vertices of the first connector stay together instead: a tie between
    // two fresh colors, which no other part shares.
    bool kept_one = false;
    for (const auto& conn : out.gadgets.connectors) {
      cut.push_back({conn.front() - 1, conn.front()});
      for (std::size_t i = 0; i + 1 < conn.size(); ++i) {
        if (!kept_one) {
          kept_one = true;
          continue;
        }
        cut.push_back({conn[i], conn[i + 1]});
      }
      cut.push_back({conn.back(), conn.back() + 1});
    }
  }
  return components_without(out.instance, cut);
}

Partition clique_witness(const SimpleGraph& g, std::size_t l, std::span<const Vertex> clique,
                         bool connected) {
  return clique_witness(clique_to_path(g, l, connected), g, clique);
}

PartitionTreeOutput partition_to_tree(std::span<const Weight> elements) {
  if (elements.empty()) throw std::invalid_argument("partition_to_tree: empty multiset");
  const std::size_t n = elements.size();
  if (n % 2 != 0) throw std::invalid_argument("partition_to_tree: number of elements must be even");
  if (n > 60) throw CapacityError("partition_to_tree: weights grow as 2^n; n > 60 overflows");

  Wide s = 0;
  for (const Weight a : elements) {
    if (a < 0) throw std::invalid_argument("partition_to_tree: elements must be non-negative");
    s += a;
  }
  PartitionTreeParams P;
  P.n = n;
  P.scale = s % Wide(n) == 0 ? 1 : static_cast<Weight>(n);
  s *= P.scale;
  const Wide N = s + 1;
  const Wide two_n = Wide(1) << n;
  const Wide M = N * two_n * Wide(n + 1) + s / 2 + 2;
  const Wide center = M * Wide(n) + s / 2 + 1;
  const Wide top = M + N * two_n + s + 2 * s / Wide(n);
  if (s > kWeightMax || M > kWeightMax || center > kWeightMax || top > kWeightMax ||
      N * two_n > kWeightMax) {
    throw CapacityError("partition_to_tree: weights overflow 64 bits");
  }
  for (const Weight a : elements) P.elements.push_back(a * P.scale);
  P.s = static_cast<Weight>(s);
  P.N = static_cast<Weight>(N);
  P.M = static_cast<Weight>(M);
  P.k = 3 * n / 2 + 1;

  PartitionTreeOutput out;
  Instance& inst = out.instance;
  inst.colors = {"p", "q", "r"};
  const ColorId p = 0, q = 1, r = 2;
  inst.target = p;
  inst.k = P.k;
  auto add_vertex = [&](ColorId c, Weight w) {
    inst.color_of.push_back(c);
    inst.weight.push_back(w);
    return static_cast<Vertex>(inst.color_of.size() - 1);
  };

  P.center = add_vertex(p, static_cast<Weight>(center));
  for (std::size_t i = 0; i < n / 2; ++i) {
    const Vertex leaf = add_vertex(p, 1);
    P.leaves.push_back(leaf);
    inst.edges.push_back({P.center, leaf});
  }
  const Weight shift = 2 * P.s / static_cast<Weight>(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const Weight a = P.elements[i - 1];
    const Weight step = P.N * (Weight{1} << i);
    PartitionTreeGadget gad;
    gad.xq = add_vertex(q, P.M + step + a);
    gad.xr = add_vertex(r, P.M - step);
    gad.yq = add_vertex(q, P.M - step);
    gad.yr = add_vertex(r, P.M + step - a + shift);
    inst.edges.push_back({P.center, gad.xq});
    inst.edges.push_back({P.center, gad.yq});
    inst.edges.push_back({gad.xq, gad.xr});
    inst.edges.push_back({gad.yq, gad.yr});
    P.gadgets.push_back(gad);
  }
  inst.vertex_count = inst.color_of.size();
  out.params = std::move(P);
  return out;
}

Partition partition_witness(const PartitionTreeOutput& out, std::span<const std::size_t> chosen) {
  const PartitionTreeParams& P = out.params;
  std::vector<char> in_i(P.n + 1, 0);
  Weight sum = 0;
  for (const std::size_t i : chosen) {
    if (i < 1 || i > P.n) throw std::invalid_argument("index out of range (indices are 1-based)");
    if (in_i[i]) throw std::invalid_argument("index repeated");
    in_i[i] = 1;
    sum += P.elements[i - 1];
  }
  if (chosen.size() != P.n / 2) {
    throw std::invalid_argument("exactly n/2 indices are required");
  }
  if (2 * sum != P.s) throw std::invalid_argument("chosen elements do not sum to half the total");

  Partition part;
  std::vector<Vertex> main{P.center};
  for (std::size_t i = 1; i <= P.n; ++i) {
    const auto& gad = P.gadgets[i - 1];
    if (in_i[i]) {
      main.insert(main.end(), {gad.xq, gad.xr, gad.yq, gad.yr});
    }
  }
  std::sort(main.begin(), main.end());
  part.blocks.push_back(std::move(main));
  for (const Vertex leaf : P.leaves) part.blocks.push_back({leaf});
  for (std::size_t i = 1; i <= P.n; ++i) {
    if (in_i[i]) continue;
    const auto& gad = P.gadgets[i - 1];
    part.blocks.push_back({std::min(gad.xq, gad.xr), std::max(gad.xq, gad.xr)});
    part.blocks.push_back({std::min(gad.yq, gad.yr), std::max(gad.yq, gad.yr)});
  }
  return part;
}

Partition partition_witness(std::span<const Weight> elements, std::span<const std::size_t> chosen) {
  return partition_witness(partition_to_tree(elements), chosen);
}

}  // namespace gerry
