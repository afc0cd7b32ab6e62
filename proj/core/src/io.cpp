#include "gerry/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "gerry/error.hpp"

namespace gerry {

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    const auto toks = tokens_of(line);
    if (!toks.empty()) fn(toks, line_no);
  }
}

template <typename Int>
Int parse_int(std::string_view tok, std::size_t line, const char* what) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("malformed integer '" + std::string(tok) + "' for " + what, line);
  }
  return value;
}

void expect_arity(const std::vector<std::string_view>& toks, std::size_t n, std::size_t line) {
  if (toks.size() != n) {
    throw ParseError("'" + std::string(toks.front()) + "' expects " + std::to_string(n - 1) +
                         " argument(s)",
                     line);
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Instance inst;
  bool have_colors = false, have_target = false, have_k = false, seen_edge = false;
  std::string target_name;
  std::size_t target_line = 0;
  std::unordered_map<std::string, ColorId> color_ids;
  std::map<std::uint64_t, std::pair<ColorId, Weight>> vertices;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw_edges;
  std::vector<std::size_t> edge_lines;

  for_each_line(text, [&](const std::vector<std::string_view>& toks, std::size_t line) {
    const std::string_view d = toks.front();
    if (d == "colors") {
      if (have_colors) throw ParseError("duplicate 'colors' header", line);
      if (toks.size() < 2) throw ParseError("'colors' needs at least one color", line);
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const std::string name(toks[i]);
        if (!color_ids.emplace(name, static_cast<ColorId>(inst.colors.size())).second) {
          throw ParseError("duplicate color '" + name + "'", line);
        }
        inst.colors.push_back(name);
      }
      have_colors = true;
    } else if (d == "target") {
      if (have_target) throw ParseError("duplicate 'target' header", line);
      expect_arity(toks, 2, line);
      target_name = std::string(toks[1]);
      target_line = line;
      have_target = true;
    } else if (d == "k") {
      if (have_k) throw ParseError("duplicate 'k' header", line);
      expect_arity(toks, 2, line);
      inst.k = parse_int<std::size_t>(toks[1], line, "k");
      have_k = true;
    } else if (d == "mode") {
      expect_arity(toks, 2, line);
      if (toks[1] == "disconnected") inst.allow_disconnected = true;
      else if (toks[1] == "connected") inst.allow_disconnected = false;
      else throw ParseError("unknown mode '" + std::string(toks[1]) + "'", line);
    } else if (d == "v") {
      expect_arity(toks, 4, line);
      if (!have_colors || !have_target || !have_k) throw ParseError("missing header", line);
      if (seen_edge) throw ParseError("vertex line after edge lines", line);
      const auto id = parse_int<std::uint64_t>(toks[1], line, "vertex id");
      const auto it = color_ids.find(std::string(toks[2]));
      if (it == color_ids.end()) {
        throw ParseError("unknown color '" + std::string(toks[2]) + "'", line);
      }
      const auto w = parse_int<Weight>(toks[3], line, "weight");
      if (w < 0) throw ParseError("negative weight", line);
      if (!vertices.emplace(id, std::make_pair(it->second, w)).second) {
        throw ParseError("duplicate vertex " + std::to_string(id), line);
      }
    } else if (d == "e") {
      expect_arity(toks, 3, line);
      if (!have_colors || !have_target || !have_k) throw ParseError("missing header", line);
      seen_edge = true;
      raw_edges.emplace_back(parse_int<std::uint64_t>(toks[1], line, "vertex id"),
                             parse_int<std::uint64_t>(toks[2], line, "vertex id"));
      edge_lines.push_back(line);
    } else {
      throw ParseError("unknown directive '" + std::string(d) + "'", line);
    }
  });

  if (!have_colors || !have_target || !have_k) throw ParseError("missing header", 0);
  const auto t = color_ids.find(target_name);
  if (t == color_ids.end()) throw ParseError("unknown target color '" + target_name + "'", target_line);
  inst.target = t->second;

  std::uint64_t expected = 0;
  for (const auto& [id, cw] : vertices) {
    if (id != expected) throw ParseError("vertex ids must be 0..n-1; missing " + std::to_string(expected), 0);
    ++expected;
    inst.color_of.push_back(cw.first);
    inst.weight.push_back(cw.second);
  }
  inst.vertex_count = vertices.size();
  for (std::size_t i = 0; i < raw_edges.size(); ++i) {
    const auto [a, b] = raw_edges[i];
    if (a >= inst.vertex_count || b >= inst.vertex_count) {
      throw ParseError("edge references unknown vertex", edge_lines[i]);
    }
    inst.edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  return inst;
}

std::string write_instance(const Instance& inst) {
  std::ostringstream os;
  os << "colors";
  for (const auto& c : inst.colors) os << ' ' << c;
  os << "\ntarget " << inst.colors.at(inst.target) << "\nk " << inst.k << '\n';
  if (inst.allow_disconnected) os << "# mode disconnected\nmode disconnected\n";
  for (std::size_t v = 0; v < inst.vertex_count; ++v) {
    os << "v " << v << ' ' << inst.colors.at(inst.color_of[v]) << ' ' << inst.weight[v] << '\n';
  }
  for (const Edge& e : inst.edges) os << "e " << e.u << ' ' << e.v << '\n';
  return os.str();
}

Partition parse_partition(std::string_view text) {
  Partition part;
  for_each_line(text, [&](const std::vector<std::string_view>& toks, std::size_t line) {
    std::vector<Vertex> block;
    block.reserve(toks.size());
    for (const auto tok : toks) block.push_back(parse_int<Vertex>(tok, line, "vertex id"));
    part.blocks.push_back(std::move(block));
  });
  return part;
}

std::string write_partition(const Partition& part) {
  std::ostringstream os;
  for (const auto& block : part.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) os << (i ? " " : "") << block[i];
    os << '\n';
  }
  return os.str();
}

SimpleGraph parse_graph(std::string_view text) {
  SimpleGraph g;
  bool have_n = false;
  for_each_line(text, [&](const std::vector<std::string_view>& toks, std::size_t line) {
    if (toks.front() == "n") {
      if (have_n) throw ParseError("duplicate 'n' header", line);
      expect_arity(toks, 2, line);
      g.vertex_count = parse_int<std::size_t>(toks[1], line, "vertex count");
      have_n = true;
    } else if (toks.front() == "e") {
      if (!have_n) throw ParseError("missing header", line);
      expect_arity(toks, 3, line);
      const auto a = parse_int<Vertex>(toks[1], line, "vertex id");
      const auto b = parse_int<Vertex>(toks[2], line, "vertex id");
      if (a >= g.vertex_count || b >= g.vertex_count) {
        throw ParseError("edge references unknown vertex", line);
      }
      g.edges.push_back({a, b});
    } else {
      throw ParseError("unknown directive '" + std::string(toks.front()) + "'", line);
    }
  });
  if (!have_n) throw ParseError("missing header", 0);
  return g;
}

std::string write_graph(const SimpleGraph& g) {
  std::ostringstream os;
  os << "n " << g.vertex_count << '\n';
  for (const Edge& e : g.edges) os << "e " << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace gerry
