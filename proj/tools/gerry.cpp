#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gerry/dp_two_color.hpp"
#include "gerry/error.hpp"
#include "gerry/evaluate.hpp"
#include "gerry/instance.hpp"
#include "gerry/io.hpp"
#include "gerry/oracle.hpp"
#include "gerry/reductions.hpp"
#include "gerry/star_diam.hpp"

namespace {

using namespace gerry;

constexpr int kExitSolution = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitNoSolution = 3;

// Thrown for bad command-line values that CLI11 cannot catch by itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Instance load_instance(const std::string& path) {
  Instance inst = parse_instance(read_text_file(path));
  if (const auto problems = validate_instance(inst); !problems.empty()) {
    std::string msg = path + ": invalid instance:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw ParseError(msg, 0);
  }
  return inst;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") std::cout << text;
  else write_text_file(path, text);
}

OracleResult run_solver(const Instance& inst, std::string algorithm) {
  if (inst.allow_disconnected) {
    throw UnsupportedInstance("instance is in disconnected mode; only 'eval' accepts it");
  }
  if (algorithm == "auto") {
    if (!is_tree(inst)) throw UnsupportedInstance("not a tree; no exact solver applies");
    const ShapeReport shape = classify_shape(inst);
    if (inst.color_count() == 2) algorithm = "dp2";
    else if (shape.diameter <= 2) algorithm = "star";
    else if (shape.diameter == 3) algorithm = "diam3";
    else algorithm = "brute";
  }
  if (algorithm == "dp2") return solve_two_color_tree(inst);
  if (algorithm == "star") return solve_star(inst);
  if (algorithm == "diam3") return solve_diameter3(inst);
  return solve_brute_force(inst);
}

int cmd_solve(const std::string& path, const std::string& algorithm, const std::string& witness) {
  const Instance inst = load_instance(path);
  const OracleResult res = run_solver(inst, algorithm);
  if (!res.answer) {
    std::cout << "no solution\n";
    return kExitNoSolution;
  }
  std::cout << "solution\n";
  if (!witness.empty()) emit(witness, write_partition(*res.witness));
  return kExitSolution;
}

int cmd_eval(const std::string& inst_path, const std::string& part_path) {
  const Instance inst = parse_instance(read_text_file(inst_path));
  const Partition part = parse_partition(read_text_file(part_path));
  const EvalReport rep = evaluate_partition(inst, part);
  std::ostringstream os;
  os << "valid " << (rep.valid ? "yes" : "no") << '\n';
  if (rep.violation) os << "violation " << *rep.violation << '\n';
  os << "blocks " << part.size() << " k " << inst.k << '\n';
  os << "uniquely " << inst.color_name(inst.target) << ' ' << rep.uniquely_p_count << '\n';
  for (ColorId c = 0; c < rep.colored_count.size(); ++c) {
    os << "colored " << inst.color_name(c) << ' ' << rep.colored_count[c] << '\n';
  }
  os << "solution " << (rep.is_solution ? "yes" : "no") << '\n';
  if (rep.is_solution) {
    std::cout << os.str();
    return kExitSolution;
  }
  std::cerr << os.str();
  return kExitNoSolution;
}

template <typename Int>
std::vector<Int> parse_list(const std::string& text, const char* what) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw UsageError(std::string("malformed ") + what + " '" + item + "'");
    }
    if constexpr (std::is_unsigned_v<Int>) {
      if (v < 0) throw UsageError(std::string("negative ") + what + " '" + item + "'");
    }
    out.push_back(static_cast<Int>(v));
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what + " list");
  return out;
}

void check_witness_target(bool requested, const std::string& out, const std::string& witness_out) {
  if (!requested) return;
  if (witness_out.empty()) throw UsageError("--witness-out is required with a witness request");
  if ((out.empty() || out == "-") && witness_out == "-") {
    throw UsageError("instance and witness cannot both go to standard output");
  }
}

int cmd_gen_clique(const std::string& graph_path, std::size_t l, bool connected,
                   const std::string& clique_text, const std::string& out,
                   const std::string& witness_out) {
  check_witness_target(!clique_text.empty(), out, witness_out);
  const SimpleGraph g = parse_graph(read_text_file(graph_path));
  const CliquePathOutput gen = clique_to_path(g, l, connected);
  std::optional<Partition> witness;
  if (!clique_text.empty()) {
    const auto clique = parse_list<Vertex>(clique_text, "vertex id");
    witness = clique_witness(gen, g, clique);
  }
  emit(out, write_instance(gen.instance));
  if (witness) emit(witness_out, write_partition(*witness));
  return kExitSolution;
}

int cmd_gen_partition(const std::string& elements_text, const std::string& indices_text,
                      const std::string& out, const std::string& witness_out) {
  check_witness_target(!indices_text.empty(), out, witness_out);
  const auto elements = parse_list<Weight>(elements_text, "element");
  const PartitionTreeOutput gen = partition_to_tree(elements);
  std::optional<Partition> witness;
  if (!indices_text.empty()) {
    const auto chosen = parse_list<std::size_t>(indices_text, "index");
    witness = partition_witness(gen, chosen);
  }
  emit(out, write_instance(gen.instance));
  if (witness) emit(witness_out, write_partition(*witness));
  return kExitSolution;
}

struct Sweep {
  const char* name;
  std::size_t min_n;
  Instance (*make)(std::size_t, std::size_t, Weight, std::size_t, std::uint64_t);
  OracleResult (*solve)(const Instance&);
};

OracleResult dp2_default_root(const Instance& inst) { return solve_two_color_tree(inst); }

int cmd_crosscheck(std::size_t max_n, std::size_t colors, std::size_t trials, std::uint64_t seed) {
  if (max_n < 4) throw UsageError("--n must be at least 4");
  if (colors < 2) throw UsageError("--colors must be at least 2");
  std::vector<Sweep> sweeps;
  if (colors == 2) sweeps.push_back({"dp2", 1, &random_instance, &dp2_default_root});
  sweeps.push_back({"star", 1, &random_star_instance, &solve_star});
  sweeps.push_back({"diam3", 4, &random_diameter3_instance, &solve_diameter3});

  std::mt19937_64 rng(seed);
  std::size_t discrepancies = 0;
  for (const Sweep& sw : sweeps) {
    std::size_t agreed = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(sw.min_n, max_n)(rng);
      const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
      const Instance inst = sw.make(n, colors, 5, k, rng());
      const OracleResult want = solve_brute_force(inst);
      const OracleResult got = sw.solve(inst);
      if (want.answer == got.answer) {
        ++agreed;
        continue;
      }
      ++discrepancies;
      std::cout << "# discrepancy: " << sw.name << " says " << (got.answer ? "yes" : "no")
                << ", oracle says " << (want.answer ? "yes" : "no") << '\n'
                << write_instance(inst);
    }
    std::cout << sw.name << ' ' << agreed << '/' << trials << " agree\n";
  }
  return discrepancies == 0 ? kExitSolution : kExitNoSolution;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for gerrymandering on paths and trees"};
  app.require_subcommand(1);

  std::string inst_path, part_path, algorithm = "auto", witness;
  auto* solve = app.add_subcommand("solve", "Decide an instance");
  solve->add_option("instance", inst_path, "Instance file")->required();
  solve->add_option("--algorithm", algorithm, "Solver to use")
      ->check(CLI::IsMember({"auto", "brute", "dp2", "star", "diam3"}));
  solve->add_option("--witness", witness, "Write the solution partition here ('-' for stdout)");

  auto* eval = app.add_subcommand("eval", "Check a partition against an instance");
  eval->add_option("instance", inst_path, "Instance file")->required();
  eval->add_option("partition", part_path, "Partition file")->required();

  auto* gen = app.add_subcommand("gen", "Generate reduction instances");
  gen->require_subcommand(1);
  std::string out, witness_out, graph_path, clique_text, elements_text, indices_text;
  std::size_t l = 0;
  bool connected = false;
  auto* clique = gen->add_subcommand("clique-path", "Path instance from a regular graph");
  clique->add_option("--graph", graph_path, "Graph file")->required();
  clique->add_option("--l", l, "Clique size")->required();
  clique->add_flag("--connected", connected, "Join components into a single path");
  clique->add_option("--witness-clique", clique_text, "Comma-separated clique vertices");
  auto* ptree = gen->add_subcommand("partition-tree", "Tree instance from a multiset");
  ptree->add_option("--elements", elements_text, "Comma-separated elements")->required();
  ptree->add_option("--witness-indices", indices_text, "Comma-separated 1-based indices");
  for (auto* sub : {clique, ptree}) {
    sub->add_option("-o,--output", out, "Instance output file (default stdout)");
    sub->add_option("--witness-out", witness_out, "Witness partition output file");
  }

  std::size_t max_n = 8, colors = 2, trials = 100;
  std::uint64_t seed = 1;
  auto* cross = app.add_subcommand("crosscheck", "Compare solvers with the brute-force oracle");
  cross->add_option("--n", max_n, "Largest vertex count")->required();
  cross->add_option("--colors", colors, "Number of colors")->required();
  cross->add_option("--trials", trials, "Instances per solver")->required();
  cross->add_option("--seed", seed, "Random seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return kExitUsage;
  }

  try {
    if (*solve) return cmd_solve(inst_path, algorithm, witness);
    if (*eval) return cmd_eval(inst_path, part_path);
    if (*clique) return cmd_gen_clique(graph_path, l, connected, clique_text, out, witness_out);
    if (*ptree) return cmd_gen_partition(elements_text, indices_text, out, witness_out);
    if (*cross) return cmd_crosscheck(max_n, colors, trials, seed);
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const UnsupportedInstance& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
