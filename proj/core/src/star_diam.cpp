#include "gerry/star_diam.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gerry/error.hpp"
#include "gerry/evaluate.hpp"

namespace gerry {

std::size_t beta_count(std::span<const Weight> sorted_desc, Weight budget, bool strict) {
  if (!std::is_sorted(sorted_desc.begin(), sorted_desc.end(), std::greater<>())) {
    throw std::invalid_argument("beta_count: weights must be sorted in descending order");
  }
  Weight rest = std::accumulate(sorted_desc.begin(), sorted_desc.end(), Weight{0});
  for (std::size_t b = 0; b <= sorted_desc.size(); ++b) {
    if (strict ? rest < budget : rest <= budget) return b;
    if (b < sorted_desc.size()) rest -= sorted_desc[b];
  }
  return sorted_desc.size();
}

namespace {

void require_plain_tree(const Instance& inst, const char* who) {
  if (inst.allow_disconnected || !is_tree(inst)) {
    throw UnsupportedInstance(std::string(who) + " requires a tree");
  }
  if (inst.k < 1 || inst.k > inst.vertex_count) {
    throw std::invalid_argument(std::string(who) + ": k out of range");
  }
}

std::vector<Vertex> inner_vertices(const Instance& inst) {
  const Adjacency adj(inst);
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < inst.vertex_count; ++v) {
    if (adj.degree(v) > 1) inner.push_back(v);
  }
  return inner;
}

}  // namespace

StarLayout star_layout(const Instance& inst) {
  const auto inner = inner_vertices(inst);
  if (inner.size() > 1) throw UnsupportedInstance("star_layout: more than one center");
  const Vertex center = inner.empty() ? Vertex{0} : inner.front();
  CenterGroup g;
  g.centers.push_back(center);
  for (Vertex v = 0; v < inst.vertex_count; ++v) {
    if (v != center) g.leaves.push_back(v);
  }
  return StarLayout{{std::move(g)}};
}

StarLayout diameter3_layout(const Instance& inst, GuessCase kind) {
  const auto inner = inner_vertices(inst);
  if (inner.size() != 2) throw UnsupportedInstance("diameter3_layout: need exactly two centers");
  const Vertex r1 = inner[0];
  const Vertex r2 = inner[1];
  const Adjacency adj(inst);
  std::vector<Vertex> leaves1;
  std::vector<Vertex> leaves2;
  for (Vertex v = 0; v < inst.vertex_count; ++v) {
    if (v == r1 || v == r2) continue;
    const Vertex hub = *adj.neighbors(v).first;
    (hub == r1 ? leaves1 : leaves2).push_back(v);
  }
  StarLayout layout;
  if (kind == GuessCase::merged) {
    CenterGroup g{{r1, r2}, {}};
    std::merge(leaves1.begin(), leaves1.end(), leaves2.begin(), leaves2.end(),
               std::back_inserter(g.leaves));
    layout.groups.push_back(std::move(g));
  } else {
    layout.groups.push_back({{r1}, std::move(leaves1)});
    layout.groups.push_back({{r2}, std::move(leaves2)});
  }
  return layout;
}

GuessEvaluator::GuessEvaluator(const Instance& inst, StarLayout layout)
    : inst_(&inst), layout_(std::move(layout)) {
  const std::size_t colors = inst.color_count();
  for (const CenterGroup& cg : layout_.groups) {
    GroupData g;
    g.center_weight.assign(colors, 0);
    for (const Vertex c : cg.centers) g.center_weight[inst.color_of[c]] += inst.weight[c];
    g.leaves_desc.assign(colors, {});
    for (const Vertex v : cg.leaves) {
      if (inst.weight[v] == 0) zero_leaves_.push_back(v);
      else g.leaves_desc[inst.color_of[v]].push_back(v);
    }
    g.prefix.assign(colors, {});
    g.weights_desc.assign(colors, {});
    for (ColorId c = 0; c < colors; ++c) {
      auto& list = g.leaves_desc[c];
      std::stable_sort(list.begin(), list.end(), [&](Vertex a, Vertex b) {
        return inst.weight[a] > inst.weight[b];
      });
      auto& ws = g.weights_desc[c];
      for (const Vertex v : list) ws.push_back(inst.weight[v]);
      auto& pre = g.prefix[c];
      pre.assign(list.size() + 1, 0);
      for (std::size_t i = 0; i < list.size(); ++i) pre[i + 1] = pre[i] + inst.weight[list[i]];
    }
    groups_.push_back(std::move(g));
  }
  std::sort(zero_leaves_.begin(), zero_leaves_.end());
}

std::size_t GuessEvaluator::target_leaf_count(std::size_t g) const {
  return groups_.at(g).leaves_desc[inst_->target].size();
}

std::size_t GuessEvaluator::positive_leaf_count(std::size_t g, ColorId c) const {
  return groups_.at(g).leaves_desc.at(c).size();
}

Weight GuessEvaluator::leaf_sum(const GroupData& g, ColorId c, std::size_t skip_heaviest) const {
  const auto& pre = g.prefix[c];
  return pre.back() - pre[skip_heaviest];
}

FeasibilityOutcome GuessEvaluator::evaluate(const CaseGuess& guess, bool build_partition) const {
  const Instance& inst = *inst_;
  const std::size_t groups = groups_.size();
  const std::size_t colors = inst.color_count();
  const ColorId p = inst.target;
  if (guess.q_star.size() != groups || guess.alpha_p.size() != groups ||
      guess.alpha_qstar.size() != groups) {
    throw std::invalid_argument("CaseGuess does not match the number of center groups");
  }

  FeasibilityOutcome out;
  out.beta.assign(colors, 0);
  if (guess.zero_removed > zero_leaves_.size()) return out;

  // Block weight of q_star per group, and the fixed split-off count.
  std::vector<Weight> top(groups);
  std::size_t fixed_removed = guess.zero_removed;
  std::size_t x = colors == 1 ? guess.zero_removed : 0;
  for (std::size_t g = 0; g < groups; ++g) {
    const GroupData& gd = groups_[g];
    const ColorId qs = guess.q_star[g];
    if (qs >= colors) throw std::invalid_argument("CaseGuess color out of range");
    const std::size_t np = gd.leaves_desc[p].size();
    const std::size_t ap = guess.alpha_p[g];
    const std::size_t aq = guess.alpha_qstar[g];
    if (ap > np) return out;
    x += ap;
    fixed_removed += ap;
    if (qs == p) {
      if (aq != 0) return out;
      ++x;
      // The lightest target leaves leave; the heaviest stay.
      top[g] = gd.center_weight[p] + gd.prefix[p][np - ap];
    } else {
      const std::size_t nq = gd.leaves_desc[qs].size();
      if (aq > nq) return out;
      fixed_removed += aq;
      top[g] = gd.center_weight[qs] + gd.prefix[qs][nq - aq];
      // The heaviest target leaves leave.
      if (gd.center_weight[p] + leaf_sum(gd, p, ap) > top[g]) return out;
    }
  }
  out.x = x;
  if (fixed_removed + groups > inst.k) return out;
  const std::size_t needed = inst.k - groups - fixed_removed;

  // Per non-target color: how many of its leaves can be split off in total,
  // [lo, hi], given that its district count must stay below x.
  struct Range {
    ColorId color;
    std::size_t lo;
    std::size_t hi;
  };
  std::vector<Range> ranges;
  std::vector<std::vector<std::size_t>> beta(groups, std::vector<std::size_t>(colors, 0));
  std::vector<std::vector<char>> tied(groups, std::vector<char>(colors, 0));
  std::size_t lo_total = 0;
  std::size_t hi_total = 0;
  for (ColorId c = 0; c < colors; ++c) {
    if (c == p) continue;
    std::size_t fixed = guess.zero_removed;
    std::size_t beta_sum = 0;
    std::size_t room = 0;
    std::size_t fixable = 0;  // groups tied at beta that can drop the tie
    std::size_t stuck = 0;    // groups tied at beta with nothing left to remove
    for (std::size_t g = 0; g < groups; ++g) {
      const GroupData& gd = groups_[g];
      const ColorId qs = guess.q_star[g];
      if (qs == c) {
        fixed += guess.alpha_qstar[g] + 1;
        continue;
      }
      const bool strict = qs == p;
      const auto& list = gd.leaves_desc[c];
      const Weight budget = top[g] - gd.center_weight[c];
      const std::size_t b = beta_count(gd.weights_desc[c], budget, strict);
      const Weight kept = gd.center_weight[c] + leaf_sum(gd, c, b);
      if (strict ? kept >= top[g] : kept > top[g]) return out;
      beta[g][c] = b;
      out.beta[c] += b;
      beta_sum += b;
      room += list.size() - b;
      if (!strict && kept == top[g]) {
        tied[g][c] = 1;
        (b < list.size() ? fixable : stuck) += 1;
      }
    }
    const std::size_t base_cost = fixed + beta_sum + stuck + fixable;
    if (x == 0 || base_cost > x - 1) return out;
    const std::size_t extra = std::min(room, std::max(fixable, x - 1 - fixed - beta_sum - stuck));
    ranges.push_back({c, beta_sum, beta_sum + extra});
    lo_total += beta_sum;
    hi_total += beta_sum + extra;
  }
  if (colors == 1 ? needed != 0 : (needed < lo_total || needed > hi_total)) return out;

  out.feasible = true;
  if (!build_partition) return out;

  // Distribute the split-offs: colors with the most slack absorb extras first.
  std::vector<std::size_t> take(colors, 0);
  for (const Range& r : ranges) take[r.color] = r.lo;
  std::size_t remaining = needed - lo_total;
  std::vector<Range> by_slack = ranges;
  std::stable_sort(by_slack.begin(), by_slack.end(), [](const Range& a, const Range& b) {
    return a.hi - a.lo > b.hi - b.lo;
  });
  for (const Range& r : by_slack) {
    const std::size_t add = std::min(remaining, r.hi - r.lo);
    take[r.color] += add;
    remaining -= add;
  }

  std::vector<std::vector<Vertex>> blocks;
  std::vector<char> removed(inst.vertex_count, 0);
  auto split_off = [&](Vertex v) {
    removed[v] = 1;
    blocks.push_back({v});
  };
  for (std::size_t i = 0; i < guess.zero_removed; ++i) split_off(zero_leaves_[i]);
  for (std::size_t g = 0; g < groups; ++g) {
    const GroupData& gd = groups_[g];
    const ColorId qs = guess.q_star[g];
    const auto& pl = gd.leaves_desc[p];
    const std::size_t ap = guess.alpha_p[g];
    if (qs == p) {
      for (std::size_t i = pl.size() - ap; i < pl.size(); ++i) split_off(pl[i]);
    } else {
      for (std::size_t i = 0; i < ap; ++i) split_off(pl[i]);
      const auto& ql = gd.leaves_desc[qs];
      for (std::size_t i = ql.size() - guess.alpha_qstar[g]; i < ql.size(); ++i) split_off(ql[i]);
    }
  }
  for (const Range& r : ranges) {
    const ColorId c = r.color;
    // Per group amounts: beta first, then one more where a tie can be broken,
    // then anything left in group order.
    std::vector<std::size_t> amount(groups, 0);
    std::size_t left = take[c];
    for (std::size_t g = 0; g < groups; ++g) {
      if (guess.q_star[g] == c) continue;
      amount[g] = beta[g][c];
      left -= beta[g][c];
    }
    for (std::size_t g = 0; g < groups && left > 0; ++g) {
      if (guess.q_star[g] == c || !tied[g][c]) continue;
      if (amount[g] < groups_[g].leaves_desc[c].size()) {
        ++amount[g];
        --left;
      }
    }
    for (std::size_t g = 0; g < groups && left > 0; ++g) {
      if (guess.q_star[g] == c) continue;
      const std::size_t add = std::min(left, groups_[g].leaves_desc[c].size() - amount[g]);
      amount[g] += add;
      left -= add;
    }
    for (std::size_t g = 0; g < groups; ++g) {
      for (std::size_t i = 0; i < amount[g]; ++i) split_off(groups_[g].leaves_desc[c][i]);
    }
  }
  for (const CenterGroup& cg : layout_.groups) {
    std::vector<Vertex> block = cg.centers;
    for (const Vertex v : cg.leaves) {
      if (!removed[v]) block.push_back(v);
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  out.partition = Partition{std::move(blocks)};
  return out;
}

std::optional<std::pair<CaseGuess, FeasibilityOutcome>> GuessEvaluator::search(
    std::uint64_t& guesses_examined) const {
  const Instance& inst = *inst_;
  const std::size_t groups = groups_.size();
  const std::size_t colors = inst.color_count();
  const ColorId p = inst.target;

  // Odometer over bounded counters: returns false after the last tuple.
  auto advance = [](std::vector<std::size_t>& digits, const std::vector<std::size_t>& bound) {
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (digits[i] < bound[i]) {
        ++digits[i];
        return true;
      }
      digits[i] = 0;
    }
    return false;
  };

  CaseGuess guess;
  guess.kind = groups == 1 ? GuessCase::merged : GuessCase::split;
  std::vector<std::size_t> qs(groups, 0);
  const std::vector<std::size_t> q_bound(groups, colors - 1);
  do {
    guess.q_star.assign(qs.begin(), qs.end());
    std::vector<std::size_t> ap_bound(groups);
    std::vector<std::size_t> aq_bound(groups);
    for (std::size_t g = 0; g < groups; ++g) {
      ap_bound[g] = groups_[g].leaves_desc[p].size();
      aq_bound[g] = qs[g] == p ? 0 : groups_[g].leaves_desc[qs[g]].size();
    }
    std::vector<std::size_t> ap(groups, 0);
    do {
      std::vector<std::size_t> aq(groups, 0);
      do {
        const std::size_t fixed = std::accumulate(ap.begin(), ap.end(), std::size_t{0}) +
                                  std::accumulate(aq.begin(), aq.end(), std::size_t{0});
        if (fixed + groups > inst.k) continue;
        guess.alpha_p = ap;
        guess.alpha_qstar = aq;
        const std::size_t z_max = std::min(zero_leaves_.size(), inst.k - groups - fixed);
        for (std::size_t z = 0; z <= z_max; ++z) {
          guess.zero_removed = z;
          ++guesses_examined;
          if (!evaluate(guess, false).feasible) continue;
          FeasibilityOutcome full = evaluate(guess, true);
          const EvalReport rep = evaluate_partition(inst, *full.partition);
          if (!rep.is_solution) {
            throw std::logic_error("star/diameter-3 witness failed verification: " +
                                   rep.violation.value_or("target does not win"));
          }
          return std::make_pair(guess, std::move(full));
        }
      } while (advance(aq, aq_bound));
    } while (advance(ap, ap_bound));
  } while (advance(qs, q_bound));
  return std::nullopt;
}

FeasibilityOutcome evaluate_guess(const Instance& inst, const StarLayout& layout,
                                  const CaseGuess& guess) {
  return GuessEvaluator(inst, layout).evaluate(guess, true);
}

OracleResult solve_star(const Instance& inst) {
  require_plain_tree(inst, "solve_star");
  const ShapeReport shape = classify_shape(inst);
  if (shape.diameter > 2) {
    throw UnsupportedInstance("solve_star requires diameter <= 2, got " +
                              std::to_string(shape.diameter));
  }
  OracleResult res;
  const GuessEvaluator eval(inst, star_layout(inst));
  if (auto hit = eval.search(res.partitions_examined)) {
    res.answer = true;
    res.witness = std::move(hit->second.partition);
  }
  return res;
}

OracleResult solve_diameter3(const Instance& inst) {
  require_plain_tree(inst, "solve_diameter3");
  const ShapeReport shape = classify_shape(inst);
  if (shape.diameter != 3) {
    throw UnsupportedInstance("solve_diameter3 requires diameter 3, got " +
                              std::to_string(shape.diameter));
  }
  OracleResult res;
  for (const GuessCase kind : {GuessCase::merged, GuessCase::split}) {
    const GuessEvaluator eval(inst, diameter3_layout(inst, kind));
    if (auto hit = eval.search(res.partitions_examined)) {
      res.answer = true;
      res.witness = std::move(hit->second.partition);
      return res;
    }
  }
  return res;
}

}  // namespace gerry
