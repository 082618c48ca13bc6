#include <stdexcept>
#include <utility>

#include "cdc/solver.hpp"

namespace cdc {

namespace {

struct PairChoices {
  int i;
  int j;
  std::vector<std::pair<DirectionMatrix, DirectionMatrix>> options;
};

struct Search {
  Model model;
  std::vector<PairChoices> pairs;
  CdcBasicNetwork current;
  DisjunctiveOutcome result;

  bool descend(std::size_t depth) {
    if (depth == pairs.size()) {
      ++result.leaves;
      SolveOutcome o = solve_basic(current, model);
      if (!o.consistent) return false;
      result.satisfiable = true;
      result.refinement = current;
      result.outcome = std::move(o);
      return true;
    }
    const auto& p = pairs[depth];
    for (const auto& [a, b] : p.options) {
      current.set(p.i, p.j, a);
      current.set(p.j, p.i, b);
      if (descend(depth + 1)) return true;
    }
    return false;
  }
};

}  // namespace

DisjunctiveOutcome solve_disjunctive(const CdcDisjunctiveNetwork& net, Model model) {
  if (!net.valid_for(model))
    throw std::invalid_argument("disjunctive network has an empty or invalid candidate set");
  const int n = net.size();
  Search s{model, {}, CdcBasicNetwork(n), {}};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      PairChoices pc{i, j, {}};
      for (auto a : net.get(i, j))
        for (auto b : net.get(j, i))
          if (!projective_pair_relation(a, b, Axis::X).empty() &&
              !projective_pair_relation(a, b, Axis::Y).empty())
            pc.options.emplace_back(a, b);
      if (pc.options.empty()) return s.result;
      s.pairs.push_back(std::move(pc));
    }
  }
  s.descend(0);
  return s.result;
}

}  // namespace cdc
