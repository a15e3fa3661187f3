#pragma once

#include <string>
#include <vector>

#include "orient/algorithms.hpp"
#include "orient/mandatory.hpp"
#include "orient/model.hpp"

namespace orient {

inline constexpr std::size_t kCellCombinationBound = 1'000'000;

/// Calls f(cells, probability) for every joint assignment of vertices to
/// elementary intervals of positive mass.
template <class F>
void for_each_cell_assignment(const Instance& inst, const ProbabilityMatrix& pm, F&& f,
                              std::size_t bound = kCellCombinationBound) {
  const std::size_t n = inst.size();
  std::vector<std::vector<std::pair<std::size_t, double>>> options(n);
  double combos = 1.0;
  for (VertexIndex v = 0; v < n; ++v) {
    const auto& row = pm.row(v);
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] > 0.0) options[v].push_back({pm.first_cell(v) + j, row[j]});
    combos *= static_cast<double>(options[v].size());
  }
  if (combos > static_cast<double>(bound))
    throw BoundError("cell enumeration needs " + std::to_string(static_cast<long long>(combos)) +
                     " combinations, bound is " + std::to_string(bound));
  std::vector<std::size_t> pick(n, 0), cells(n);
  for (;;) {
    double prob = 1.0;
    for (VertexIndex v = 0; v < n; ++v) {
      cells[v] = options[v][pick[v]].first;
      prob *= options[v][pick[v]].second;
    }
    f(static_cast<const std::vector<std::size_t>&>(cells), prob);
    std::size_t v = 0;
    while (v < n && ++pick[v] == options[v].size()) pick[v++] = 0;
    if (v == n) return;
  }
}

/// E[OPT] by enumerating every joint cell assignment.
inline double exact_expected_opt(const Instance& inst, std::size_t bound = kCellCombinationBound) {
  const ProbabilityMatrix pm(inst);
  OptimumOracle oracle(inst);
  double total = 0.0;
  for_each_cell_assignment(
      inst, pm,
      [&](const std::vector<std::size_t>& cells, double prob) {
        const auto m = mandatory_mask_cells(inst, pm, cells);
        total += prob * oracle.cost_for(m, open_centers_cells(inst, cells, m));
      },
      bound);
  return total;
}

/// Realization placing every weight at the midpoint of its cell.
inline Realization cell_midpoints(const ProbabilityMatrix& pm, const std::vector<std::size_t>& cells) {
  Realization r;
  for (auto c : cells) {
    const auto iv = pm.cell(c);
    r.weights.push_back(0.5 * (iv.lo + iv.hi));
  }
  return r;
}

/// Expected cost of an algorithm whose decisions depend only on the cells the
/// weights fall in (every algorithm here compares weights with endpoints only).
inline double exact_expected_cost(const Instance& inst, const Algorithm& alg, std::uint64_t seed = 0,
                                  std::size_t bound = kCellCombinationBound) {
  const ProbabilityMatrix pm(inst);
  const Runner run = alg.prepare(inst, seed);
  double total = 0.0;
  for_each_cell_assignment(
      inst, pm,
      [&](const std::vector<std::size_t>& cells, double prob) {
        total += prob * run(cell_midpoints(pm, cells)).total_cost();
      },
      bound);
  return total;
}

/// Exact probability of each vertex being mandatory, for any instance small enough to enumerate.
inline std::vector<double> exact_mandatory_probs(const Instance& inst, std::size_t bound = kCellCombinationBound) {
  const ProbabilityMatrix pm(inst);
  std::vector<double> p(inst.size(), 0.0);
  for_each_cell_assignment(
      inst, pm,
      [&](const std::vector<std::size_t>& cells, double prob) {
        const auto m = mandatory_mask_cells(inst, pm, cells);
        for (VertexIndex v = 0; v < inst.size(); ++v)
          if (m[v]) p[v] += prob;
      },
      bound);
  return p;
}

}  // namespace orient
