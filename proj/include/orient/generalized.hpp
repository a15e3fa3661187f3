#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "orient/exact.hpp"
#include "orient/vcover.hpp"

namespace orient {

inline constexpr std::size_t kGeneralizedBound = 12;

/// Cover graph with costs and an explicit law over mandatory sets.
struct GeneralizedInstance {
  CoverGraph graph;
  std::vector<std::pair<std::vector<bool>, double>> law;

  void validate() const {
    if (graph.size() > kGeneralizedBound)
      throw ValidationError("generalized instances are limited to " + std::to_string(kGeneralizedBound) +
                            " vertices");
    double total = 0.0;
    for (const auto& [m, p] : law) {
      if (m.size() != graph.size()) throw ValidationError("mandatory set size mismatch");
      if (!(p >= 0.0)) throw ValidationError("negative probability in mandatory law");
      total += p;
    }
    if (std::abs(total - 1.0) > kMassTolerance) throw ValidationError("mandatory law does not sum to 1");
  }
};

namespace detail {

inline double cover_cost_outside(const CoverGraph& g, const std::vector<bool>& m, const std::vector<double>& w) {
  std::vector<bool> rest(g.size());
  for (VertexIndex v = 0; v < g.size(); ++v) rest[v] = !m[v];
  return vc_exact_small(g.with_weights(w).induced(rest)).weight;
}

}  // namespace detail

/// Sum over M of p(M) (c(M) + c(VC_M)).
inline double expected_opt(const GeneralizedInstance& gi) {
  gi.validate();
  double total = 0.0;
  for (const auto& [m, p] : gi.law) {
    double c = 0.0;
    for (VertexIndex v = 0; v < m.size(); ++v)
      if (m[v]) c += gi.graph.weight(v);
    total += p * (c + detail::cover_cost_outside(gi.graph, m, gi.graph.weights()));
  }
  return total;
}

/// Expected optimum restricted to a part S: per mandatory set, the cheapest
/// c(Q intersect S) over feasible query sets Q.
inline double expected_opt_part(const GeneralizedInstance& gi, const std::vector<bool>& part) {
  gi.validate();
  std::vector<double> w(gi.graph.size(), 0.0);
  for (VertexIndex v = 0; v < w.size(); ++v)
    if (part[v]) w[v] = gi.graph.weight(v);
  double total = 0.0;
  for (const auto& [m, p] : gi.law) {
    double c = 0.0;
    for (VertexIndex v = 0; v < m.size(); ++v)
      if (m[v]) c += w[v];
    total += p * (c + detail::cover_cost_outside(gi.graph, m, w));
  }
  return total;
}

/// Replaces v by copies with costs fraction * c_v. The first copy keeps v's
/// index, further copies are appended; every copy inherits v's neighbours and
/// its mandatory status.
inline GeneralizedInstance vertex_split(const GeneralizedInstance& gi, VertexIndex v,
                                        const std::vector<double>& fractions) {
  gi.validate();
  if (v >= gi.graph.size()) throw ValidationError("vertex_split: unknown vertex");
  if (fractions.empty()) throw ValidationError("vertex_split: no fractions");
  double sum = 0.0;
  for (double f : fractions) {
    if (!(f > 0.0)) throw ValidationError("vertex_split: fractions must be positive");
    sum += f;
  }
  if (std::abs(sum - 1.0) > kMassTolerance) throw ValidationError("vertex_split: fractions must sum to 1");
  const std::size_t n = gi.graph.size();
  if (n + fractions.size() - 1 > kGeneralizedBound)
    throw ValidationError("vertex_split: result exceeds the vertex bound");

  std::vector<std::string> labels = gi.graph.labels();
  std::vector<double> weights = gi.graph.weights();
  std::vector<VertexIndex> copies{v};
  const std::string base = labels[v];
  const double cost = weights[v];
  labels[v] = base + "'1";
  weights[v] = fractions[0] * cost;
  for (std::size_t i = 1; i < fractions.size(); ++i) {
    copies.push_back(labels.size());
    labels.push_back(base + "'" + std::to_string(i + 1));
    weights.push_back(fractions[i] * cost);
  }
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  for (auto [a, b] : gi.graph.edges()) {
    if (a == v || b == v) {
      const auto other = a == v ? b : a;
      for (auto c : copies) edges.emplace_back(c, other);
    } else {
      edges.emplace_back(a, b);
    }
  }
  GeneralizedInstance out{CoverGraph(std::move(labels), std::move(weights), std::move(edges)), {}};
  for (const auto& [m, p] : gi.law) {
    std::vector<bool> lifted = m;
    for (std::size_t i = 1; i < copies.size(); ++i) lifted.push_back(m[v]);
    out.law.emplace_back(std::move(lifted), p);
  }
  return out;
}

/// Law of the mandatory set of an instance, by cell enumeration, on the
/// cover graph of its reduced form (the instance must already be reduced).
inline GeneralizedInstance generalized_from_instance(const Instance& inst) {
  if (!is_reduced(inst)) throw ValidationError("generalized_from_instance needs a reduced instance");
  const ProbabilityMatrix pm(inst);
  std::map<std::vector<bool>, double> law;
  for_each_cell_assignment(inst, pm, [&](const std::vector<std::size_t>& cells, double prob) {
    law[mandatory_mask_cells(inst, pm, cells)] += prob;
  });
  GeneralizedInstance gi{build_cover_graph(inst), {}};
  for (auto& [m, p] : law) gi.law.emplace_back(m, p);
  return gi;
}

/// Random cover graph on n vertices with random costs and a law over up to
/// `support` mandatory sets.
inline GeneralizedInstance random_generalized(std::size_t n, Rng& rng, double edge_p = 0.4,
                                              std::size_t support = 6) {
  std::vector<std::string> labels;
  std::vector<double> weights;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("g" + std::to_string(i));
    weights.push_back(static_cast<double>(1 + uniform_index(rng, 4)) * 0.5);
  }
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  for (VertexIndex a = 0; a < n; ++a)
    for (VertexIndex b = a + 1; b < n; ++b)
      if (uniform01(rng) < edge_p) edges.emplace_back(a, b);
  GeneralizedInstance gi{CoverGraph(std::move(labels), std::move(weights), std::move(edges)), {}};
  const std::size_t k = 1 + uniform_index(rng, support);
  double total = 0.0;
  std::vector<double> mass;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<bool> m(n);
    for (std::size_t v = 0; v < n; ++v) m[v] = uniform01(rng) < 0.3;
    mass.push_back(0.1 + uniform01(rng));
    total += mass.back();
    gi.law.emplace_back(std::move(m), 0.0);
  }
  for (std::size_t i = 0; i < k; ++i) gi.law[i].second = mass[i] / total;
  return gi;
}

}  // namespace orient
