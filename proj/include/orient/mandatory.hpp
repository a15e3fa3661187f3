#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "orient/model.hpp"

namespace orient {

// ---------------------------------------------------------------------------
// Mandatory vertices for a known realization

/// Vertices contained in every feasible query set for `r`, as a mask.
///
/// v is mandatory iff some hyperedge F containing v has either v as its
/// minimum with another member's weight inside I_v, or a different minimum
/// whose weight lies inside I_v.
inline std::vector<bool> mandatory_mask(const Instance& inst, const Realization& r) {
  std::vector<bool> mandatory(inst.size(), false);
  for (const auto& e : inst.hyperedges()) {
    VertexIndex m = e.front();
    for (auto v : e)
      if (inst.lighter(v, r[v], m, r[m])) m = v;
    const double wm = r[m];
    const auto& im = inst.interval(m);
    for (auto v : e) {
      if (v == m) continue;
      if (inst.interval(v).contains(wm)) mandatory[v] = true;
      if (im.contains(r[v])) mandatory[m] = true;
    }
  }
  return mandatory;
}

inline std::vector<VertexIndex> mask_to_set(const std::vector<bool>& mask) {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < mask.size(); ++v)
    if (mask[v]) out.push_back(v);
  return out;
}

inline std::vector<VertexIndex> mandatory_set(const Instance& inst, const Realization& r) {
  return mask_to_set(mandatory_mask(inst, r));
}

/// Mandatory vertices when only the elementary interval of each weight is
/// known. `cells[v]` is a global cell index of `pm`.
inline std::vector<bool> mandatory_mask_cells(const Instance& inst, const ProbabilityMatrix& pm,
                                              const std::vector<std::size_t>& cells) {
  std::vector<bool> mandatory(inst.size(), false);
  const auto& grid = pm.grid();
  auto covers = [&](VertexIndex v, std::size_t cell) {
    const auto& iv = inst.interval(v);
    return iv.lo <= grid[cell] && grid[cell + 1] <= iv.hi;
  };
  for (const auto& e : inst.hyperedges()) {
    std::size_t low = cells[e.front()];
    for (auto v : e) low = std::min(low, cells[v]);
    std::size_t in_low = 0;
    VertexIndex m = e.front();
    for (auto v : e)
      if (cells[v] == low) {
        ++in_low;
        m = v;
      }
    if (in_low >= 2) {
      for (auto v : e)
        if (covers(v, low)) mandatory[v] = true;
      continue;
    }
    for (auto u : e) {
      if (u == m) continue;
      if (covers(u, low)) mandatory[u] = true;
      if (covers(m, cells[u])) mandatory[m] = true;
    }
  }
  return mandatory;
}

// ---------------------------------------------------------------------------
// Feasibility

/// Whether querying `query` identifies the minimum of every hyperedge under `r`.
inline bool is_feasible(const Instance& inst, const Realization& r, const std::vector<bool>& query) {
  for (const auto& e : inst.hyperedges()) {
    VertexIndex m = e.front();
    for (auto v : e)
      if (inst.lighter(v, r[v], m, r[m])) m = v;
    const auto& im = inst.interval(m);
    for (auto u : e) {
      if (u == m) continue;
      if (query[m]) {
        if (inst.interval(u).contains(r[m]) && !query[u]) return false;
      } else if (inst.interval(u).intersects(im)) {
        if (!query[u] || r[u] < im.hi) return false;
      }
    }
  }
  return true;
}

inline bool is_feasible(const Instance& inst, const Realization& r,
                        const std::vector<VertexIndex>& query) {
  std::vector<bool> mask(inst.size(), false);
  for (auto v : query) mask[v] = true;
  return is_feasible(inst, r, mask);
}

// ---------------------------------------------------------------------------
// Orientation state under partial information

struct HyperedgeStatus {
  bool solved = false;
  /// The provable minimum when solved, otherwise the next vertex to query.
  VertexIndex vertex = 0;

  friend bool operator==(const HyperedgeStatus&, const HyperedgeStatus&) = default;
};

using Revealed = std::vector<std::optional<double>>;

/// Status of one hyperedge given which members are known. `weight(v)` is only
/// called for known members.
///
/// The next vertex is the unqueried candidate with the leftmost interval. Once
/// the queried members cover the hyperedge's star in the cover graph, that
/// vertex is mandatory for every realization consistent with what is known.
template <class Known, class Weight>
HyperedgeStatus edge_status(const Instance& inst, const std::vector<VertexIndex>& e, Known&& known,
                            Weight&& weight) {
  std::optional<VertexIndex> best;  // lightest known member
  double wbest = 0.0;
  for (auto v : e) {
    if (!known(v)) continue;
    const double w = weight(v);
    if (!best || inst.lighter(v, w, *best, wbest)) {
      best = v;
      wbest = w;
    }
  }
  auto upper = [&](VertexIndex v) { return known(v) ? weight(v) : inst.interval(v).hi; };

  if (best) {
    bool certified = true;
    for (auto u : e)
      if (!known(u) && inst.interval(u).lo < wbest) {
        certified = false;
        break;
      }
    if (certified) return {true, *best};
  }

  std::optional<VertexIndex> next;
  for (auto u : e) {
    if (known(u)) continue;
    const auto& iu = inst.interval(u);
    bool below_all = true;   // u is certainly lighter than every other member
    bool candidate = true;   // u may still be the minimum
    for (auto x : e) {
      if (x == u) continue;
      const double lower_x = known(x) ? weight(x) : inst.interval(x).lo;
      if (iu.hi > lower_x) below_all = false;
      if (!(iu.lo < upper(x))) candidate = false;
    }
    if (below_all) return {true, u};
    if (candidate && (!next || inst.left_before(u, *next))) next = u;
  }
  if (!next) {
    // Unreachable for consistent inputs; fall back to the leftmost unknown member.
    for (auto u : e)
      if (!known(u)) return {false, u};
    return {true, best.value_or(e.front())};
  }
  return {false, *next};
}

/// Per-hyperedge status given the weights revealed so far.
inline std::vector<HyperedgeStatus> orientation_state(const Instance& inst, const Revealed& revealed) {
  if (revealed.size() != inst.size()) throw ValidationError("revealed map size mismatch");
  for (VertexIndex v = 0; v < inst.size(); ++v)
    if (revealed[v] && !inst.interval(v).contains(*revealed[v]))
      throw ValidationError("revealed weight of '" + inst.vertex(v).id + "' outside its interval");
  std::vector<HyperedgeStatus> out;
  out.reserve(inst.hyperedges().size());
  auto known = [&](VertexIndex v) { return revealed[v].has_value(); };
  auto weight = [&](VertexIndex v) { return *revealed[v]; };
  for (const auto& e : inst.hyperedges()) out.push_back(edge_status(inst, e, known, weight));
  return out;
}

// ---------------------------------------------------------------------------
// Mandatory probabilities

enum class ProbMethod { exact_graph, sampled };

struct MandatoryProfile {
  std::vector<double> probs;
  ProbMethod method = ProbMethod::exact_graph;
  double epsilon = 0.0;
  double delta = 0.0;
  std::size_t sample_count = 0;
};

/// ceil(ln(2/delta) / (2 eps^2)): Hoeffding sample size for |y - p| < eps w.p. >= 1 - delta.
inline std::size_t hoeffding_sample_count(double epsilon, double delta) {
  if (!(epsilon > 0.0 && epsilon < 1.0 && delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("epsilon and delta must lie in (0, 1)");
  return static_cast<std::size_t>(std::ceil(std::log(2.0 / delta) / (2.0 * epsilon * epsilon)));
}

/// Exact p_v for graphs: 1 - prod over neighbours u of P[w_u not in I_v].
inline MandatoryProfile exact_prob_graph(const Instance& inst) {
  if (!inst.is_graph())
    throw std::invalid_argument("exact mandatory probabilities need a graph; use estimate_prob");
  std::vector<std::vector<VertexIndex>> nbrs(inst.size());
  for (const auto& e : inst.hyperedges()) {
    nbrs[e[0]].push_back(e[1]);
    nbrs[e[1]].push_back(e[0]);
  }
  MandatoryProfile prof;
  prof.method = ProbMethod::exact_graph;
  prof.probs.assign(inst.size(), 0.0);
  for (VertexIndex v = 0; v < inst.size(); ++v) {
    auto& nb = nbrs[v];
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    double miss = 1.0;
    for (auto u : nb) miss *= 1.0 - inst.vertex(u).pmf.mass_in(inst.interval(v));
    prof.probs[v] = 1.0 - miss;
  }
  return prof;
}

namespace detail {

inline std::vector<std::size_t> sample_cells(const Instance& inst, const ProbabilityMatrix& pm, Rng& rng) {
  std::vector<std::size_t> cells(inst.size());
  for (VertexIndex v = 0; v < inst.size(); ++v) cells[v] = pm.sample_cell(v, rng);
  return cells;
}

}  // namespace detail

/// Sampling estimate of p_v from ceil(ln(2/delta)/(2 eps^2)) cell-level realizations.
inline double estimate_prob(const Instance& inst, VertexIndex v, double epsilon, double delta, Rng& rng) {
  const std::size_t k = hoeffding_sample_count(epsilon, delta);
  if (inst.incidence()[v].empty()) return 0.0;
  const ProbabilityMatrix pm(inst);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto cells = detail::sample_cells(inst, pm, rng);
    if (mandatory_mask_cells(inst, pm, cells)[v]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(k);
}

/// Estimates every p_v with per-vertex confidence `delta`. With `shared_batch`
/// one batch of realizations serves all vertices (marginals are unchanged,
/// only the errors become correlated).
inline MandatoryProfile estimate_profile(const Instance& inst, double epsilon, double delta, Rng& rng,
                                         bool shared_batch = true) {
  MandatoryProfile prof;
  prof.method = ProbMethod::sampled;
  prof.epsilon = epsilon;
  prof.delta = delta;
  prof.sample_count = hoeffding_sample_count(epsilon, delta);
  prof.probs.assign(inst.size(), 0.0);
  if (!shared_batch) {
    for (VertexIndex v = 0; v < inst.size(); ++v) prof.probs[v] = estimate_prob(inst, v, epsilon, delta, rng);
    return prof;
  }
  const ProbabilityMatrix pm(inst);
  std::vector<std::size_t> hits(inst.size(), 0);
  for (std::size_t i = 0; i < prof.sample_count; ++i) {
    const auto cells = detail::sample_cells(inst, pm, rng);
    const auto m = mandatory_mask_cells(inst, pm, cells);
    for (VertexIndex v = 0; v < inst.size(); ++v) hits[v] += m[v] ? 1 : 0;
  }
  for (VertexIndex v = 0; v < inst.size(); ++v)
    prof.probs[v] = static_cast<double>(hits[v]) / static_cast<double>(prof.sample_count);
  return prof;
}

}  // namespace orient
