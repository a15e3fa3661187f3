#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "orient/mandatory.hpp"
#include "orient/model.hpp"
#include "orient/vcover.hpp"

namespace orient {

// ---------------------------------------------------------------------------
// Thresholds

inline void check_alpha(double alpha) {
  if (!(alpha >= 1.0 && alpha <= 2.0)) throw ValidationError("alpha must lie in [1, 2]");
}

/// Threshold balancing 1/d against alpha + (2 - alpha) d.
inline double optimal_d(double alpha) {
  check_alpha(alpha);
  return 2.0 / (alpha + std::sqrt(8.0 - alpha * (4.0 - alpha)));
}

/// Guarantee max{1/d, alpha + (2 - alpha) d} for a given threshold.
inline double threshold_ratio(double alpha, double d) {
  check_alpha(alpha);
  if (!(d > 0.0 && d <= 1.0)) throw ValidationError("d must lie in (0, 1]");
  return std::max(1.0 / d, alpha + (2.0 - alpha) * d);
}

/// Best guarantee over d: (alpha + sqrt(8 - alpha (4 - alpha))) / 2.
inline double optimal_ratio(double alpha) {
  check_alpha(alpha);
  return 0.5 * (alpha + std::sqrt(8.0 - alpha * (4.0 - alpha)));
}

/// Guarantee of the sampling variant on hypergraphs.
inline double hypergraph_ratio(double alpha, double epsilon) {
  check_alpha(alpha);
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ValidationError("epsilon must lie in (0, 1)");
  const double b = 2.0 - alpha;
  const double inner = alpha * alpha + 4.0 * b * (1.0 + alpha * epsilon + b * epsilon * epsilon);
  return 0.5 * (alpha + std::sqrt(inner) + (4.0 - 2.0 * alpha) * epsilon);
}

inline double hypergraph_d(double alpha, double epsilon) { return 1.0 / hypergraph_ratio(alpha, epsilon) + epsilon; }

/// Per-vertex confidence so that all n estimates hold jointly with probability 1 - delta.
inline double per_vertex_delta(double delta, std::size_t n) {
  if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("delta must lie in (0, 1)");
  if (n == 0) return delta;
  return 1.0 - std::pow(1.0 - delta, 1.0 / static_cast<double>(n));
}

// Membership p_v >= d tolerates rounding in the probability computation.
inline constexpr double kThresholdTolerance = 1e-12;

enum class ProbMode { exact_graph, sampled };

struct ThresholdConfig {
  double d = 0.0;
  double alpha = 1.0;
  VcStrategy vc = VcStrategy::exact;
  ProbMode prob = ProbMode::exact_graph;
  double epsilon = 0.05;
  double delta = 0.01;
  bool shared_batch = true;

  void validate() const {
    if (!(d >= 0.0 && d <= 1.0)) throw ValidationError("d must lie in [0, 1]");
    check_alpha(alpha);
    if (prob == ProbMode::sampled) hoeffding_sample_count(epsilon, delta);
  }
};

/// Graph configuration with d chosen optimally for the strategy's alpha.
inline ThresholdConfig graph_threshold_config(VcStrategy vc = VcStrategy::exact) {
  ThresholdConfig c;
  c.vc = vc;
  c.alpha = declared_alpha(vc);
  c.d = optimal_d(c.alpha);
  return c;
}

/// Sampling configuration with d = 1/R + epsilon.
inline ThresholdConfig hypergraph_threshold_config(double epsilon, double delta,
                                                   VcStrategy vc = VcStrategy::few_hyperedges) {
  ThresholdConfig c;
  c.vc = vc;
  c.alpha = declared_alpha(vc);
  c.prob = ProbMode::sampled;
  c.epsilon = epsilon;
  c.delta = delta;
  c.d = hypergraph_d(c.alpha, epsilon);
  return c;
}

// ---------------------------------------------------------------------------
// Execution

/// What an algorithm decides before seeing any weight; indices refer to the
/// instance it was prepared for.
struct Plan {
  enum class Kind { two_stage, adaptive, leaves_first };
  Kind kind = Kind::two_stage;
  std::vector<VertexIndex> preprocess;  // forced by reduction
  std::vector<VertexIndex> stage1;
  std::vector<double> probs;            // p_v per vertex (NaN when not computed)
  std::vector<VertexIndex> threshold_set, v1, v_half, cover;
};

namespace detail {

template <class Step>
void orient_round_robin(const Instance& inst, const Realization& r, QueryTranscript& t, Stage stage,
                        Step&& step) {
  auto known = [&](VertexIndex v) { return t.queried(v); };
  auto weight = [&](VertexIndex v) { return r[v]; };
  for (;;) {
    bool open = false;
    for (const auto& e : inst.hyperedges()) {
      const auto st = edge_status(inst, e, known, weight);
      if (st.solved) continue;
      open = true;
      t.query(inst, r, step(e, st), stage);
    }
    if (!open) return;
  }
}

}  // namespace detail

/// Queries along the orientation state of each hyperedge, round-robin over
/// hyperedges, until every minimum is certain.
inline void complete_orientation(const Instance& inst, const Realization& r, QueryTranscript& t,
                                 Stage stage = Stage::stage2) {
  detail::orient_round_robin(inst, r, t, stage, [](const auto&, const HyperedgeStatus& st) { return st.vertex; });
}

/// Like complete_orientation, but the leftmost member of a hyperedge is only
/// queried once a revealed weight lies inside its interval or no other member
/// can still be the minimum.
inline void complete_leaves_first(const Instance& inst, const Realization& r, QueryTranscript& t,
                                  Stage stage = Stage::stage2) {
  detail::orient_round_robin(inst, r, t, stage, [&](const std::vector<VertexIndex>& e, const HyperedgeStatus& st) {
    const auto center = e.front();
    if (t.queried(center)) return st.vertex;
    const auto& ic = inst.interval(center);
    double low = std::numeric_limits<double>::infinity();
    for (auto v : e)
      if (t.queried(v)) {
        if (ic.contains(r[v])) return st.vertex;
        low = std::min(low, r[v]);
      }
    for (std::size_t i = 1; i < e.size(); ++i)
      if (!t.queried(e[i]) && inst.interval(e[i]).lo < low) return e[i];
    return st.vertex;
  });
}

inline QueryTranscript execute(const Instance& inst, const Plan& plan, const Realization& r) {
  QueryTranscript t(inst.size());
  for (auto v : plan.preprocess) t.query(inst, r, v, Stage::preprocess);
  for (auto v : plan.stage1) t.query(inst, r, v, Stage::stage1);
  if (plan.kind == Plan::Kind::leaves_first)
    complete_leaves_first(inst, r, t);
  else
    complete_orientation(inst, r, t);
  return t;
}

// ---------------------------------------------------------------------------
// Planning

namespace detail {

/// Maps indices of the reduced instance back to the original one.
inline std::vector<VertexIndex> to_original(const Instance& inst, const Instance& reduced) {
  std::vector<VertexIndex> map(reduced.size());
  for (VertexIndex v = 0; v < reduced.size(); ++v) map[v] = inst.at(reduced.vertex(v).id);
  return map;
}

inline std::vector<VertexIndex> forced_indices(const Instance& inst, const Reduction& red) {
  std::vector<VertexIndex> out;
  for (const auto& id : red.forced) out.push_back(inst.at(id));
  return out;
}

inline std::vector<double> spread(const std::vector<double>& reduced_values, const std::vector<VertexIndex>& map,
                                  std::size_t n) {
  std::vector<double> out(n, std::numeric_limits<double>::quiet_NaN());
  for (VertexIndex v = 0; v < map.size(); ++v) out[map[v]] = reduced_values[v];
  return out;
}

inline std::vector<VertexIndex> lift(const std::vector<VertexIndex>& members, const std::vector<VertexIndex>& map) {
  std::vector<VertexIndex> out;
  for (auto v : members) out.push_back(map[v]);
  std::sort(out.begin(), out.end());
  return out;
}

inline MandatoryProfile profile_for(const Instance& reduced, ProbMode mode, double epsilon, double delta,
                                    bool shared_batch, std::uint64_t seed) {
  if (mode == ProbMode::exact_graph) return exact_prob_graph(reduced);
  Rng rng = make_rng(seed, 0);
  return estimate_profile(reduced, epsilon, per_vertex_delta(delta, reduced.size()), rng, shared_batch);
}

}  // namespace detail

/// The threshold algorithm: query every vertex whose mandatory probability
/// reaches d, then V1 of an optimal half-integral LP solution on the rest, then
/// a black-box cover of the half-valued part. `seed` drives estimation when
/// probabilities are sampled.
inline Plan threshold_plan(const Instance& inst, const ThresholdConfig& config, std::uint64_t seed = 0) {
  config.validate();
  const Reduction red = reduce(inst);
  const Instance& ri = red.instance;
  if (config.prob == ProbMode::exact_graph && !ri.is_graph())
    throw ValidationError("exact probabilities need a graph instance; use sampled probabilities");
  const auto map = detail::to_original(inst, ri);
  const auto prof = detail::profile_for(ri, config.prob, config.epsilon, config.delta, config.shared_batch, seed);

  Plan plan;
  plan.preprocess = detail::forced_indices(inst, red);
  plan.probs = detail::spread(prof.probs, map, inst.size());

  std::vector<bool> in_m(ri.size(), false);
  std::vector<VertexIndex> m;
  for (VertexIndex v = 0; v < ri.size(); ++v)
    if (prof.probs[v] >= config.d - kThresholdTolerance) {
      in_m[v] = true;
      m.push_back(v);
    }
  const CoverGraph g = build_cover_graph(ri);
  std::vector<bool> rest(ri.size());
  for (VertexIndex v = 0; v < ri.size(); ++v) rest[v] = !in_m[v];
  const CoverGraph sub = g.induced(rest);
  const auto lp = lp_half_integral(sub);

  std::vector<bool> half(sub.size(), false);
  std::vector<VertexIndex> v1, vh;
  for (auto v : lp.v1) v1.push_back(sub.origin(v));
  for (auto v : lp.v_half) {
    half[v] = true;
    vh.push_back(sub.origin(v));
  }
  const CoverGraph half_graph = sub.induced(half);
  const Cover vc = solve_cover(half_graph, config.vc);
  std::vector<VertexIndex> cover;
  for (auto v : vc.members) cover.push_back(half_graph.origin(v));

  plan.threshold_set = detail::lift(m, map);
  plan.v1 = detail::lift(v1, map);
  plan.v_half = detail::lift(vh, map);
  plan.cover = detail::lift(cover, map);
  std::vector<VertexIndex> s1 = m;
  s1.insert(s1.end(), v1.begin(), v1.end());
  s1.insert(s1.end(), cover.begin(), cover.end());
  plan.stage1 = detail::lift(s1, map);
  return plan;
}

/// BestVC: query a cover of minimum sum of (1 - p_v) c_v, then complete.
inline Plan best_vc_plan(const Instance& inst, VcStrategy vc, ProbMode prob, double epsilon = 0.05,
                         double delta = 0.01, std::uint64_t seed = 0) {
  const Reduction red = reduce(inst);
  const Instance& ri = red.instance;
  if (prob == ProbMode::exact_graph && !ri.is_graph())
    throw ValidationError("exact probabilities need a graph instance; use sampled probabilities");
  const auto map = detail::to_original(inst, ri);
  const auto prof = detail::profile_for(ri, prob, epsilon, delta, true, seed);
  std::vector<double> w(ri.size());
  for (VertexIndex v = 0; v < ri.size(); ++v) w[v] = std::max(0.0, 1.0 - prof.probs[v]) * ri.cost(v);
  const Cover c = solve_cover(build_cover_graph(ri, std::move(w)), vc);

  Plan plan;
  plan.preprocess = detail::forced_indices(inst, red);
  plan.probs = detail::spread(prof.probs, map, inst.size());
  plan.cover = detail::lift(c.members, map);
  plan.stage1 = plan.cover;
  return plan;
}

/// Vertex-cover-based algorithm with a caller-chosen first stage, given by ids.
inline Plan vc_based_plan(const Instance& inst, const std::vector<std::string>& stage1_ids) {
  const Reduction red = reduce(inst);
  Plan plan;
  plan.preprocess = detail::forced_indices(inst, red);
  for (const auto& id : stage1_ids) plan.stage1.push_back(inst.at(id));
  std::sort(plan.stage1.begin(), plan.stage1.end());
  plan.cover = plan.stage1;
  return plan;
}

/// Fully adaptive control: each hyperedge is queried in left-endpoint order.
inline Plan baseline_plan(const Instance&) {
  Plan plan;
  plan.kind = Plan::Kind::adaptive;
  return plan;
}

/// Adaptive decision tree that defers each leftmost vertex (see complete_leaves_first).
inline Plan leaves_first_plan(const Instance&) {
  Plan plan;
  plan.kind = Plan::Kind::leaves_first;
  return plan;
}

// ---------------------------------------------------------------------------
// Offline optimum

/// Per hyperedge, the minimum-weight member when it is not mandatory (it then
/// has to be queried or have all intersecting members queried), else npos.
inline constexpr VertexIndex kNoCenter = static_cast<VertexIndex>(-1);

inline std::vector<VertexIndex> open_centers(const Instance& inst, const Realization& r,
                                             const std::vector<bool>& mandatory) {
  std::vector<VertexIndex> out;
  for (const auto& e : inst.hyperedges()) {
    VertexIndex m = e.front();
    for (auto u : e)
      if (inst.lighter(u, r[u], m, r[m])) m = u;
    out.push_back(mandatory[m] ? kNoCenter : m);
  }
  return out;
}

/// Same from cells: a non-mandatory minimum is alone in the lowest cell of its hyperedge.
inline std::vector<VertexIndex> open_centers_cells(const Instance& inst, const std::vector<std::size_t>& cells,
                                                   const std::vector<bool>& mandatory) {
  std::vector<VertexIndex> out;
  for (const auto& e : inst.hyperedges()) {
    VertexIndex m = e.front();
    for (auto u : e)
      if (cells[u] < cells[m]) m = u;
    out.push_back(mandatory[m] ? kNoCenter : m);
  }
  return out;
}

/// Optimal query sets: the mandatory set M plus a minimum cover of the stars
/// joining each non-mandatory hyperedge minimum to the members outside M whose
/// intervals meet its interval. On reduced instances these stars are the
/// cover graph restricted to V minus M. Reusable across realizations of one
/// instance; not thread-safe because of its memo.
class OptimumOracle {
 public:
  explicit OptimumOracle(const Instance& inst) : inst_(&inst) {}

  struct Result {
    std::vector<VertexIndex> query;  // sorted
    double cost = 0.0;
  };

  /// Minimum cover, as sorted indices, of the stars left open by `mandatory`.
  const std::vector<VertexIndex>& cover_outside(const std::vector<bool>& mandatory,
                                                const std::vector<VertexIndex>& centers) {
    std::string key(mandatory.size(), '0');
    for (VertexIndex v = 0; v < mandatory.size(); ++v)
      if (mandatory[v]) key[v] = '1';
    for (auto c : centers) key += ',' + (c == kNoCenter ? std::string("-") : std::to_string(c));
    auto it = memo_.find(key);
    if (it == memo_.end()) {
      const auto& hs = inst_->hyperedges();
      std::vector<std::pair<VertexIndex, VertexIndex>> edges;
      for (std::size_t e = 0; e < hs.size(); ++e) {
        const auto m = centers[e];
        if (m == kNoCenter) continue;
        for (auto u : hs[e])
          if (u != m && !mandatory[u] && inst_->interval(u).intersects(inst_->interval(m))) edges.emplace_back(m, u);
      }
      std::vector<std::string> labels;
      std::vector<double> weights;
      for (VertexIndex v = 0; v < inst_->size(); ++v) {
        labels.push_back(inst_->vertex(v).id);
        weights.push_back(inst_->cost(v));
      }
      const Cover c = vc_exact(CoverGraph(std::move(labels), std::move(weights), std::move(edges)));
      it = memo_.emplace(std::move(key), c.members).first;
    }
    return it->second;
  }

  /// c(M) + c(VC_M).
  double cost_for(const std::vector<bool>& mandatory, const std::vector<VertexIndex>& centers) {
    double c = 0.0;
    for (VertexIndex v = 0; v < mandatory.size(); ++v)
      if (mandatory[v]) c += inst_->cost(v);
    for (auto v : cover_outside(mandatory, centers)) c += inst_->cost(v);
    return c;
  }

  Result solve(const Realization& r) {
    std::vector<bool> q = mandatory_mask(*inst_, r);
    const auto centers = open_centers(*inst_, r, q);
    for (auto v : cover_outside(q, centers)) q[v] = true;
    Result res;
    res.query = mask_to_set(q);
    res.cost = inst_->cost_of(res.query);
    if (!is_feasible(*inst_, r, q)) throw std::logic_error("offline optimum is not feasible");
    return res;
  }

  double cost(const Realization& r) { return solve(r).cost; }

 private:
  const Instance* inst_;
  std::unordered_map<std::string, std::vector<VertexIndex>> memo_;
};

inline OptimumOracle::Result offline_opt(const Instance& inst, const Realization& r) {
  OptimumOracle oracle(inst);
  return oracle.solve(r);
}

// ---------------------------------------------------------------------------
// Algorithms as evaluation units

/// Runs one realization; must be safe to call concurrently.
using Runner = std::function<QueryTranscript(const Realization&)>;

struct Algorithm {
  std::string name;
  double d = std::numeric_limits<double>::quiet_NaN();
  double alpha = std::numeric_limits<double>::quiet_NaN();
  /// Realization-independent preparation; the seed feeds probability estimation.
  std::function<Runner(const Instance&, std::uint64_t)> prepare;
};

inline Runner plan_runner(const Instance& inst, Plan plan) {
  return [&inst, plan = std::move(plan)](const Realization& r) { return execute(inst, plan, r); };
}

inline Algorithm threshold_algorithm(ThresholdConfig config, std::string name = "threshold") {
  Algorithm a;
  a.name = std::move(name);
  a.d = config.d;
  a.alpha = config.alpha;
  a.prepare = [config](const Instance& inst, std::uint64_t seed) {
    return plan_runner(inst, threshold_plan(inst, config, seed));
  };
  return a;
}

inline Algorithm best_vc_algorithm(VcStrategy vc, ProbMode prob, double epsilon = 0.05, double delta = 0.01,
                                   std::string name = "bestvc") {
  Algorithm a;
  a.name = std::move(name);
  a.alpha = declared_alpha(vc);
  a.prepare = [=](const Instance& inst, std::uint64_t seed) {
    return plan_runner(inst, best_vc_plan(inst, vc, prob, epsilon, delta, seed));
  };
  return a;
}

inline Algorithm vc_based_algorithm(std::vector<std::string> stage1_ids, std::string name) {
  Algorithm a;
  a.name = std::move(name);
  a.prepare = [ids = std::move(stage1_ids)](const Instance& inst, std::uint64_t) {
    return plan_runner(inst, vc_based_plan(inst, ids));
  };
  return a;
}

inline Algorithm baseline_algorithm() {
  Algorithm a;
  a.name = "baseline";
  a.prepare = [](const Instance& inst, std::uint64_t) { return plan_runner(inst, baseline_plan(inst)); };
  return a;
}

inline Algorithm leaves_first_algorithm() {
  Algorithm a;
  a.name = "leaves-first";
  a.prepare = [](const Instance& inst, std::uint64_t) { return plan_runner(inst, leaves_first_plan(inst)); };
  return a;
}

/// The offline optimum as an algorithm; its ratio is 1 by construction.
inline Algorithm opt_algorithm() {
  Algorithm a;
  a.name = "opt";
  a.prepare = [](const Instance& inst, std::uint64_t) -> Runner {
    return [&inst](const Realization& r) {
      OptimumOracle oracle(inst);
      QueryTranscript t(inst.size());
      for (auto v : oracle.solve(r).query) t.query(inst, r, v, Stage::stage1);
      return t;
    };
  };
  return a;
}

// ---------------------------------------------------------------------------
// Single-run convenience API

struct RunOutcome {
  QueryTranscript transcript;
  double opt_cost = 0.0;
  std::array<double, 3> stage_costs{};  // preprocess, stage1, stage2
};

inline RunOutcome make_outcome(const Instance& inst, const Realization& r, QueryTranscript t) {
  RunOutcome out{std::move(t), offline_opt(inst, r).cost, {}};
  out.stage_costs = {out.transcript.stage_cost(inst, Stage::preprocess),
                     out.transcript.stage_cost(inst, Stage::stage1),
                     out.transcript.stage_cost(inst, Stage::stage2)};
  return out;
}

inline RunOutcome run_threshold_graph(const Instance& inst, const ThresholdConfig& config, const Realization& r) {
  if (!inst.is_graph()) throw ValidationError("run_threshold_graph needs a graph instance");
  return make_outcome(inst, r, execute(inst, threshold_plan(inst, config), r));
}

inline RunOutcome run_threshold_hypergraph(const Instance& inst, ThresholdConfig config, const Realization& r,
                                           Rng& rng) {
  config.prob = ProbMode::sampled;
  return make_outcome(inst, r, execute(inst, threshold_plan(inst, config, rng()), r));
}

inline RunOutcome run_best_vc(const Instance& inst, VcStrategy vc, ProbMode prob, const Realization& r,
                              std::uint64_t seed = 0) {
  return make_outcome(inst, r, execute(inst, best_vc_plan(inst, vc, prob, 0.05, 0.01, seed), r));
}

inline RunOutcome run_adversarial_baseline(const Instance& inst, const Realization& r) {
  return make_outcome(inst, r, execute(inst, baseline_plan(inst), r));
}

}  // namespace orient
