#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "orient/algorithms.hpp"
#include "orient/check/brute_force.hpp"
#include "orient/evaluate.hpp"
#include "orient/exact.hpp"
#include "orient/generalized.hpp"
#include "orient/generators.hpp"

namespace orient::acceptance {

struct Options {
  std::uint64_t seed = 20240611;
  std::size_t threads = 1;
};

struct Result {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::vector<std::string> suites;
  std::function<Result(const Options&)> run;
};

namespace detail {

inline std::string fmt(double x, int digits = 4) {
  std::ostringstream os;
  os.precision(digits);
  os << std::fixed << x;
  return os.str();
}

inline EvaluationReport eval(const Instance& inst, const Algorithm& alg, std::size_t samples, const Options& o,
                             std::uint64_t stream = 0) {
  EvalOptions e;
  e.samples = samples;
  e.seed = derive_seed(o.seed, stream);
  e.threads = o.threads;
  e.bootstrap = 200;
  return evaluate(inst, alg, e);
}

inline double elapsed_s(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

/// Random instance on at most `max_n` vertices; about half are left unreduced.
inline Instance tiny_instance(Rng& rng, std::size_t max_n) {
  const std::size_t n = 2 + uniform_index(rng, max_n - 1);
  const bool hyper = uniform01(rng) < 0.4;
  const bool unit = uniform01(rng) < 0.5;
  if (uniform01(rng) < 0.5) {
    RandomSpec spec;
    spec.family = hyper ? RandomFamily::random_hypergraph : RandomFamily::gnp_graph;
    spec.n = n;
    spec.p = 0.5;
    spec.hyperedges = 1 + uniform_index(rng, 3);
    spec.max_size = 4;
    spec.unit_costs = unit;
    spec.span = 2.0;
    return gen_random(spec, rng);
  }
  std::vector<UncertainVertex> v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(orient::detail::random_vertex(orient::detail::numbered("u", i, n),
                                              orient::detail::random_interval(rng, 2.0), unit, rng));
  std::vector<std::vector<VertexIndex>> edges;
  const std::size_t m = 1 + uniform_index(rng, 4);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t size = hyper ? 2 + uniform_index(rng, std::min<std::size_t>(3, n - 1)) : 2;
    std::vector<VertexIndex> pool(n);
    std::iota(pool.begin(), pool.end(), VertexIndex{0});
    std::vector<VertexIndex> e;
    for (std::size_t j = 0; j < size; ++j) {
      const auto pick = uniform_index(rng, pool.size());
      e.push_back(pool[pick]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    edges.push_back(std::move(e));
  }
  return Instance(std::move(v), std::move(edges));
}

/// Reduced random instance whose cover graph has at least one edge.
inline Instance nontrivial(const RandomSpec& spec, Rng& rng) {
  for (;;) {
    Instance inst = gen_random(spec, rng);
    if (!build_cover_graph(inst).edges().empty()) return inst;
  }
}

}  // namespace detail

// 1
inline Result two_edge_exact_optimum(const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream os;
  bool ok = true;
  for (double eps : {0.1, 0.01}) {
    const Instance inst = fig1(eps);
    const double exact = exact_expected_opt(inst);
    const double expected = 2.0 - (1.0 - eps) * (1.0 - eps) / 2.0;
    const auto rep = detail::eval(inst, best_vc_algorithm(VcStrategy::exact, ProbMode::exact_graph), 100000, o, 1);
    const bool row = std::abs(exact - expected) <= 1e-12 && std::abs(rep.mean_opt - expected) <= 0.01 * expected;
    ok = ok && row;
    os << "eps=" << eps << " exact=" << detail::fmt(exact, 12) << " mc=" << detail::fmt(rep.mean_opt) << "; ";
  }
  const double secs = detail::elapsed_s(start);
  ok = ok && secs < 10.0;
  os << "time=" << detail::fmt(secs, 2) << "s";
  return {ok, os.str()};
}

// 2
inline Result general_lower_bound(const Options& o) {
  const Instance inst = fig1(0.001);
  std::vector<Algorithm> algs{
      threshold_algorithm(graph_threshold_config(VcStrategy::exact), "threshold-a1"),
      threshold_algorithm(graph_threshold_config(VcStrategy::local_ratio), "threshold-a2"),
      best_vc_algorithm(VcStrategy::exact, ProbMode::exact_graph, 0.05, 0.01, "bestvc"),
      best_vc_algorithm(VcStrategy::local_ratio, ProbMode::exact_graph, 0.05, 0.01, "bestvc-lr"),
      vc_based_algorithm({"x"}, "vc-x"),
      vc_based_algorithm({"y", "z"}, "vc-yz"),
  };
  bool ok = true;
  std::ostringstream os;
  for (const auto& a : algs) {
    const auto rep = detail::eval(inst, a, 100000, o, 2);
    ok = ok && rep.ratio >= 4.0 / 3.0 - 0.02;
    os << a.name << "=" << detail::fmt(rep.ratio) << " ";
  }
  return {ok, os.str()};
}

// 3
inline Result threshold_upper_bound(const Options& o) {
  Rng rng = make_rng(o.seed, 3);
  const std::size_t instances = 50;
  double worst1 = 0.0, worst2 = 0.0;
  ThresholdConfig c2 = graph_threshold_config(VcStrategy::local_ratio);
  c2.d = 0.5;
  const auto a1 = threshold_algorithm(graph_threshold_config(VcStrategy::exact), "threshold-a1");
  const auto a2 = threshold_algorithm(c2, "threshold-a2");
  for (std::size_t i = 0; i < instances; ++i) {
    RandomSpec spec;
    spec.family = RandomFamily::gnp_graph;
    spec.n = 4 + uniform_index(rng, 13);
    spec.p = 0.2 + 0.3 * uniform01(rng);
    const Instance inst = detail::nontrivial(spec, rng);
    worst1 = std::max(worst1, detail::eval(inst, a1, 10000, o, 100 + i).ratio);
    worst2 = std::max(worst2, detail::eval(inst, a2, 10000, o, 100 + i).ratio);
  }
  const bool ok = worst1 <= optimal_ratio(1.0) + 0.03 && worst2 <= 2.0 + 0.03;
  return {ok, std::to_string(instances) + " instances, worst alpha=1 " + detail::fmt(worst1) + " (bound " +
                  detail::fmt(optimal_ratio(1.0) + 0.03) + "), worst alpha=2 " + detail::fmt(worst2) + " (bound 2.03)"};
}

// 4
inline Result tightness(const Options& o) {
  const double d = 0.618;
  const std::size_t n = 50;
  ThresholdConfig c = graph_threshold_config(VcStrategy::exact);
  c.d = d;
  const auto alg = threshold_algorithm(c);
  const double star = detail::eval(tightness_star(d, n), alg, 10000, o, 4).ratio;
  const double star_bound = static_cast<double>(n + 1) / (1.0 + static_cast<double>(n) * d) - 0.05;
  const double edge = detail::eval(tightness_edge(d, 0.01), alg, 100000, o, 5).ratio;
  const double edge_bound = 1.0 + d - 0.03;
  return {star >= star_bound && edge >= edge_bound, "star " + detail::fmt(star) + " >= " + detail::fmt(star_bound) +
                                                        ", edge " + detail::fmt(edge) + " >= " +
                                                        detail::fmt(edge_bound)};
}

// 5
inline Result bestvc_bipartite(const Options& o) {
  Rng rng = make_rng(o.seed, 6);
  const std::size_t instances = 50;
  const auto alg = best_vc_algorithm(VcStrategy::exact, ProbMode::exact_graph);
  double worst = 0.0;
  for (std::size_t i = 0; i < instances; ++i) {
    RandomSpec spec;
    spec.family = RandomFamily::bipartite;
    spec.n = 4 + uniform_index(rng, 11);
    spec.p = 0.3 + 0.3 * uniform01(rng);
    spec.unit_costs = i % 2 == 0;
    const Instance inst = detail::nontrivial(spec, rng);
    if (!two_coloring(build_cover_graph(inst))) return {false, "generated instance is not bipartite"};
    worst = std::max(worst, detail::eval(inst, alg, 10000, o, 200 + i).ratio);
  }
  return {worst <= 4.0 / 3.0 + 0.02,
          std::to_string(instances) + " instances, worst " + detail::fmt(worst) + " (bound 1.3533)"};
}

// 6
inline Result single_edge_two_intervals(const Options& o) {
  const double p = std::sqrt(2.0) - 1.0;
  const Instance inst = two_interval(p, p);
  const auto alg = best_vc_algorithm(VcStrategy::exact, ProbMode::exact_graph);
  const double opt = exact_expected_opt(inst);
  const double exact_ratio = exact_expected_cost(inst, alg) / opt;
  const double mc = detail::eval(inst, alg, 100000, o, 7).ratio;
  const double target = (1.0 + std::sqrt(2.0)) / 2.0;
  const bool ok = std::abs(opt - (1.0 + p * p)) <= 1e-12 && std::abs(exact_ratio - target) <= 0.01 &&
                  std::abs(mc - target) <= 0.01;
  return {ok, "E[OPT]=" + detail::fmt(opt, 12) + " exact ratio " + detail::fmt(exact_ratio) + " mc ratio " +
                  detail::fmt(mc) + " target " + detail::fmt(target)};
}

// 7
inline Result single_hyperedge_lower_bound(const Options& o) {
  const std::size_t n = 3;
  const Instance inst = single_hyperedge_lb(n, 0.001);
  const double opt = exact_expected_opt(inst);
  const double target = static_cast<double>(n * n) / static_cast<double>(n * n - n + 1);
  bool ok = std::abs(opt - static_cast<double>(n * n - n + 1) / static_cast<double>(n)) <= 0.01;
  std::ostringstream os;
  os << "E[OPT]=" << detail::fmt(opt) << "; ";
  for (const auto& a : {baseline_algorithm(), leaves_first_algorithm()}) {
    const double exact = exact_expected_cost(inst, a) / opt;
    const double mc = detail::eval(inst, a, 100000, o, 8).ratio;
    ok = ok && exact >= target - 0.02 && mc >= target - 0.02;
    os << a.name << " exact " << detail::fmt(exact) << " mc " << detail::fmt(mc) << "; ";
  }
  os << "bound " << detail::fmt(target - 0.02);
  return {ok, os.str()};
}

// 8
/// Expected cost of the best strict two-stage policy on two_stage_lb(n):
/// stage one queries the k leftmost vertices, stage two everything else
/// unless a queried weight already settled the minimum.
inline std::pair<std::size_t, double> best_two_stage(std::size_t n) {
  std::size_t best_k = 0;
  double best = static_cast<double>(n);
  for (std::size_t k = 0; k <= n; ++k) {
    const double c = static_cast<double>(k) + std::ldexp(static_cast<double>(n - k), -static_cast<int>(k));
    if (c < best) {
      best = c;
      best_k = k;
    }
  }
  return {best_k, best};
}

/// E[OPT] on two_stage_lb(n): 1 when v1 lands low; otherwise j when v_j is
/// the first low vertex among v2..vn, and n-1 when all of them land high.
inline double two_stage_expected_opt(std::size_t n) {
  double high = 0.0;
  for (std::size_t j = 2; j <= n; ++j) high += static_cast<double>(j) * std::ldexp(1.0, -static_cast<int>(j - 1));
  high += static_cast<double>(n - 1) * std::ldexp(1.0, -static_cast<int>(n - 1));
  return 0.5 + 0.5 * high;
}

inline Result two_stage_log_n(const Options& o) {
  std::ostringstream os;
  bool ok = true;
  double previous = 0.0;
  for (std::size_t n : {64, 256, 1024}) {
    const Instance inst = two_stage_lb(n);
    const auto [k, formula] = best_two_stage(n);
    const double opt = two_stage_expected_opt(n);
    OptimumOracle oracle(inst);
    std::vector<bool> prefix(n, false);
    for (std::size_t i = 0; i < k; ++i) prefix[inst.at(orient::detail::numbered("v", i + 1, n))] = true;
    const std::size_t samples = 4000;
    std::vector<double> opts, sims;
    for (std::size_t i = 0; i < samples; ++i) {
      Rng rng = make_rng(derive_seed(o.seed, 9), i);
      const Realization r = sample_realization(inst, rng);
      opts.push_back(oracle.cost(r));
      sims.push_back(is_feasible(inst, r, prefix) ? static_cast<double>(k) : static_cast<double>(n));
    }
    const double mc_opt = orient::detail::mean(opts), sim = orient::detail::mean(sims);
    const double ratio = formula / opt;
    ok = ok && opt <= 2.0 && ratio > std::log2(static_cast<double>(n)) / 8.0 && ratio > previous &&
         std::abs(mc_opt - opt) <= 4.0 * orient::detail::standard_error(opts) &&
         std::abs(sim - formula) <= 4.0 * orient::detail::standard_error(sims) + 1e-12;
    previous = ratio;
    os << "n=" << n << " k=" << k << " cost=" << detail::fmt(formula) << " sim=" << detail::fmt(sim)
       << " E[OPT]=" << detail::fmt(opt) << " mc=" << detail::fmt(mc_opt) << " ratio=" << detail::fmt(ratio) << "; ";
  }
  return {ok, os.str()};
}

// 9
inline Result vc_based_barrier(const Options& o) {
  const Instance inst = vc_lb_single_hyperedge(100, 0.01);
  std::ostringstream os;
  bool ok = true;
  for (const auto& a : {vc_based_algorithm({"x"}, "cover-x"), vc_based_algorithm({"y", "z"}, "cover-yz")}) {
    const double exact = exact_expected_cost(inst, a) / exact_expected_opt(inst);
    const double mc = detail::eval(inst, a, 100000, o, 10).ratio;
    ok = ok && exact >= 1.45 && mc >= 1.45;
    os << a.name << " exact " << detail::fmt(exact) << " mc " << detail::fmt(mc) << "; ";
  }
  return {ok, os.str()};
}

// 10
inline Result oracle_suite(const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng = make_rng(o.seed, 11);
  std::size_t failures = 0, checks = 0;
  std::string first;
  auto check = [&](bool cond, const std::string& what) {
    ++checks;
    if (!cond) {
      if (failures++ == 0) first = what;
    }
  };
  const auto threshold = graph_threshold_config(VcStrategy::exact);
  for (std::size_t i = 0; i < 1000; ++i) {
    const Instance inst = detail::tiny_instance(rng, 6);
    const std::string tag = "instance " + std::to_string(i) + ": ";
    const bool reduced = is_reduced(inst);
    for (int rep = 0; rep < 4; ++rep) {
      const Realization r = sample_realization(inst, rng);
      check(mandatory_mask(inst, r) == brute::mandatory(inst, r), tag + "mandatory set");
      const auto opt = offline_opt(inst, r);
      check(std::abs(opt.cost - brute::min_feasible_cost(inst, r)) <= 1e-9, tag + "offline optimum");
      std::uint32_t q = 0;
      for (auto v : opt.query) q |= 1U << v;
      check(brute::orientable(inst, r, q), tag + "optimum feasible");

      std::vector<std::uint32_t> parts(1 + uniform_index(rng, 3), 0);
      for (VertexIndex v = 0; v < inst.size(); ++v) parts[uniform_index(rng, parts.size())] |= 1U << v;
      double sum = 0.0;
      for (auto s : parts) sum += brute::min_feasible_cost_within(inst, r, s);
      check(opt.cost >= sum - 1e-9, tag + "superadditivity");

      std::vector<QueryTranscript> runs{execute(inst, baseline_plan(inst), r), execute(inst, leaves_first_plan(inst), r),
                                        execute(inst, best_vc_plan(inst, VcStrategy::exact, ProbMode::sampled), r)};
      if (reduce(inst).instance.is_graph())
        runs.push_back(execute(inst, threshold_plan(inst, threshold), r));
      for (const auto& t : runs) {
        std::uint32_t m = 0;
        for (auto v : t.queried_set()) m |= 1U << v;
        check(brute::orientable(inst, r, m) && is_feasible(inst, r, t.queried_mask()), tag + "transcript feasible");
        check(t.total_cost() >= opt.cost - 1e-9, tag + "optimum below algorithm");
      }
    }

    const CoverGraph g = build_cover_graph(reduced ? inst : reduce(inst).instance);
    const double best = brute::min_cover_weight(g);
    const double tol = 1e-9 * std::max(1.0, best);
    check(std::abs(vc_exact_small(g).weight - best) <= tol, tag + "vc_exact_small");
    check(std::abs(vc_exact(g).weight - best) <= tol, tag + "vc_exact");
    check(is_cover(g, vc_exact(g).members), tag + "vc_exact is a cover");
    check(std::abs(vc_few_hyperedges(g).weight - best) <= tol, tag + "vc_few_hyperedges");
    if (auto sides = two_coloring(g)) check(std::abs(vc_bipartite_exact(g, *sides).weight - best) <= tol, tag + "bipartite");
    const Cover lr = vc_local_ratio_2approx(g);
    check(is_cover(g, lr.members) && lr.weight <= 2.0 * best + tol, tag + "local ratio");

    const auto lp = lp_half_integral(g);
    check(lp.objective <= best + tol && 2.0 * lp.objective >= best - tol, tag + "lp sandwich");
    check(std::abs(lp.objective - brute::lp_value(g)) <= tol, tag + "lp optimal");
    std::vector<bool> side(g.size(), false);
    for (auto v : lp.v1) side[v] = true;
    std::vector<bool> keep(g.size(), false);
    for (auto v : lp.v1) keep[v] = true;
    for (auto v : lp.v0) keep[v] = true;
    std::vector<std::pair<VertexIndex, VertexIndex>> cross;
    for (auto [a, b] : g.edges())
      if (keep[a] && keep[b] && side[a] != side[b]) cross.emplace_back(a, b);
    const CoverGraph bip(g.labels(), g.weights(), cross);
    double v1w = 0.0;
    for (auto v : lp.v1) v1w += g.weight(v);
    check(std::abs(brute::min_cover_weight(bip) - v1w) <= tol, tag + "V1 is a minimum cover of the V1/V0 cut");
  }

  for (std::size_t i = 0; i < 100; ++i) {
    const auto li = gen_interval_layers(1 + uniform_index(rng, 4), 4 + uniform_index(rng, 7), rng);
    const CoverGraph g = build_cover_graph(li.instance);
    const double best = vc_exact_small(g).weight;
    check(std::abs(vc_interval_union_dp(g, li.layers).weight - best) <= 1e-9 * std::max(1.0, best),
          "layered " + std::to_string(i) + ": interval union dp");
  }
  const double secs = detail::elapsed_s(start);
  return {failures == 0 && secs < 120.0, std::to_string(checks) + " checks, " + std::to_string(failures) +
                                             " failures" + (failures ? " (first: " + first + ")" : "") +
                                             ", time " + detail::fmt(secs, 1) + "s"};
}

// 11
inline Result sampling(const Options& o) {
  const Instance inst = fig1(0.01);
  const auto y = inst.at("y");
  std::size_t inside = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng = make_rng(derive_seed(o.seed, 12), i);
    const double p = estimate_prob(inst, y, 0.05, 0.01, rng);
    if (p >= 0.45 && p <= 0.55) ++inside;
  }
  const std::size_t k = hoeffding_sample_count(0.05, 0.01);
  return {inside >= 97 && k == 1060, std::to_string(inside) + "/100 inside [0.45, 0.55], k=" + std::to_string(k)};
}

// 12
inline Result vertex_split_invariance(const Options& o) {
  Rng rng = make_rng(o.seed, 13);
  double worst = 0.0;
  bool superadditive = true;
  for (std::size_t i = 0; i < 100; ++i) {
    const std::size_t n = 3 + uniform_index(rng, 4);
    const GeneralizedInstance gi = random_generalized(n, rng);
    const std::size_t parts = 2 + uniform_index(rng, 2);
    const VertexIndex v = uniform_index(rng, n);
    std::vector<double> f(parts);
    double total = 0.0;
    for (auto& x : f) total += (x = 0.2 + uniform01(rng));
    for (auto& x : f) x /= total;
    const GeneralizedInstance split = vertex_split(gi, v, f);
    const double before = expected_opt(gi);
    const double after = expected_opt(split);
    worst = std::max(worst, std::abs(before - after));

    std::vector<bool> a(split.graph.size()), b(split.graph.size());
    for (VertexIndex u = 0; u < a.size(); ++u) (uniform01(rng) < 0.5 ? a : b)[u] = true;
    if (after < expected_opt_part(split, a) + expected_opt_part(split, b) - 1e-12) superadditive = false;
  }
  return {worst <= 1e-12 && superadditive,
          "max |E[OPT'] - E[OPT]| = " + detail::fmt(worst, 15) + (superadditive ? "" : ", superadditivity violated")};
}

// 13
inline Result hypergraph_threshold(const Options& o) {
  Rng rng = make_rng(o.seed, 14);
  const double eps = 0.05, delta = 0.1;
  const auto config = hypergraph_threshold_config(eps, delta, VcStrategy::few_hyperedges);
  const auto alg = threshold_algorithm(config, "threshold-hyper");
  const double bound = hypergraph_ratio(1.0, eps) + 0.05;
  const std::size_t instances = 40;
  std::size_t within = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < instances; ++i) {
    RandomSpec spec;
    spec.family = RandomFamily::random_hypergraph;
    spec.n = 5 + uniform_index(rng, 8);
    spec.hyperedges = 1 + uniform_index(rng, 5);
    spec.max_size = 5;
    const Instance inst = detail::nontrivial(spec, rng);
    const double ratio = detail::eval(inst, alg, 10000, o, 300 + i).ratio;
    worst = std::max(worst, ratio);
    if (ratio <= bound) ++within;
  }
  return {within * 10 >= instances * 9, std::to_string(within) + "/" + std::to_string(instances) +
                                            " within R+0.05=" + detail::fmt(bound) + ", worst " + detail::fmt(worst)};
}

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "two-edge-exact-optimum", {"lower-bounds"}, two_edge_exact_optimum},
      {2, "general-lower-bound", {"lower-bounds"}, general_lower_bound},
      {3, "threshold-upper-bound", {"thm4"}, threshold_upper_bound},
      {4, "threshold-tightness", {"tightness", "thm4"}, tightness},
      {5, "bestvc-bipartite", {"bestvc"}, bestvc_bipartite},
      {6, "single-edge-two-intervals", {"bestvc", "lower-bounds"}, single_edge_two_intervals},
      {7, "single-hyperedge-lower-bound", {"lower-bounds"}, single_hyperedge_lower_bound},
      {8, "two-stage-log-n", {"lower-bounds"}, two_stage_log_n},
      {9, "vc-based-barrier", {"lower-bounds"}, vc_based_barrier},
      {10, "oracle-suite", {"oracles"}, oracle_suite},
      {11, "sampling", {"sampling"}, sampling},
      {12, "vertex-split", {"split"}, vertex_split_invariance},
      {13, "hypergraph-threshold", {"hypergraph"}, hypergraph_threshold},
  };
  return all;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all",     "oracles",  "thm4",  "lower-bounds", "tightness",
                                              "bestvc",  "sampling", "split", "hypergraph"};
  return names;
}

inline bool in_suite(const Criterion& c, const std::string& suite) {
  if (suite == "all") return true;
  for (const auto& s : c.suites)
    if (s == suite) return true;
  return false;
}

/// Runs the criteria of a suite, printing one line per criterion; returns
/// whether all passed. Exceptions count as failures.
inline bool run_suite(const std::string& suite, const Options& o, std::ostream& out) {
  bool all = true;
  for (const auto& c : criteria()) {
    if (!in_suite(c, suite)) continue;
    Result r;
    const auto start = std::chrono::steady_clock::now();
    try {
      r = c.run(o);
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    all = all && r.pass;
    out << (r.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << " [" << detail::fmt(detail::elapsed_s(start), 1)
        << "s] " << r.detail << std::endl;
  }
  return all;
}

}  // namespace orient::acceptance
