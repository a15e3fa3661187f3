#include <gtest/gtest.h>

#include <cmath>

#include "helpers.hpp"
#include "orient/check/brute_force.hpp"

using namespace orient;
using namespace testing_helpers;

namespace {

/// R solving R = alpha + (2 - alpha)(1/R + 2 eps), by bisection.
double ratio_by_bisection(double alpha, double eps) {
  double lo = 1.0, hi = 10.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid < alpha + (2.0 - alpha) * (1.0 / mid + 2.0 * eps))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

std::vector<std::string> ids(const Instance& inst, const std::vector<VertexIndex>& set) {
  std::vector<std::string> out;
  for (auto v : set) out.push_back(inst.vertex(v).id);
  return out;
}

Instance random_graph_instance(Rng& rng, std::size_t n, bool unit) {
  RandomSpec spec;
  spec.n = n;
  spec.p = 0.4;
  spec.unit_costs = unit;
  return gen_random(spec, rng);
}

}  // namespace

TEST(Thresholds, ClosedForms) {
  EXPECT_NEAR(optimal_d(1.0), 0.6180339887, 1e-9);
  EXPECT_NEAR(optimal_ratio(1.0), (1.0 + std::sqrt(5.0)) / 2.0, 1e-12);
  EXPECT_NEAR(optimal_d(2.0), 0.5, 1e-12);
  EXPECT_NEAR(optimal_ratio(2.0), 2.0, 1e-12);
  for (double a : {1.0, 1.25, 1.5, 2.0}) {
    EXPECT_NEAR(threshold_ratio(a, optimal_d(a)), optimal_ratio(a), 1e-12);
    EXPECT_NEAR(1.0 / optimal_d(a), a + (2.0 - a) * optimal_d(a), 1e-12);
  }
  EXPECT_THROW(optimal_d(0.5), ValidationError);
  EXPECT_THROW(threshold_ratio(1.0, 0.0), ValidationError);
}

TEST(Thresholds, RatioIsMinimizedAtOptimalD) {
  for (double a : {1.0, 1.5, 2.0}) {
    const double best = optimal_ratio(a);
    for (double d = 0.05; d <= 1.0; d += 0.01) EXPECT_GE(threshold_ratio(a, d), best - 1e-12);
  }
}

TEST(Thresholds, HypergraphRatioSolvesFixedPoint) {
  for (double a : {1.0, 1.5, 2.0})
    for (double eps : {0.001, 0.01, 0.05, 0.2}) {
      EXPECT_NEAR(hypergraph_ratio(a, eps), ratio_by_bisection(a, eps), 1e-9);
      EXPECT_NEAR(hypergraph_d(a, eps), 1.0 / hypergraph_ratio(a, eps) + eps, 1e-15);
    }
  EXPECT_NEAR(hypergraph_ratio(1.0, 1e-9), optimal_ratio(1.0), 1e-6);
}

TEST(Thresholds, PerVertexDelta) {
  EXPECT_NEAR(1.0 - std::pow(1.0 - per_vertex_delta(0.05, 20), 20.0), 0.05, 1e-12);
  EXPECT_THROW(per_vertex_delta(0.0, 3), ValidationError);
}

TEST(ThresholdPlan, TwoEdgeExample) {
  const Instance inst = fig1(0.1);
  const Plan plan = threshold_plan(inst, graph_threshold_config());
  EXPECT_TRUE(plan.threshold_set.empty());
  EXPECT_EQ(ids(inst, plan.v1), std::vector<std::string>{"x"});
  EXPECT_TRUE(plan.v_half.empty());
  EXPECT_EQ(ids(inst, plan.stage1), std::vector<std::string>{"x"});
  EXPECT_NEAR(plan.probs[inst.at("x")], 0.19, 1e-12);
  EXPECT_NEAR(plan.probs[inst.at("y")], 0.5, 1e-12);
}

TEST(ThresholdPlan, ZeroThresholdQueriesEverything) {
  ThresholdConfig c = graph_threshold_config();
  c.d = 0.0;
  const Instance inst = fig1(0.1);
  EXPECT_EQ(threshold_plan(inst, c).stage1.size(), 3u);
}

TEST(ThresholdPlan, TightEdgePicksLeftVertex) {
  const Instance inst = tightness_edge(0.618, 0.01);
  const Plan plan = threshold_plan(inst, graph_threshold_config());
  EXPECT_TRUE(plan.threshold_set.empty());
  EXPECT_EQ(ids(inst, plan.stage1), std::vector<std::string>{"a"});
}

TEST(ThresholdPlan, StageOneIsACover) {
  Rng rng = make_rng(31, 0);
  for (int i = 0; i < 100; ++i) {
    const Instance inst = random_graph_instance(rng, 3 + uniform_index(rng, 8), i % 2 == 0);
    for (auto vc : {VcStrategy::exact, VcStrategy::local_ratio}) {
      const Plan plan = threshold_plan(inst, graph_threshold_config(vc));
      EXPECT_TRUE(is_cover(build_cover_graph(inst), plan.stage1));
    }
  }
}

TEST(ThresholdPlan, RejectsExactProbabilitiesOnHypergraphs) {
  EXPECT_THROW(threshold_plan(vc_lb_single_hyperedge(), graph_threshold_config()), ValidationError);
  EXPECT_THROW(best_vc_plan(vc_lb_single_hyperedge(), VcStrategy::exact, ProbMode::exact_graph),
               ValidationError);
  EXPECT_NO_THROW(threshold_plan(vc_lb_single_hyperedge(), hypergraph_threshold_config(0.1, 0.1), 3));
}

TEST(ThresholdPlan, SampledPlanIsDeterministicPerSeed) {
  const Instance inst = vc_lb_single_hyperedge();
  const auto c = hypergraph_threshold_config(0.1, 0.1);
  const Plan a = threshold_plan(inst, c, 5), b = threshold_plan(inst, c, 5);
  EXPECT_EQ(a.stage1, b.stage1);
  EXPECT_EQ(a.probs, b.probs);
}

TEST(BestVc, MinimizesExpectedNonMandatoryCost) {
  const Instance inst = fig1(0.1);
  const Plan plan = best_vc_plan(inst, VcStrategy::exact, ProbMode::exact_graph);
  // weights (1 - p) c: x 0.81, y 0.5, z 0.5
  EXPECT_EQ(ids(inst, plan.stage1), std::vector<std::string>{"x"});
}

TEST(VcBased, UsesGivenStageOne) {
  const Instance inst = fig1(0.1);
  EXPECT_EQ(ids(inst, vc_based_plan(inst, {"z", "y"}).stage1), (std::vector<std::string>{"y", "z"}));
  EXPECT_THROW(vc_based_plan(inst, {"nope"}), std::out_of_range);
}

TEST(Baseline, StopsAfterLowCenter) {
  const Instance inst = fig1(0.1);
  const auto out = run_adversarial_baseline(inst, weights({0.5, 2.5, 2.5}));
  EXPECT_DOUBLE_EQ(out.transcript.total_cost(), 1.0);
  EXPECT_DOUBLE_EQ(out.opt_cost, 1.0);
}

TEST(Baseline, QueriesEverythingWhenCenterIsInside) {
  const Instance inst = fig1(0.1);
  const auto out = run_adversarial_baseline(inst, weights({1.5, 2.5, 2.5}));
  EXPECT_DOUBLE_EQ(out.transcript.total_cost(), 3.0);
  EXPECT_DOUBLE_EQ(out.opt_cost, 2.0);
}

TEST(LeavesFirst, DefersCenter) {
  const Instance inst = fig1(0.1);
  const Plan plan = leaves_first_plan(inst);
  const auto t = execute(inst, plan, weights({1.5, 2.5, 2.5}));
  EXPECT_DOUBLE_EQ(t.total_cost(), 2.0);
  EXPECT_FALSE(t.queried(inst.at("x")));
}

TEST(OfflineOpt, Examples) {
  const Instance inst = fig1(0.1);
  auto opt = offline_opt(inst, weights({1.5, 2.5, 2.5}));
  EXPECT_EQ(ids(inst, opt.query), (std::vector<std::string>{"y", "z"}));
  EXPECT_DOUBLE_EQ(opt.cost, 2.0);
  opt = offline_opt(inst, weights({0.5, 1.5, 2.5}));
  EXPECT_EQ(ids(inst, opt.query), std::vector<std::string>{"x"});
  opt = offline_opt(inst, weights({1.5, 1.2, 2.5}));
  EXPECT_DOUBLE_EQ(opt.cost, 3.0);
}

TEST(OfflineOpt, ContainedMinimumNeedsOnlyItself) {
  const auto inst = Instance::from_ids({flat("a", 0, 2.5), flat("b", 1.5, 2.5), flat("c", 2, 4)}, {{"a", "b", "c"}});
  const auto r = weights({0.5, 2.0, 3.0});
  EXPECT_DOUBLE_EQ(offline_opt(inst, r).cost, brute::min_feasible_cost(inst, r));
}

TEST(StageTwo, QueriesOnlyMandatoryVertices) {
  Rng rng = make_rng(32, 0);
  for (int i = 0; i < 150; ++i) {
    const Instance inst = random_graph_instance(rng, 3 + uniform_index(rng, 4), i % 2 == 0);
    const std::vector<Plan> plans{threshold_plan(inst, graph_threshold_config()),
                                  threshold_plan(inst, graph_threshold_config(VcStrategy::local_ratio)),
                                  best_vc_plan(inst, VcStrategy::exact, ProbMode::exact_graph)};
    for (int s = 0; s < 4; ++s) {
      const auto r = sample_realization(inst, rng);
      const auto m = brute::mandatory(inst, r);
      for (const auto& plan : plans) {
        const auto t = execute(inst, plan, r);
        EXPECT_TRUE(is_feasible(inst, r, t.queried_mask()));
        for (const auto& st : t.steps())
          if (st.stage == Stage::stage2) {
            EXPECT_TRUE(m[st.vertex]);
          }
      }
    }
  }
}

TEST(RunApi, StageCostsAddUp) {
  const Instance inst = fig1(0.1);
  const auto out = run_threshold_graph(inst, graph_threshold_config(), weights({1.5, 2.5, 2.5}));
  EXPECT_DOUBLE_EQ(out.stage_costs[1], 1.0);
  EXPECT_DOUBLE_EQ(out.stage_costs[2], 2.0);
  EXPECT_DOUBLE_EQ(out.stage_costs[0] + out.stage_costs[1] + out.stage_costs[2], out.transcript.total_cost());
  EXPECT_THROW(run_threshold_graph(vc_lb_single_hyperedge(), graph_threshold_config(), weights({1, 1, 1})),
               ValidationError);
}

TEST(RunApi, HypergraphVariant) {
  const Instance inst = single_hyperedge_lb(3, 0.1);
  Rng rng = make_rng(33, 0);
  const auto r = sample_realization(inst, rng);
  const auto out = run_threshold_hypergraph(inst, hypergraph_threshold_config(0.1, 0.1), r, rng);
  EXPECT_TRUE(is_feasible(inst, r, out.transcript.queried_mask()));
  EXPECT_GE(out.transcript.total_cost(), out.opt_cost);
}
