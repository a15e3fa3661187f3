#include <gtest/gtest.h>

#include "helpers.hpp"
#include "orient/check/acceptance.hpp"
#include "orient/check/brute_force.hpp"

using namespace orient;

namespace {

class Randomized : public ::testing::TestWithParam<std::uint64_t> {
 protected:
  Rng rng_ = make_rng(GetParam(), 0);

  Instance next() { return acceptance::detail::tiny_instance(rng_, 7); }
};

std::uint32_t to_bits(const std::vector<bool>& mask) {
  std::uint32_t b = 0;
  for (std::size_t v = 0; v < mask.size(); ++v)
    if (mask[v]) b |= 1U << v;
  return b;
}

}  // namespace

TEST_P(Randomized, MandatorySetMatchesIntersectionOfFeasibleSets) {
  for (int i = 0; i < 40; ++i) {
    const Instance inst = next();
    for (int s = 0; s < 3; ++s) {
      const auto r = sample_realization(inst, rng_);
      EXPECT_EQ(mandatory_mask(inst, r), brute::mandatory(inst, r));
    }
  }
}

TEST_P(Randomized, FeasibilityMatchesDefinition) {
  for (int i = 0; i < 30; ++i) {
    const Instance inst = next();
    const auto r = sample_realization(inst, rng_);
    for (std::uint32_t m = 0; m < (1U << inst.size()); ++m) {
      std::vector<bool> q(inst.size());
      for (VertexIndex v = 0; v < inst.size(); ++v) q[v] = (m >> v) & 1U;
      ASSERT_EQ(is_feasible(inst, r, q), brute::orientable(inst, r, m));
    }
  }
}

TEST_P(Randomized, OfflineOptimumIsCheapestFeasibleSet) {
  for (int i = 0; i < 40; ++i) {
    const Instance inst = next();
    OptimumOracle oracle(inst);
    for (int s = 0; s < 3; ++s) {
      const auto r = sample_realization(inst, rng_);
      const auto res = oracle.solve(r);
      EXPECT_NEAR(res.cost, brute::min_feasible_cost(inst, r), 1e-9);
      std::vector<bool> q(inst.size(), false);
      for (auto v : res.query) q[v] = true;
      EXPECT_TRUE(brute::orientable(inst, r, to_bits(q)));
    }
  }
}

TEST_P(Randomized, OptimumIsSuperadditiveOverParts) {
  for (int i = 0; i < 40; ++i) {
    const Instance inst = next();
    const auto r = sample_realization(inst, rng_);
    const std::uint32_t all = (1U << inst.size()) - 1;
    const std::uint32_t part = static_cast<std::uint32_t>(rng_()) & all;
    EXPECT_LE(brute::min_feasible_cost_within(inst, r, part) + brute::min_feasible_cost_within(inst, r, all ^ part),
              brute::min_feasible_cost(inst, r) + 1e-9);
  }
}

TEST_P(Randomized, EveryAlgorithmIsFeasibleAndNotBelowOptimum) {
  std::vector<Algorithm> algs{baseline_algorithm(), leaves_first_algorithm(),
                              best_vc_algorithm(VcStrategy::exact, ProbMode::sampled, 0.2, 0.2),
                              threshold_algorithm(hypergraph_threshold_config(0.2, 0.2))};
  for (int i = 0; i < 30; ++i) {
    const Instance inst = next();
    for (const auto& alg : algs) {
      const Runner run = alg.prepare(inst, GetParam());
      for (int s = 0; s < 3; ++s) {
        const auto r = sample_realization(inst, rng_);
        const auto t = run(r);
        EXPECT_TRUE(brute::orientable(inst, r, to_bits(t.queried_mask()))) << alg.name;
        EXPECT_GE(t.total_cost() + 1e-9, brute::min_feasible_cost(inst, r)) << alg.name;
      }
    }
  }
}

TEST_P(Randomized, ThresholdStageOneContainsLpOnes) {
  for (int i = 0; i < 30; ++i) {
    RandomSpec spec;
    spec.n = 3 + uniform_index(rng_, 8);
    spec.unit_costs = i % 2 == 0;
    const Instance inst = gen_random(spec, rng_);
    const Plan plan = threshold_plan(inst, graph_threshold_config());
    for (auto v : plan.threshold_set) EXPECT_GE(plan.probs[v], optimal_d(1.0) - 1e-12);
    for (auto v : plan.v1) EXPECT_TRUE(std::binary_search(plan.stage1.begin(), plan.stage1.end(), v));
    for (auto v : plan.cover)
      EXPECT_TRUE(std::binary_search(plan.v_half.begin(), plan.v_half.end(), v));
  }
}

TEST_P(Randomized, LpOnesFormMinimumCoverOfCut) {
  for (int i = 0; i < 30; ++i) {
    RandomSpec spec;
    spec.n = 3 + uniform_index(rng_, 8);
    spec.unit_costs = i % 2 == 0;
    const CoverGraph g = build_cover_graph(gen_random(spec, rng_));
    const auto lp = lp_half_integral(g);
    std::vector<bool> in1(g.size(), false), in0(g.size(), false);
    for (auto v : lp.v1) in1[v] = true;
    for (auto v : lp.v0) in0[v] = true;
    std::vector<std::pair<VertexIndex, VertexIndex>> cut;
    for (auto [a, b] : g.edges())
      if ((in1[a] && in0[b]) || (in0[a] && in1[b])) cut.emplace_back(a, b);
    const CoverGraph h(g.labels(), g.weights(), cut);
    double w1 = 0.0;
    for (auto v : lp.v1) w1 += g.weight(v);
    EXPECT_NEAR(w1, brute::min_cover_weight(h), 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, Randomized, ::testing::Values(1u, 2u, 3u, 20240611u));
