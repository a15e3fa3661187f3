#include <gtest/gtest.h>

#include <cmath>

#include "helpers.hpp"
#include "orient/check/acceptance.hpp"
#include "orient/check/brute_force.hpp"

using namespace orient;
using namespace testing_helpers;

namespace {

std::vector<std::string> ids(const Instance& inst, const std::vector<VertexIndex>& set) {
  std::vector<std::string> out;
  for (auto v : set) out.push_back(inst.vertex(v).id);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Mandatory, TwoEdgeExampleWithLowCenter) {
  const Instance inst = fig1(0.1);
  EXPECT_TRUE(mandatory_set(inst, weights({0.5, 2.5, 2.5})).empty());
}

TEST(Mandatory, TwoEdgeExampleWithCenterInsideLeaves) {
  const Instance inst = fig1(0.1);
  EXPECT_EQ(ids(inst, mandatory_set(inst, weights({1.5, 2.5, 2.5}))), (std::vector<std::string>{"y", "z"}));
}

TEST(Mandatory, MinimumContainingAnotherWeight) {
  const Instance inst = fig1(0.1);
  // y lands in (1,2) below x: x contains it and y contains x's weight.
  EXPECT_EQ(ids(inst, mandatory_set(inst, weights({1.8, 1.2, 2.5}))), (std::vector<std::string>{"x", "y", "z"}));
}

TEST(Mandatory, CellVersionAgreesWithWeights) {
  Rng rng = make_rng(4, 0);
  for (int i = 0; i < 300; ++i) {
    RandomSpec spec;
    spec.family = i % 2 ? RandomFamily::gnp_graph : RandomFamily::random_hypergraph;
    spec.n = 2 + uniform_index(rng, 6);
    const Instance inst = gen_random(spec, rng);
    const ProbabilityMatrix pm(inst);
    for (int k = 0; k < 5; ++k) {
      const auto r = sample_realization(inst, rng);
      std::vector<std::size_t> cells;
      for (auto w : r.weights) cells.push_back(pm.cell_of(w));
      EXPECT_EQ(mandatory_mask_cells(inst, pm, cells), mandatory_mask(inst, r));
    }
  }
}

TEST(Feasibility, ExamplesOnTwoEdgeInstance) {
  const Instance inst = fig1(0.1);
  const auto x = inst.at("x"), y = inst.at("y"), z = inst.at("z");
  const auto low = weights({0.5, 2.5, 2.5});
  EXPECT_TRUE(is_feasible(inst, low, std::vector<VertexIndex>{x}));
  EXPECT_TRUE(is_feasible(inst, low, std::vector<VertexIndex>{y, z}));
  EXPECT_FALSE(is_feasible(inst, low, std::vector<VertexIndex>{y}));
  const auto mid = weights({1.5, 2.5, 2.5});
  EXPECT_TRUE(is_feasible(inst, mid, std::vector<VertexIndex>{y, z}));
  EXPECT_FALSE(is_feasible(inst, mid, std::vector<VertexIndex>{x}));
  EXPECT_FALSE(is_feasible(inst, mid, std::vector<VertexIndex>{x, y}));
}

TEST(Feasibility, AgreesWithDefinitionOnTinyInstances) {
  Rng rng = make_rng(5, 0);
  for (int i = 0; i < 200; ++i) {
    const Instance inst = orient::acceptance::detail::tiny_instance(rng, 5);
    const auto r = sample_realization(inst, rng);
    for (std::uint32_t m = 0; m < (1U << inst.size()); ++m) {
      std::vector<bool> q(inst.size());
      for (VertexIndex v = 0; v < inst.size(); ++v) q[v] = (m >> v) & 1U;
      ASSERT_EQ(is_feasible(inst, r, q), brute::orientable(inst, r, m)) << "instance " << i << " mask " << m;
    }
  }
}

TEST(OrientationState, NothingRevealed) {
  const Instance inst = fig1(0.1);
  const auto st = orientation_state(inst, Revealed(3));
  ASSERT_EQ(st.size(), 2u);
  for (const auto& s : st) {
    EXPECT_FALSE(s.solved);
    EXPECT_EQ(s.vertex, inst.at("x"));
  }
}

TEST(OrientationState, LowCenterSolvesBoth) {
  const Instance inst = fig1(0.1);
  Revealed rev(3);
  rev[inst.at("x")] = 0.5;
  for (const auto& s : orientation_state(inst, rev)) {
    EXPECT_TRUE(s.solved);
    EXPECT_EQ(s.vertex, inst.at("x"));
  }
}

TEST(OrientationState, CenterInsideLeafAsksForLeaf) {
  const Instance inst = fig1(0.1);
  Revealed rev(3);
  rev[inst.at("x")] = 1.5;
  const auto st = orientation_state(inst, rev);
  EXPECT_FALSE(st[0].solved);
  EXPECT_EQ(st[0].vertex, inst.hyperedges()[0][1]);
  rev[inst.at("y")] = 2.5;
  rev[inst.at("z")] = 1.2;
  const auto after = orientation_state(inst, rev);
  EXPECT_TRUE(after[0].solved && after[1].solved);
  for (std::size_t e = 0; e < 2; ++e) {
    const auto& members = inst.hyperedges()[e];
    const bool has_z = std::find(members.begin(), members.end(), inst.at("z")) != members.end();
    EXPECT_EQ(after[e].vertex, has_z ? inst.at("z") : inst.at("x"));
  }
}

TEST(OrientationState, SolvedWithoutQueryWhenIntervalsSeparate) {
  const Instance inst = Instance::from_ids({flat("a", 0, 1), flat("b", 1, 2)}, {{"a", "b"}});
  const auto st = orientation_state(inst, Revealed(2));
  EXPECT_TRUE(st[0].solved);
  EXPECT_EQ(st[0].vertex, inst.at("a"));
}

TEST(OrientationState, RejectsInconsistentInput) {
  const Instance inst = fig1(0.1);
  EXPECT_THROW(orientation_state(inst, Revealed(2)), ValidationError);
  Revealed rev(3);
  rev[0] = 5.0;
  EXPECT_THROW(orientation_state(inst, rev), ValidationError);
}

TEST(Probabilities, HoeffdingCount) {
  EXPECT_EQ(hoeffding_sample_count(0.05, 0.01), 1060u);
  EXPECT_EQ(hoeffding_sample_count(0.1, 0.05),
            static_cast<std::size_t>(std::ceil(std::log(40.0) / 0.02)));
  EXPECT_THROW(hoeffding_sample_count(0.0, 0.1), std::invalid_argument);
  EXPECT_THROW(hoeffding_sample_count(0.1, 1.0), std::invalid_argument);
}

TEST(Probabilities, ExactGraphOnTwoEdgeExample) {
  const double eps = 0.1;
  const Instance inst = fig1(eps);
  const auto prof = exact_prob_graph(inst);
  EXPECT_NEAR(prof.probs[inst.at("x")], 1 - (1 - eps) * (1 - eps), 1e-15);
  EXPECT_NEAR(prof.probs[inst.at("y")], 0.5, 1e-15);
  EXPECT_NEAR(prof.probs[inst.at("z")], 0.5, 1e-15);
}

TEST(Probabilities, ExactGraphMatchesCellEnumeration) {
  Rng rng = make_rng(6, 0);
  for (int i = 0; i < 100; ++i) {
    RandomSpec spec;
    spec.n = 2 + uniform_index(rng, 5);
    spec.p = 0.5;
    const Instance inst = gen_random(spec, rng);
    const auto exact = exact_prob_graph(inst).probs;
    const auto enumerated = exact_mandatory_probs(inst);
    for (VertexIndex v = 0; v < inst.size(); ++v) EXPECT_NEAR(exact[v], enumerated[v], 1e-12);
  }
}

TEST(Probabilities, ExactGraphRejectsHypergraphs) {
  EXPECT_THROW(exact_prob_graph(vc_lb_single_hyperedge()), std::invalid_argument);
}

TEST(Probabilities, EstimatesWithinEpsilon) {
  const Instance inst = vc_lb_bipartite(2, 0.1);
  const auto exact = exact_mandatory_probs(inst);
  Rng rng = make_rng(7, 0);
  const auto prof = estimate_profile(inst, 0.05, 0.001, rng);
  EXPECT_EQ(prof.sample_count, hoeffding_sample_count(0.05, 0.001));
  for (VertexIndex v = 0; v < inst.size(); ++v) EXPECT_NEAR(prof.probs[v], exact[v], 0.05);
  Rng rng2 = make_rng(7, 1);
  const auto separate = estimate_profile(inst, 0.05, 0.001, rng2, false);
  for (VertexIndex v = 0; v < inst.size(); ++v) EXPECT_NEAR(separate.probs[v], exact[v], 0.05);
}

TEST(Probabilities, IsolatedVertexNeverMandatory) {
  const Instance inst({flat("a", 0, 1)}, {});
  Rng rng = make_rng(8, 0);
  EXPECT_EQ(estimate_prob(inst, 0, 0.1, 0.1, rng), 0.0);
}
