#include <gtest/gtest.h>

#include "helpers.hpp"
#include "orient/check/brute_force.hpp"

using namespace orient;
using namespace testing_helpers;

namespace {

CoverGraph graph(std::vector<double> w, std::vector<std::pair<VertexIndex, VertexIndex>> edges) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < w.size(); ++i) labels.push_back("g" + std::to_string(i));
  return CoverGraph(std::move(labels), std::move(w), std::move(edges));
}

CoverGraph random_graph(Rng& rng, std::size_t n, double p, bool unit) {
  std::vector<double> w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(unit ? 1.0 : 0.5 * static_cast<double>(1 + uniform_index(rng, 8)));
  std::vector<std::pair<VertexIndex, VertexIndex>> e;
  for (VertexIndex a = 0; a < n; ++a)
    for (VertexIndex b = a + 1; b < n; ++b)
      if (uniform01(rng) < p) e.emplace_back(a, b);
  return graph(std::move(w), std::move(e));
}

CoverGraph cycle(std::size_t n) {
  std::vector<std::pair<VertexIndex, VertexIndex>> e;
  for (VertexIndex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return graph(std::vector<double>(n, 1.0), e);
}

}  // namespace

TEST(CoverGraph, ValidatesInput) {
  EXPECT_THROW(graph({1.0}, {{0, 0}}), ValidationError);
  EXPECT_THROW(graph({1.0, 1.0}, {{0, 2}}), ValidationError);
  EXPECT_THROW(graph({-1.0, 1.0}, {{0, 1}}), ValidationError);
  const auto g = graph({1, 1, 1}, {{1, 0}, {0, 1}, {2, 1}});
  EXPECT_EQ(g.edges(), (std::vector<std::pair<VertexIndex, VertexIndex>>{{0, 1}, {1, 2}}));
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_EQ(g.degree(1), 2u);
}

TEST(CoverGraph, InducedKeepsOrigins) {
  const auto g = graph({1, 2, 3, 4}, {{0, 1}, {1, 2}, {2, 3}});
  const auto sub = g.induced({false, true, true, true});
  ASSERT_EQ(sub.size(), 3u);
  EXPECT_EQ(sub.origin(0), 1u);
  EXPECT_DOUBLE_EQ(sub.weight(0), 2.0);
  EXPECT_EQ(sub.edges().size(), 2u);
  const auto subsub = sub.induced({false, true, true});
  EXPECT_EQ(subsub.origin(0), 2u);
}

TEST(CoverGraph, FromTwoEdgeExample) {
  const Instance inst = fig1(0.1);
  const auto g = build_cover_graph(inst);
  EXPECT_EQ(g.edges().size(), 2u);
  EXPECT_TRUE(g.adjacent(inst.at("x"), inst.at("y")));
  EXPECT_TRUE(g.adjacent(inst.at("x"), inst.at("z")));
  EXPECT_FALSE(g.adjacent(inst.at("y"), inst.at("z")));
}

TEST(CoverGraph, HyperedgeGivesStarAroundLeftmost) {
  const auto inst = Instance::from_ids({flat("a", 0, 2), flat("b", 1, 3), flat("c", 1.5, 4), flat("d", 2, 5)},
                                       {{"a", "b", "c", "d"}});
  const auto g = build_cover_graph(inst);
  EXPECT_EQ(g.edges().size(), 2u);
  ASSERT_EQ(g.stars().size(), 1u);
  EXPECT_EQ(g.stars()[0].center, inst.at("a"));
  EXPECT_EQ(g.stars()[0].leaves.size(), 2u);
}

TEST(Lp, TriangleIsAllHalf) {
  const auto lp = lp_half_integral(cycle(3));
  EXPECT_NEAR(lp.objective, 1.5, 1e-12);
  EXPECT_EQ(lp.v_half.size(), 3u);
}

TEST(Lp, WeightedPathIsIntegral) {
  const auto lp = lp_half_integral(graph({1, 5, 1}, {{0, 1}, {1, 2}}));
  EXPECT_NEAR(lp.objective, 2.0, 1e-12);
  EXPECT_EQ(lp.v1, (std::vector<VertexIndex>{0, 2}));
  EXPECT_EQ(lp.v0, (std::vector<VertexIndex>{1}));
  EXPECT_TRUE(lp.v_half.empty());
}

TEST(Lp, IsolatedVerticesAreZero) {
  const auto lp = lp_half_integral(graph({3, 1, 1}, {{1, 2}}));
  EXPECT_EQ(lp.x[0], 0.0);
}

TEST(Lp, MatchesEnumeratedOptimum) {
  Rng rng = make_rng(21, 0);
  for (int i = 0; i < 200; ++i) {
    const auto g = random_graph(rng, 2 + uniform_index(rng, 8), 0.4, i % 2 == 0);
    const auto lp = lp_half_integral(g);
    EXPECT_NEAR(lp.objective, brute::lp_value(g), 1e-9);
    for (auto [a, b] : g.edges()) EXPECT_GE(lp.x[a] + lp.x[b], 1.0 - 1e-12);
    for (double x : lp.x) EXPECT_TRUE(x == 0.0 || x == 0.5 || x == 1.0);
  }
}

TEST(Bipartite, ColoringDetectsOddCycles) {
  EXPECT_FALSE(two_coloring(cycle(5)).has_value());
  const auto sides = two_coloring(cycle(4));
  ASSERT_TRUE(sides.has_value());
  EXPECT_EQ((*sides)[0], 0);
  EXPECT_NE((*sides)[0], (*sides)[1]);
}

TEST(Bipartite, ExactMatchesBruteForce) {
  Rng rng = make_rng(22, 0);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + uniform_index(rng, 10);
    std::vector<double> w;
    for (std::size_t v = 0; v < n; ++v) w.push_back(static_cast<double>(1 + uniform_index(rng, 5)));
    std::vector<std::pair<VertexIndex, VertexIndex>> e;
    for (VertexIndex a = 0; a < n; ++a)
      for (VertexIndex b = a + 1; b < n; ++b)
        if ((a + b) % 2 == 1 && uniform01(rng) < 0.5) e.emplace_back(a, b);
    const auto g = graph(w, e);
    const auto c = vc_bipartite_exact(g);
    EXPECT_TRUE(is_cover(g, c.members));
    EXPECT_NEAR(c.weight, brute::min_cover_weight(g), 1e-9);
  }
}

TEST(Bipartite, RejectsNonBipartite) { EXPECT_THROW(vc_bipartite_exact(cycle(3)), ValidationError); }

TEST(ExactSmall, MatchesBruteForce) {
  Rng rng = make_rng(23, 0);
  for (int i = 0; i < 300; ++i) {
    const auto g = random_graph(rng, 1 + uniform_index(rng, 12), 0.2 + 0.5 * uniform01(rng), i % 3 == 0);
    const auto c = vc_exact_small(g);
    EXPECT_TRUE(is_cover(g, c.members));
    EXPECT_NEAR(c.weight, brute::min_cover_weight(g), 1e-9);
  }
}

TEST(ExactSmall, PrefersLexicographicallySmallestOptimum) {
  EXPECT_EQ(vc_exact_small(graph({1, 1}, {{0, 1}})).members, std::vector<VertexIndex>{0});
  EXPECT_EQ(vc_exact_small(cycle(4)).members, (std::vector<VertexIndex>{0, 2}));
}

TEST(ExactSmall, EnforcesBound) {
  EXPECT_THROW(vc_exact_small(cycle(25)), BoundError);
  EXPECT_NO_THROW(vc_exact_small(cycle(25), 25));
}

TEST(LocalRatio, CoverWithinFactorTwo) {
  Rng rng = make_rng(24, 0);
  for (int i = 0; i < 300; ++i) {
    const auto g = random_graph(rng, 1 + uniform_index(rng, 12), 0.4, i % 2 == 0);
    const auto c = vc_local_ratio_2approx(g);
    EXPECT_TRUE(is_cover(g, c.members));
    EXPECT_LE(c.weight, 2.0 * brute::min_cover_weight(g) + 1e-9);
  }
}

TEST(LocalRatio, StarWithHeavyCenter) {
  // Edges scanned in order pay the leaves one by one until the center is exhausted.
  const auto c = vc_local_ratio_2approx(graph({2, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_EQ(c.members, (std::vector<VertexIndex>{0, 1, 2}));
  EXPECT_DOUBLE_EQ(c.weight, 4.0);
}

TEST(FewHyperedges, MatchesBruteForceOnInstances) {
  Rng rng = make_rng(25, 0);
  for (int i = 0; i < 200; ++i) {
    RandomSpec spec;
    spec.family = RandomFamily::random_hypergraph;
    spec.n = 3 + uniform_index(rng, 9);
    spec.hyperedges = 1 + uniform_index(rng, 5);
    spec.max_size = 5;
    spec.unit_costs = i % 2 == 0;
    const Instance inst = gen_random(spec, rng);
    const auto g = build_cover_graph(inst);
    const auto c = vc_few_hyperedges(g);
    EXPECT_TRUE(is_cover(g, c.members));
    EXPECT_NEAR(c.weight, brute::min_cover_weight(g), 1e-9);
  }
}

TEST(FewHyperedges, EnforcesBound) {
  EXPECT_THROW(vc_few_hyperedges(cycle(21)), BoundError);
  EXPECT_THROW(vc_few_hyperedges(cycle(6), 5), BoundError);
}

TEST(Dispatcher, HandlesLargeBipartiteAndSmallComponents) {
  std::vector<std::pair<VertexIndex, VertexIndex>> e;
  for (VertexIndex i = 0; i + 1 < 60; ++i) e.emplace_back(i, i + 1);
  const auto path = graph(std::vector<double>(60, 1.0), e);
  EXPECT_DOUBLE_EQ(vc_exact(path).weight, 30.0);
  // Many disjoint triangles: each component is small.
  std::vector<std::pair<VertexIndex, VertexIndex>> t;
  for (VertexIndex k = 0; k < 10; ++k) {
    t.emplace_back(3 * k, 3 * k + 1);
    t.emplace_back(3 * k + 1, 3 * k + 2);
    t.emplace_back(3 * k, 3 * k + 2);
  }
  EXPECT_DOUBLE_EQ(vc_exact(graph(std::vector<double>(30, 1.0), t)).weight, 20.0);
}

TEST(Dispatcher, RaisesBeyondBounds) { EXPECT_THROW(vc_exact(cycle(25)), BoundError); }

TEST(Strategies, DeclaredAlphaAndNames) {
  EXPECT_EQ(declared_alpha(VcStrategy::exact), 1.0);
  EXPECT_EQ(declared_alpha(VcStrategy::few_hyperedges), 1.0);
  EXPECT_EQ(declared_alpha(VcStrategy::local_ratio), 2.0);
  EXPECT_STREQ(to_string(VcStrategy::local_ratio), "local-ratio");
}

TEST(CliqueReduce, TriangleLog) {
  const auto g = graph({1, 2, 3}, {{0, 1}, {1, 2}, {0, 2}});
  const auto red = clique_reduce(g, first_clique);
  ASSERT_EQ(red.dual_log.size(), 1u);
  EXPECT_EQ(red.dual_log[0].first, (std::vector<VertexIndex>{0, 1, 2}));
  EXPECT_DOUBLE_EQ(red.dual_log[0].second, 1.0);
  EXPECT_EQ(red.forced.members, std::vector<VertexIndex>{0});
  EXPECT_DOUBLE_EQ(red.forced.weight, 1.0);
  ASSERT_EQ(red.reduced.size(), 2u);
  EXPECT_DOUBLE_EQ(red.reduced.weight(0), 1.0);
  EXPECT_DOUBLE_EQ(red.reduced.weight(1), 2.0);
  EXPECT_EQ(red.reduced.origin(0), 1u);
}

TEST(CliqueReduce, FinishedWithExactCoverStaysWithinThreeHalves) {
  Rng rng = make_rng(26, 0);
  for (int i = 0; i < 200; ++i) {
    const auto g = random_graph(rng, 3 + uniform_index(rng, 9), 0.5, i % 2 == 0);
    const auto red = clique_reduce(g, first_clique);
    EXPECT_FALSE(first_clique(red.reduced).has_value());
    std::vector<VertexIndex> members = red.forced.members;
    for (auto v : vc_exact_small(red.reduced).members) members.push_back(red.reduced.origin(v));
    const auto c = make_cover(g, members);
    EXPECT_TRUE(is_cover(g, c.members));
    EXPECT_LE(c.weight, 1.5 * brute::min_cover_weight(g) + 1e-9);
  }
}

TEST(CliqueReduce, LayerFinderUsesConsecutiveRuns) {
  const auto g = graph({1, 1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  const auto finder = layer_clique_finder({{3, 2}, {0, 1, 2, 3}});
  const auto c = finder(g);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, (std::vector<VertexIndex>{0, 1, 2}));
  EXPECT_FALSE(layer_clique_finder({{0, 1}, {2, 3}})(g).has_value());
}

TEST(IntervalUnion, MatchesExactOnLayeredInstances) {
  Rng rng = make_rng(27, 0);
  for (int i = 0; i < 200; ++i) {
    const auto li = gen_interval_layers(1 + uniform_index(rng, 4), 3 + uniform_index(rng, 12), rng);
    auto g = build_cover_graph(li.instance);
    if (i % 2) {
      std::vector<double> w;
      for (std::size_t v = 0; v < g.size(); ++v) w.push_back(static_cast<double>(1 + uniform_index(rng, 4)));
      g = g.with_weights(w);
    }
    const auto c = vc_interval_union_dp(g, li.layers);
    EXPECT_TRUE(is_cover(g, c.members));
    EXPECT_NEAR(c.weight, vc_exact_small(g).weight, 1e-9);
  }
}

TEST(IntervalUnion, ValidatesLayers) {
  const auto g = graph({1, 1, 1}, {{0, 1}, {1, 2}});
  EXPECT_THROW(vc_interval_union_dp(g, {{0, 1}}), ValidationError);
  EXPECT_THROW(vc_interval_union_dp(g, {{0, 1, 2, 0}}), ValidationError);
  EXPECT_THROW(vc_interval_union_dp(g, {{0, 1, 2}, {0}, {1}, {2}, {0, 1}}), BoundError);
  EXPECT_DOUBLE_EQ(vc_interval_union_dp(g, {{0, 1, 2}}).weight, 1.0);
}
