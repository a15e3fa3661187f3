#pragma once

#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "orient/model.hpp"

namespace orient {

namespace detail {

inline UncertainVertex make_vertex(std::string id, double cost, double lo, double hi,
                                   std::vector<std::pair<double, double>> breaks_and_masses) {
  // breaks_and_masses: (cell upper end, mass), cells consecutive from lo.
  std::vector<PmfCell> cells;
  double at = lo;
  for (auto [end, mass] : breaks_and_masses) {
    if (end <= at && mass == 0.0) continue;
    cells.push_back({{at, end}, mass});
    at = end;
  }
  return {std::move(id), cost, {lo, hi}, Pmf(std::move(cells))};
}

inline std::string numbered(const std::string& prefix, std::size_t i, std::size_t max) {
  const int width = static_cast<int>(std::to_string(max).size());
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*zu", width, i);
  return prefix + buf;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError("invalid generator parameter: " + what);
}

inline void require_eps(double eps) { require(eps > 0.0 && eps < 0.5, "eps must lie in (0, 0.5)"); }

}  // namespace detail

/// Three vertices, edges {x,y} and {x,z}; x is left or right of 1 with equal
/// probability, y and z fall into (1,2) with probability eps.
inline Instance fig1(double eps = 0.01) {
  detail::require_eps(eps);
  std::vector<UncertainVertex> v{
      detail::make_vertex("x", 1, 0, 2, {{1, 0.5}, {2, 0.5}}),
      detail::make_vertex("y", 1, 1, 3, {{2, eps}, {3, 1 - eps}}),
      detail::make_vertex("z", 1, 1, 3, {{2, eps}, {3, 1 - eps}}),
  };
  return Instance::from_ids(std::move(v), {{"x", "y"}, {"x", "z"}});
}

/// Single hyperedge {x,y,z} with costs (k, 1, k).
inline Instance vc_lb_single_hyperedge(double k = 100, double eps = 0.01) {
  detail::require_eps(eps);
  detail::require(k > 0, "k must be positive");
  std::vector<UncertainVertex> v{
      detail::make_vertex("x", k, 0, 3, {{1, eps}, {2, 0}, {3, 1 - eps}}),
      detail::make_vertex("y", 1, 1, 4, {{2, 0.5}, {3, 0}, {4, 0.5}}),
      detail::make_vertex("z", k, 2, 5, {{3, eps}, {5, 1 - eps}}),
  };
  return Instance::from_ids(std::move(v), {{"x", "y", "z"}});
}

/// Hyperedges S_i = {x_i, y, z_1..z_k} with unit costs.
inline Instance vc_lb_bipartite(std::size_t k = 4, double eps = 0.01) {
  detail::require_eps(eps);
  detail::require(k >= 1, "k must be at least 1");
  std::vector<UncertainVertex> v;
  for (std::size_t i = 1; i <= k; ++i)
    v.push_back(detail::make_vertex(detail::numbered("x", i, k), 1, 0, 3, {{1, eps}, {2, 0}, {3, 1 - eps}}));
  v.push_back(detail::make_vertex("y", 1, 1, 4, {{2, 0.5}, {3, 0}, {4, 0.5}}));
  for (std::size_t j = 1; j <= k; ++j)
    v.push_back(detail::make_vertex(detail::numbered("z", j, k), 1, 2, 5, {{3, eps}, {5, 1 - eps}}));
  std::vector<std::vector<std::string>> edges;
  for (std::size_t i = 1; i <= k; ++i) {
    std::vector<std::string> e{detail::numbered("x", i, k), "y"};
    for (std::size_t j = 1; j <= k; ++j) e.push_back(detail::numbered("z", j, k));
    edges.push_back(std::move(e));
  }
  return Instance::from_ids(std::move(v), edges);
}

/// Graph: x_i joined to every z_j, y joined to everything, unit costs.
inline Instance vc_lb_nonbipartite(std::size_t k = 4, double eps = 0.01) {
  detail::require_eps(eps);
  detail::require(k >= 1, "k must be at least 1");
  std::vector<UncertainVertex> v;
  for (std::size_t i = 1; i <= k; ++i)
    v.push_back(detail::make_vertex(detail::numbered("x", i, k), 1, 0, 3, {{1, 1 - eps}, {2, 0}, {3, eps}}));
  v.push_back(detail::make_vertex("y", 1, 1, 4, {{2, 0.5}, {3, 0}, {4, 0.5}}));
  for (std::size_t j = 1; j <= k; ++j)
    v.push_back(detail::make_vertex(detail::numbered("z", j, k), 1, 2, 5, {{3, eps}, {5, 1 - eps}}));
  std::vector<std::vector<std::string>> edges;
  for (std::size_t i = 1; i <= k; ++i) {
    const auto x = detail::numbered("x", i, k);
    edges.push_back({x, "y"});
    for (std::size_t j = 1; j <= k; ++j) edges.push_back({x, detail::numbered("z", j, k)});
  }
  for (std::size_t j = 1; j <= k; ++j) edges.push_back({"y", detail::numbered("z", j, k)});
  return Instance::from_ids(std::move(v), edges);
}

/// Single hyperedge of n+1 unit-cost vertices: e0 on (0,2) lands in (1,2)
/// with probability (n-1)/n, the others on (1,3) with probability eps.
inline Instance single_hyperedge_lb(std::size_t n = 3, double eps = 0.01) {
  detail::require_eps(eps);
  detail::require(n >= 1, "n must be at least 1");
  const double p0 = static_cast<double>(n - 1) / static_cast<double>(n);
  std::vector<UncertainVertex> v;
  std::vector<std::string> e;
  for (std::size_t i = 0; i <= n; ++i) {
    const auto id = detail::numbered("e", i, n);
    e.push_back(id);
    if (i == 0)
      v.push_back(detail::make_vertex(id, 1, 0, 2, {{1, 1 - p0}, {2, p0}}));
    else
      v.push_back(detail::make_vertex(id, 1, 1, 3, {{2, eps}, {3, 1 - eps}}));
  }
  return Instance::from_ids(std::move(v), {e});
}

/// Single hyperedge with I_1 = (1, n+1) and I_i = (i, n+2); each weight sits
/// in the first or last unit of its interval with probability 1/2.
inline Instance two_stage_lb(std::size_t n = 64) {
  detail::require(n >= 3, "n must be at least 3");
  std::vector<UncertainVertex> v;
  std::vector<std::string> e;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto id = detail::numbered("v", i, n);
    e.push_back(id);
    const double lo = static_cast<double>(i);
    const double hi = static_cast<double>(i == 1 ? n + 1 : n + 2);
    v.push_back(detail::make_vertex(id, 1, lo, hi, {{lo + 1, 0.5}, {hi - 1, 0.0}, {hi, 0.5}}));
  }
  return Instance::from_ids(std::move(v), {e});
}

/// Mass standing in for probability zero; reduced instances without
/// containment cannot have mandatory probability exactly 0 or 1.
inline constexpr double kTinyMass = 1e-6;

/// Edge {a, b} with p_b = d - eps and p_a = kTinyMass.
inline Instance tightness_edge(double d = 0.618, double eps = 0.01) {
  detail::require(d > eps && d <= 1.0 && eps > 0.0, "need 0 < eps < d <= 1");
  const double pb = d - eps;
  std::vector<UncertainVertex> v{
      detail::make_vertex("a", 1, 0, 2, {{1, 1 - pb}, {2, pb}}),
      detail::make_vertex("b", 1, 1, 3, {{2, kTinyMass}, {3, 1 - kTinyMass}}),
  };
  return Instance::from_ids(std::move(v), {{"a", "b"}});
}

/// Star with n leaves: p_leaf = d and p_center = 1 - 2^-n.
inline Instance tightness_star(double d = 0.618, std::size_t n = 50) {
  detail::require(d > 0.0 && d < 1.0, "d must lie in (0, 1)");
  detail::require(n >= 1, "n must be at least 1");
  std::vector<UncertainVertex> v{detail::make_vertex("c", 1, 0, 2, {{1, 1 - d}, {2, d}})};
  std::vector<std::vector<std::string>> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto id = detail::numbered("l", i, n);
    v.push_back(detail::make_vertex(id, 1, 1, 3, {{2, 0.5}, {3, 0.5}}));
    edges.push_back({"c", id});
  }
  return Instance::from_ids(std::move(v), edges);
}

/// Two-vertex hyperedge: v0 on (0,2) lands in (1,2) w.p. p, v1 on (1,3) lands in (1,2) w.p. q.
inline Instance two_interval(double p = 0.4, double q = 0.4) {
  detail::require(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0, "p and q must lie in (0, 1)");
  std::vector<UncertainVertex> v{
      detail::make_vertex("v0", 1, 0, 2, {{1, 1 - p}, {2, p}}),
      detail::make_vertex("v1", 1, 1, 3, {{2, q}, {3, 1 - q}}),
  };
  return Instance::from_ids(std::move(v), {{"v0", "v1"}});
}

struct PaperParams {
  double eps = 0.01;
  std::size_t n = 0;  // 0 selects the generator's default
  double k = 0;
  double d = 0.618;
  double p = 0.4;
  double q = 0.4;
};

inline const std::vector<std::string>& paper_generator_names() {
  static const std::vector<std::string> names{
      "fig1", "vc-lb-single-hyperedge", "vc-lb-bipartite", "vc-lb-nonbipartite", "single-hyperedge-lb",
      "two-stage-lb", "tightness-edge", "tightness-star", "two-interval"};
  return names;
}

inline Instance gen_paper(const std::string& name, const PaperParams& p = {}) {
  auto count = [](double k, std::size_t fallback) {
    if (k == 0) return fallback;
    detail::require(k >= 1 && std::floor(k) == k, "k must be a positive integer");
    return static_cast<std::size_t>(k);
  };
  if (name == "fig1") return fig1(p.eps);
  if (name == "vc-lb-single-hyperedge") return vc_lb_single_hyperedge(p.k == 0 ? 100 : p.k, p.eps);
  if (name == "vc-lb-bipartite") return vc_lb_bipartite(count(p.k, 4), p.eps);
  if (name == "vc-lb-nonbipartite") return vc_lb_nonbipartite(count(p.k, 4), p.eps);
  if (name == "single-hyperedge-lb") return single_hyperedge_lb(p.n == 0 ? 3 : p.n, p.eps);
  if (name == "two-stage-lb") return two_stage_lb(p.n == 0 ? 64 : p.n);
  if (name == "tightness-edge") return tightness_edge(p.d, p.eps);
  if (name == "tightness-star") return tightness_star(p.d, p.n == 0 ? 50 : p.n);
  if (name == "two-interval") return two_interval(p.p, p.q);
  throw ValidationError("unknown generator '" + name + "'");
}

// ---------------------------------------------------------------------------
// Random families

enum class RandomFamily { gnp_graph, random_hypergraph, bipartite, star };

struct RandomSpec {
  RandomFamily family = RandomFamily::gnp_graph;
  std::size_t n = 8;           // vertices (leaves for star)
  double p = 0.3;              // edge probability
  std::size_t hyperedges = 4;  // random_hypergraph
  std::size_t max_size = 4;    // random_hypergraph member bound
  bool unit_costs = true;
  double span = 0.0;           // 0 picks n / 2
};

namespace detail {

/// Interval with endpoints on a half-unit grid so that cells are shared.
inline Interval random_interval(Rng& rng, double span) {
  const auto slots = static_cast<std::size_t>(std::max(1.0, 2.0 * span));
  const double lo = 0.5 * static_cast<double>(uniform_index(rng, slots));
  const double len = 0.5 * static_cast<double>(1 + uniform_index(rng, 6));
  return {lo, lo + len};
}

/// One to three cells with random positive masses.
inline Pmf random_pmf(const Interval& iv, Rng& rng) {
  const std::size_t cells = 1 + uniform_index(rng, 3);
  std::vector<double> cuts{iv.lo, iv.hi};
  for (std::size_t i = 1; i < cells; ++i) cuts.push_back(iv.lo + (0.1 + 0.8 * uniform01(rng)) * iv.length());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<double> mass;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    mass.push_back(0.05 + uniform01(rng));
    total += mass.back();
  }
  std::vector<PmfCell> out;
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double m = i + 2 == cuts.size() ? 1.0 - acc : mass[i] / total;
    acc += m;
    out.push_back({{cuts[i], cuts[i + 1]}, m});
  }
  return Pmf(std::move(out));
}

inline UncertainVertex random_vertex(std::string id, const Interval& iv, bool unit, Rng& rng) {
  const double cost = unit ? 1.0 : static_cast<double>(1 + uniform_index(rng, 5));
  return {std::move(id), cost, iv, random_pmf(iv, rng)};
}

}  // namespace detail

/// Random instance of the given family, returned after reduction.
inline Instance gen_random(const RandomSpec& spec, Rng& rng) {
  const double span = spec.span > 0 ? spec.span : std::max(1.0, static_cast<double>(spec.n) / 2.0);
  std::vector<UncertainVertex> v;
  std::vector<std::vector<VertexIndex>> edges;
  switch (spec.family) {
    case RandomFamily::gnp_graph:
    case RandomFamily::random_hypergraph:
    case RandomFamily::bipartite: {
      for (std::size_t i = 0; i < spec.n; ++i)
        v.push_back(detail::random_vertex(detail::numbered("v", i, spec.n), detail::random_interval(rng, span),
                                          spec.unit_costs, rng));
      if (spec.family == RandomFamily::random_hypergraph) {
        for (std::size_t h = 0; h < spec.hyperedges; ++h) {
          const std::size_t size = 2 + uniform_index(rng, std::max<std::size_t>(1, spec.max_size - 1));
          std::vector<VertexIndex> pool(spec.n);
          std::iota(pool.begin(), pool.end(), VertexIndex{0});
          std::vector<VertexIndex> e;
          for (std::size_t j = 0; j < std::min(size, spec.n); ++j) {
            const auto pick = uniform_index(rng, pool.size());
            e.push_back(pool[pick]);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
          }
          edges.push_back(std::move(e));
        }
      } else {
        const std::size_t half = spec.n / 2;
        for (std::size_t a = 0; a < spec.n; ++a)
          for (std::size_t b = a + 1; b < spec.n; ++b) {
            if (spec.family == RandomFamily::bipartite && (a < half) == (b < half)) continue;
            if (uniform01(rng) < spec.p) edges.push_back({a, b});
          }
      }
      break;
    }
    case RandomFamily::star: {
      v.push_back(detail::random_vertex("c", {0.0, 2.0}, spec.unit_costs, rng));
      for (std::size_t i = 1; i <= spec.n; ++i) {
        const double lo = 0.25 * static_cast<double>(1 + uniform_index(rng, 7));
        const double hi = 2.0 + 0.25 * static_cast<double>(1 + uniform_index(rng, 8));
        v.push_back(detail::random_vertex(detail::numbered("l", i, spec.n), {lo, hi}, spec.unit_costs, rng));
        edges.push_back({0, i});
      }
      break;
    }
  }
  return reduce(Instance(std::move(v), std::move(edges))).instance;
}

struct LayeredInstance {
  Instance instance;
  std::vector<std::vector<VertexIndex>> layers;
};

/// Graph on n unit-cost vertices with intervals (i, i+n), so every pair
/// intersects and none contains another. Each of the k layers is a random
/// increasing subsequence; consecutive layer members are joined with probability `keep`.
inline LayeredInstance gen_interval_layers(std::size_t k, std::size_t n, Rng& rng, double keep = 0.8) {
  detail::require(k >= 1 && n >= 2, "need k >= 1 and n >= 2");
  std::vector<UncertainVertex> v;
  for (std::size_t i = 0; i < n; ++i) {
    const Interval iv{static_cast<double>(i), static_cast<double>(i + n)};
    v.push_back({detail::numbered("v", i, n), 1.0, iv, detail::random_pmf(iv, rng)});
  }
  std::vector<std::vector<VertexIndex>> layers;
  std::set<std::pair<VertexIndex, VertexIndex>> edges;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<VertexIndex> layer;
    for (VertexIndex u = 0; u < n; ++u)
      if (uniform01(rng) < 0.7) layer.push_back(u);
    for (std::size_t j = 1; j < layer.size(); ++j)
      if (uniform01(rng) < keep) edges.insert({layer[j - 1], layer[j]});
    layers.push_back(std::move(layer));
  }
  std::vector<std::vector<VertexIndex>> e;
  for (auto [a, b] : edges) e.push_back({a, b});
  return {Instance(std::move(v), std::move(e)), std::move(layers)};
}

}  // namespace orient
