#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orient/flow.hpp"
#include "orient/model.hpp"

namespace orient {

/// One hyperedge's contribution to the cover graph: its leftmost vertex joined
/// to every other member whose interval meets it.
struct Star {
  VertexIndex center = 0;
  std::vector<VertexIndex> leaves;
};

/// Weighted simple graph whose vertex covers are the candidate query sets.
class CoverGraph {
 public:
  CoverGraph() = default;

  /// `stars` defaults to one star per edge.
  CoverGraph(std::vector<std::string> labels, std::vector<double> weights,
             std::vector<std::pair<VertexIndex, VertexIndex>> edges, std::vector<Star> stars = {})
      : labels_(std::move(labels)), weights_(std::move(weights)), stars_(std::move(stars)) {
    const auto n = labels_.size();
    if (weights_.size() != n) throw ValidationError("cover graph: weight count mismatch");
    for (double w : weights_)
      if (!(w >= 0.0)) throw ValidationError("cover graph: weights must be nonnegative");
    for (auto [a, b] : edges) {
      if (a >= n || b >= n) throw ValidationError("cover graph: edge endpoint out of range");
      if (a == b) throw ValidationError("cover graph: self-loop");
      edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.assign(n, {});
    for (auto [a, b] : edges_) {
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    if (stars_.empty())
      for (auto [a, b] : edges_) stars_.push_back({a, {b}});
    origin_.resize(n);
    std::iota(origin_.begin(), origin_.end(), VertexIndex{0});
  }

  std::size_t size() const { return labels_.size(); }
  const std::string& label(VertexIndex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  double weight(VertexIndex v) const { return weights_[v]; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<std::pair<VertexIndex, VertexIndex>>& edges() const { return edges_; }
  const std::vector<VertexIndex>& neighbors(VertexIndex v) const { return adj_[v]; }
  std::size_t degree(VertexIndex v) const { return adj_[v].size(); }
  const std::vector<Star>& stars() const { return stars_; }
  /// Index of v in the graph this one was derived from by `induced`
  /// (the instance index for graphs built from an instance).
  VertexIndex origin(VertexIndex v) const { return origin_[v]; }

  bool adjacent(VertexIndex a, VertexIndex b) const {
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
  }

  CoverGraph with_weights(std::vector<double> weights) const {
    CoverGraph g = *this;
    if (weights.size() != size()) throw ValidationError("cover graph: weight count mismatch");
    g.weights_ = std::move(weights);
    return g;
  }

  /// Subgraph on the kept vertices, renumbered in index order; stars lose
  /// dropped leaves and vanish with their center.
  CoverGraph induced(const std::vector<bool>& keep) const {
    std::vector<VertexIndex> remap(size(), size());
    std::vector<std::string> labels;
    std::vector<double> weights;
    std::vector<VertexIndex> origin;
    for (VertexIndex v = 0; v < size(); ++v) {
      if (!keep[v]) continue;
      remap[v] = labels.size();
      labels.push_back(labels_[v]);
      weights.push_back(weights_[v]);
      origin.push_back(origin_[v]);
    }
    std::vector<std::pair<VertexIndex, VertexIndex>> edges;
    for (auto [a, b] : edges_)
      if (keep[a] && keep[b]) edges.emplace_back(remap[a], remap[b]);
    std::vector<Star> stars;
    for (const auto& s : stars_) {
      if (!keep[s.center]) continue;
      Star t{remap[s.center], {}};
      for (auto l : s.leaves)
        if (keep[l]) t.leaves.push_back(remap[l]);
      if (!t.leaves.empty()) stars.push_back(std::move(t));
    }
    CoverGraph g(std::move(labels), std::move(weights), std::move(edges), std::move(stars));
    g.origin_ = std::move(origin);
    return g;
  }

  /// Connected components with at least one edge, each sorted, ordered by smallest member.
  std::vector<std::vector<VertexIndex>> components() const {
    std::vector<bool> seen(size(), false);
    std::vector<std::vector<VertexIndex>> out;
    for (VertexIndex s = 0; s < size(); ++s) {
      if (seen[s] || adj_[s].empty()) continue;
      std::vector<VertexIndex> comp{s};
      seen[s] = true;
      for (std::size_t i = 0; i < comp.size(); ++i)
        for (auto u : adj_[comp[i]])
          if (!seen[u]) {
            seen[u] = true;
            comp.push_back(u);
          }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<double> weights_;
  std::vector<std::pair<VertexIndex, VertexIndex>> edges_;
  std::vector<std::vector<VertexIndex>> adj_;
  std::vector<Star> stars_;
  std::vector<VertexIndex> origin_;
};

/// Cover graph of an instance: edge {v,u} whenever v is leftmost in some
/// hyperedge containing u and their intervals meet. Graphs map to themselves.
inline CoverGraph build_cover_graph(const Instance& inst, std::vector<double> weights) {
  std::vector<std::string> labels;
  labels.reserve(inst.size());
  for (const auto& v : inst.vertices()) labels.push_back(v.id);
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  std::vector<Star> stars;
  for (const auto& e : inst.hyperedges()) {
    Star s{e.front(), {}};
    const auto& left = inst.interval(s.center);
    for (std::size_t i = 1; i < e.size(); ++i)
      if (inst.interval(e[i]).intersects(left)) {
        s.leaves.push_back(e[i]);
        edges.emplace_back(s.center, e[i]);
      }
    if (!s.leaves.empty()) stars.push_back(std::move(s));
  }
  return CoverGraph(std::move(labels), std::move(weights), std::move(edges), std::move(stars));
}

inline CoverGraph build_cover_graph(const Instance& inst) {
  std::vector<double> costs;
  for (const auto& v : inst.vertices()) costs.push_back(v.cost);
  return build_cover_graph(inst, std::move(costs));
}

struct Cover {
  std::vector<VertexIndex> members;  // sorted
  double weight = 0.0;
};

inline bool is_cover(const CoverGraph& g, const std::vector<VertexIndex>& members) {
  std::vector<bool> in(g.size(), false);
  for (auto v : members) in[v] = true;
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const auto& e) { return in[e.first] || in[e.second]; });
}

inline Cover make_cover(const CoverGraph& g, std::vector<VertexIndex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  double w = 0.0;
  for (auto v : members) w += g.weight(v);
  return {std::move(members), w};
}

namespace detail {

inline double weight_tolerance(const CoverGraph& g) {
  double total = 0.0;
  for (double w : g.weights()) total += w;
  return 1e-9 * std::max(1.0, total);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// LP relaxation

struct HalfIntegralSolution {
  std::vector<double> x;
  double objective = 0.0;
  std::vector<VertexIndex> v1, v_half, v0;
};

/// Optimal half-integral solution of the vertex-cover LP via the bipartite
/// double cover and the minimum cut whose source side is smallest.
inline HalfIntegralSolution lp_half_integral(const CoverGraph& g) {
  const std::size_t n = g.size();
  const std::size_t s = 2 * n, t = 2 * n + 1;
  double total = 0.0;
  for (double w : g.weights()) total += w;
  const double inf = 2.0 * total + 1.0;
  MaxFlow flow(2 * n + 2);
  for (VertexIndex v = 0; v < n; ++v) {
    flow.add_edge(s, v, g.weight(v));
    flow.add_edge(n + v, t, g.weight(v));
  }
  for (auto [a, b] : g.edges()) {
    flow.add_edge(a, n + b, inf);
    flow.add_edge(b, n + a, inf);
  }
  flow.run(s, t);
  const auto side = flow.source_side(s);

  HalfIntegralSolution sol;
  sol.x.assign(n, 0.0);
  for (VertexIndex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) {
      sol.v0.push_back(v);
      continue;
    }
    const int copies = (side[v] ? 0 : 1) + (side[n + v] ? 1 : 0);
    sol.x[v] = copies / 2.0;
    sol.objective += sol.x[v] * g.weight(v);
    (copies == 2 ? sol.v1 : copies == 1 ? sol.v_half : sol.v0).push_back(v);
  }
  return sol;
}

// ---------------------------------------------------------------------------
// Exact solvers

/// 2-colouring with the lowest index of each component on side 0, or nullopt.
inline std::optional<std::vector<int>> two_coloring(const CoverGraph& g) {
  std::vector<int> side(g.size(), -1);
  for (VertexIndex s = 0; s < g.size(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<VertexIndex> q;
    q.push(s);
    while (!q.empty()) {
      const auto v = q.front();
      q.pop();
      for (auto u : g.neighbors(v)) {
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          q.push(u);
        } else if (side[u] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

/// Minimum-weight cover of a bipartite graph by max-flow/min-cut.
inline Cover vc_bipartite_exact(const CoverGraph& g, const std::vector<int>& sides) {
  const std::size_t n = g.size();
  if (sides.size() != n) throw ValidationError("bipartition size mismatch");
  for (auto [a, b] : g.edges())
    if (sides[a] == sides[b]) throw ValidationError("cover graph is not bipartite for the given sides");
  const std::size_t s = n, t = n + 1;
  double total = 0.0;
  for (double w : g.weights()) total += w;
  MaxFlow flow(n + 2);
  for (VertexIndex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) continue;
    if (sides[v] == 0)
      flow.add_edge(s, v, g.weight(v));
    else
      flow.add_edge(v, t, g.weight(v));
  }
  for (auto [a, b] : g.edges()) {
    if (sides[a] == 0)
      flow.add_edge(a, b, total + 1.0);
    else
      flow.add_edge(b, a, total + 1.0);
  }
  const double value = flow.run(s, t);
  const auto side = flow.source_side(s);
  std::vector<VertexIndex> members;
  for (VertexIndex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) continue;
    if ((sides[v] == 0) != side[v]) members.push_back(v);
  }
  Cover c = make_cover(g, std::move(members));
  if (std::abs(c.weight - value) > detail::weight_tolerance(g))
    throw std::logic_error("bipartite cover weight differs from max-flow value");
  return c;
}

inline Cover vc_bipartite_exact(const CoverGraph& g) {
  auto sides = two_coloring(g);
  if (!sides) throw ValidationError("cover graph is not bipartite");
  return vc_bipartite_exact(g, *sides);
}

inline constexpr std::size_t kExactSmallBound = 24;

namespace detail {

/// Branch and bound over bitmasks for graphs with at most 32 vertices.
class SmallCoverSearch {
 public:
  explicit SmallCoverSearch(const CoverGraph& g) : n_(g.size()), adj_(g.size(), 0), w_(g.weights()) {
    for (auto [a, b] : g.edges()) {
      adj_[a] |= bit(b);
      adj_[b] |= bit(a);
    }
    full_ = n_ == 32 ? ~0u : (1u << n_) - 1u;
    tol_ = weight_tolerance(g);
  }

  /// Minimum cover weight with vertices in `in` forced into and `out` kept out
  /// of the cover; infinity when infeasible.
  double optimum(std::uint32_t in, std::uint32_t out) {
    mode_target_ = false;
    best_ = std::numeric_limits<double>::infinity();
    search(in, out);
    return best_;
  }

  /// Whether a cover of weight at most `target` respects the constraints.
  bool reachable(std::uint32_t in, std::uint32_t out, double target) {
    mode_target_ = true;
    target_ = target;
    found_ = false;
    search(in, out);
    return found_;
  }

  double tolerance() const { return tol_; }
  std::uint32_t adjacency(VertexIndex v) const { return adj_[v]; }

 private:
  static std::uint32_t bit(std::size_t v) { return 1u << v; }

  double mask_weight(std::uint32_t m) const {
    double c = 0.0;
    for (; m; m &= m - 1) c += w_[std::countr_zero(m)];
    return c;
  }

  // Edge-packing lower bound on the edges among `rest`.
  double lower_bound(std::uint32_t rest) const {
    double res[32];
    for (std::size_t v = 0; v < n_; ++v) res[v] = w_[v];
    double lb = 0.0;
    for (std::uint32_t m = rest; m; m &= m - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(m));
      for (std::uint32_t nb = adj_[u] & rest & ~((bit(u) << 1) - 1); nb; nb &= nb - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(nb));
        const double d = std::min(res[u], res[v]);
        res[u] -= d;
        res[v] -= d;
        lb += d;
      }
    }
    return lb;
  }

  void search(std::uint32_t in, std::uint32_t out) {
    if (mode_target_ && found_) return;
    std::uint32_t need = 0;
    for (std::uint32_t m = out; m; m &= m - 1) need |= adj_[std::countr_zero(m)];
    if (need & out) return;
    in |= need;
    const double cost = mask_weight(in);
    const std::uint32_t rest = full_ & ~(in | out);

    std::size_t pick = n_;
    int best_deg = 0;
    for (std::uint32_t m = rest; m; m &= m - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(m));
      const int deg = std::popcount(adj_[v] & rest);
      if (deg > best_deg) {
        best_deg = deg;
        pick = v;
      }
    }
    if (pick == n_) {
      if (mode_target_) {
        if (cost <= target_ + tol_) found_ = true;
      } else if (cost < best_ - tol_) {
        best_ = cost;
      }
      return;
    }
    const double lb = cost + lower_bound(rest);
    if (mode_target_ ? lb > target_ + tol_ : lb >= best_ - tol_) return;
    search(in | bit(pick), out);
    search(in, out | bit(pick));
  }

  std::size_t n_;
  std::vector<std::uint32_t> adj_;
  std::vector<double> w_;
  std::uint32_t full_ = 0;
  double tol_ = 0.0;
  bool mode_target_ = false;
  double best_ = 0.0;
  double target_ = 0.0;
  bool found_ = false;
};

}  // namespace detail

/// Exact minimum-weight cover by branch and bound. Among optimal covers the
/// lexicographically smallest sorted member list is returned.
inline Cover vc_exact_small(const CoverGraph& g, std::size_t bound = kExactSmallBound) {
  if (g.size() > std::min<std::size_t>(bound, 32))
    throw BoundError("exact vertex cover limited to " + std::to_string(bound) + " vertices, got " +
                     std::to_string(g.size()));
  detail::SmallCoverSearch search(g);
  const double opt = search.optimum(0, 0);
  std::uint32_t in = 0, out = 0;
  for (VertexIndex v = 0; v < g.size(); ++v) {
    const std::uint32_t b = 1u << v;
    if (g.degree(v) == 0 || (out & b) || (in & b)) {
      if (!(in & b)) out |= b;
      continue;
    }
    if (search.reachable(in | b, out, opt))
      in |= b;
    else
      out |= b;
  }
  std::vector<VertexIndex> members;
  for (VertexIndex v = 0; v < g.size(); ++v)
    if (in & (1u << v)) members.push_back(v);
  return make_cover(g, std::move(members));
}

/// Local-ratio 2-approximation; edges are scanned in sorted order.
inline Cover vc_local_ratio_2approx(const CoverGraph& g) {
  std::vector<double> res = g.weights();
  const double tol = detail::weight_tolerance(g);
  for (auto [a, b] : g.edges()) {
    if (res[a] <= tol || res[b] <= tol) continue;
    const double d = std::min(res[a], res[b]);
    res[a] -= d;
    res[b] -= d;
  }
  std::vector<VertexIndex> members;
  for (VertexIndex v = 0; v < g.size(); ++v)
    if (g.degree(v) > 0 && res[v] <= tol) members.push_back(v);
  return make_cover(g, std::move(members));
}

inline constexpr std::size_t kFewHyperedgesBound = 20;

/// Exact cover by choosing, per star, its center or all of its leaves.
inline Cover vc_few_hyperedges(const CoverGraph& g, std::size_t bound = kFewHyperedgesBound) {
  const auto& stars = g.stars();
  const std::size_t k = stars.size();
  if (k > bound)
    throw BoundError("hyperedge enumeration limited to " + std::to_string(bound) + " hyperedges, got " +
                     std::to_string(k));
  const double tol = detail::weight_tolerance(g);
  std::vector<std::uint64_t> stamp(g.size(), 0);
  double best = std::numeric_limits<double>::infinity();
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    const std::uint64_t tag = mask + 1;
    double c = 0.0;
    auto take = [&](VertexIndex v) {
      if (stamp[v] != tag) {
        stamp[v] = tag;
        c += g.weight(v);
      }
    };
    for (std::size_t i = 0; i < k && c < best - tol; ++i) {
      if (mask >> i & 1)
        for (auto l : stars[i].leaves) take(l);
      else
        take(stars[i].center);
    }
    if (c < best - tol) {
      best = c;
      best_mask = mask;
    }
  }
  std::vector<VertexIndex> members;
  for (std::size_t i = 0; i < k; ++i) {
    if (best_mask >> i & 1)
      members.insert(members.end(), stars[i].leaves.begin(), stars[i].leaves.end());
    else
      members.push_back(stars[i].center);
  }
  return make_cover(g, std::move(members));
}

inline Cover vc_few_hyperedges(const Instance& inst, std::vector<double> weights,
                               std::size_t bound = kFewHyperedgesBound) {
  return vc_few_hyperedges(build_cover_graph(inst, std::move(weights)), bound);
}

/// Exact cover: isolated vertices are dropped and each component is solved by
/// max-flow when bipartite, else branch and bound, else star enumeration.
inline Cover vc_exact(const CoverGraph& g, std::size_t small_bound = kExactSmallBound,
                      std::size_t star_bound = kFewHyperedgesBound) {
  std::vector<VertexIndex> members;
  for (const auto& comp : g.components()) {
    std::vector<bool> keep(g.size(), false);
    for (auto v : comp) keep[v] = true;
    const CoverGraph sub = g.induced(keep);
    Cover c;
    if (auto sides = two_coloring(sub))
      c = vc_bipartite_exact(sub, *sides);
    else if (sub.size() <= small_bound)
      c = vc_exact_small(sub, small_bound);
    else if (sub.stars().size() <= star_bound)
      c = vc_few_hyperedges(sub, star_bound);
    else
      throw BoundError("no exact vertex cover solver for a non-bipartite component with " +
                       std::to_string(sub.size()) + " vertices and " + std::to_string(sub.stars().size()) +
                       " hyperedges");
    for (auto v : c.members) members.push_back(comp[v]);
  }
  return make_cover(g, std::move(members));
}

// ---------------------------------------------------------------------------
// Approximation black box

enum class VcStrategy { exact, local_ratio, few_hyperedges };

inline double declared_alpha(VcStrategy s) { return s == VcStrategy::local_ratio ? 2.0 : 1.0; }

inline const char* to_string(VcStrategy s) {
  switch (s) {
    case VcStrategy::exact: return "exact";
    case VcStrategy::local_ratio: return "local-ratio";
    case VcStrategy::few_hyperedges: return "few-hyperedges";
  }
  return "?";
}

inline Cover solve_cover(const CoverGraph& g, VcStrategy s) {
  switch (s) {
    case VcStrategy::local_ratio: return vc_local_ratio_2approx(g);
    case VcStrategy::few_hyperedges: return vc_few_hyperedges(g);
    case VcStrategy::exact: break;
  }
  return vc_exact(g);
}

// ---------------------------------------------------------------------------
// Clique removal and the interval-layer dynamic program

/// Returns a clique of size >= 3 in the given graph, or nullopt.
using CliqueFinder = std::function<std::optional<std::vector<VertexIndex>>(const CoverGraph&)>;

/// First triangle in lexicographic order, grown greedily to a maximal clique.
inline std::optional<std::vector<VertexIndex>> first_clique(const CoverGraph& g) {
  for (auto [a, b] : g.edges()) {
    for (auto c : g.neighbors(b)) {
      if (c <= b || !g.adjacent(a, c)) continue;
      std::vector<VertexIndex> clique{a, b, c};
      for (VertexIndex v = 0; v < g.size(); ++v) {
        if (std::find(clique.begin(), clique.end(), v) != clique.end()) continue;
        if (std::all_of(clique.begin(), clique.end(), [&](VertexIndex u) { return g.adjacent(u, v); }))
          clique.push_back(v);
      }
      std::sort(clique.begin(), clique.end());
      return clique;
    }
  }
  return std::nullopt;
}

/// Clique finder over interval layers given as vertex orders of the original
/// graph: layers in index order, maximal runs of pairwise adjacent
/// consecutive vertices from left to right.
inline CliqueFinder layer_clique_finder(std::vector<std::vector<VertexIndex>> layers) {
  return [layers = std::move(layers)](const CoverGraph& g) -> std::optional<std::vector<VertexIndex>> {
    std::unordered_map<VertexIndex, VertexIndex> local;
    for (VertexIndex v = 0; v < g.size(); ++v) local.emplace(g.origin(v), v);
    for (const auto& layer : layers) {
      std::vector<VertexIndex> seq;
      for (auto v : layer)
        if (auto it = local.find(v); it != local.end()) seq.push_back(it->second);
      for (std::size_t i = 0; i < seq.size(); ++i) {
        std::vector<VertexIndex> run{seq[i]};
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
          if (!std::all_of(run.begin(), run.end(), [&](VertexIndex u) { return g.adjacent(u, seq[j]); }))
            break;
          run.push_back(seq[j]);
        }
        if (run.size() >= 3) return run;
      }
    }
    return std::nullopt;
  };
}

struct CliqueReduction {
  CoverGraph reduced;  // origin() refers to the input graph's indices
  Cover forced;        // weighted by the input weights
  std::vector<std::pair<std::vector<VertexIndex>, double>> dual_log;
};

/// Local-ratio clique removal: while a clique C with |C| >= 3 remains,
/// subtract its lightest weight from all of C and force vertices that reach zero.
inline CliqueReduction clique_reduce(const CoverGraph& g, const CliqueFinder& find_clique) {
  std::vector<double> w = g.weights();
  std::vector<bool> alive(g.size(), true);
  std::vector<VertexIndex> forced;
  std::vector<std::pair<std::vector<VertexIndex>, double>> log;
  const double tol = detail::weight_tolerance(g);

  // Fresh copy so that origin() maps back to g.
  const CoverGraph base(g.labels(), g.weights(), g.edges(), g.stars());
  for (;;) {
    const CoverGraph cur = base.with_weights(w).induced(alive);
    auto clique = find_clique(cur);
    if (!clique) break;
    std::vector<VertexIndex> members;
    for (auto v : *clique) members.push_back(cur.origin(v));
    std::sort(members.begin(), members.end());
    double delta = std::numeric_limits<double>::infinity();
    for (auto v : members) delta = std::min(delta, w[v]);
    for (auto v : members) {
      w[v] -= delta;
      if (w[v] <= tol) {
        w[v] = 0.0;
        alive[v] = false;
        forced.push_back(v);
      }
    }
    log.emplace_back(std::move(members), delta);
  }
  return {base.with_weights(w).induced(alive), make_cover(g, std::move(forced)), std::move(log)};
}

inline constexpr std::size_t kLayerBound = 4;

/// Exact cover of a graph whose edges are the union of k path layers, each
/// layer given as a vertex order in which consecutive vertices may be adjacent.
/// Vertices are processed in an order consistent with every layer; the state is
/// the cover bit of the current frontier vertex of each layer.
inline Cover vc_interval_union_dp(const CoverGraph& g, const std::vector<std::vector<VertexIndex>>& layers,
                                  std::size_t bound = kLayerBound) {
  const std::size_t k = layers.size();
  const std::size_t n = g.size();
  if (k > bound)
    throw BoundError("interval-union DP limited to " + std::to_string(bound) + " layers, got " +
                     std::to_string(k));

  std::vector<std::vector<std::size_t>> layers_of(n);
  std::vector<std::vector<std::size_t>> pos(n, std::vector<std::size_t>(k, 0));
  std::map<std::pair<VertexIndex, VertexIndex>, bool> covered;
  for (auto e : g.edges()) covered[e] = false;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& layer = layers[i];
    for (std::size_t p = 0; p < layer.size(); ++p) {
      const auto v = layer[p];
      if (v >= n) throw ValidationError("layer inconsistent with graph: unknown vertex");
      if (!layers_of[v].empty() && layers_of[v].back() == i)
        throw ValidationError("layer inconsistent with graph: vertex repeated in a layer");
      layers_of[v].push_back(i);
      pos[v][i] = p;
      if (p > 0) {
        auto key = std::minmax(layer[p - 1], v);
        if (auto it = covered.find({key.first, key.second}); it != covered.end()) it->second = true;
      }
    }
  }
  for (const auto& [e, ok] : covered)
    if (!ok)
      throw ValidationError("layer inconsistent with graph: edge {" + g.label(e.first) + ", " +
                            g.label(e.second) + "} is not consecutive in any layer");

  // Processing order: topological over all layer orders, smallest index first.
  std::vector<std::vector<VertexIndex>> succ(n);
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& layer : layers)
    for (std::size_t p = 1; p < layer.size(); ++p) {
      succ[layer[p - 1]].push_back(layer[p]);
      ++indeg[layer[p]];
    }
  std::priority_queue<VertexIndex, std::vector<VertexIndex>, std::greater<>> ready;
  for (VertexIndex v = 0; v < n; ++v)
    if (!layers_of[v].empty() && indeg[v] == 0) ready.push(v);
  std::vector<VertexIndex> order;
  while (!ready.empty()) {
    const auto v = ready.top();
    ready.pop();
    order.push_back(v);
    for (auto u : succ[v])
      if (--indeg[u] == 0) ready.push(u);
  }
  std::size_t layered = 0;
  for (VertexIndex v = 0; v < n; ++v) layered += layers_of[v].empty() ? 0 : 1;
  if (order.size() != layered) throw ValidationError("layer inconsistent with graph: orders are cyclic");

  // frontier[i]: last processed vertex of layer i (n = the dummy start, in the cover).
  const std::size_t states = std::size_t{1} << k;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> cost(states, inf);
  const std::size_t start = states - 1;
  cost[start] = 0.0;
  std::vector<VertexIndex> frontier(k, n);
  struct Back {
    std::size_t prev;
    bool take;
  };
  std::vector<std::vector<Back>> back;
  back.reserve(order.size());

  for (auto v : order) {
    std::uint32_t vmask = 0;
    for (auto i : layers_of[v]) vmask |= 1u << i;
    std::vector<double> next(states, inf);
    std::vector<Back> step(states, {0, false});
    for (std::size_t s = 0; s < states; ++s) {
      if (cost[s] == inf) continue;
      bool forced = false;  // some adjacent predecessor is outside the cover
      for (auto i : layers_of[v]) {
        const auto pred = frontier[i];
        if (pred != n && g.adjacent(pred, v) && !(s >> i & 1)) forced = true;
      }
      for (int take = forced ? 1 : 0; take <= 1; ++take) {
        const std::size_t t = take ? (s | vmask) : (s & ~static_cast<std::size_t>(vmask));
        const double c = cost[s] + (take ? g.weight(v) : 0.0);
        if (c < next[t]) {
          next[t] = c;
          step[t] = {s, take == 1};
        }
      }
    }
    for (auto i : layers_of[v]) frontier[i] = v;
    cost = std::move(next);
    back.push_back(std::move(step));
  }

  std::size_t best = 0;
  for (std::size_t s = 1; s < states; ++s)
    if (cost[s] < cost[best]) best = s;
  std::vector<VertexIndex> members;
  for (std::size_t j = order.size(); j-- > 0;) {
    const auto& b = back[j][best];
    if (b.take) members.push_back(order[j]);
    best = b.prev;
  }
  return make_cover(g, std::move(members));
}

}  // namespace orient
