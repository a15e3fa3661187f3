#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "orient/model.hpp"
#include "orient/vcover.hpp"

// Exhaustive reference implementations for tiny instances. They rely only on
// the definitions (what can be proven after a set of queries), not on the
// structural rules the library uses.
namespace orient::brute {

inline constexpr std::size_t kMaxVertices = 16;

/// Whether the minimum of every hyperedge is certain once `query` is revealed.
inline bool orientable(const Instance& inst, const Realization& r, std::uint32_t query) {
  auto known = [&](VertexIndex v) { return (query >> v) & 1U; };
  auto upper = [&](VertexIndex v) { return known(v) ? r[v] : inst.interval(v).hi; };
  auto lower = [&](VertexIndex v) { return known(v) ? r[v] : inst.interval(v).lo; };
  for (const auto& e : inst.hyperedges()) {
    bool certain = false;
    for (auto u : e) {
      bool all = true;
      for (auto x : e) {
        if (x == u) continue;
        const bool ok = known(u) && known(x) ? inst.lighter(u, r[u], x, r[x]) : upper(u) <= lower(x);
        if (!ok) {
          all = false;
          break;
        }
      }
      if (all) {
        certain = true;
        break;
      }
    }
    if (!certain) return false;
  }
  return true;
}

inline double mask_cost(const Instance& inst, std::uint32_t mask) {
  double c = 0.0;
  for (VertexIndex v = 0; v < inst.size(); ++v)
    if ((mask >> v) & 1U) c += inst.cost(v);
  return c;
}

/// All feasible query sets as bitmasks.
inline std::vector<std::uint32_t> feasible_sets(const Instance& inst, const Realization& r) {
  if (inst.size() > kMaxVertices) throw BoundError("brute force limited to 16 vertices");
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1U << inst.size()); ++m)
    if (orientable(inst, r, m)) out.push_back(m);
  return out;
}

/// Intersection of all feasible query sets.
inline std::vector<bool> mandatory(const Instance& inst, const Realization& r) {
  std::uint32_t all = (1U << inst.size()) - 1;
  for (auto m : feasible_sets(inst, r)) all &= m;
  std::vector<bool> out(inst.size());
  for (VertexIndex v = 0; v < inst.size(); ++v) out[v] = (all >> v) & 1U;
  return out;
}

inline double min_feasible_cost(const Instance& inst, const Realization& r) {
  double best = std::numeric_limits<double>::infinity();
  for (auto m : feasible_sets(inst, r)) best = std::min(best, mask_cost(inst, m));
  return best;
}

/// min over feasible Q of c(Q intersect part).
inline double min_feasible_cost_within(const Instance& inst, const Realization& r, std::uint32_t part) {
  double best = std::numeric_limits<double>::infinity();
  for (auto m : feasible_sets(inst, r)) best = std::min(best, mask_cost(inst, m & part));
  return best;
}

/// Minimum weight vertex cover by enumeration.
inline double min_cover_weight(const CoverGraph& g) {
  if (g.size() > 20) throw BoundError("brute force cover limited to 20 vertices");
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t m = 0; m < (1U << g.size()); ++m) {
    bool ok = true;
    for (auto [a, b] : g.edges())
      if (!((m >> a) & 1U) && !((m >> b) & 1U)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    double w = 0.0;
    for (VertexIndex v = 0; v < g.size(); ++v)
      if ((m >> v) & 1U) w += g.weight(v);
    best = std::min(best, w);
  }
  return best;
}

/// Optimal value of the vertex-cover LP by enumerating half-integral points,
/// which contain an optimum.
inline double lp_value(const CoverGraph& g) {
  if (g.size() > 12) throw BoundError("brute force LP limited to 12 vertices");
  std::size_t total = 1;
  for (std::size_t i = 0; i < g.size(); ++i) total *= 3;
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> x(g.size());
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (auto& xi : x) {
      xi = static_cast<int>(c % 3);
      c /= 3;
    }
    bool ok = true;
    for (auto [a, b] : g.edges())
      if (x[a] + x[b] < 2) {
        ok = false;
        break;
      }
    if (!ok) continue;
    double w = 0.0;
    for (VertexIndex v = 0; v < g.size(); ++v) w += 0.5 * x[v] * g.weight(v);
    best = std::min(best, w);
  }
  return best;
}

}  // namespace orient::brute
