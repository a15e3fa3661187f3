#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orient/common.hpp"

namespace orient {

/// Open interval (lo, hi).
struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double length() const { return hi - lo; }
  bool contains(double w) const { return lo < w && w < hi; }
  bool intersects(const Interval& o) const { return std::max(lo, o.lo) < std::min(hi, o.hi); }
  // Set inclusion of open intervals.
  bool within(const Interval& o) const { return o.lo <= lo && hi <= o.hi; }
  double overlap(const Interval& o) const {
    return std::max(0.0, std::min(hi, o.hi) - std::max(lo, o.lo));
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct PmfCell {
  Interval cell;
  double mass = 0.0;

  friend bool operator==(const PmfCell&, const PmfCell&) = default;
};

inline constexpr double kMassTolerance = 1e-9;

/// Piecewise-uniform distribution: uniform density inside each cell.
class Pmf {
 public:
  Pmf() = default;
  explicit Pmf(std::vector<PmfCell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end(),
              [](const PmfCell& a, const PmfCell& b) { return a.cell.lo < b.cell.lo; });
  }

  /// Single uniform cell over `support`.
  static Pmf uniform(const Interval& support) { return Pmf({{support, 1.0}}); }

  const std::vector<PmfCell>& cells() const { return cells_; }

  /// P[w in window], integrating the uniform density of each cell.
  double mass_in(const Interval& window) const {
    double p = 0.0;
    for (const auto& c : cells_) {
      if (c.mass <= 0.0) continue;
      const double ov = c.cell.overlap(window);
      if (ov > 0.0) p += c.mass * ov / c.cell.length();
    }
    return std::min(p, 1.0);
  }

  double total_mass() const {
    return std::accumulate(cells_.begin(), cells_.end(), 0.0,
                           [](double s, const PmfCell& c) { return s + c.mass; });
  }

  /// Throws ValidationError unless this is a distribution supported on `support`.
  void validate(const Interval& support, const std::string& owner) const {
    if (cells_.empty()) throw ValidationError("vertex '" + owner + "': empty pmf");
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      const auto& c = cells_[i];
      if (!(c.cell.lo < c.cell.hi))
        throw ValidationError("vertex '" + owner + "': pmf cell with non-positive length");
      if (!(c.mass >= 0.0 && c.mass <= 1.0 + kMassTolerance))
        throw ValidationError("vertex '" + owner + "': pmf mass outside [0,1]");
      if (!c.cell.within(support))
        throw ValidationError("vertex '" + owner + "': pmf cell outside interval");
      if (i > 0 && cells_[i - 1].cell.hi > c.cell.lo)
        throw ValidationError("vertex '" + owner + "': overlapping pmf cells");
    }
    if (cells_.front().cell.lo != support.lo || cells_.back().cell.hi != support.hi)
      throw ValidationError("vertex '" + owner + "': pmf cells do not span the interval");
    if (std::abs(total_mass() - 1.0) > kMassTolerance)
      throw ValidationError("vertex '" + owner + "': pmf mass sum is not 1");
  }

  friend bool operator==(const Pmf&, const Pmf&) = default;

 private:
  std::vector<PmfCell> cells_;
};

struct UncertainVertex {
  std::string id;
  double cost = 1.0;
  Interval interval;
  Pmf pmf;

  friend bool operator==(const UncertainVertex&, const UncertainVertex&) = default;
};

enum class InstanceKind { graph, hypergraph };

/// Vertices with uncertain weights plus the hyperedges to orient.
///
/// Hyperedge members are stored in left order: non-decreasing left endpoint,
/// ties broken by smaller right endpoint, then by id. The first member is the
/// hyperedge's leftmost vertex.
class Instance {
 public:
  Instance() = default;

  Instance(std::vector<UncertainVertex> vertices, std::vector<std::vector<VertexIndex>> hyperedges)
      : vertices_(std::move(vertices)), hyperedges_(std::move(hyperedges)) {
    finish();
  }

  static Instance from_ids(std::vector<UncertainVertex> vertices,
                           const std::vector<std::vector<std::string>>& hyperedges) {
    std::unordered_map<std::string, VertexIndex> index;
    for (VertexIndex i = 0; i < vertices.size(); ++i) index.emplace(vertices[i].id, i);
    std::vector<std::vector<VertexIndex>> edges;
    edges.reserve(hyperedges.size());
    for (const auto& e : hyperedges) {
      std::vector<VertexIndex> members;
      for (const auto& id : e) {
        auto it = index.find(id);
        if (it == index.end()) throw ValidationError("hyperedge references unknown id '" + id + "'");
        members.push_back(it->second);
      }
      edges.push_back(std::move(members));
    }
    return Instance(std::move(vertices), std::move(edges));
  }

  std::size_t size() const { return vertices_.size(); }
  const std::vector<UncertainVertex>& vertices() const { return vertices_; }
  const UncertainVertex& vertex(VertexIndex v) const { return vertices_[v]; }
  const Interval& interval(VertexIndex v) const { return vertices_[v].interval; }
  double cost(VertexIndex v) const { return vertices_[v].cost; }
  const std::vector<std::vector<VertexIndex>>& hyperedges() const { return hyperedges_; }
  InstanceKind kind() const { return kind_; }
  bool is_graph() const { return kind_ == InstanceKind::graph; }

  std::optional<VertexIndex> find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  VertexIndex at(const std::string& id) const {
    auto v = find(id);
    if (!v) throw std::out_of_range("unknown vertex id '" + id + "'");
    return *v;
  }

  /// Position of the vertex id in lexicographic order.
  std::size_t id_rank(VertexIndex v) const { return id_rank_[v]; }

  /// Strict left order used to pick leftmost vertices.
  bool left_before(VertexIndex a, VertexIndex b) const {
    const auto& ia = interval(a);
    const auto& ib = interval(b);
    if (ia.lo != ib.lo) return ia.lo < ib.lo;
    if (ia.hi != ib.hi) return ia.hi < ib.hi;
    return id_rank_[a] < id_rank_[b];
  }

  /// Strict order on (weight, id) used when weights tie.
  bool lighter(VertexIndex a, double wa, VertexIndex b, double wb) const {
    if (wa != wb) return wa < wb;
    return id_rank_[a] < id_rank_[b];
  }

  /// Hyperedges incident to each vertex.
  const std::vector<std::vector<std::size_t>>& incidence() const { return incidence_; }

  double total_cost() const {
    double c = 0.0;
    for (const auto& v : vertices_) c += v.cost;
    return c;
  }

  double cost_of(const std::vector<VertexIndex>& set) const {
    double c = 0.0;
    for (auto v : set) c += vertices_[v].cost;
    return c;
  }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.vertices_ == b.vertices_ && a.hyperedges_ == b.hyperedges_;
  }

 private:
  void finish() {
    index_.clear();
    for (VertexIndex i = 0; i < vertices_.size(); ++i) {
      const auto& v = vertices_[i];
      if (v.id.empty()) throw ValidationError("vertex with empty id");
      if (!index_.emplace(v.id, i).second) throw ValidationError("duplicate vertex id '" + v.id + "'");
      if (!(v.cost > 0.0) || !std::isfinite(v.cost))
        throw ValidationError("vertex '" + v.id + "': cost must be positive");
      if (!(v.interval.lo < v.interval.hi) || !std::isfinite(v.interval.lo) ||
          !std::isfinite(v.interval.hi))
        throw ValidationError("vertex '" + v.id + "': interval needs lo < hi");
      v.pmf.validate(v.interval, v.id);
    }
    std::vector<VertexIndex> by_id(vertices_.size());
    std::iota(by_id.begin(), by_id.end(), VertexIndex{0});
    std::sort(by_id.begin(), by_id.end(),
              [&](VertexIndex a, VertexIndex b) { return vertices_[a].id < vertices_[b].id; });
    id_rank_.assign(vertices_.size(), 0);
    for (std::size_t r = 0; r < by_id.size(); ++r) id_rank_[by_id[r]] = r;

    kind_ = InstanceKind::graph;
    incidence_.assign(vertices_.size(), {});
    for (std::size_t e = 0; e < hyperedges_.size(); ++e) {
      auto& members = hyperedges_[e];
      if (members.size() < 2) throw ValidationError("hyperedge with fewer than 2 members");
      for (auto v : members)
        if (v >= vertices_.size()) throw ValidationError("hyperedge references unknown vertex");
      std::sort(members.begin(), members.end(),
                [&](VertexIndex a, VertexIndex b) { return left_before(a, b); });
      if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw ValidationError("hyperedge lists a vertex twice");
      if (members.size() != 2) kind_ = InstanceKind::hypergraph;
      for (auto v : members) incidence_[v].push_back(e);
    }
  }

  std::vector<UncertainVertex> vertices_;
  std::vector<std::vector<VertexIndex>> hyperedges_;
  std::unordered_map<std::string, VertexIndex> index_;
  std::vector<std::size_t> id_rank_;
  std::vector<std::vector<std::size_t>> incidence_;
  InstanceKind kind_ = InstanceKind::graph;
};

/// One concrete weight per vertex, indexed like the owning instance.
struct Realization {
  std::vector<double> weights;

  double operator[](VertexIndex v) const { return weights[v]; }

  void validate(const Instance& inst) const {
    if (weights.size() != inst.size()) throw ValidationError("realization size mismatch");
    for (VertexIndex v = 0; v < inst.size(); ++v)
      if (!inst.interval(v).contains(weights[v]))
        throw ValidationError("weight of '" + inst.vertex(v).id + "' outside its interval");
  }
};

enum class Stage { preprocess, stage1, stage2 };

inline const char* to_string(Stage s) {
  switch (s) {
    case Stage::preprocess: return "preprocess";
    case Stage::stage1: return "stage1";
    case Stage::stage2: return "stage2";
  }
  return "?";
}

struct QueryStep {
  VertexIndex vertex;
  double weight;
  Stage stage;
};

/// Ordered record of the queries an algorithm made against one realization.
class QueryTranscript {
 public:
  explicit QueryTranscript(std::size_t n = 0) : queried_(n, false) {}

  bool queried(VertexIndex v) const { return queried_[v]; }
  const std::vector<QueryStep>& steps() const { return steps_; }
  double total_cost() const { return total_cost_; }

  double stage_cost(const Instance& inst, Stage s) const {
    double c = 0.0;
    for (const auto& st : steps_)
      if (st.stage == s) c += inst.cost(st.vertex);
    return c;
  }

  std::vector<VertexIndex> queried_set() const {
    std::vector<VertexIndex> out;
    for (VertexIndex v = 0; v < queried_.size(); ++v)
      if (queried_[v]) out.push_back(v);
    return out;
  }

  const std::vector<bool>& queried_mask() const { return queried_; }

  /// Queries `v` unless it was queried before; returns whether a query happened.
  bool query(const Instance& inst, const Realization& r, VertexIndex v, Stage s) {
    if (queried_[v]) return false;
    queried_[v] = true;
    steps_.push_back({v, r[v], s});
    total_cost_ += inst.cost(v);
    return true;
  }

 private:
  std::vector<bool> queried_;
  std::vector<QueryStep> steps_;
  double total_cost_ = 0.0;
};

// ---------------------------------------------------------------------------
// Preprocessing

struct Reduction {
  Instance instance;
  std::vector<std::string> forced;  // ids, in the order they were forced
};

/// Removes members disjoint from the leftmost interval and forces (removes)
/// leftmost vertices that contain another member's interval, until fixpoint.
inline Reduction reduce(const Instance& inst) {
  const std::size_t n = inst.size();
  std::vector<bool> alive(n, true);
  std::vector<std::vector<VertexIndex>> edges = inst.hyperedges();
  std::vector<std::string> forced;

  auto by_left = [&](VertexIndex a, VertexIndex b) { return inst.left_before(a, b); };
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& e : edges) {
      std::erase_if(e, [&](VertexIndex v) { return !alive[v]; });
      std::sort(e.begin(), e.end(), by_left);
      if (e.size() < 2) continue;
      const auto& left = inst.interval(e.front());
      auto disjoint = [&](VertexIndex v) { return !inst.interval(v).intersects(left); };
      if (std::any_of(e.begin() + 1, e.end(), disjoint)) {
        e.erase(std::remove_if(e.begin() + 1, e.end(), disjoint), e.end());
        changed = true;
      }
      if (e.size() < 2) continue;
      const bool contains_other = std::any_of(e.begin() + 1, e.end(), [&](VertexIndex v) {
        return inst.interval(v).within(left);
      });
      if (contains_other) {
        alive[e.front()] = false;
        forced.push_back(inst.vertex(e.front()).id);
        changed = true;
      }
    }
  }

  std::vector<VertexIndex> remap(n, n);
  std::vector<UncertainVertex> verts;
  for (VertexIndex v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    remap[v] = verts.size();
    verts.push_back(inst.vertex(v));
  }
  std::vector<std::vector<VertexIndex>> kept;
  for (const auto& e : edges) {
    std::vector<VertexIndex> m;
    for (auto v : e)
      if (alive[v]) m.push_back(remap[v]);
    if (m.size() >= 2) kept.push_back(std::move(m));
  }
  return {Instance(std::move(verts), std::move(kept)), std::move(forced)};
}

/// Whether `reduce` leaves the instance unchanged.
inline bool is_reduced(const Instance& inst) {
  for (const auto& e : inst.hyperedges()) {
    const auto& left = inst.interval(e.front());
    for (std::size_t i = 1; i < e.size(); ++i) {
      const auto& iv = inst.interval(e[i]);
      if (!iv.intersects(left) || iv.within(left)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Elementary intervals

/// Sorted distinct interval endpoints; consecutive pairs are the elementary intervals.
inline std::vector<double> elementary_grid(const Instance& inst) {
  std::vector<double> t;
  t.reserve(2 * inst.size());
  for (const auto& v : inst.vertices()) {
    t.push_back(v.interval.lo);
    t.push_back(v.interval.hi);
  }
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

/// Per-vertex masses over the elementary intervals of an instance.
///
/// Mandatoriness depends only on which elementary interval each weight falls
/// in, so algorithms and estimators can work on cell indices instead of weights.
class ProbabilityMatrix {
 public:
  explicit ProbabilityMatrix(const Instance& inst) : grid_(elementary_grid(inst)) {
    first_.resize(inst.size());
    rows_.resize(inst.size());
    cumulative_.resize(inst.size());
    for (VertexIndex v = 0; v < inst.size(); ++v) {
      const auto& iv = inst.interval(v);
      first_[v] = cell_of_point(iv.lo);
      const std::size_t last = cell_of_point(iv.hi);
      auto& row = rows_[v];
      for (std::size_t j = first_[v]; j < last; ++j) {
        row.push_back(inst.vertex(v).pmf.mass_in({grid_[j], grid_[j + 1]}));
      }
      double acc = 0.0;
      for (double m : row) {
        acc += m;
        cumulative_[v].push_back(acc);
      }
    }
  }

  const std::vector<double>& grid() const { return grid_; }
  std::size_t cell_count() const { return grid_.size() < 2 ? 0 : grid_.size() - 1; }

  /// Global index of the first elementary interval inside vertex v's interval.
  std::size_t first_cell(VertexIndex v) const { return first_.at(v); }
  /// Masses of vertex v over its elementary intervals, starting at first_cell(v).
  const std::vector<double>& row(VertexIndex v) const { return rows_[v]; }

  double mass(VertexIndex v, std::size_t cell) const {
    const auto f = first_.at(v);
    if (cell < f || cell - f >= rows_[v].size()) return 0.0;
    return rows_[v][cell - f];
  }

  Interval cell(std::size_t j) const { return {grid_[j], grid_[j + 1]}; }

  /// Index of the elementary interval containing w (w must not be a grid point).
  std::size_t cell_of(double w) const {
    auto it = std::upper_bound(grid_.begin(), grid_.end(), w);
    return static_cast<std::size_t>(it - grid_.begin()) - 1;
  }

  /// Draws a global cell index for vertex v.
  std::size_t sample_cell(VertexIndex v, Rng& rng) const {
    const auto& cum = cumulative_[v];
    const double u = uniform01(rng) * cum.back();
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    std::size_t k = static_cast<std::size_t>(it - cum.begin());
    if (k >= cum.size()) k = cum.size() - 1;
    return first_.at(v) + k;
  }

 private:
  std::size_t cell_of_point(double t) const {
    return static_cast<std::size_t>(std::lower_bound(grid_.begin(), grid_.end(), t) - grid_.begin());
  }

  std::vector<double> grid_;
  std::vector<std::size_t> first_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::vector<double>> cumulative_;
};

// ---------------------------------------------------------------------------
// Sampling

/// Draws a weight for one vertex: a cell by mass, then uniform inside the cell.
/// Exact hits on a cell endpoint are redrawn.
inline double sample_weight(const UncertainVertex& v, Rng& rng) {
  const auto& cells = v.pmf.cells();
  const double total = v.pmf.total_mass();
  for (;;) {
    double u = uniform01(rng) * total;
    std::size_t k = 0;
    for (; k + 1 < cells.size(); ++k) {
      if (cells[k].mass > 0.0 && u < cells[k].mass) break;
      u -= cells[k].mass;
    }
    while (cells[k].mass <= 0.0 && k > 0) --k;
    const auto& c = cells[k].cell;
    const double w = c.lo + uniform01(rng) * c.length();
    if (c.contains(w)) return w;
  }
}

inline Realization sample_realization(const Instance& inst, Rng& rng) {
  Realization r;
  r.weights.reserve(inst.size());
  for (const auto& v : inst.vertices()) r.weights.push_back(sample_weight(v, rng));
  return r;
}

}  // namespace orient
