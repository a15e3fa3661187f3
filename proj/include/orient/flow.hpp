#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace orient {

/// Dinic max-flow on real capacities.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t n, double eps = 1e-12) : graph_(n), level_(n), it_(n), eps_(eps) {}

  std::size_t add_edge(std::size_t from, std::size_t to, double cap) {
    graph_[from].push_back({to, graph_[to].size(), cap});
    graph_[to].push_back({from, graph_[from].size() - 1, 0.0});
    return graph_[from].size() - 1;
  }

  double run(std::size_t s, std::size_t t) {
    double flow = 0.0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      for (;;) {
        const double f = dfs(s, t, std::numeric_limits<double>::infinity());
        if (f <= eps_) break;
        flow += f;
      }
    }
    return flow;
  }

  /// Vertices reachable from s in the residual graph: the source side of the
  /// minimum cut with the fewest vertices.
  std::vector<bool> source_side(std::size_t s) const {
    std::vector<bool> seen(graph_.size(), false);
    std::queue<std::size_t> q;
    seen[s] = true;
    q.push(s);
    while (!q.empty()) {
      const auto v = q.front();
      q.pop();
      for (const auto& e : graph_[v])
        if (e.cap > eps_ && !seen[e.to]) {
          seen[e.to] = true;
          q.push(e.to);
        }
    }
    return seen;
  }

 private:
  struct Edge {
    std::size_t to;
    std::size_t rev;
    double cap;
  };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const auto v = q.front();
      q.pop();
      for (const auto& e : graph_[v])
        if (e.cap > eps_ && level_[e.to] < 0) {
          level_[e.to] = level_[v] + 1;
          q.push(e.to);
        }
    }
    return level_[t] >= 0;
  }

  double dfs(std::size_t v, std::size_t t, double pushed) {
    if (v == t) return pushed;
    for (auto& i = it_[v]; i < graph_[v].size(); ++i) {
      auto& e = graph_[v][i];
      if (e.cap <= eps_ || level_[e.to] != level_[v] + 1) continue;
      const double f = dfs(e.to, t, std::min(pushed, e.cap));
      if (f > eps_) {
        e.cap -= f;
        graph_[e.to][e.rev].cap += f;
        return f;
      }
    }
    return 0.0;
  }

  std::vector<std::vector<Edge>> graph_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
  double eps_;
};

}  // namespace orient
