#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orient/orient.hpp"

namespace testing_helpers {

using namespace orient;

/// Vertex with cost c on (lo, hi) whose pmf has the given (cell end, mass) pairs.
inline UncertainVertex vert(std::string id, double lo, double hi, std::vector<std::pair<double, double>> cells,
                            double c = 1.0) {
  return orient::detail::make_vertex(std::move(id), c, lo, hi, std::move(cells));
}

/// Vertex with all mass spread uniformly over its interval.
inline UncertainVertex flat(std::string id, double lo, double hi, double c = 1.0) {
  return vert(std::move(id), lo, hi, {{hi, 1.0}}, c);
}

inline Realization weights(std::vector<double> w) { return Realization{std::move(w)}; }

}  // namespace testing_helpers
