#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "msdc/cost.hpp"

namespace msdc::testing {

struct ProblemRanges {
  int max_order = 8;
  int max_dim = 3;
  double min_h = 0.1;
  double max_h = 10.0;
  double max_abs_value = 5.0;
};

inline BoundaryState random_state(std::mt19937_64& rng, int n, int d, double max_abs_value) {
  std::uniform_real_distribution<double> value(-max_abs_value, max_abs_value);
  DenseMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(d));
  for (double& v : m.data()) v = value(rng);
  return BoundaryState(std::move(m));
}

/// Order and dimension uniform, horizon log-uniform, boundary values uniform.
inline CostProblem random_problem(std::mt19937_64& rng, const ProblemRanges& r = {}) {
  const int n = std::uniform_int_distribution<int>(1, r.max_order)(rng);
  const int d = std::uniform_int_distribution<int>(1, r.max_dim)(rng);
  const double h =
      std::exp(std::uniform_real_distribution<double>(std::log(r.min_h), std::log(r.max_h))(rng));
  auto x = random_state(rng, n, d, r.max_abs_value);
  auto y = random_state(rng, n, d, r.max_abs_value);
  return CostProblem(h, std::move(x), std::move(y));
}

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace msdc::testing
