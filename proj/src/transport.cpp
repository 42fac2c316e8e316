#include "msdc/transport.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "msdc/cost.hpp"
#include "msdc/error.hpp"
#include "msdc/kernels/kernels.hpp"

namespace msdc {

DiscreteMeasure::DiscreteMeasure(std::vector<BoundaryState> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error(ErrorCode::kSizeMismatch, "discrete measure needs at least one point");
  for (const auto& p : points_) {
    if (p.order() != points_.front().order() || p.dim() != points_.front().dim())
      throw Error(ErrorCode::kShapeMismatch, "all support points must share order and dimension");
  }
}

namespace {

void check_pair(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  if (mu.size() != nu.size()) {
    throw Error(ErrorCode::kSizeMismatch, "measures have different sizes: " + std::to_string(mu.size()) +
                                              " vs " + std::to_string(nu.size()));
  }
  if (mu.order() != nu.order() || mu.dim() != nu.dim())
    throw Error(ErrorCode::kShapeMismatch, "measures live on different spaces (order or dimension differ)");
}

}  // namespace

DenseMatrix ground_cost_matrix(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double h, int max_order) {
  check_pair(mu, nu);
  const std::size_t m = mu.size();
  const int n = mu.order();
  const std::size_t un = static_cast<std::size_t>(n);
  const int d = mu.dim();
  const auto op = cost_operator(n, h, max_order);
  const auto propagate = build_taylor_propagator(n, h, max_order);

  // Targets component-major per coordinate so the kernel runs across columns j.
  std::vector<std::vector<double>> targets(static_cast<std::size_t>(d), std::vector<double>(un * m));
  for (std::size_t j = 0; j < m; ++j)
    for (int c = 0; c < d; ++c)
      for (std::size_t k = 0; k < un; ++k) targets[static_cast<std::size_t>(c)][k * m + j] = nu.points()[j](static_cast<int>(k), c);

  const auto& kernels = kernels::active();
  DenseMatrix out(m, m);
  std::vector<double> shift(un);
  for (std::size_t i = 0; i < m; ++i) {
    const auto ballistic = propagate * mu.points()[i].values();
    for (int c = 0; c < d; ++c) {
      for (std::size_t k = 0; k < un; ++k) shift[k] = ballistic(k, static_cast<std::size_t>(c));
      kernels.shifted_quad_forms(op.data(), un, shift, targets[static_cast<std::size_t>(c)], m, out.row(i));
    }
    for (double& v : out.row(i)) v = std::max(v, 0.0);
  }
  return out;
}

TransportResult solve_assignment(const DenseMatrix& cost) {
  if (!cost.is_square() || cost.rows() == 0)
    throw Error(ErrorCode::kSizeMismatch, "assignment needs a nonempty square cost matrix");
  const std::size_t m = cost.rows();
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // Shortest augmenting path with row/column potentials; 1-based with a
  // virtual column 0. Strict comparisons keep the lowest index on ties.
  std::vector<double> u(m + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> match(m + 1, 0), way(m + 1, 0);
  for (std::size_t row = 1; row <= m; ++row) {
    match[0] = row;
    std::size_t col0 = 0;
    std::vector<double> minv(m + 1, kInf);
    std::vector<bool> used(m + 1, false);
    do {
      used[col0] = true;
      const std::size_t r0 = match[col0];
      double delta = kInf;
      std::size_t col1 = 0;
      for (std::size_t col = 1; col <= m; ++col) {
        if (used[col]) continue;
        const double cur = cost(r0 - 1, col - 1) - u[r0] - v[col];
        if (cur < minv[col]) {
          minv[col] = cur;
          way[col] = col0;
        }
        if (minv[col] < delta) {
          delta = minv[col];
          col1 = col;
        }
      }
      for (std::size_t col = 0; col <= m; ++col) {
        if (used[col]) {
          u[match[col]] += delta;
          v[col] -= delta;
        } else {
          minv[col] -= delta;
        }
      }
      col0 = col1;
    } while (match[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      match[col0] = match[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  TransportResult result;
  result.assignment.resize(m);
  for (std::size_t col = 1; col <= m; ++col) result.assignment[match[col] - 1] = col - 1;
  for (std::size_t i = 0; i < m; ++i) result.value += cost(i, result.assignment[i]);
  return result;
}

TransportResult w2_uniform(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double h, int max_order) {
  check_pair(mu, nu);
  if (mu.size() > kMaxTransportSize) {
    throw Error(ErrorCode::kSizeMismatch, "measure size " + std::to_string(mu.size()) + " exceeds limit " +
                                              std::to_string(kMaxTransportSize));
  }
  auto result = solve_assignment(ground_cost_matrix(mu, nu, h, max_order));
  result.value /= static_cast<double>(mu.size());
  return result;
}

}  // namespace msdc
