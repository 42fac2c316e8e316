#include "msdc/cost.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "closed_form.hpp"
#include "msdc/error.hpp"
#include "msdc/kernels/kernels.hpp"

namespace msdc {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

std::vector<double> column(const DenseMatrix& m, std::size_t c) {
  std::vector<double> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = m(r, c);
  return out;
}

/// sum over coordinates of b_c^T M b_c, plus the magnitude
/// sum |b_c|^T |M| |b_c| used to judge rounding noise.
std::pair<double, double> summed_form(const DenseMatrix& op, const DenseMatrix& b) {
  double total = 0.0;
  double magnitude = 0.0;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    const auto v = column(b, c);
    total += quadratic_form(op, v);
    for (std::size_t i = 0; i < op.rows(); ++i)
      for (std::size_t j = 0; j < op.cols(); ++j) magnitude += std::abs(v[i] * op(i, j) * v[j]);
  }
  return {total, magnitude};
}

double max_abs_state(const BoundaryState& s) { return max_abs(s.values()); }

}  // namespace

CostProblem::CostProblem(double h, BoundaryState start, BoundaryState end, int max_order)
    : h_(h), start_(std::move(start)), end_(std::move(end)), max_order_(max_order) {
  check_order_and_horizon(start_.order(), h_, max_order_);
  if (start_.order() != end_.order() || start_.dim() != end_.dim()) {
    throw Error(ErrorCode::kShapeMismatch,
                "endpoint shapes differ: start is " + std::to_string(start_.order()) + "x" +
                    std::to_string(start_.dim()) + ", end is " + std::to_string(end_.order()) + "x" +
                    std::to_string(end_.dim()));
  }
}

std::string_view to_string(CostRoute route) noexcept {
  switch (route) {
    case CostRoute::kClosedForm: return "alg51";
    case CostRoute::kKForm: return "kform";
    case CostRoute::kScaled: return "scaled";
  }
  return "unknown";
}

DenseMatrix build_b(const CostProblem& problem) {
  const int n = problem.order();
  const auto p = build_taylor_propagator(n, problem.horizon(), problem.max_order());
  const DenseMatrix& x = problem.start().values();
  const DenseMatrix& y = problem.end().values();
  DenseMatrix b = y;
  for (int i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      double s = 0.0;
      for (int j = i; j < n; ++j) s += p(idx(i), idx(j)) * x(idx(j), c);
      b(idx(i), c) -= s;
    }
  }
  return b;
}

DenseMatrix cost_operator(int n, double h, int max_order) {
  return build_B(n, h, max_order) * build_A_inv(n, h, max_order);
}

DenseMatrix hessian_H(int n, double h, int max_order) {
  const auto m = cost_operator(n, h, max_order);
  DenseMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      const double v = 0.5 * (m(i, j) + m(j, i));
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return out;
}

namespace {

/// a = A^{-1} b and a^T K a, evaluated in extended precision: K is a scaled
/// Hilbert matrix and the form cancels heavily for n >= 6 in plain double.
std::pair<double, double> gram_form(const CostProblem& problem, const DenseMatrix& b) {
  using Ext = long double;
  const int n = problem.order();
  const auto h = static_cast<Ext>(problem.horizon());
  const auto ainv = detail::inverse_A<Ext>(n, h);
  const auto gram = detail::gram_K<Ext>(n, h);
  Ext total = 0;
  Ext magnitude = 0;
  std::vector<Ext> a(idx(n));
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (int i = 0; i < n; ++i) {
      Ext s = 0;
      for (int j = 0; j < n; ++j) s += ainv(i, j) * static_cast<Ext>(b(idx(j), c));
      a[idx(i)] = s;
    }
    for (int i = 0; i < n; ++i) {
      Ext row = 0;
      for (int j = 0; j < n; ++j) {
        row += gram(i, j) * a[idx(j)];
        magnitude += std::abs(a[idx(i)] * gram(i, j) * a[idx(j)]);
      }
      total += a[idx(i)] * row;
    }
  }
  return {static_cast<double>(total), static_cast<double>(magnitude)};
}

}  // namespace

double cost_via_K(const CostProblem& problem) {
  check_order_and_horizon(problem.order(), problem.horizon(), problem.max_order());
  return gram_form(problem, build_b(problem)).first;
}

namespace {

std::pair<double, double> scaled_form(const CostProblem& problem, const DenseMatrix& b) {
  const int n = problem.order();
  const double h = problem.horizon();
  DenseMatrix scaled = b;
  double hi = 1.0;
  for (int i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < scaled.cols(); ++c) scaled(idx(i), c) *= hi;
    hi *= h;
  }
  double prefactor = 1.0;
  for (int k = 0; k < 2 * n - 1; ++k) prefactor *= h;
  prefactor = 1.0 / prefactor;
  auto [total, magnitude] = summed_form(cost_operator(n, 1.0, problem.max_order()), scaled);
  return {prefactor * total, prefactor * magnitude};
}

}  // namespace

double cost_scaled(const CostProblem& problem) { return scaled_form(problem, build_b(problem)).first; }

CostBreakdown cost(const CostProblem& problem, CostRoute route) {
  CostBreakdown out;
  out.route = route;
  out.b_vector = build_b(problem);
  const int n = problem.order();
  const double h = problem.horizon();

  double total = 0.0;
  double magnitude = 0.0;
  switch (route) {
    case CostRoute::kClosedForm:
      std::tie(total, magnitude) = summed_form(cost_operator(n, h, problem.max_order()), out.b_vector);
      break;
    case CostRoute::kKForm:
      std::tie(total, magnitude) = gram_form(problem, out.b_vector);
      break;
    case CostRoute::kScaled:
      std::tie(total, magnitude) = scaled_form(problem, out.b_vector);
      break;
  }

  const double noise_floor = 1e-9 * std::max(1.0, magnitude);
  if (total < 0.0) {
    if (total < -noise_floor) {
      throw Error(ErrorCode::kInternalConsistency,
                  "cost evaluated to " + std::to_string(total) + ", below the rounding-noise floor");
    }
    total = 0.0;
    out.numerical_noise = true;
  }
  out.total = total;
  return out;
}

TrajectoryPolynomial solve_trajectory(const CostProblem& problem) {
  const int n = problem.order();
  const int d = problem.dim();
  const auto tail = build_A_inv(n, problem.horizon(), problem.max_order()) * build_b(problem);
  TrajectoryPolynomial poly{n, problem.horizon(), DenseMatrix(idx(2 * n), idx(d))};
  for (int k = 0; k < n; ++k) {
    const double inv_fact = 1.0 / detail::to_double(detail::factorial(k));
    for (int c = 0; c < d; ++c) poly.coeffs(idx(k), idx(c)) = problem.start()(k, c) * inv_fact;
  }
  for (int k = 0; k < n; ++k)
    for (int c = 0; c < d; ++c) poly.coeffs(idx(n + k), idx(c)) = tail(idx(k), idx(c));
  return poly;
}

std::vector<double> derivative_coefficients(const TrajectoryPolynomial& poly, int k, int c) {
  if (k < 0) throw Error(ErrorCode::kDerivativeOrderOutOfRange, "derivative order must be nonnegative");
  const int rows = static_cast<int>(poly.coeffs.rows());
  std::vector<double> out;
  for (int i = k; i < rows; ++i)
    out.push_back(detail::to_double(detail::falling(i, k)) * poly.coeffs(idx(i), idx(c)));
  return out;
}

TrajectorySample eval_trajectory(const TrajectoryPolynomial& poly, int k, double t) {
  if (k < 0) throw Error(ErrorCode::kDerivativeOrderOutOfRange, "derivative order must be nonnegative");
  TrajectorySample out;
  out.extrapolated = t < 0.0 || t > poly.horizon;
  out.values.resize(idx(poly.dim()));
  for (int c = 0; c < poly.dim(); ++c) {
    const auto coeffs = derivative_coefficients(poly, k, c);
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    out.values[idx(c)] = acc;
  }
  return out;
}

DenseMatrix sample_trajectory(const TrajectoryPolynomial& poly, int k, std::span<const double> times) {
  if (k < 0) throw Error(ErrorCode::kDerivativeOrderOutOfRange, "derivative order must be nonnegative");
  DenseMatrix out(times.size(), idx(poly.dim()));
  std::vector<double> buffer(times.size());
  const auto& kernels = kernels::active();
  for (int c = 0; c < poly.dim(); ++c) {
    const auto coeffs = derivative_coefficients(poly, k, c);
    kernels.polyval(coeffs, times, buffer);
    for (std::size_t j = 0; j < times.size(); ++j) out(j, idx(c)) = buffer[j];
  }
  return out;
}

bool is_free_flight(const CostProblem& problem, double tol) {
  const double scale = std::max(max_abs_state(problem.start()), max_abs_state(problem.end()));
  return max_abs(build_b(problem)) <= tol * (1.0 + scale);
}

BoundaryState free_flight_target(int n, double h, const BoundaryState& start, int max_order) {
  if (start.order() != n)
    throw Error(ErrorCode::kShapeMismatch, "start state order does not match n = " + std::to_string(n));
  return BoundaryState(build_taylor_propagator(n, h, max_order) * start.values());
}

CostProblem reduce_order(const CostProblem& problem) {
  const int n = problem.order();
  if (n < 2) throw Error(ErrorCode::kOrderTooSmall, "cannot reduce an order-1 problem");
  const auto drop_position = [&](const BoundaryState& s) {
    DenseMatrix m(idx(n - 1), idx(s.dim()));
    for (int k = 1; k < n; ++k)
      for (int c = 0; c < s.dim(); ++c) m(idx(k - 1), idx(c)) = s(k, c);
    return BoundaryState(std::move(m));
  };
  return CostProblem(problem.horizon(), drop_position(problem.start()), drop_position(problem.end()),
                     problem.max_order());
}

}  // namespace msdc
