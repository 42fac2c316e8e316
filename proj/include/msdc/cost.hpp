#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "msdc/boundary_state.hpp"
#include "msdc/dense_matrix.hpp"
#include "msdc/matrices.hpp"

namespace msdc {

/// Minimise the integral of |xi^{(n)}(t)|^2 over [0, h] subject to the
/// derivative stacks `start` at t = 0 and `end` at t = h.
class CostProblem {
 public:
  /// Validates h > 0, 1 <= n <= max_order, and matching endpoint shapes.
  CostProblem(double h, BoundaryState start, BoundaryState end,
              int max_order = kDefaultMaxOrder);

  int order() const noexcept { return start_.order(); }
  int dim() const noexcept { return start_.dim(); }
  double horizon() const noexcept { return h_; }
  int max_order() const noexcept { return max_order_; }
  const BoundaryState& start() const noexcept { return start_; }
  const BoundaryState& end() const noexcept { return end_; }

 private:
  double h_;
  BoundaryState start_;
  BoundaryState end_;
  int max_order_;
};

enum class CostRoute { kClosedForm, kKForm, kScaled };

std::string_view to_string(CostRoute route) noexcept;

struct CostBreakdown {
  double total = 0.0;
  CostRoute route = CostRoute::kClosedForm;
  /// Residual b = y - P x, n x d.
  DenseMatrix b_vector;
  /// Set when a slightly negative rounding result was clamped to zero.
  bool numerical_noise = false;
};

/// Optimal curve xi(t) = sum_i a_i t^i, i = 0..2n-1, per coordinate.
struct TrajectoryPolynomial {
  int order = 0;
  double horizon = 0.0;
  /// 2n x d; row i is a_i.
  DenseMatrix coeffs;

  int dim() const noexcept { return static_cast<int>(coeffs.cols()); }
};

struct TrajectorySample {
  std::vector<double> values;  // d entries
  bool extrapolated = false;   // t outside [0, h]
};

inline constexpr double kDefaultFreeFlightTol = 1e-10;

/// b[i] = y_i - sum_{j=i}^{n-1} h^{j-i}/(j-i)! x_j, per coordinate.
DenseMatrix build_b(const CostProblem& problem);

/// Cost via the selected route; the default is b^T B A^{-1} b with the
/// closed-form inverse. Totals within rounding noise below zero are
/// clamped (and flagged); anything more negative raises kInternalConsistency.
CostBreakdown cost(const CostProblem& problem, CostRoute route = CostRoute::kClosedForm);

/// a = A^{-1} b, then a^T K a.
double cost_via_K(const CostProblem& problem);

/// h^{1-2n} b~^T B(1) A(1)^{-1} b~ with b~[i] = h^i b[i].
double cost_scaled(const CostProblem& problem);

/// B A^{-1}; the matrix whose quadratic form in b is the cost.
DenseMatrix cost_operator(int n, double h, int max_order = kDefaultMaxOrder);

/// Symmetric part of B A^{-1}. Exactly symmetric.
DenseMatrix hessian_H(int n, double h, int max_order = kDefaultMaxOrder);

TrajectoryPolynomial solve_trajectory(const CostProblem& problem);

/// k-th derivative at time t. Throws kDerivativeOrderOutOfRange for k < 0;
/// orders above the degree evaluate to zero.
TrajectorySample eval_trajectory(const TrajectoryPolynomial& poly, int k, double t);

/// Coefficients (ascending powers of t) of the k-th derivative of
/// coordinate c. Empty when k exceeds the degree.
std::vector<double> derivative_coefficients(const TrajectoryPolynomial& poly, int k, int c);

/// k-th derivative at many times; result is times.size() x d. Runs on the
/// dispatched polyval kernel.
DenseMatrix sample_trajectory(const TrajectoryPolynomial& poly, int k, std::span<const double> times);

/// max|b| <= tol * (1 + max|inputs|).
bool is_free_flight(const CostProblem& problem, double tol = kDefaultFreeFlightTol);

/// The unique end state reached at zero cost: y_j = sum_{i>=j} h^{i-j}/(i-j)! x_i.
BoundaryState free_flight_target(int n, double h, const BoundaryState& start,
                                 int max_order = kDefaultMaxOrder);

/// Drops x_0 and y_0, giving the (n-1)-order problem solved by the
/// derivative of the optimal curve. Throws kOrderTooSmall for n = 1.
CostProblem reduce_order(const CostProblem& problem);

}  // namespace msdc
