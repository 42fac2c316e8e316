#include "msdc/matrices.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "closed_form.hpp"
#include "msdc/error.hpp"

namespace msdc {

using detail::factorial;
using detail::falling;
using detail::PowerTable;
using detail::to_double;

void check_order_and_horizon(int n, double h, int max_order, bool allow_zero_horizon) {
  const int limit = std::min(max_order, kAbsoluteMaxOrder);
  if (n < 1 || n > limit) {
    throw Error(ErrorCode::kOrderOutOfRange,
                "order n = " + std::to_string(n) + " outside [1, " + std::to_string(limit) + "]");
  }
  if (!std::isfinite(h) || h < 0.0 || (h == 0.0 && !allow_zero_horizon)) {
    throw Error(ErrorCode::kNonpositiveHorizon, "horizon h = " + std::to_string(h) + " must be positive and finite");
  }
}

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

namespace {

DenseMatrix to_dense(const detail::Square<double>& m) { return DenseMatrix(m.n, m.n, m.v); }

}  // namespace

DenseMatrix build_A(int n, double h, int max_order) {
  check_order_and_horizon(n, h, max_order);
  return to_dense(detail::wronskian_A(n, h));
}

DenseMatrix build_V(int n, double h, int max_order) {
  check_order_and_horizon(n, h, max_order, /*allow_zero_horizon=*/true);
  DenseMatrix v(idx(n), idx(n));
  // h^0 must be exactly 1 even for h = 0, so the table is built directly.
  std::vector<double> hp(idx(n), 1.0);
  for (int k = 1; k < n; ++k) hp[idx(k)] = hp[idx(k - 1)] * h;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) v(idx(i), idx(j)) = to_double(falling(j, i)) * hp[idx(j - i)];
  return v;
}

DenseMatrix build_B(int n, double h, int max_order) {
  check_order_and_horizon(n, h, max_order);
  return to_dense(detail::operator_B(n, h));
}

DenseMatrix build_L(int n, double h, int max_order) {
  check_order_and_horizon(n, h, max_order);
  return to_dense(detail::factor_L(n, h));
}

DenseMatrix build_U(int n, double h, int max_order) {
  check_order_and_horizon(n, h, max_order);
  return to_dense(detail::factor_U(n, h));
}

DenseMatrix build_L_inv(int n, double h, int max_order) {
  check_order_and_horizon(n, h, max_order);
  return to_dense(detail::factor_L_inv(n, h));
}

DenseMatrix build_U_inv(int n, double h, int max_order) {
  check_order_and_horizon(n, h, max_order);
  return to_dense(detail::factor_U_inv(n, h));
}

DenseMatrix build_A_inv(int n, double h, int max_order) {
  check_order_and_horizon(n, h, max_order);
  return to_dense(detail::inverse_A(n, h));
}

DenseMatrix build_K(int n, double h, int max_order) {
  check_order_and_horizon(n, h, max_order);
  return to_dense(detail::gram_K(n, h));
}

DenseMatrix build_taylor_propagator(int n, double h, int max_order) {
  check_order_and_horizon(n, h, max_order);
  const PowerTable hp(h, -n, 2 * n);
  DenseMatrix p(idx(n), idx(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) p(idx(i), idx(j)) = hp(j - i) / to_double(factorial(j - i));
  return p;
}

double det_A(int n, double h, int max_order) {
  check_order_and_horizon(n, h, max_order);
  double superfactorial = 1.0;
  for (int k = 1; k < n; ++k) superfactorial *= to_double(factorial(k));
  double hpow = 1.0;
  for (int k = 0; k < n * n; ++k) hpow *= h;
  return superfactorial * hpow;
}

}  // namespace msdc
