#include "msdc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "msdc/error.hpp"

namespace msdc::oracle {

namespace {

#include "gauss_legendre_table.inc"

constexpr double kPivotThreshold = 1e-13;

// Elimination accumulates in extended precision; the structured matrices
// checked here lose about eight digits to pivot growth in plain double.
using Ext = long double;

class Work {
 public:
  Work(const DenseMatrix& m) : rows_(m.rows()), cols_(m.cols()), v_(m.data().begin(), m.data().end()) {}
  Ext& operator()(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }
  Ext operator()(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Ext> v_;
};

void swap_rows(Work& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

std::size_t pivot_row(const Work& m, std::size_t col) {
  std::size_t best = col;
  for (std::size_t r = col + 1; r < m.rows(); ++r)
    if (std::abs(m(r, col)) > std::abs(m(best, col))) best = r;
  return best;
}

/// Power of two nearest below max|v|, so scaling by its reciprocal is exact.
double binade(double v) {
  int e = 0;
  std::frexp(v, &e);
  return std::ldexp(1.0, e - 1);
}

}  // namespace

DenseMatrix pivoted_solve(const DenseMatrix& a, const DenseMatrix& rhs) {
  if (!a.is_square()) throw Error(ErrorCode::kShapeMismatch, "pivoted_solve: matrix is not square");
  if (rhs.rows() != a.rows()) throw Error(ErrorCode::kShapeMismatch, "pivoted_solve: rhs row count differs");
  const std::size_t n = a.rows();

  // Exact power-of-two row then column equilibration, so the singularity
  // threshold does not trip on graded matrices like A_n(h) for small h.
  Work lu(a);
  Work x(rhs);
  std::vector<Ext> col_scale(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    double m = 0.0;
    for (std::size_t j = 0; j < n; ++j) m = std::max(m, std::abs(a(i, j)));
    if (m == 0.0) continue;
    const Ext s = 1 / static_cast<Ext>(binade(m));
    for (std::size_t j = 0; j < n; ++j) lu(i, j) *= s;
    for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) *= s;
  }
  Ext largest = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Ext m = 0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(lu(i, j)));
    if (m == 0) continue;
    col_scale[j] = 1 / static_cast<Ext>(binade(static_cast<double>(m)));
    for (std::size_t i = 0; i < n; ++i) {
      lu(i, j) *= col_scale[j];
      largest = std::max(largest, std::abs(lu(i, j)));
    }
  }
  const Ext threshold = static_cast<Ext>(kPivotThreshold) * largest;

  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t p = pivot_row(lu, col);
    if (!(std::abs(lu(p, col)) > threshold)) {
      throw Error(ErrorCode::kSingularMatrix, "pivoted_solve: pivot " + std::to_string(col) +
                                                  " below threshold, matrix is numerically singular");
    }
    swap_rows(lu, p, col);
    swap_rows(x, p, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Ext f = lu(r, col) / lu(col, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j) lu(r, j) -= f * lu(col, j);
      for (std::size_t j = 0; j < x.cols(); ++j) x(r, j) -= f * x(col, j);
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      Ext s = x(i, j);
      for (std::size_t k = i + 1; k < n; ++k) s -= lu(i, k) * x(k, j);
      x(i, j) = s / lu(i, i);
    }
  }
  DenseMatrix out(rhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = static_cast<double>(col_scale[i] * x(i, j));
  return out;
}

double elimination_det(const DenseMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::kShapeMismatch, "elimination_det: matrix is not square");
  const std::size_t n = a.rows();
  Work lu(a);
  Ext det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t p = pivot_row(lu, col);
    if (lu(p, col) == 0) return 0.0;
    if (p != col) {
      swap_rows(lu, p, col);
      det = -det;
    }
    det *= lu(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Ext f = lu(r, col) / lu(col, col);
      for (std::size_t j = col; j < n; ++j) lu(r, j) -= f * lu(col, j);
    }
  }
  return static_cast<double>(det);
}

QuadratureRule gauss_legendre(int m, double lo, double hi) {
  if (m < 1 || m > kMaxGaussNodes) {
    throw Error(ErrorCode::kOrderOutOfRange,
                "gauss_legendre: node count " + std::to_string(m) + " outside [1, 16]");
  }
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  QuadratureRule rule;
  const auto& row = kGaussTable[m - 1];
  const int stored = (m + 1) / 2;
  for (int i = 0; i < stored; ++i) {
    const auto [node, weight] = row[i];
    rule.nodes.push_back(mid - half * node);
    rule.weights.push_back(half * weight);
    if (node != 0.0) {
      rule.nodes.push_back(mid + half * node);
      rule.weights.push_back(half * weight);
    }
  }
  return rule;
}

double quadrature_cost(const TrajectoryPolynomial& poly) {
  const int n = poly.order;
  const auto rule = gauss_legendre(n + 1, 0.0, poly.horizon);
  const std::size_t degree_plus_one = poly.coeffs.rows();
  double total = 0.0;
  for (std::size_t c = 0; c < poly.coeffs.cols(); ++c) {
    // xi^{(n)}(t) = sum_{i>=n} i!/(i-n)! a_i t^{i-n}
    std::vector<double> deriv;
    for (std::size_t i = static_cast<std::size_t>(n); i < degree_plus_one; ++i) {
      double f = 1.0;
      for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) f *= static_cast<double>(i - k);
      deriv.push_back(f * poly.coeffs(i, c));
    }
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      double v = 0.0;
      for (auto it = deriv.rbegin(); it != deriv.rend(); ++it) v = v * rule.nodes[q] + *it;
      total += rule.weights[q] * v * v;
    }
  }
  return total;
}

}  // namespace msdc::oracle
