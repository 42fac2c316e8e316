#include "msdc/dense_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "msdc/error.hpp"

namespace msdc {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOrderOutOfRange: return "order-out-of-range";
    case ErrorCode::kNonpositiveHorizon: return "nonpositive-horizon";
    case ErrorCode::kShapeMismatch: return "shape-mismatch";
    case ErrorCode::kSizeMismatch: return "size-mismatch";
    case ErrorCode::kOrderTooSmall: return "order-too-small";
    case ErrorCode::kSingularMatrix: return "singular-matrix";
    case ErrorCode::kDerivativeOrderOutOfRange: return "derivative-order-out-of-range";
    case ErrorCode::kNonfiniteValue: return "nonfinite-value";
    case ErrorCode::kInternalConsistency: return "internal-consistency";
    case ErrorCode::kUnknownMatrix: return "unknown-matrix-name";
  }
  return "unknown";
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kShapeMismatch, "DenseMatrix: data length does not match rows*cols");
  }
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::kShapeMismatch, "DenseMatrix: ragged rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw Error(ErrorCode::kShapeMismatch, "matrix product: inner dimensions differ");
  DenseMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const double a = lhs(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

DenseMatrix operator-(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw Error(ErrorCode::kShapeMismatch, "matrix difference: shapes differ");
  DenseMatrix out = lhs;
  auto od = out.data();
  auto rd = rhs.data();
  for (std::size_t i = 0; i < od.size(); ++i) od[i] -= rd[i];
  return out;
}

double max_abs(const DenseMatrix& m) {
  double best = 0.0;
  for (double v : m.data()) best = std::max(best, std::abs(v));
  return best;
}

double inf_norm(const DenseMatrix& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (double v : m.row(i)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

double max_abs_diff(const DenseMatrix& lhs, const DenseMatrix& rhs) { return max_abs(lhs - rhs); }

double quadratic_form(const DenseMatrix& m, std::span<const double> x) {
  if (!m.is_square() || m.rows() != x.size())
    throw Error(ErrorCode::kShapeMismatch, "quadratic form: vector length does not match matrix");
  double total = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) row += m(i, j) * x[j];
    total += x[i] * row;
  }
  return total;
}

std::optional<DenseMatrix> cholesky(const DenseMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::kShapeMismatch, "cholesky: matrix is not square");
  const std::size_t n = m.rows();
  DenseMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double diag = m(j, j);
    for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
    if (!(diag > 0.0)) return std::nullopt;
    l(j, j) = std::sqrt(diag);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

}  // namespace msdc
