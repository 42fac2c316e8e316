#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>

#include "msdc/dense_matrix.hpp"

namespace msdc {

/// Derivative stack at one endpoint of a curve in R^d: row k holds the k-th
/// derivative vector, k = 0..n-1.
class BoundaryState {
 public:
  BoundaryState() = default;
  /// Throws kShapeMismatch for an empty stack and kNonfiniteValue on NaN/Inf.
  explicit BoundaryState(DenseMatrix values);
  BoundaryState(std::initializer_list<std::initializer_list<double>> rows);

  static BoundaryState zeros(int order, int dim);
  /// Scalar (d = 1) stack from a list of derivative values.
  static BoundaryState scalar(std::initializer_list<double> derivatives);

  int order() const noexcept { return static_cast<int>(values_.rows()); }
  int dim() const noexcept { return static_cast<int>(values_.cols()); }

  double operator()(int k, int c) const { return values_(k, c); }
  std::span<const double> derivative(int k) const { return values_.row(k); }
  const DenseMatrix& values() const noexcept { return values_; }

  bool operator==(const BoundaryState&) const = default;

 private:
  DenseMatrix values_;
};

}  // namespace msdc
