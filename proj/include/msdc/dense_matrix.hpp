#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace msdc {

/// Row-major real matrix. Small (at most a few hundred rows in practice),
/// so storage is a plain vector and all operations are straightforward loops.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  DenseMatrix transposed() const;

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs);
DenseMatrix operator-(const DenseMatrix& lhs, const DenseMatrix& rhs);

double max_abs(const DenseMatrix& m);
/// Maximum absolute row sum.
double inf_norm(const DenseMatrix& m);
double max_abs_diff(const DenseMatrix& lhs, const DenseMatrix& rhs);

/// x^T M x for square M.
double quadratic_form(const DenseMatrix& m, std::span<const double> x);

/// Lower-triangular Cholesky factor, or nullopt when a nonpositive pivot
/// shows up (the matrix is not numerically positive definite). Only the
/// lower triangle of the input is read.
std::optional<DenseMatrix> cholesky(const DenseMatrix& m);

}  // namespace msdc
