#include "msdc/boundary_state.hpp"

#include <cmath>
#include <utility>

#include "msdc/error.hpp"

namespace msdc {

BoundaryState::BoundaryState(DenseMatrix values) : values_(std::move(values)) {
  if (values_.rows() == 0 || values_.cols() == 0)
    throw Error(ErrorCode::kShapeMismatch, "boundary state needs at least one derivative and one coordinate");
  for (double v : values_.data()) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kNonfiniteValue, "boundary state contains a non-finite value");
  }
}

BoundaryState::BoundaryState(std::initializer_list<std::initializer_list<double>> rows)
    : BoundaryState(DenseMatrix(rows)) {}

BoundaryState BoundaryState::zeros(int order, int dim) {
  if (order < 1 || dim < 1) throw Error(ErrorCode::kShapeMismatch, "boundary state needs order >= 1 and dim >= 1");
  return BoundaryState(DenseMatrix(static_cast<std::size_t>(order), static_cast<std::size_t>(dim)));
}

BoundaryState BoundaryState::scalar(std::initializer_list<double> derivatives) {
  return BoundaryState(DenseMatrix(derivatives.size(), 1, std::vector<double>(derivatives)));
}

}  // namespace msdc
