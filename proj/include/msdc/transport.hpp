#pragma once

#include <cstddef>
#include <vector>

#include "msdc/boundary_state.hpp"
#include "msdc/dense_matrix.hpp"
#include "msdc/matrices.hpp"

namespace msdc {

/// Uniform discrete measure on R^{dn}: every support point has weight 1/m.
class DiscreteMeasure {
 public:
  /// Throws kSizeMismatch for an empty list, kShapeMismatch if the points
  /// do not share (n, d).
  explicit DiscreteMeasure(std::vector<BoundaryState> points);

  int order() const noexcept { return points_.front().order(); }
  int dim() const noexcept { return points_.front().dim(); }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<BoundaryState>& points() const noexcept { return points_; }

 private:
  std::vector<BoundaryState> points_;
};

inline constexpr std::size_t kMaxTransportSize = 512;

/// Entry (i, j) is the cost of moving mu.points[i] to nu.points[j] over
/// horizon h. Entries are clamped at zero.
DenseMatrix ground_cost_matrix(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double h,
                               int max_order = kDefaultMaxOrder);

struct TransportResult {
  /// Mean ground cost of the optimal matching.
  double value = 0.0;
  /// assignment[i] is the index in nu matched to mu.points[i].
  std::vector<std::size_t> assignment;
};

/// Optimal assignment (Hungarian method, O(m^3)) for a square cost matrix;
/// the returned value is the plain sum, not divided by m.
TransportResult solve_assignment(const DenseMatrix& cost);

/// Directed transport cost between equal-size uniform measures with the
/// mean squared derivative cost as ground cost. Not symmetrised.
TransportResult w2_uniform(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double h,
                           int max_order = kDefaultMaxOrder);

}  // namespace msdc
