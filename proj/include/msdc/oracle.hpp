#pragma once

#include <span>
#include <vector>

#include "msdc/cost.hpp"
#include "msdc/dense_matrix.hpp"

// Verification paths that never touch the closed-form inverses.
namespace msdc::oracle {

/// Gaussian elimination with partial (row) pivoting. rhs is n x d.
/// Rows and columns are first equilibrated by exact powers of two; throws
/// kSingularMatrix when the best pivot then falls below 1e-13 max|A|,
/// kShapeMismatch on incompatible shapes.
DenseMatrix pivoted_solve(const DenseMatrix& a, const DenseMatrix& rhs);

/// Product of elimination pivots with sign tracking; 0 for singular input.
double elimination_det(const DenseMatrix& a);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// m-point Gauss-Legendre rule mapped to [lo, hi], exact for polynomials of
/// degree <= 2m-1. Supports 1 <= m <= 16.
QuadratureRule gauss_legendre(int m, double lo, double hi);

/// Integral over [0, h] of |xi^{(n)}|^2 using n+1 Gauss-Legendre nodes.
double quadrature_cost(const TrajectoryPolynomial& poly);

}  // namespace msdc::oracle
