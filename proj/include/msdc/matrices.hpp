#pragma once

#include "msdc/dense_matrix.hpp"

namespace msdc {

/// Largest order accepted by default. Factorials up to (2n-1)! and the
/// conditioning of A_n stay well inside double precision up to here.
inline constexpr int kDefaultMaxOrder = 12;
/// Hard ceiling for the configurable limit; integer combinatorics are exact
/// in 128 bits up to this order.
inline constexpr int kAbsoluteMaxOrder = 14;

/// Throws kOrderOutOfRange / kNonpositiveHorizon. `allow_zero_horizon` is
/// only used by the Taylor-shift builder V, which is meaningful at h = 0.
void check_order_and_horizon(int n, double h, int max_order = kDefaultMaxOrder,
                             bool allow_zero_horizon = false);

// Closed-form builders. All indices are 0-based; every builder is a pure
// function of (n, h). Entries carry powers of h as noted.

/// Wronskian of t^n..t^{2n-1} at t = h:
/// A[i][j] = (n+j)!/(n+j-i)! h^{n+j-i}.
DenseMatrix build_A(int n, double h, int max_order = kDefaultMaxOrder);

/// Taylor-shift matrix, V[i][j] = j!/(j-i)! h^{j-i} for j >= i.
/// V(0) = diag(0!, 1!, ..., (n-1)!). Accepts h = 0.
DenseMatrix build_V(int n, double h, int max_order = kDefaultMaxOrder);

/// B[i][j] = (-1)^{n-i-1} (n+j)!/(i+j-n+1)! h^{i+j-n+1} for i+j >= n-1, else 0.
DenseMatrix build_B(int n, double h, int max_order = kDefaultMaxOrder);

/// Unit lower-triangular factor of A = L U:
/// L[i][j] = C(i,j) n!/(n-i+j)! h^{j-i}.
DenseMatrix build_L(int n, double h, int max_order = kDefaultMaxOrder);
/// Upper-triangular factor of A = L U: U[i][j] = j!/(j-i)! h^{n+j-i}.
DenseMatrix build_U(int n, double h, int max_order = kDefaultMaxOrder);

/// Linv[i][j] = (-1)^{i-j} (i!/j!) C(n+i-j-1, i-j) h^{j-i}.
DenseMatrix build_L_inv(int n, double h, int max_order = kDefaultMaxOrder);
/// Uinv[i][j] = (-1)^{i+j} / (i! (j-i)!) h^{j-i-n}.
DenseMatrix build_U_inv(int n, double h, int max_order = kDefaultMaxOrder);

/// A^{-1} assembled as Uinv * Linv.
DenseMatrix build_A_inv(int n, double h, int max_order = kDefaultMaxOrder);

/// Gram matrix of the n-th derivatives of t^n..t^{2n-1} on [0, h]:
/// K[i][j] = (n!)^2 C(n+i,n) C(n+j,n) h^{i+j+1}/(i+j+1). Exactly symmetric.
DenseMatrix build_K(int n, double h, int max_order = kDefaultMaxOrder);

/// Free-flight propagation P[i][j] = h^{j-i}/(j-i)! for j >= i, so that the
/// residual vector is b = y - P x.
DenseMatrix build_taylor_propagator(int n, double h, int max_order = kDefaultMaxOrder);

/// det A_n(h) = h^{n^2} prod_{k=1}^{n-1} k!.
double det_A(int n, double h, int max_order = kDefaultMaxOrder);

}  // namespace msdc
