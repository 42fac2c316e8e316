#pragma once

#include <cstddef>
#include <vector>

#include "combinatorics.hpp"

// Closed-form entries of the structured matrices, generic over the scalar
// type so routes that suffer cancellation can evaluate in extended precision.
// Callers validate (n, h) first.
namespace msdc::detail {

template <typename Real>
struct Square {
  explicit Square(int order) : n(static_cast<std::size_t>(order)), v(n * n, Real(0)) {}
  Real& operator()(int i, int j) { return v[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)]; }
  Real operator()(int i, int j) const { return v[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)]; }

  std::size_t n;
  std::vector<Real> v;
};

template <typename Real>
Square<Real> operator*(const Square<Real>& a, const Square<Real>& b) {
  const int n = static_cast<int>(a.n);
  Square<Real> out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Real f = a(i, k);
      if (f == Real(0)) continue;
      for (int j = 0; j < n; ++j) out(i, j) += f * b(k, j);
    }
  return out;
}

template <typename Real>
BasicPowerTable<Real> powers(int n, Real h) {
  return BasicPowerTable<Real>(h, -n, 2 * n);
}

template <typename Real>
Real sign(int parity) {
  return parity % 2 == 0 ? Real(1) : Real(-1);
}

template <typename Real>
Square<Real> wronskian_A(int n, Real h) {
  const auto hp = powers(n, h);
  Square<Real> a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = to_real<Real>(falling(n + j, i)) * hp(n + j - i);
  return a;
}

template <typename Real>
Square<Real> operator_B(int n, Real h) {
  const auto hp = powers(n, h);
  Square<Real> b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int e = i + j - n + 1;
      if (e < 0) continue;
      // (n+j)!/(i+j-n+1)! is a falling factorial of length 2n-1-i.
      b(i, j) = sign<Real>(n - i - 1) * to_real<Real>(falling(n + j, 2 * n - 1 - i)) * hp(e);
    }
  }
  return b;
}

template <typename Real>
Square<Real> factor_L(int n, Real h) {
  const auto hp = powers(n, h);
  Square<Real> l(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) l(i, j) = to_real<Real>(binomial(i, j) * falling(n, i - j)) * hp(j - i);
  return l;
}

template <typename Real>
Square<Real> factor_U(int n, Real h) {
  const auto hp = powers(n, h);
  Square<Real> u(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) u(i, j) = to_real<Real>(falling(j, i)) * hp(n + j - i);
  return u;
}

template <typename Real>
Square<Real> factor_L_inv(int n, Real h) {
  const auto hp = powers(n, h);
  Square<Real> l(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      const auto coef = falling(i, i - j) * binomial(n + i - j - 1, i - j);
      l(i, j) = sign<Real>(i - j) * to_real<Real>(coef) * hp(j - i);
    }
  return l;
}

template <typename Real>
Square<Real> factor_U_inv(int n, Real h) {
  const auto hp = powers(n, h);
  Square<Real> u(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const Real denom = to_real<Real>(factorial(i) * factorial(j - i));
      u(i, j) = sign<Real>(i + j) / denom * hp(j - i - n);
    }
  return u;
}

template <typename Real>
Square<Real> inverse_A(int n, Real h) {
  return factor_U_inv(n, h) * factor_L_inv(n, h);
}

template <typename Real>
Square<Real> gram_K(int n, Real h) {
  const auto hp = powers(n, h);
  Square<Real> k(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      // (n!)^2 C(n+i,n) C(n+j,n) = (n+i)!/i! * (n+j)!/j!
      const auto coef = falling(n + i, n) * falling(n + j, n);
      const Real v = to_real<Real>(coef) / static_cast<Real>(i + j + 1) * hp(i + j + 1);
      k(i, j) = v;
      k(j, i) = v;
    }
  return k;
}

}  // namespace msdc::detail
