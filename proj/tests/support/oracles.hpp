#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "msdc/cost.hpp"
#include "msdc/matrices.hpp"
#include "msdc/oracle.hpp"

// Reference computations that share nothing with the closed-form builders.
namespace msdc::test {

/// Full 2n x 2n Hermite system: match derivatives 0..n-1 of sum_i a_i t^i at
/// t = 0 and t = h. Solved by plain elimination, one coordinate at a time.
inline DenseMatrix hermite_coefficients(const CostProblem& p) {
  const int n = p.order();
  const auto m = static_cast<std::size_t>(2 * n);
  DenseMatrix sys(m, m);
  DenseMatrix rhs(m, static_cast<std::size_t>(p.dim()));
  for (int k = 0; k < n; ++k) {
    for (int i = k; i < 2 * n; ++i) {
      double f = 1.0;
      for (int q = 0; q < k; ++q) f *= i - q;
      if (i == k) sys(k, i) = f;
      sys(n + k, i) = f * std::pow(p.horizon(), i - k);
    }
    for (int c = 0; c < p.dim(); ++c) {
      rhs(k, c) = p.start()(k, c);
      rhs(n + k, c) = p.end()(k, c);
    }
  }
  return oracle::pivoted_solve(sys, rhs);
}

/// Exact integral of (p^{(n)})^2 over [0, h] for monomial coefficients,
/// summed over columns.
inline double exact_energy(const DenseMatrix& coeffs, int n, double h) {
  long double total = 0;
  for (std::size_t c = 0; c < coeffs.cols(); ++c) {
    std::vector<long double> d;
    for (std::size_t i = n; i < coeffs.rows(); ++i) {
      long double f = 1;
      for (int q = 0; q < n; ++q) f *= static_cast<long double>(i - q);
      d.push_back(f * coeffs(i, c));
    }
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j)
        total += d[i] * d[j] * std::pow(static_cast<long double>(h), static_cast<long double>(i + j + 1)) /
                 static_cast<long double>(i + j + 1);
  }
  return static_cast<double>(total);
}

inline double hermite_cost(const CostProblem& p) {
  return exact_energy(hermite_coefficients(p), p.order(), p.horizon());
}

/// Minimum of sum_i cost(i, perm[i]) over every permutation.
inline double brute_force_assignment(const DenseMatrix& cost) {
  std::vector<std::size_t> perm(cost.rows());
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double s = 0.0;
    for (std::size_t i = 0; i < perm.size(); ++i) s += cost(i, perm[i]);
    best = std::min(best, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline Eigen::MatrixXd to_eigen(const DenseMatrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

/// Singular values, descending.
inline Eigen::VectorXd singular_values(const DenseMatrix& m) {
  return Eigen::JacobiSVD<Eigen::MatrixXd>(to_eigen(m)).singularValues();
}

/// H_n minus H_{n-1} placed in the trailing (n-1) x (n-1) block.
inline DenseMatrix telescoping_difference(int n, double h) {
  auto d = hessian_H(n, h);
  const auto prev = hessian_H(n - 1, h);
  for (std::size_t i = 0; i < prev.rows(); ++i)
    for (std::size_t j = 0; j < prev.cols(); ++j) d(i + 1, j + 1) -= prev(i, j);
  return d;
}

/// ||A||_inf ||A^{-1}||_inf with the closed-form inverse.
inline double cond_scale(int n, double h) {
  return inf_norm(build_A(n, h)) * inf_norm(build_A_inv(n, h));
}

inline double identity_residual(const DenseMatrix& m) {
  return inf_norm(m - DenseMatrix::identity(m.rows()));
}

/// Coefficients of t^n (h - t)^n q(t) in ascending powers.
inline std::vector<double> bump_polynomial(int n, double h, const std::vector<double>& q) {
  std::vector<double> p{1.0};
  const auto times = [&p](double c0, double c1) {
    std::vector<double> out(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      out[i] += c0 * p[i];
      out[i + 1] += c1 * p[i];
    }
    p = out;
  };
  for (int k = 0; k < n; ++k) times(0.0, 1.0);
  for (int k = 0; k < n; ++k) times(h, -1.0);
  std::vector<double> out(p.size() + q.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

inline std::vector<double> differentiate(std::vector<double> p, int k) {
  for (int r = 0; r < k; ++r) {
    if (p.size() <= 1) return {0.0};
    for (std::size_t i = 1; i < p.size(); ++i) p[i - 1] = static_cast<double>(i) * p[i];
    p.pop_back();
  }
  return p;
}

inline double horner(const std::vector<double>& p, double t) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

struct CrossTerm {
  double cross;
  double xi_energy;
  double eta_energy;
};

/// Integrals of xi^{(n)} eta^{(n)}, |xi^{(n)}|^2 and |eta^{(n)}|^2 for one
/// coordinate of the optimal curve, by a Gauss rule exact at this degree.
inline CrossTerm cross_term(const TrajectoryPolynomial& poly, int coord, const std::vector<double>& eta) {
  const int n = poly.order;
  std::vector<double> xi(poly.coeffs.rows());
  for (std::size_t i = 0; i < xi.size(); ++i) xi[i] = poly.coeffs(i, static_cast<std::size_t>(coord));
  const auto dxi = differentiate(xi, n);
  const auto deta = differentiate(eta, n);
  const int degree = static_cast<int>(std::max(dxi.size(), deta.size())) * 2;
  const auto rule = oracle::gauss_legendre(std::min(16, degree / 2 + 1), 0.0, poly.horizon);
  CrossTerm out{0.0, 0.0, 0.0};
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double a = horner(dxi, rule.nodes[q]);
    const double b = horner(deta, rule.nodes[q]);
    out.cross += rule.weights[q] * a * b;
    out.xi_energy += rule.weights[q] * a * a;
    out.eta_energy += rule.weights[q] * b * b;
  }
  return out;
}

}  // namespace msdc::test
