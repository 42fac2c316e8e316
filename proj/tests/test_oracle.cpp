#include <doctest.h>

#include <cmath>

#include "msdc/error.hpp"
#include "msdc/matrices.hpp"
#include "msdc/oracle.hpp"
#include "support/oracles.hpp"

using namespace msdc;

TEST_CASE("pivoted solve examples") {
  const auto x = oracle::pivoted_solve({{1, 1}, {2, 3}}, {{1}, {0}});
  CHECK(x(0, 0) == doctest::Approx(3.0));
  CHECK(x(1, 0) == doctest::Approx(-2.0));

  const DenseMatrix rhs{{1.5, -2}, {0.25, 7}, {3, 4}};
  CHECK(oracle::pivoted_solve(DenseMatrix::identity(3), rhs) == rhs);

  const auto y = oracle::pivoted_solve(build_A(3, 1.0), {{1}, {0}, {0}});
  CHECK(y(0, 0) == doctest::Approx(10.0));
  CHECK(y(1, 0) == doctest::Approx(-15.0));
  CHECK(y(2, 0) == doctest::Approx(6.0));
}

TEST_CASE("pivoted solve errors") {
  try {
    oracle::pivoted_solve({{1, 2}, {2, 4}}, {{1}, {1}});
    FAIL("expected singular-matrix");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSingularMatrix);
  }
  CHECK_THROWS_AS(oracle::pivoted_solve({{1, 2}}, {{1}}), Error);
  CHECK_THROWS_AS(oracle::pivoted_solve(DenseMatrix::identity(2), {{1}}), Error);
}

TEST_CASE("pivoted solve residual") {
  for (int n = 1; n <= 10; ++n) {
    for (double h : {0.5, 1.0, 2.0, 10.0}) {
      const auto a = build_A(n, h);
      DenseMatrix rhs(n, 2);
      for (int i = 0; i < n; ++i) {
        rhs(i, 0) = std::sin(1.0 + i);
        rhs(i, 1) = std::cos(2.0 * i);
      }
      const auto x = oracle::pivoted_solve(a, rhs);
      CHECK(inf_norm(a * x - rhs) <= 1e-9 * inf_norm(rhs) * test::cond_scale(n, h));
    }
  }
}

TEST_CASE("closed-form inverse matches elimination") {
  for (int n = 1; n <= 10; ++n) {
    for (double h : {0.5, 1.0, 2.0, 10.0}) {
      CAPTURE(n);
      CAPTURE(h);
      const auto closed = build_A_inv(n, h);
      const auto eliminated = oracle::pivoted_solve(build_A(n, h), DenseMatrix::identity(n));
      CHECK(max_abs_diff(closed, eliminated) <= 1e-8 * test::cond_scale(n, h) * max_abs(closed));
    }
  }
}

TEST_CASE("elimination determinant") {
  CHECK(oracle::elimination_det(build_A(2, 1.0)) == doctest::Approx(1.0));
  CHECK(oracle::elimination_det(build_A(3, 1.0)) == doctest::Approx(2.0));
  CHECK(oracle::elimination_det(build_A(4, 1.0)) == doctest::Approx(12.0));
  CHECK(oracle::elimination_det({{2, 5, 1}, {0, -3, 4}, {0, 0, 0.5}}) == doctest::Approx(-3.0));
  CHECK(oracle::elimination_det({{1, 2}, {2, 4}}) == 0.0);
  CHECK(oracle::elimination_det({{0, 1}, {1, 0}}) == doctest::Approx(-1.0));
}

TEST_CASE("Gauss-Legendre rules") {
  for (int m = 1; m <= 16; ++m) {
    const auto rule = oracle::gauss_legendre(m, 0.0, 2.0);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(m));
    // Exact for t^k, k <= 2m - 1.
    for (int k = 0; k <= 2 * m - 1; ++k) {
      double s = 0.0;
      for (std::size_t q = 0; q < rule.nodes.size(); ++q) s += rule.weights[q] * std::pow(rule.nodes[q], k);
      CHECK(s == doctest::Approx(std::pow(2.0, k + 1) / (k + 1)).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(oracle::gauss_legendre(0, 0.0, 1.0), Error);
  CHECK_THROWS_AS(oracle::gauss_legendre(17, 0.0, 1.0), Error);
}

TEST_CASE("quadrature cost examples") {
  const TrajectoryPolynomial accel{2, 1.0, {{0}, {0}, {3}, {-2}}};
  CHECK(oracle::quadrature_cost(accel) == doctest::Approx(12.0).epsilon(1e-14));
  const TrajectoryPolynomial jerk{3, 1.0, {{0}, {0}, {0}, {10}, {-15}, {6}}};
  CHECK(oracle::quadrature_cost(jerk) == doctest::Approx(720.0).epsilon(1e-14));
  const TrajectoryPolynomial flat{3, 2.0, {{1, 2}, {3, 4}, {5, 6}, {0, 0}, {0, 0}, {0, 0}}};
  CHECK(oracle::quadrature_cost(flat) == 0.0);
  CHECK(test::exact_energy(jerk.coeffs, 3, 1.0) == doctest::Approx(720.0).epsilon(1e-15));
}
