#include <doctest.h>

#include <cmath>

#include "golden_tables.hpp"
#include "msdc/error.hpp"
#include "msdc/matrices.hpp"
#include "support/oracles.hpp"

using namespace msdc;

namespace {

constexpr double kHorizons[] = {0.5, 1.0, 2.0, 10.0};

void check_equal(const DenseMatrix& got, const DenseMatrix& want, double tol = 0.0) {
  REQUIRE(got.rows() == want.rows());
  REQUIRE(got.cols() == want.cols());
  for (std::size_t i = 0; i < got.rows(); ++i)
    for (std::size_t j = 0; j < got.cols(); ++j) CHECK(std::abs(got(i, j) - want(i, j)) <= tol * std::abs(want(i, j)));
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no msdc::Error thrown");
  return ErrorCode::kInternalConsistency;
}

}  // namespace

TEST_CASE("A entries") {
  check_equal(build_A(1, 3.5), {{3.5}});
  check_equal(build_A(2, 1.0), {{1, 1}, {2, 3}});
  check_equal(build_A(3, 2.0), {{8, 16, 32}, {12, 32, 80}, {12, 48, 160}});
}

TEST_CASE("V entries") {
  check_equal(build_V(2, 1.0), {{1, 1}, {0, 1}});
  check_equal(build_V(3, 0.0), {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  check_equal(build_V(1, 7.0), {{1}});
  CHECK(code_of([] { build_V(2, -1.0); }) == ErrorCode::kNonpositiveHorizon);
}

TEST_CASE("B entries and zero pattern") {
  check_equal(build_B(2, 3.0), {{0, -6}, {2, 18}});
  check_equal(build_B(3, 1.0), {{0, 0, 120}, {0, -24, -120}, {6, 24, 60}});
  check_equal(build_B(1, 4.0), {{1}});
  for (int n = 1; n <= kDefaultMaxOrder; ++n) {
    const auto b = build_B(n, 0.7);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i + j < n - 1) {
          CHECK(b(i, j) == 0.0);
          CHECK_FALSE(std::signbit(b(i, j)));
        }
  }
}

TEST_CASE("L and U") {
  const double h = 1.7;
  check_equal(build_L(2, h), {{1, 0}, {2 / h, 1}});
  check_equal(build_U(2, h), {{h * h, h * h * h}, {0, h * h}});
  check_equal(build_L(3, 1.0), {{1, 0, 0}, {3, 1, 0}, {6, 6, 1}});
  for (int n = 1; n <= kDefaultMaxOrder; ++n) {
    const auto l = build_L(n, h);
    const auto u = build_U(n, h);
    const auto v = build_V(n, h);
    const auto li = build_L_inv(n, h);
    for (int i = 0; i < n; ++i) {
      CHECK(l(i, i) == 1.0);
      CHECK(li(i, i) == 1.0);
      for (int j = i + 1; j < n; ++j) {
        CHECK(l(i, j) == 0.0);
        CHECK(li(i, j) == 0.0);
        CHECK(u(j, i) == 0.0);
        CHECK(v(j, i) == 0.0);
      }
    }
  }
}

TEST_CASE("triangular inverses") {
  const double h = 0.8;
  check_equal(build_U_inv(2, h), {{1 / (h * h), -1 / h}, {0, 1 / (h * h)}}, 1e-15);
  check_equal(build_L_inv(2, h), {{1, 0}, {-2 / h, 1}}, 1e-15);
  const auto li4 = build_L_inv(4, 1.0);
  CHECK(li4(3, 0) == -120);
  CHECK(li4(3, 1) == 60);
  CHECK(li4(3, 2) == -12);
  CHECK(li4(3, 3) == 1);
  check_equal(build_U_inv(1, 4.0), {{0.25}});
  check_equal(build_L_inv(1, 4.0), {{1}});
}

TEST_CASE("A inverse") {
  check_equal(build_A_inv(2, 1.0), {{3, -1}, {-2, 1}});
  check_equal(build_A_inv(3, 1.0), {{10, -4, 0.5}, {-15, 7, -1}, {6, -3, 0.5}});
  check_equal(build_A_inv(1, 4.0), {{0.25}});
}

TEST_CASE("K is symmetric and positive definite") {
  check_equal(build_K(2, 1.0), {{4, 6}, {6, 12}});
  check_equal(build_K(1, 2.5), {{2.5}});
  for (int n = 1; n <= kDefaultMaxOrder; ++n) {
    for (double h : kHorizons) {
      const auto k = build_K(n, h);
      CHECK(k == k.transposed());
      CHECK(cholesky(k).has_value());
    }
  }
}

TEST_CASE("determinant closed form") {
  CHECK(det_A(2, 1.0) == 1.0);
  CHECK(det_A(3, 1.0) == 2.0);
  CHECK(det_A(4, 1.0) == 12.0);
  CHECK(det_A(1, 3.0) == 3.0);
  for (int n = 1; n <= 8; ++n)
    for (double h : {0.5, 1.0, 2.0})
      CHECK(oracle::elimination_det(build_A(n, h)) == doctest::Approx(det_A(n, h)).epsilon(1e-8));
}

TEST_CASE("factorisation residuals across orders") {
  for (int n = 1; n <= kDefaultMaxOrder; ++n) {
    for (double h : kHorizons) {
      CAPTURE(n);
      CAPTURE(h);
      const auto a = build_A(n, h);
      CHECK(max_abs(build_L(n, h) * build_U(n, h) - a) <= 1e-10 * max_abs(a));
      CHECK(max_abs(build_L(n, h) * build_L_inv(n, h) - DenseMatrix::identity(n)) <= 1e-9);
      CHECK(max_abs(build_U(n, h) * build_U_inv(n, h) - DenseMatrix::identity(n)) <= 1e-9);
      CHECK(max_abs(a * build_A_inv(n, h) - DenseMatrix::identity(n)) <= 1e-9 * test::cond_scale(n, h));
    }
  }
}

TEST_CASE("golden tables") {
  for (const auto& [n, tables] : golden::tables()) {
    for (const auto& [name, table] : tables) {
      for (double h : {1.0, 2.0}) {
        DenseMatrix built;
        if (name == "A") built = build_A(n, h);
        else if (name == "Ainv") built = build_A_inv(n, h);
        else if (name == "B") built = build_B(n, h);
        else if (name == "L") built = build_L(n, h);
        else if (name == "U") built = build_U(n, h);
        else if (name == "Linv") built = build_L_inv(n, h);
        else built = build_U_inv(n, h);
        CAPTURE(n);
        CAPTURE(name);
        CHECK(max_abs_diff(built, golden::evaluate(table, h)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("domain errors") {
  CHECK(code_of([] { build_A(0, 1.0); }) == ErrorCode::kOrderOutOfRange);
  CHECK(code_of([] { build_A(kDefaultMaxOrder + 1, 1.0); }) == ErrorCode::kOrderOutOfRange);
  CHECK(code_of([] { build_B(2, 0.0); }) == ErrorCode::kNonpositiveHorizon);
  CHECK(code_of([] { build_K(2, -1.0); }) == ErrorCode::kNonpositiveHorizon);
  CHECK(code_of([] { build_A(kAbsoluteMaxOrder + 1, 1.0, kAbsoluteMaxOrder + 1); }) ==
        ErrorCode::kOrderOutOfRange);
  CHECK(build_A(13, 1.0, 13).rows() == 13);
}

TEST_CASE("builders agree on shared powers") {
  // Entries with the same power of h and coefficient are bit-identical.
  for (double h : {0.3, 1.9, 7.0}) {
    const auto a = build_A(4, h);
    const auto u = build_U(4, h);
    CHECK(a(0, 0) == u(0, 0));
    CHECK(a(0, 3) == u(0, 3));
  }
}
