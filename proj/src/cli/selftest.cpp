#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "golden_tables.hpp"
#include "msdc/cli.hpp"
#include "msdc/matrices.hpp"
#include "msdc/oracle.hpp"
#include "random_problems.hpp"

namespace msdc::cli {

bool SelftestReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

json SelftestReport::to_json() const {
  json list = json::array();
  for (const auto& c : checks)
    list.push_back({{"name", c.name}, {"passed", c.passed}, {"error", c.error}, {"tolerance", c.tolerance}});
  return json{{"passed", passed()}, {"checks", list}};
}

std::string SelftestReport::to_text() const {
  std::ostringstream os;
  os.precision(3);
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << "  (error " << std::scientific << c.error
       << ", tolerance " << c.tolerance << ")\n";
  }
  os << (passed() ? "PASS" : "FAIL") << ": " << checks.size() << " checks\n";
  return os.str();
}

namespace {

using testing::rel_diff;

class Runner {
 public:
  explicit Runner(const SelftestOptions& options) : options_(options) {}

  /// Adds a perturbation to `value` when this check is the injection target.
  double bump(const std::string& name, double value) const {
    if (options_.inject_fault && *options_.inject_fault == name) return value + 1e-3 * (1.0 + std::abs(value));
    return value;
  }

  void check(const std::string& name, double tolerance, const std::function<double(const std::string&)>& measure) {
    double error;
    try {
      error = measure(name);
    } catch (const std::exception&) {
      error = std::numeric_limits<double>::infinity();
    }
    report_.checks.push_back({name, error <= tolerance, error, tolerance});
  }

  SelftestReport take() { return std::move(report_); }

 private:
  const SelftestOptions& options_;
  SelftestReport report_;
};

DenseMatrix build_named(const std::string& name, int n, double h) {
  if (name == "A") return build_A(n, h);
  if (name == "Ainv") return build_A_inv(n, h);
  if (name == "B") return build_B(n, h);
  if (name == "L") return build_L(n, h);
  if (name == "U") return build_U(n, h);
  if (name == "Linv") return build_L_inv(n, h);
  return build_U_inv(n, h);
}

CostProblem rest_to_rest(int n, double h) {
  auto end = BoundaryState::zeros(n, 1).values();
  end(0, 0) = 1.0;
  return CostProblem(h, BoundaryState::zeros(n, 1), BoundaryState(end));
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& options) {
  Runner r(options);

  for (const auto& [n, tables] : golden::tables()) {
    r.check("golden-n" + std::to_string(n), 1e-12, [&, n = n](const std::string& name) {
      double worst = 0.0;
      for (double h : {1.0, 2.0}) {
        for (const auto& [matrix, table] : tables) {
          auto built = build_named(matrix, n, h);
          built(0, 0) = r.bump(name, built(0, 0));
          worst = std::max(worst, max_abs_diff(built, golden::evaluate(table, h)));
        }
      }
      return worst;
    });
  }

  r.check("canonical-costs", 1e-10, [&](const std::string& name) {
    const double expected[] = {1.0, 12.0, 720.0, 100800.0};
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n)
      worst = std::max(worst, rel_diff(r.bump(name, cost(rest_to_rest(n, 1.0)).total), expected[n - 1]));
    return worst;
  });

  r.check("lu-factorization", 1e-10, [&](const std::string& name) {
    double worst = 0.0;
    for (int n = 1; n <= 10; ++n) {
      for (double h : {0.5, 1.0, 2.0, 10.0}) {
        const auto a = build_A(n, h);
        auto lu = build_L(n, h) * build_U(n, h);
        lu(0, 0) = r.bump(name, lu(0, 0));
        worst = std::max(worst, inf_norm(lu - a) / inf_norm(a));
      }
    }
    return worst;
  });

  r.check("determinant", 1e-8, [&](const std::string& name) {
    double worst = 0.0;
    for (int n = 1; n <= 8; ++n)
      for (double h : {0.5, 1.0, 2.0})
        worst = std::max(worst, rel_diff(r.bump(name, oracle::elimination_det(build_A(n, h))), det_A(n, h)));
    return worst;
  });

  std::mt19937_64 rng(20170501);
  std::vector<CostProblem> problems;
  for (int i = 0; i < 50; ++i) problems.push_back(testing::random_problem(rng));

  r.check("oracle-quadrature", 1e-8, [&](const std::string& name) {
    double worst = 0.0;
    for (const auto& p : problems) {
      const double c = cost(p).total;
      const double q = r.bump(name, oracle::quadrature_cost(solve_trajectory(p)));
      worst = std::max(worst, std::abs(q - c) / (1.0 + c));
    }
    return worst;
  });

  r.check("route-agreement", 1e-8, [&](const std::string& name) {
    double worst = 0.0;
    for (const auto& p : problems) {
      const double c = r.bump(name, cost(p).total);
      const double k = cost_via_K(p);
      const double s = cost_scaled(p);
      worst = std::max({worst, rel_diff(c, k), rel_diff(c, s), rel_diff(k, s)});
    }
    return worst;
  });

  r.check("free-flight", 1e-12, [&](const std::string& name) {
    double worst = 0.0;
    for (const auto& p : problems) {
      const auto target = free_flight_target(p.order(), p.horizon(), p.start());
      const CostProblem ff(p.horizon(), p.start(), target);
      const double scale = std::max(max_abs(p.start().values()), max_abs(target.values()));
      worst = std::max(worst, r.bump(name, cost(ff).total) / (1.0 + scale));
    }
    return worst;
  });

  r.check("cli-roundtrip", 1e-8, [&](const std::string& name) {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const auto& p = problems[static_cast<std::size_t>(i)];
      json input{{"n", p.order()},
                 {"h", p.horizon()},
                 {"d", p.dim()},
                 {"x", rows_to_json(p.start().values())},
                 {"y", rows_to_json(p.end().values())}};
      const double c = cmd_cost(input)["cost"].get<double>();
      input["samples"] = json{{"k", 0}, {"count", 2}};
      const json traj = cmd_trajectory(input);
      // Rebuild the polynomial from the emitted coefficients only.
      TrajectoryPolynomial poly{traj["n"].get<int>(), traj["h"].get<double>(),
                                DenseMatrix(2 * static_cast<std::size_t>(p.order()), static_cast<std::size_t>(p.dim()))};
      for (std::size_t k = 0; k < poly.coeffs.rows(); ++k)
        for (std::size_t c2 = 0; c2 < poly.coeffs.cols(); ++c2) poly.coeffs(k, c2) = traj["coeffs"][k][c2].get<double>();
      worst = std::max(worst, rel_diff(r.bump(name, oracle::quadrature_cost(poly)), c));
    }
    return worst;
  });

  return r.take();
}

}  // namespace msdc::cli
