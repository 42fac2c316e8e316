#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "msdc/cost.hpp"
#include "msdc/transport.hpp"

namespace msdc::cli {

using nlohmann::json;

enum ExitCode : int {
  kExitOk = 0,
  kExitSelftestFailure = 1,
  kExitSchema = 2,
  kExitDomain = 3,
};

/// Input rejected before any computation; carries the exit code to use.
class InputError : public std::runtime_error {
 public:
  InputError(int exit_code, const std::string& message)
      : std::runtime_error(message), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

/// Parses text as JSON; syntax errors become InputError(kExitSchema) with
/// the line and column of the failure.
json parse_json_text(const std::string& text);

// Schema: {"n": int, "h": number, "d": int, "x": [[number x d] x n],
//          "y": [[number x d] x n]}; row k is the k-th derivative.
CostProblem parse_problem(const json& input);
BoundaryState parse_state(const json& rows, int n, int d, const std::string& field);
DiscreteMeasure parse_measure(const json& points, int n, int d, const std::string& field);

json matrix_to_json(const DenseMatrix& m);
json rows_to_json(const DenseMatrix& m);

CostRoute parse_route(const std::string& name);

json cmd_cost(const json& input, CostRoute route = CostRoute::kClosedForm,
              double tol = kDefaultFreeFlightTol);

/// Sample spec in input["samples"]: {"k": int, "count": int} for a uniform
/// grid on [0, h], or {"k": int, "times": [..]}.
json cmd_trajectory(const json& input);

json cmd_matrices(int n, double h, const std::vector<std::string>& which);

/// {"n", "h", "d", "mu": [state..], "nu": [state..]}.
json cmd_transport(const json& input);

struct SelftestOptions {
  /// Name of a check whose measured quantity is perturbed (test hook).
  std::optional<std::string> inject_fault;
};

struct SelftestReport {
  struct Check {
    std::string name;
    bool passed;
    double error;
    double tolerance;
  };
  std::vector<Check> checks;
  bool passed() const;
  json to_json() const;
  std::string to_text() const;
};

SelftestReport run_selftest(const SelftestOptions& options = {});

/// Entry point for the msdc executable. Writes results to `out` only on
/// success; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace msdc::cli
