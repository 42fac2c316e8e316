#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "msdc/cli.hpp"
#include "msdc/error.hpp"
#include "msdc/matrices.hpp"
#include "msdc/oracle.hpp"

namespace msdc::cli {

namespace {

// Library errors raised after parsing are domain errors (exit 3).
template <typename F>
auto domain(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw InputError(kExitDomain, std::string(to_string(e.code())) + ": " + e.what());
  }
}

std::vector<double> sample_times(const json& spec, double h) {
  if (spec.contains("times")) {
    const json& t = spec["times"];
    if (!t.is_array() || t.empty()) throw InputError(kExitSchema, "field 'samples.times': expected a nonempty array");
    std::vector<double> times;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!t[i].is_number())
        throw InputError(kExitSchema, "field 'samples.times[" + std::to_string(i) + "]': expected a number");
      times.push_back(t[i].get<double>());
    }
    return times;
  }
  const json count_field = spec.value("count", json(11));
  if (!count_field.is_number_integer() || count_field.get<long long>() < 1)
    throw InputError(kExitSchema, "field 'samples.count': expected a positive integer");
  const auto count = count_field.get<std::size_t>();
  std::vector<double> times(count, 0.0);
  for (std::size_t i = 1; i < count; ++i)
    times[i] = i + 1 == count ? h : h * static_cast<double>(i) / static_cast<double>(count - 1);
  return times;
}

}  // namespace

json cmd_cost(const json& input, CostRoute route, double tol) {
  const auto problem = parse_problem(input);
  return domain([&] {
    const auto result = cost(problem, route);
    return json{{"cost", result.total},
                {"route", std::string(to_string(result.route))},
                {"b", rows_to_json(result.b_vector)},
                {"free_flight", is_free_flight(problem, tol)},
                {"numerical_noise", result.numerical_noise}};
  });
}

json cmd_trajectory(const json& input) {
  const auto problem = parse_problem(input);
  const json spec = input.value("samples", json::object());
  if (!spec.is_object()) throw InputError(kExitSchema, "field 'samples': expected an object");
  const json k_field = spec.value("k", json(0));
  if (!k_field.is_number_integer()) throw InputError(kExitSchema, "field 'samples.k': expected an integer");
  const int k = k_field.get<int>();
  if (k < 0) throw InputError(kExitDomain, "field 'samples.k': derivative order must be nonnegative");
  const auto times = sample_times(spec, problem.horizon());

  return domain([&] {
    const auto poly = solve_trajectory(problem);
    const auto values = sample_trajectory(poly, k, times);
    bool extrapolated = false;
    for (double t : times) extrapolated = extrapolated || t < 0.0 || t > problem.horizon();
    return json{{"n", problem.order()},
                {"h", problem.horizon()},
                {"d", problem.dim()},
                {"coeffs", rows_to_json(poly.coeffs)},
                {"k", k},
                {"times", times},
                {"values", rows_to_json(values)},
                {"extrapolated", extrapolated},
                {"integral", oracle::quadrature_cost(poly)}};
  });
}

json cmd_matrices(int n, double h, const std::vector<std::string>& which) {
  static const std::vector<std::string> kAll = {"A", "B", "V", "L", "U", "Linv", "Uinv", "Ainv", "K"};
  const auto& names = which.empty() ? kAll : which;
  for (const auto& name : names) {
    if (std::find(kAll.begin(), kAll.end(), name) == kAll.end())
      throw InputError(kExitSchema, std::string(to_string(ErrorCode::kUnknownMatrix)) + ": '" + name +
                                        "' (expected one of A, B, V, L, U, Linv, Uinv, Ainv, K)");
  }
  return domain([&] {
    json out = json::object();
    for (const auto& name : names) {
      DenseMatrix m;
      if (name == "A") m = build_A(n, h);
      else if (name == "B") m = build_B(n, h);
      else if (name == "V") m = build_V(n, h);
      else if (name == "L") m = build_L(n, h);
      else if (name == "U") m = build_U(n, h);
      else if (name == "Linv") m = build_L_inv(n, h);
      else if (name == "Uinv") m = build_U_inv(n, h);
      else if (name == "Ainv") m = build_A_inv(n, h);
      else m = build_K(n, h);
      out[name] = matrix_to_json(m);
    }
    return out;
  });
}

json cmd_transport(const json& input) {
  if (!input.is_object()) throw InputError(kExitSchema, "field '<root>': expected a JSON object");
  for (const char* key : {"n", "h", "d", "mu", "nu"})
    if (!input.contains(key)) throw InputError(kExitSchema, std::string("field '") + key + "': missing");
  if (!input["n"].is_number_integer() || !input["d"].is_number_integer())
    throw InputError(kExitSchema, "fields 'n' and 'd' must be integers");
  if (!input["h"].is_number()) throw InputError(kExitSchema, "field 'h': expected a number");
  const int n = input["n"].get<int>();
  const int d = input["d"].get<int>();
  const double h = input["h"].get<double>();
  domain([&] { check_order_and_horizon(n, h); return 0; });
  if (d < 1) throw InputError(kExitDomain, "field 'd': dimension must be at least 1");
  const auto mu = parse_measure(input["mu"], n, d, "mu");
  const auto nu = parse_measure(input["nu"], n, d, "nu");
  return domain([&] {
    const auto result = w2_uniform(mu, nu, h);
    return json{{"w2", result.value}, {"m", mu.size()}, {"assignment", result.assignment}};
  });
}

namespace {

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path);
  if (!file) throw InputError(kExitSchema, "cannot open input file '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mean squared derivative cost: closed-form evaluation, trajectories and transport"};
  app.require_subcommand(1);

  std::string input_path = "-";
  std::string route_name = "alg51";
  double tol = kDefaultFreeFlightTol;

  auto* cost_cmd = app.add_subcommand("cost", "Evaluate the cost of a boundary-value problem");
  cost_cmd->add_option("--input", input_path, "Problem JSON file, or - for standard input");
  cost_cmd->add_option("--route", route_name, "Evaluation route: alg51, kform or scaled");
  cost_cmd->add_option("--tol", tol, "Relative tolerance of the free-flight test");

  auto* traj_cmd = app.add_subcommand("trajectory", "Solve for the optimal polynomial and sample it");
  traj_cmd->add_option("--input", input_path, "Problem JSON file (with optional \"samples\"), or -");

  int mat_n = 0;
  double mat_h = 1.0;
  std::vector<std::string> which;
  auto* mat_cmd = app.add_subcommand("matrices", "Print closed-form matrices for (n, h)");
  mat_cmd->set_help_flag("--help", "Print this help message and exit");
  mat_cmd->add_option("--n", mat_n, "Order")->required();
  mat_cmd->add_option("--h", mat_h, "Horizon");
  mat_cmd->add_option("--which", which, "Subset of A,B,V,L,U,Linv,Uinv,Ainv,K")->delimiter(',');

  auto* transport_cmd = app.add_subcommand("transport", "Transport cost between uniform discrete measures");
  transport_cmd->add_option("--input", input_path, "Measures JSON file, or -");

  bool as_json = false;
  std::string inject;
  auto* self_cmd = app.add_subcommand("selftest", "Run the built-in verification suite");
  self_cmd->add_flag("--json", as_json, "Machine-readable report");
  self_cmd->add_option("--inject-fault", inject, "Perturb the named check (test hook)")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "msdc: " << e.what() << "\n";
    return kExitSchema;
  }

  try {
    if (self_cmd->parsed()) {
      SelftestOptions options;
      if (!inject.empty()) options.inject_fault = inject;
      const auto report = run_selftest(options);
      out << (as_json ? report.to_json().dump(2) + "\n" : report.to_text());
      return report.passed() ? kExitOk : kExitSelftestFailure;
    }

    json result;
    if (mat_cmd->parsed()) {
      result = cmd_matrices(mat_n, mat_h, which);
    } else {
      const json input = parse_json_text(read_input(input_path, in));
      if (cost_cmd->parsed()) result = cmd_cost(input, parse_route(route_name), tol);
      else if (traj_cmd->parsed()) result = cmd_trajectory(input);
      else result = cmd_transport(input);
    }
    out << result.dump(2) << "\n";
    return kExitOk;
  } catch (const InputError& e) {
    err << "msdc: " << e.what() << "\n";
    return e.exit_code();
  } catch (const Error& e) {
    err << "msdc: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace msdc::cli
