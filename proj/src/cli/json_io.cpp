#include <cmath>
#include <string>
#include <utility>

#include "msdc/cli.hpp"
#include "msdc/error.hpp"

namespace msdc::cli {

namespace {

[[noreturn]] void schema_error(const std::string& field, const std::string& what) {
  throw InputError(kExitSchema, "field '" + field + "': " + what);
}

const json& require(const json& obj, const std::string& key) {
  if (!obj.is_object()) schema_error("<root>", "expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(key, "missing");
  return *it;
}

int require_int(const json& obj, const std::string& key) {
  const json& v = require(obj, key);
  if (!v.is_number_integer()) schema_error(key, "expected an integer");
  return v.get<int>();
}

double require_number(const json& obj, const std::string& key) {
  const json& v = require(obj, key);
  if (!v.is_number()) schema_error(key, "expected a number");
  return v.get<double>();
}

/// Domain failures keep their message but name the offending field.
template <typename F>
auto with_field(const std::string& field, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw InputError(kExitDomain, "field '" + field + "': " + e.what());
  }
}

}  // namespace

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line/column for the diagnostic.
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(kExitSchema, "invalid JSON at line " + std::to_string(line) + ", column " +
                                      std::to_string(col) + ": " + e.what());
  }
}

BoundaryState parse_state(const json& rows, int n, int d, const std::string& field) {
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
    schema_error(field, "expected an array of " + std::to_string(n) + " derivative rows");
  DenseMatrix values(static_cast<std::size_t>(n), static_cast<std::size_t>(d));
  for (int k = 0; k < n; ++k) {
    const json& row = rows[static_cast<std::size_t>(k)];
    const std::string row_field = field + "[" + std::to_string(k) + "]";
    if (!row.is_array() || row.size() != static_cast<std::size_t>(d))
      schema_error(row_field, "expected an array of " + std::to_string(d) + " numbers");
    for (int c = 0; c < d; ++c) {
      const json& v = row[static_cast<std::size_t>(c)];
      if (!v.is_number()) schema_error(row_field + "[" + std::to_string(c) + "]", "expected a number");
      values(static_cast<std::size_t>(k), static_cast<std::size_t>(c)) = v.get<double>();
    }
  }
  return with_field(field, [&] { return BoundaryState(std::move(values)); });
}

namespace {

struct Header {
  int n;
  double h;
  int d;
};

Header parse_header(const json& input) {
  Header hd{require_int(input, "n"), require_number(input, "h"), require_int(input, "d")};
  with_field("n", [&] { check_order_and_horizon(hd.n, 1.0); return 0; });
  with_field("h", [&] { check_order_and_horizon(1, hd.h); return 0; });
  if (hd.d < 1) throw InputError(kExitDomain, "field 'd': dimension must be at least 1");
  return hd;
}

}  // namespace

CostProblem parse_problem(const json& input) {
  const Header hd = parse_header(input);
  auto x = parse_state(require(input, "x"), hd.n, hd.d, "x");
  auto y = parse_state(require(input, "y"), hd.n, hd.d, "y");
  return with_field("x", [&] { return CostProblem(hd.h, std::move(x), std::move(y)); });
}

DiscreteMeasure parse_measure(const json& points, int n, int d, const std::string& field) {
  if (!points.is_array() || points.empty()) schema_error(field, "expected a nonempty array of states");
  std::vector<BoundaryState> states;
  states.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    states.push_back(parse_state(points[i], n, d, field + "[" + std::to_string(i) + "]"));
  return DiscreteMeasure(std::move(states));
}

json rows_to_json(const DenseMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    rows.push_back(json(std::vector<double>(r.begin(), r.end())));
  }
  return rows;
}

json matrix_to_json(const DenseMatrix& m) {
  const auto d = m.data();
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::vector<double>(d.begin(), d.end())}};
}

CostRoute parse_route(const std::string& name) {
  if (name == "alg51") return CostRoute::kClosedForm;
  if (name == "kform") return CostRoute::kKForm;
  if (name == "scaled") return CostRoute::kScaled;
  throw InputError(kExitSchema, "unknown route '" + name + "' (expected alg51, kform or scaled)");
}

}  // namespace msdc::cli
