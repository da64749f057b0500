#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "cokahler/errors.hpp"
#include "cokahler/linalg.hpp"
#include "cokahler/matrix.hpp"
#include "cokahler/numeric.hpp"

namespace cokahler {

using Json = nlohmann::ordered_json;

/// Parsed and validated analysis request: torus half-dimension n, the 2n x 2n
/// integer monodromy matrix, an optional skew integer form overriding the
/// standard omega, and an optional restriction of the checks to run.
struct InputSpec {
  int n = 0;
  Matrix matrix;
  std::optional<Matrix> omega;
  std::optional<std::vector<std::string>> checks;

  friend bool operator==(const InputSpec& a, const InputSpec& b) {
    return a.n == b.n && a.matrix == b.matrix && a.omega == b.omega && a.checks == b.checks;
  }
};

/// Check names in report order.
inline const std::vector<std::string>& known_check_names() {
  static const std::vector<std::string> names = {
      "monotonicity",      "b1_parity",         "poincare_duality", "hard_lefschetz",
      "omega_injectivity", "eigenvalue_parity", "oracle_agreement"};
  return names;
}

namespace detail {

inline Matrix integer_matrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty())
    throw ParseError("field '" + field + "' must be a non-empty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  Matrix m;
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array())
      throw ParseError("field '" + field + "', row " + std::to_string(i) + ": expected an array");
    if (i == 0) {
      cols = row.size();
      m = Matrix(rows, cols);
    } else if (row.size() != cols) {
      throw ParseError("field '" + field + "', row " + std::to_string(i) +
                       ": ragged row of length " + std::to_string(row.size()));
    }
    for (std::size_t k = 0; k < cols; ++k) {
      if (!row[k].is_number_integer())
        throw ParseError("field '" + field + "', entry (" + std::to_string(i) + "," +
                         std::to_string(k) + "): expected an integer");
      m(i, k) = Rat(Int(row[k].get<std::int64_t>()));
    }
  }
  if (rows != cols)
    throw ParseError("field '" + field + "' must be a square matrix, got " + m.shape_string());
  return m;
}

inline Json integer_matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_int64(numerator(m(i, j))));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void validate_omega(const Matrix& omega, int n) {
  const std::size_t d = static_cast<std::size_t>(2 * n);
  if (omega.rows() != d || omega.cols() != d)
    throw ValidationError("omega must have size 2n x 2n = " + std::to_string(d) + "x" +
                          std::to_string(d) + ", got " + omega.shape_string());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (omega(i, j) != -omega(j, i)) throw ValidationError("omega must be skew-symmetric");
  if (determinant(omega).is_zero())
    throw ValidationError("omega must be nondegenerate (det != 0)");
}

}  // namespace detail

inline InputSpec input_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("input document must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "n" && key != "matrix" && key != "omega" && key != "checks")
      throw ValidationError("unknown input field '" + key + "'");
  }
  if (!j.contains("n")) throw ParseError("missing required field 'n'");
  if (!j.contains("matrix")) throw ParseError("missing required field 'matrix'");
  if (!j["n"].is_number_integer()) throw ParseError("field 'n' must be an integer");

  InputSpec spec;
  const std::int64_t n_raw = j["n"].get<std::int64_t>();
  if (n_raw < 1) throw ValidationError("n must be a positive integer");
  if (n_raw > 12)
    throw ValidationError("n must be at most 12 (exterior powers on dimension 2n)");
  spec.n = static_cast<int>(n_raw);
  spec.matrix = detail::integer_matrix_from_json(j["matrix"], "matrix");
  if (spec.matrix.rows() != static_cast<std::size_t>(2 * spec.n))
    throw ValidationError("matrix must have size 2n x 2n = " + std::to_string(2 * spec.n) + "x" +
                          std::to_string(2 * spec.n) + ", got " + spec.matrix.shape_string());

  if (j.contains("omega") && !j["omega"].is_null()) {
    Matrix omega = detail::integer_matrix_from_json(j["omega"], "omega");
    detail::validate_omega(omega, spec.n);
    spec.omega = std::move(omega);
  }
  if (j.contains("checks") && !j["checks"].is_null()) {
    if (!j["checks"].is_array()) throw ParseError("field 'checks' must be an array of names");
    std::vector<std::string> checks;
    for (const Json& c : j["checks"]) {
      if (!c.is_string()) throw ParseError("field 'checks' must contain strings");
      const std::string name = c.get<std::string>();
      bool known = false;
      for (const std::string& k : known_check_names()) known = known || k == name;
      if (!known) throw ValidationError("unknown check name '" + name + "'");
      for (const std::string& seen : checks)
        if (seen == name) throw ValidationError("duplicate check name '" + name + "'");
      checks.push_back(name);
    }
    spec.checks = std::move(checks);
  }
  return spec;
}

inline InputSpec parse_input(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  return input_from_json(j);
}

inline Json input_to_json(const InputSpec& spec) {
  Json j;
  j["n"] = spec.n;
  j["matrix"] = detail::integer_matrix_to_json(spec.matrix);
  j["omega"] = spec.omega ? detail::integer_matrix_to_json(*spec.omega) : Json(nullptr);
  if (spec.checks) {
    Json arr = Json::array();
    for (const std::string& c : *spec.checks) arr.push_back(c);
    j["checks"] = std::move(arr);
  } else {
    j["checks"] = nullptr;
  }
  return j;
}

}  // namespace cokahler
