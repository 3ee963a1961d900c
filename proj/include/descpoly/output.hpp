#pragma once

#include <string>

#include <json.hpp>

#include "descpoly/polynomial.hpp"

namespace descpoly {

/// What every CLI command prints.
struct OutputRecord {
  std::string command;       // echo of the invocation
  nlohmann::json inputs;     // normalized inputs
  nlohmann::json result;     // coefficients as decimal strings
  std::string method;
  double elapsed_ms = 0;

  nlohmann::json to_json() const;
  static OutputRecord from_json(const nlohmann::json& j);
  /// One "dotted.key: value" line per leaf of the JSON form.
  std::string to_text() const;
};

/// {"0": "192", "1": "456", ...}; empty object for the zero polynomial.
nlohmann::json coefficient_map(const IntPolynomial& p);
/// {"x^i q^j": "c", ...} keyed as "i,j".
nlohmann::json coefficient_map(const BivarPolynomial& p);

/// Flattens nested objects and arrays into dotted keys.
std::string flatten_text(const nlohmann::json& j);

}  // namespace descpoly
