#include "descpoly/output.hpp"

#include <sstream>

namespace descpoly {

nlohmann::json OutputRecord::to_json() const {
  return nlohmann::json{
      {"command", command}, {"inputs", inputs}, {"result", result}, {"method", method}, {"elapsed_ms", elapsed_ms}};
}

OutputRecord OutputRecord::from_json(const nlohmann::json& j) {
  OutputRecord r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.result = j.at("result");
  r.method = j.at("method").get<std::string>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

std::string OutputRecord::to_text() const { return flatten_text(to_json()); }

nlohmann::json coefficient_map(const IntPolynomial& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.get_str();
  return j;
}

nlohmann::json coefficient_map(const BivarPolynomial& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [key, c] : p.terms()) j[std::to_string(key.first) + "," + std::to_string(key.second)] = c.get_str();
  return j;
}

namespace {

void flatten(const nlohmann::json& j, const std::string& prefix, std::ostringstream& out) {
  auto child = [&](const std::string& k) { return prefix.empty() ? k : prefix + "." + k; };
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, child(k), out);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], child(std::to_string(i)), out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

std::string flatten_text(const nlohmann::json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

}  // namespace descpoly
