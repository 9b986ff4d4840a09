#include "semitruss/solution_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "semitruss/errors.hpp"

namespace semitruss {

namespace {

using nlohmann::json;

std::vector<std::vector<int>> table_from_json(const json& j,
                                              const char* name) {
  if (!j.is_array())
    throw ShapeMismatch(std::string(name) + " must be an array of rows");
  std::vector<std::vector<int>> tab;
  for (const auto& row : j) {
    if (!row.is_array())
      throw ShapeMismatch(std::string(name) + " rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw ShapeMismatch(std::string(name) + " entries must be integers");
      r.push_back(v.get<int>());
    }
    tab.push_back(std::move(r));
  }
  return tab;
}

}  // namespace

ValidationResult parse_solution_text(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ShapeMismatch(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ShapeMismatch("solution file must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "n" && key != "sigma" && key != "gamma")
      throw ShapeMismatch("unknown key \"" + key + "\"");
  }
  if (!j.contains("n") || !j.contains("sigma") || !j.contains("gamma"))
    throw ShapeMismatch("required keys: n, sigma, gamma");
  if (!j["n"].is_number_integer())
    throw ShapeMismatch("n must be an integer");
  return validate_solution(j["n"].get<int>(),
                           table_from_json(j["sigma"], "sigma"),
                           table_from_json(j["gamma"], "gamma"));
}

ValidationResult parse_solution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ShapeMismatch("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_solution_text(buf.str());
}

std::string solution_to_json(const Solution& s) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  j["sigma"] = s.sigma;
  j["gamma"] = s.gamma;
  return j.dump(2) + "\n";
}

}  // namespace semitruss
