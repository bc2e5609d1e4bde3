#include "toric/fan_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace toric {

namespace {

using nlohmann::json;

Int json_int(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw StructuralError(std::string("expected an exact integer for ") + what);
  return Int(static_cast<long>(j.get<long long>()));
}

}  // namespace

Fan fan_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw StructuralError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rays") || !j.contains("max_cones"))
    throw StructuralError("fan JSON needs 'rays' and 'max_cones'");
  Fan fan;
  for (const auto& row : j.at("rays")) {
    if (!row.is_array()) throw StructuralError("each ray must be an array");
    IntVec v;
    for (const auto& x : row) v.push_back(json_int(x, "a ray coordinate"));
    fan.rays.push_back(std::move(v));
  }
  for (const auto& row : j.at("max_cones")) {
    if (!row.is_array()) throw StructuralError("each cone must be an array");
    std::vector<int> c;
    for (const auto& x : row) {
      Int idx = json_int(x, "a cone index");
      c.push_back(static_cast<int>(idx.get_si()));
    }
    fan.max_cones.push_back(std::move(c));
  }
  return fan;
}

Fan fan_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return fan_from_json(ss.str());
}

std::string fan_to_json(const Fan& fan) {
  nlohmann::ordered_json j;
  j["rays"] = nlohmann::ordered_json::array();
  for (const auto& r : fan.rays) {
    auto row = nlohmann::ordered_json::array();
    for (const Int& x : r) row.push_back(x.get_si());
    j["rays"].push_back(row);
  }
  j["max_cones"] = nlohmann::ordered_json::array();
  for (const auto& c : fan.max_cones) j["max_cones"].push_back(c);
  return j.dump();
}

DivisorClass divisor_from_json(const std::string& text, int ray_count) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw StructuralError(std::string("invalid JSON: ") + e.what());
  }
  const json* arr = nullptr;
  if (j.is_object() && j.contains("coeffs")) arr = &j.at("coeffs");
  else if (j.is_array()) arr = &j;
  else throw StructuralError("divisor JSON needs a 'coeffs' array");
  DivisorClass d;
  for (const auto& x : *arr) d.coeffs.push_back(json_int(x, "a divisor coefficient"));
  if (static_cast<int>(d.coeffs.size()) != ray_count)
    throw StructuralError("divisor length does not match the ray count");
  return d;
}

}  // namespace toric
