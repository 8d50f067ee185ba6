#include "toric/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace toric {

namespace {

using nlohmann::json;

Integer integer_at(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos)
      return Integer(s);
  }
  throw InputError(where + ": expected an integer");
}

std::size_t index_at(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw InputError(where + ": expected a nonnegative integer");
  return j.get<std::size_t>();
}

const json& field(const json& j, const char* name) {
  if (!j.contains(name)) throw InputError(std::string("missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

Fan fan_from_json(const json& j) {
  if (!j.is_object()) throw InputError("fan: expected an object");
  Fan fan;
  fan.dim = index_at(field(j, "dim"), "dim");
  const json& rays = field(j, "rays");
  if (!rays.is_array()) throw InputError("rays: expected an array");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const std::string where = "rays[" + std::to_string(i) + "]";
    if (!rays[i].is_array()) throw InputError(where + ": expected an array");
    IntVec v;
    for (std::size_t k = 0; k < rays[i].size(); ++k)
      v.push_back(integer_at(rays[i][k], where + "[" + std::to_string(k) + "]"));
    fan.rays.push_back(std::move(v));
  }
  const json& cones = field(j, "max_cones");
  if (!cones.is_array()) throw InputError("max_cones: expected an array");
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const std::string where = "max_cones[" + std::to_string(c) + "]";
    if (!cones[c].is_array()) throw InputError(where + ": expected an array");
    Cone cone;
    for (std::size_t k = 0; k < cones[c].size(); ++k)
      cone.push_back(index_at(cones[c][k], where + "[" + std::to_string(k) + "]"));
    fan.max_cones.push_back(std::move(cone));
  }
  try {
    return checked_fan(std::move(fan));
  } catch (const FanError& e) {
    throw InputError(e.what());
  }
}

Fan parse_fan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return fan_from_json(j);
}

json fan_to_json(const Fan& fan) {
  json rays = json::array(), cones = json::array();
  for (const IntVec& v : fan.rays) rays.push_back(to_json(v));
  for (const Cone& c : fan.max_cones) cones.push_back(c);
  return {{"dim", fan.dim}, {"rays", rays}, {"max_cones", cones}};
}

json to_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

json to_json(const IntVec& v) {
  json out = json::array();
  for (const Integer& x : v) out.push_back(to_json(x));
  return out;
}

json matrix_json(const IntMat& A, const std::vector<std::string>& rows,
                 const std::vector<std::string>& cols) {
  json data = json::array();
  for (std::size_t i = 0; i < A.rows(); ++i) data.push_back(to_json(A.row(i)));
  return {{"rows", rows}, {"cols", cols}, {"data", data}};
}

json checks_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const Check& c : checks)
    out.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  return out;
}

IntVec parse_int_list(const std::string& text) {
  IntVec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("empty entry in '" + text + "'");
    item = item.substr(b, e - b + 1);
    const std::size_t start = item[0] == '-' || item[0] == '+' ? 1 : 0;
    if (item.size() == start || item.find_first_not_of("0123456789", start) != std::string::npos)
      throw InputError("not an integer list: '" + text + "'");
    out.push_back(Integer(item[0] == '+' ? item.substr(1) : item));
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

}  // namespace toric
