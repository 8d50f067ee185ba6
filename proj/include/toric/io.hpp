#pragma once

#include "toric/deformation.hpp"
#include "toric/fan.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace toric {

/// Malformed input: bad JSON, schema violations, unparsable flags.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fan schema: {"dim": n, "rays": [[...], ...], "max_cones": [[...], ...]}.
/// Integers may be JSON numbers or decimal strings. The fan is passed
/// through checked_fan.
Fan fan_from_json(const nlohmann::json& j);
Fan parse_fan(const std::string& path);
nlohmann::json fan_to_json(const Fan& fan);

/// Numbers when they fit in 64 bits, decimal strings otherwise.
nlohmann::json to_json(const Integer& x);
nlohmann::json to_json(const IntVec& v);
/// {"rows": [...], "cols": [...], "data": [[...], ...]}.
nlohmann::json matrix_json(const IntMat& A, const std::vector<std::string>& rows,
                           const std::vector<std::string>& cols);
nlohmann::json checks_json(const std::vector<Check>& checks);

/// "-1,2,0" -> (-1, 2, 0).
IntVec parse_int_list(const std::string& text);

}  // namespace toric
