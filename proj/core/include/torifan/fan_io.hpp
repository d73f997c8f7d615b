#pragma once

#include <json.hpp>

#include "torifan/fan.hpp"

namespace torifan {

// Fan files: {"rays": [[x,y,z],...], "max_cones": [[i,j,k],...], "names": [...]?}
// Integer entries may be JSON numbers or decimal strings.
Fan fan_from_json(const nlohmann::json& j);
nlohmann::json fan_to_json(const Fan& f);
Fan load_fan_file(const std::string& path);

nlohmann::json json_int(const Int& z);   // number when it fits, string otherwise
nlohmann::json json_rat(const Rat& q);   // "p/q" or number

}  // namespace torifan
