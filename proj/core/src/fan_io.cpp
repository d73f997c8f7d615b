#include "torifan/fan_io.hpp"

#include <fstream>

namespace torifan {

namespace {

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
  if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<uint64_t>()));
  if (j.is_string()) return parse_int(j.get<std::string>());
  fail(Err::ParseError, "expected an integer, got " + j.dump());
}

}  // namespace

Fan fan_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rays") || !j.contains("max_cones"))
    fail(Err::ParseError, "fan file needs 'rays' and 'max_cones'");
  std::vector<LatticePoint> rays;
  for (const auto& r : j.at("rays")) {
    if (!r.is_array() || r.size() != 3) fail(Err::ParseError, "ray must have 3 coordinates");
    rays.push_back({int_from_json(r[0]), int_from_json(r[1]), int_from_json(r[2])});
  }
  std::vector<std::vector<int>> cones;
  for (const auto& c : j.at("max_cones")) {
    if (!c.is_array()) fail(Err::ParseError, "cone must be a list of ray indices");
    std::vector<int> idx;
    for (const auto& e : c) {
      Int z = int_from_json(e);
      if (!z.fits_sint_p()) fail(Err::ParseError, "cone ray index out of range");
      idx.push_back(static_cast<int>(z.get_si()));
    }
    cones.push_back(std::move(idx));
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    for (const auto& n : j.at("names")) {
      if (!n.is_string()) fail(Err::ParseError, "names must be strings");
      names.push_back(n.get<std::string>());
    }
  }
  return make_fan(std::move(rays), cones, std::move(names));
}

nlohmann::json json_int(const Int& z) {
  if (z.fits_slong_p()) return nlohmann::json(z.get_si());
  return nlohmann::json(z.get_str());
}

nlohmann::json json_rat(const Rat& q) {
  if (q.get_den() == 1) return json_int(q.get_num());
  return nlohmann::json(to_string(q));
}

nlohmann::json fan_to_json(const Fan& f) {
  nlohmann::json j;
  j["rays"] = nlohmann::json::array();
  for (const auto& r : f.rays) j["rays"].push_back({json_int(r[0]), json_int(r[1]), json_int(r[2])});
  j["max_cones"] = nlohmann::json::array();
  for (const auto& c : f.cones) j["max_cones"].push_back({c.rays[0], c.rays[1], c.rays[2]});
  bool any_name = false;
  for (const auto& n : f.names) any_name |= !n.empty();
  if (any_name) j["names"] = f.names;
  return j;
}

Fan load_fan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::ParseError, "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Err::ParseError, "invalid JSON in '" + path + "': " + e.what());
  }
  return fan_from_json(j);
}

}  // namespace torifan
