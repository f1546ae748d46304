#include "wcg/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "wcg/error.hpp"

namespace wcg {

namespace {

using nlohmann::json;

int get_int(const json& j, const std::string& key) {
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw ConfigError("config key '" + key + "' must be an integer");
  const auto x = v.get<long long>();
  if (x < 0 || x > 1'000'000'000) throw ConfigError("config key '" + key + "' out of range");
  return static_cast<int>(x);
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ConfigError("unknown " + where + " key '" + k + "'");
}

}  // namespace

CoxeterSystem Config::system() const {
  if (!m_rt) throw ConfigError("missing bond m_rt");
  if (!m_sr) throw ConfigError("missing bond m_sr");
  if (!m_st) throw ConfigError("missing bond m_st");
  return CoxeterSystem::make(*m_rt, *m_sr, *m_st, w_r, w_s, w_t);
}

Config parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  check_keys(j, {"m_sr", "m_st", "m_rt", "w_r", "w_s", "w_t", "max_len", "max_elements", "radii", "output"},
             "config");
  Config c;
  if (j.contains("m_sr")) c.m_sr = get_int(j, "m_sr");
  if (j.contains("m_st")) c.m_st = get_int(j, "m_st");
  if (j.contains("m_rt")) c.m_rt = get_int(j, "m_rt");
  if (j.contains("w_r")) c.w_r = get_int(j, "w_r");
  if (j.contains("w_s")) c.w_s = get_int(j, "w_s");
  if (j.contains("w_t")) c.w_t = get_int(j, "w_t");
  if (j.contains("max_len")) c.max_len = get_int(j, "max_len");
  if (j.contains("max_elements")) c.max_elements = static_cast<std::size_t>(get_int(j, "max_elements"));
  if (j.contains("output")) {
    if (!j["output"].is_string()) throw ConfigError("config key 'output' must be a string");
    c.output = j["output"].get<std::string>();
  }
  if (j.contains("radii")) {
    const json& r = j["radii"];
    if (!r.is_object()) throw ConfigError("config key 'radii' must be an object");
    const std::pair<const char*, int Radii::*> fields[] = {
        {"word_ball", &Radii::word_ball},       {"length_ball", &Radii::length_ball},
        {"hecke_ball", &Radii::hecke_ball},     {"verify_x", &Radii::verify_x},
        {"verify_y", &Radii::verify_y},         {"lambda_ball", &Radii::lambda_ball},
        {"witness_ball", &Radii::witness_ball}, {"cell_ball", &Radii::cell_ball},
        {"dihedral_menu_max", &Radii::dihedral_menu_max},
    };
    std::set<std::string> allowed;
    for (const auto& [name, field] : fields) allowed.insert(name);
    check_keys(r, allowed, "radii");
    for (const auto& [name, field] : fields)
      if (r.contains(name)) c.radii.*field = get_int(r, name);
  }
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace wcg
