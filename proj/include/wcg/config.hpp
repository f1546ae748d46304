#pragma once

#include <optional>
#include <string>

#include "wcg/coxeter.hpp"
#include "wcg/group.hpp"
#include "wcg/harness.hpp"

namespace wcg {

// Run configuration as read from JSON and command-line overrides. Bonds use
// 0 for infinity; weights default to 1.
struct Config {
  std::optional<int> m_sr, m_st, m_rt;
  int w_r = 1, w_s = 1, w_t = 1;
  int max_len = 4;
  std::size_t max_elements = kDefaultElementCap;
  Radii radii;
  std::string output;

  // Throws ConfigError naming the missing bond or the violated constraint.
  CoxeterSystem system() const;
};

// Keys: m_sr, m_st, m_rt, w_r, w_s, w_t, max_len, max_elements, output and
// a "radii" object with the Radii field names. Unknown keys are rejected.
Config parse_config(const std::string& json_text);
Config load_config(const std::string& path);

}  // namespace wcg
