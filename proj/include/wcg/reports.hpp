#pragma once

#include <string>

#include "json.hpp"
#include "wcg/harness.hpp"
#include "wcg/kl.hpp"

namespace wcg {

inline constexpr int kSchemaVersion = 1;

// JSON renderings of the reports. Elements appear as their normal-form
// words ("" for e), polynomials in the textual Laurent format, and object
// keys are sorted.
nlohmann::json system_json(const CoxeterSystem& sys);
nlohmann::json shape_json(const CaseShape& shape);
nlohmann::json hecke_json(const CoxeterGroup& g, const HeckeElement& h);
nlohmann::json bound_json(const CoxeterGroup& g, const BoundInfo& b);
nlohmann::json verify_json(const CoxeterGroup& g, const VerifyReport& r);
nlohmann::json suite_json(const SuiteReport& r);
nlohmann::json a_function_json(const CoxeterGroup& g, const AFunctionReport& r);
nlohmann::json lowest_cell_json(const CoxeterGroup& g, const LowestCellReport& r);
nlohmann::json cells_json(const CoxeterGroup& g, const CellGraph& c);
nlohmann::json campaign_json(const CampaignReport& r);

// Fixed-width table, one row per configuration.
std::string campaign_table(const CampaignReport& r);

}  // namespace wcg
