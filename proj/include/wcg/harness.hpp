#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wcg/coxeter.hpp"
#include "wcg/hecke.hpp"
#include "wcg/kl.hpp"

namespace wcg {

inline constexpr std::size_t kMaxCounterexamples = 20;

struct ClauseResult {
  std::string id;         // e.g. "L5.1(7)"
  std::string statement;  // the checked implication in plain notation
  long checked = 0;       // hypothesis-satisfying instances examined
  long failures = 0;
  std::vector<std::string> counterexamples;  // first kMaxCounterexamples

  void fail(std::string what) {
    ++failures;
    if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(what));
  }
};

enum class SuiteStatus { Pass, Fail, NotApplicable };
std::string_view suite_status_name(SuiteStatus s);

struct SuiteReport {
  std::string config;
  std::string suite;     // lemma id, e.g. "L5.1"
  std::string universe;  // what was enumerated
  std::string relabeling;
  std::string reason;    // why the suite is not applicable
  std::vector<ClauseResult> clauses;
  std::optional<double> seconds;

  SuiteStatus status() const;
};

// Ball radii used by the suites and the campaign.
struct Radii {
  int word_ball = 10;
  int length_ball = 10;
  int hecke_ball = 7;
  int verify_x = 6;
  int verify_y = 6;
  int lambda_ball = 5;
  int witness_ball = 8;
  int cell_ball = 8;
  // Infinite dihedral subgroups are sampled up to this length.
  int dihedral_menu_max = 6;
};

// Lemma sections with checkable statements: 4 (m_sr = inf, finite m_st >= 3),
// 5 (inf > m_sr >= m_st >= 4, m_sr >= 5), 6 (m_sr >= 8, m_st = 3).
bool section_applies(const CaseShape& shape, const CoxeterSystem& relabeled, int section,
                     std::string* reason);

// Each returns one report per lemma of the section; when the system's case
// does not match, every report is NOT_APPLICABLE.
std::vector<SuiteReport> suite_word_lemmas(const CoxeterSystem& sys, int section,
                                           const Radii& radii, std::size_t max_elements);
std::vector<SuiteReport> suite_length_lemmas(const CoxeterSystem& sys, int section,
                                             const Radii& radii, std::size_t max_elements);
std::vector<SuiteReport> suite_hecke_lemmas(const CoxeterSystem& sys, int section,
                                            const Radii& radii, std::size_t max_elements);
// All three in lemma order.
std::vector<SuiteReport> run_lemma_section(const CoxeterSystem& sys, int section,
                                           const Radii& radii, std::size_t max_elements,
                                           bool timing = false);

struct CampaignEntry {
  CoxeterSystem system;
  Radii radii;
};

struct CampaignOptions {
  int threads = 1;
  bool timing = false;
  std::size_t max_elements = kDefaultElementCap;
  // Test hook: verify against N + bound_offset instead of N.
  long bound_offset = 0;
};

struct ConfigResult {
  std::string config;
  // Owns the elements referenced by the reports below.
  std::shared_ptr<CoxeterGroup> group;
  CaseShape shape;
  VerifyReport verify;
  std::vector<SuiteReport> suites;
  AFunctionReport a_function;
  LowestCellReport lowest_cell;
  std::string error;  // resource or scope failure, empty otherwise
  bool pass = false;
};

struct CampaignReport {
  std::vector<ConfigResult> configs;
  bool pass = true;
};

std::vector<CampaignEntry> default_battery();
CampaignReport run_campaign(const std::vector<CampaignEntry>& battery, const CampaignOptions& opts);

}  // namespace wcg
