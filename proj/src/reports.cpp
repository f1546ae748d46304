#include "wcg/reports.hpp"

#include <cstdio>
#include <sstream>

namespace wcg {

using nlohmann::json;

namespace {

json words(const CoxeterGroup& g, const std::vector<Elem>& v) {
  json out = json::array();
  for (const Elem w : v) out.push_back(g.word(w));
  return out;
}

json degree_json(int d) { return d == kDegNegInf ? json(nullptr) : json(d); }

}  // namespace

json system_json(const CoxeterSystem& sys) {
  return {{"m_rt", sys.m_rt()}, {"m_sr", sys.m_sr()}, {"m_st", sys.m_st()}, {"w_r", sys.weight(0)},
          {"w_s", sys.weight(1)}, {"w_t", sys.weight(2)}, {"describe", sys.describe()}};
}

json shape_json(const CaseShape& shape) {
  std::string rel;
  for (int a = 0; a < kRank; ++a) rel += kGenLabels[shape.relabeling[a]];
  return {{"kind", std::string(case_kind_name(shape.kind))}, {"relabeling", rel}, {"note", shape.note}};
}

json hecke_json(const CoxeterGroup& g, const HeckeElement& h) {
  json out = json::array();
  for (const auto& [w, c] : h) out.push_back({{"element", g.word(w)}, {"coeff", c.to_string()}});
  return out;
}

json bound_json(const CoxeterGroup& g, const BoundInfo& b) {
  json breakdown = json::array();
  for (const auto& e : b.breakdown)
    breakdown.push_back({{"J", genset_string(e.J)}, {"longest", g.word(e.longest)}, {"weight", e.weight}});
  return {{"N", b.N}, {"breakdown", breakdown}, {"M", words(g, b.M)}};
}

json verify_json(const CoxeterGroup& g, const VerifyReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back({{"x", g.word(w.x)}, {"y", g.word(w.y)}, {"z", g.word(w.z)}, {"degree", w.degree}});
  json mw = json::array();
  for (const auto& [u, d] : r.m_witnesses) mw.push_back({{"u", g.word(u)}, {"deg_f_uuu", degree_json(d)}});
  return {{"config", r.config},
          {"N", r.bound.N},
          {"bound", bound_json(g, r.bound)},
          {"bound_checked", r.bound_checked},
          {"x_max_len", r.x_max_len},
          {"y_max_len", r.y_max_len},
          {"pairs_checked", r.pairs_checked},
          {"triples_checked", r.triples_checked},
          {"max_degree", degree_json(r.max_degree)},
          {"witnesses", witnesses},
          {"m_witnesses", mw},
          {"bound_violations", r.bound_violations},
          {"fact_a_violations", r.fact_a_violations},
          {"fact_b_violations", r.fact_b_violations},
          {"sharp", r.sharp},
          {"pass", r.pass}};
}

json suite_json(const SuiteReport& r) {
  json clauses = json::array();
  for (const auto& c : r.clauses)
    clauses.push_back({{"id", c.id},
                       {"statement", c.statement},
                       {"checked", c.checked},
                       {"failures", c.failures},
                       {"counterexamples", c.counterexamples}});
  json out = {{"config", r.config},
              {"suite", r.suite},
              {"universe", r.universe},
              {"relabeling", r.relabeling},
              {"status", std::string(suite_status_name(r.status()))},
              {"clauses", clauses}};
  if (!r.reason.empty()) out["reason"] = r.reason;
  if (r.seconds) out["seconds"] = *r.seconds;
  return out;
}

json a_function_json(const CoxeterGroup& g, const AFunctionReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json j = {{"w", g.word(e.w)}, {"in_lambda", e.in_lambda}, {"reaches_N", e.reaches_N}};
    if (e.reaches_N) {
      j["witness_kind"] = e.witness_kind;
      j["witness"] = {g.word(e.wx), g.word(e.wy)};
    }
    entries.push_back(j);
  }
  return {{"config", r.config},
          {"N", r.N},
          {"lambda_ball", r.lambda_ball},
          {"witness_ball", r.witness_ball},
          {"pairs_scanned", r.pairs_scanned},
          {"scan_max_degree", degree_json(r.scan_max_degree)},
          {"bound_premise", r.bound_premise},
          {"M", words(g, r.M)},
          {"entries", entries},
          {"truncation_gaps", words(g, r.truncation_gaps)},
          {"violations", words(g, r.violations)},
          {"pass", r.pass}};
}

json lowest_cell_json(const CoxeterGroup& g, const LowestCellReport& r) {
  json per = json::array();
  for (const auto& p : r.per_longest)
    per.push_back({{"w_J", g.word(p.wJ)},
                   {"J", genset_string(p.J)},
                   {"cell_witnesses_checked", p.cell_witnesses_checked},
                   {"cell_witness_failures", words(g, p.cell_witness_failures)},
                   {"left_cell_witnesses_checked", p.left_cell_witnesses_checked},
                   {"left_cell_witness_failures", words(g, p.left_cell_witness_failures)},
                   {"only_in_coset", words(g, p.only_in_coset)},
                   {"only_in_descent_set", words(g, p.only_in_descent_set)}});
  return {{"config", r.config}, {"N", r.N}, {"ball", r.ball}, {"per_longest", per}, {"pass", r.pass}};
}

json cells_json(const CoxeterGroup& g, const CellGraph& c) {
  auto comps = [&](const std::vector<CellGraph::Component>& cs) {
    json out = json::array();
    for (const auto& comp : cs) out.push_back({{"members", words(g, comp.members)}, {"incomplete", comp.incomplete}});
    return out;
  };
  return {{"ball", c.ball},
          {"nodes", c.nodes.size()},
          {"edges", c.edges.size()},
          {"left_cells", comps(c.left_cells)},
          {"right_cells", comps(c.right_cells)},
          {"two_sided_cells", comps(c.two_sided_cells)}};
}

json campaign_json(const CampaignReport& r) {
  json configs = json::array();
  long passed = 0;
  for (const auto& c : r.configs) {
    json j = {{"config", c.config}, {"shape", shape_json(c.shape)}, {"pass", c.pass}};
    if (!c.error.empty()) j["error"] = c.error;
    if (c.group) {
      const CoxeterGroup& g = *c.group;
      j["verify"] = verify_json(g, c.verify);
      j["a_function"] = a_function_json(g, c.a_function);
      j["lowest_cell"] = lowest_cell_json(g, c.lowest_cell);
    }
    json suites = json::array();
    for (const auto& s : c.suites) suites.push_back(suite_json(s));
    j["suites"] = suites;
    configs.push_back(j);
    passed += c.pass ? 1 : 0;
  }
  return {{"schema_version", kSchemaVersion},
          {"configs", configs},
          {"summary", {{"configs", r.configs.size()}, {"passed", passed}, {"pass", r.pass}}}};
}

std::string campaign_table(const CampaignReport& r) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-24s %-15s %4s %8s %6s %6s %6s %-16s %s\n", "config", "case", "N", "pairs",
                "bound", "a=N", "cells", "suites", "result");
  out << line;
  for (const auto& c : r.configs) {
    int pass = 0, fail = 0;
    for (const auto& s : c.suites) {
      if (s.status() == SuiteStatus::Pass) ++pass;
      if (s.status() == SuiteStatus::Fail) ++fail;
    }
    const std::string suites = pass + fail == 0 ? "n/a" : std::to_string(pass) + " pass " + std::to_string(fail) + " fail";
    auto yn = [&](bool b) { return c.error.empty() ? (b ? "ok" : "FAIL") : "-"; };
    std::snprintf(line, sizeof line, "%-24s %-15s %4ld %8ld %6s %6s %6s %-16s %s\n", c.config.c_str(),
                  std::string(case_kind_name(c.shape.kind)).c_str(), c.verify.bound.N, c.verify.pairs_checked,
                  yn(c.verify.pass), yn(c.a_function.pass), yn(c.lowest_cell.pass), suites.c_str(),
                  c.pass ? "PASS" : "FAIL");
    out << line;
    if (!c.error.empty()) out << "  error: " << c.error << "\n";
  }
  out << (r.pass ? "campaign PASS" : "campaign FAIL") << " (" << r.configs.size() << " configs)\n";
  return out.str();
}

}  // namespace wcg
