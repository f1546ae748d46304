#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wcg/config.hpp"
#include "wcg/error.hpp"
#include "wcg/reports.hpp"

using nlohmann::json;
using namespace wcg;

namespace {

enum Exit { kPass = 0, kFail = 1, kInvalid = 2, kNotApplicable = 3 };

struct Options {
  std::string config_path;
  std::optional<int> m_sr, m_st, m_rt, w_r, w_s, w_t, max_len, threads;
  std::optional<std::size_t> max_elements;
  std::string output, edges;
  bool pretty = false;
  bool timing = false;
  std::vector<std::string> elems;
  int section = 0;
};

Config build_config(const Options& o) {
  Config c = o.config_path.empty() ? Config{} : load_config(o.config_path);
  if (o.m_sr) c.m_sr = *o.m_sr;
  if (o.m_st) c.m_st = *o.m_st;
  if (o.m_rt) c.m_rt = *o.m_rt;
  if (o.w_r) c.w_r = *o.w_r;
  if (o.w_s) c.w_s = *o.w_s;
  if (o.w_t) c.w_t = *o.w_t;
  if (o.max_len) c.max_len = *o.max_len;
  if (o.max_elements) c.max_elements = *o.max_elements;
  if (!o.output.empty()) c.output = o.output;
  if (c.max_len < 0) throw ConfigError("max_len must be non-negative");
  return c;
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    bool scalars = true;
    for (const auto& v : j) scalars = scalars && !v.is_structured();
    if (scalars) {
      out << prefix << ": [";
      for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << j[i].dump();
      out << "]\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write '" + path + "'");
  f << text;
}

// JSON to --output or stdout; --pretty renders key: value lines instead.
void emit(const json& doc, const Config& c, bool pretty, const std::string& text = {}) {
  if (!c.output.empty()) write_file(c.output, doc.dump(2) + "\n");
  if (pretty) {
    if (!text.empty()) {
      std::cout << text;
    } else {
      flatten(doc, "", std::cout);
    }
  } else if (c.output.empty()) {
    std::cout << doc.dump() << "\n";
  } else if (!text.empty()) {
    std::cout << text;
  }
}

std::vector<Elem> parse_elements(CoxeterGroup& g, const std::vector<std::string>& words) {
  std::vector<Elem> out;
  for (const auto& w : words) out.push_back(g.normal_form(w == "e" ? "" : w));
  return out;
}

json with_header(json body, const CoxeterSystem& sys) {
  body["schema_version"] = kSchemaVersion;
  body["system"] = system_json(sys);
  return body;
}

int exit_for(bool pass) { return pass ? kPass : kFail; }

int run(const std::string& cmd, const Options& o) {
  const Config c = build_config(o);
  if (cmd == "campaign") {
    auto battery = default_battery();
    for (auto& e : battery) e.radii = c.radii;
    CampaignOptions opts;
    opts.threads = o.threads.value_or(1);
    opts.timing = o.timing;
    opts.max_elements = c.max_elements;
    const CampaignReport rep = run_campaign(battery, opts);
    emit(campaign_json(rep), c, o.pretty, campaign_table(rep));
    for (const auto& cr : rep.configs)
      if (!cr.error.empty()) std::cerr << "resource error: " << cr.error << "\n";
    return exit_for(rep.pass);
  }

  const CoxeterSystem sys = c.system();
  CoxeterGroup g(sys, c.max_elements);
  const std::vector<Elem> el = parse_elements(g, o.elems);

  if (cmd == "classify") {
    emit(with_header(shape_json(classify_case(sys)), sys), c, o.pretty);
    return kPass;
  }
  if (cmd == "ball") {
    json elems = json::array();
    json sizes = json::array();
    for (int n = 0; n <= c.max_len; ++n) sizes.push_back(g.ball_size(n));
    for (const Elem w : g.ball(c.max_len))
      elems.push_back({{"word", g.word(w)},
                       {"length", g.length(w)},
                       {"weight", g.weight(w)},
                       {"left_descents", genset_string(g.descents(w, Side::Left))},
                       {"right_descents", genset_string(g.descents(w, Side::Right))}});
    emit(with_header({{"max_len", c.max_len}, {"ball_sizes", sizes}, {"elements", elems}}, sys), c, o.pretty);
    return kPass;
  }
  const Hecke hecke(g);
  if (cmd == "mult") {
    const HeckeElement prod = hecke.t_mult(el[0], el[1]);
    emit(with_header({{"x", g.word(el[0])},
                      {"y", g.word(el[1])},
                      {"product", hecke_json(g, prod)},
                      {"text", hecke_to_string(g, prod)}},
                     sys),
         c, o.pretty);
    return kPass;
  }
  if (cmd == "f") {
    const LaurentPoly f = hecke.f_coeff(el[0], el[1], el[2]);
    emit(with_header({{"x", g.word(el[0])},
                      {"y", g.word(el[1])},
                      {"z", g.word(el[2])},
                      {"f", f.to_string()},
                      {"degree", f.is_zero() ? json(nullptr) : json(f.deg())}},
                     sys),
         c, o.pretty);
    return kPass;
  }
  if (cmd == "bound") {
    emit(with_header(bound_json(g, compute_bound(g)), sys), c, o.pretty);
    return kPass;
  }
  if (cmd == "verify") {
    const VerifyReport rep = verify_bound(g, c.radii.verify_x, c.radii.verify_y, o.threads.value_or(1));
    emit(with_header(verify_json(g, rep), sys), c, o.pretty);
    return exit_for(rep.pass);
  }
  if (cmd == "cw") {
    KLTables kl(hecke, g.length(el[0]));
    const HeckeElement& cw = kl.c(el[0]);
    emit(with_header({{"w", g.word(el[0])}, {"c_w", hecke_json(g, cw)}, {"text", hecke_to_string(g, cw)}}, sys),
         c, o.pretty);
    return kPass;
  }
  if (cmd == "h") {
    KLTables kl(hecke, g.length(el[0]) + g.length(el[1]));
    const LaurentPoly h = kl.h_coeff(el[0], el[1], el[2]);
    emit(with_header({{"x", g.word(el[0])},
                      {"y", g.word(el[1])},
                      {"z", g.word(el[2])},
                      {"h", h.to_string()},
                      {"degree", h.is_zero() ? json(nullptr) : json(h.deg())}},
                     sys),
         c, o.pretty);
    return kPass;
  }
  if (cmd == "afn") {
    KLTables kl(hecke, 2 * c.max_len);
    const int a = kl.a_truncated(el[0], c.max_len);
    const long N = compute_bound(g).N;
    emit(with_header({{"w", g.word(el[0])},
                      {"search_ball", c.max_len},
                      {"a_truncated", a == kDegNegInf ? json(nullptr) : json(a)},
                      {"N", N}},
                     sys),
         c, o.pretty);
    return kPass;
  }
  if (cmd == "lambda") {
    const LowestCellSets sets = lowest_cell_sets(g, c.max_len);
    json lambda = json::array();
    for (const auto& [w, f] : sets.lambda)
      lambda.push_back({{"w", g.word(w)}, {"x", g.word(f.x)}, {"u", g.word(f.u)}, {"y", g.word(f.y)}});
    json M = json::array();
    for (const Elem u : sets.M) M.push_back(g.word(u));
    emit(with_header({{"ball", sets.ball}, {"M", M}, {"lambda", lambda}}, sys), c, o.pretty);
    return kPass;
  }
  if (cmd == "cells") {
    KLTables kl(hecke, c.max_len + 1);
    const CellGraph graph = cell_graph(kl, c.max_len);
    if (!o.edges.empty()) write_file(o.edges, cell_edge_list(g, graph));
    json doc = cells_json(g, graph);
    doc["note"] = "ball-truncated under-approximation";
    emit(with_header(doc, sys), c, o.pretty);
    return kPass;
  }
  if (cmd == "lemmas") {
    const auto reps = run_lemma_section(sys, o.section, c.radii, c.max_elements, o.timing);
    json suites = json::array();
    bool any_fail = false, all_na = true;
    for (const auto& r : reps) {
      suites.push_back(suite_json(r));
      any_fail = any_fail || r.status() == SuiteStatus::Fail;
      all_na = all_na && r.status() == SuiteStatus::NotApplicable;
    }
    emit(with_header({{"section", o.section}, {"suites", suites}}, sys), c, o.pretty);
    if (any_fail) return kFail;
    return all_na ? kNotApplicable : kPass;
  }
  throw ConfigError("unknown command '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundedness checks for weighted rank-3 Coxeter groups"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config_path, "JSON config file");
  app.add_option("--m-sr", o.m_sr, "bond m_sr (0 = infinity)");
  app.add_option("--m-st", o.m_st, "bond m_st (0 = infinity)");
  app.add_option("--m-rt", o.m_rt, "bond m_rt (0 = infinity)");
  app.add_option("--w-r", o.w_r, "weight L(r)");
  app.add_option("--w-s", o.w_s, "weight L(s)");
  app.add_option("--w-t", o.w_t, "weight L(t)");
  app.add_option("--max-len", o.max_len, "ball radius for ball, afn, lambda, cells");
  app.add_option("--max-elements", o.max_elements, "element cap");
  app.add_option("--threads", o.threads, "worker threads");
  app.add_option("--output", o.output, "write the JSON report to this file");
  app.add_option("--edges", o.edges, "cells: write the edge list to this file");
  app.add_flag("--pretty", o.pretty, "human-readable output");
  app.add_flag("--timing", o.timing, "include suite timings");

  struct Sub {
    const char* name;
    const char* help;
    std::vector<const char*> args;
  };
  const std::vector<Sub> subs = {
      {"classify", "case shape and relabeling", {}},
      {"ball", "elements up to --max-len", {}},
      {"mult", "T_x T_y in the T-basis", {"x", "y"}},
      {"f", "coefficient f_{x,y,z}", {"x", "y", "z"}},
      {"bound", "N and the finite parabolic breakdown", {}},
      {"verify", "check deg f <= N over the verification ball", {}},
      {"cw", "c_w in the T-basis", {"w"}},
      {"h", "coefficient h_{x,y,z}", {"x", "y", "z"}},
      {"afn", "a-function truncated to --max-len", {"w"}},
      {"lambda", "M and Lambda up to --max-len", {}},
      {"cells", "cell preorder graph up to --max-len", {}},
      {"lemmas", "lemma suites of a section (4, 5 or 6)", {"section"}},
      {"campaign", "default battery", {}},
  };
  std::string command;
  std::vector<std::string> positional(3);
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->fallthrough();
    for (std::size_t i = 0; i < s.args.size(); ++i) {
      if (std::string(s.args[i]) == "section")
        sub->add_option("section", o.section, "section number")->required();
      else
        sub->add_option(s.args[i], positional[i], "element word, e for identity")->required();
    }
    sub->callback([&command, &o, &positional, s] {
      command = s.name;
      o.elems.clear();
      for (std::size_t i = 0; i < s.args.size(); ++i)
        if (std::string(s.args[i]) != "section") o.elems.push_back(positional[i]);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    return run(command, o);
  } catch (const ConfigError& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return kInvalid;
  } catch (const ParseError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kInvalid;
  } catch (const ResourceCapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kFail;
  } catch (const ScopeExceeded& e) {
    std::cerr << "scope: " << e.what() << "\n";
    return kFail;
  }
}
