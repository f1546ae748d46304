// Acceptance run: one PASS/FAIL line per criterion, details indented below.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "wcg/harness.hpp"
#include "wcg/kl.hpp"

using namespace wcg;

namespace {

struct Battery {
  CoxeterSystem sys;
  long stated_N;
};

std::vector<Battery> battery() {
  auto s = [](int m_rt, int m_sr, int m_st, int Lr, int Ls, int Lt) {
    return CoxeterSystem::make(m_rt, m_sr, m_st, Lr, Ls, Lt);
  };
  return {
      {s(2, kInfinity, 2, 1, 3, 2), 4},         {s(2, kInfinity, kInfinity, 1, 5, 2), 5},
      {s(2, kInfinity, 4, 1, 2, 3), 10},        {s(2, 5, 4, 2, 2, 1), 10},
      {s(2, 8, 3, 2, 1, 1), 12},                {s(2, 3, 3, 1, 1, 1), 6},
  };
}

struct Line {
  bool pass = true;
  std::ostringstream details;
  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    details << "    " << (ok ? "ok   " : "FAIL ") << what << "\n";
  }
};

int failures = 0;

void report(int id, const std::string& title, Line& line) {
  std::cout << (line.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << "\n" << line.details.str();
  if (!line.pass) ++failures;
}

std::vector<VerifyReport> g_verify;

void boundedness() {
  Line line;
  for (const auto& b : battery()) {
    CoxeterGroup g(b.sys);
    // The stated N is the bound under test; the report also records the computed one.
    const VerifyReport rep = verify_bound(g, 6, 6, 1, b.stated_N);
    g_verify.push_back(rep);
    std::ostringstream what;
    what << b.sys.describe() << " stated N=" << b.stated_N << " computed N=" << rep.bound.N
         << " max deg over ball=" << rep.max_degree << " over-bound triples=" << rep.bound_violations
         << (rep.sharp ? " sharp" : " not sharp");
    line.require(rep.bound_violations == 0 && rep.sharp, what.str());
  }
  report(1, "deg f_{x,y,z} <= N on the length-6 ball, attained exactly", line);
}

void hecke_facts() {
  Line line;
  for (const auto& rep : g_verify) {
    std::ostringstream what;
    what << rep.config << " triples=" << rep.triples_checked << " f_{x,y,e} violations=" << rep.fact_a_violations
         << " degree-by-min-weight violations=" << rep.fact_b_violations;
    line.require(rep.fact_a_violations == 0 && rep.fact_b_violations == 0, what.str());
  }
  report(2, "f_{x,y,e} = delta_{x,y^-1} and deg f_{x,y,z} <= min L", line);
}

void word_oracle() {
  Line line;
  const auto all = battery();
  for (const int i : {1, 3, 4}) {
    const CoxeterSystem& s = all[static_cast<std::size_t>(i)].sys;
    CoxeterGroup g(s);
    oracle::Group og{s, {}};
    const auto elems = g.ball(8);
    long mismatches = 0;
    const auto expected = og.ball(8);
    if (expected.size() != elems.size()) ++mismatches;
    for (const Elem w : elems) {
      if (!expected.count(g.word(w))) ++mismatches;
      for (int a = 0; a < kRank; ++a) {
        if (g.word(g.mul_gen(w, a, Side::Right)) != og.nf(g.word(w) + kGenLabels[a])) ++mismatches;
        if (g.word(g.mul_gen(w, a, Side::Left)) != og.nf(kGenLabels[a] + g.word(w))) ++mismatches;
      }
    }
    std::ostringstream what;
    what << s.describe() << " elements=" << elems.size() << " mismatches=" << mismatches;
    line.require(mismatches == 0, what.str());
  }
  report(3, "incremental normal forms match braid-class reduction up to length 8", line);
}

void lemma_suites() {
  Line line;
  const auto all = battery();
  const std::pair<int, int> runs[] = {{2, 4}, {3, 5}, {4, 6}};
  const std::vector<std::vector<std::string>> expected_ids = {
      {"L4.1", "L4.2"},
      {"L5.1", "L5.2", "L5.2(6)", "L5.3", "L5.4", "L5.5", "L5.6"},
      {"L6.1", "L6.2", "L6.3", "L6.4", "L6.5", "L6.6", "L6.7"},
  };
  for (std::size_t k = 0; k < 3; ++k) {
    const auto [cfg, section] = runs[k];
    const auto reps = run_lemma_section(all[static_cast<std::size_t>(cfg)].sys, section, Radii{}, kDefaultElementCap);
    std::vector<std::string> ids;
    for (const auto& r : reps) {
      ids.push_back(r.suite);
      long checked = 0, failed = 0;
      for (const auto& c : r.clauses) {
        checked += c.checked;
        failed += c.failures;
      }
      std::ostringstream what;
      what << r.config << " " << r.suite << " " << suite_status_name(r.status()) << " instances=" << checked
           << " counterexamples=" << failed;
      line.require(r.status() == SuiteStatus::Pass, what.str());
    }
    line.require(ids == expected_ids[k], "section " + std::to_string(section) + " suite list complete");
  }
  report(4, "lemma suites pass at default radii", line);
}

void kl_layer() {
  Line line;
  const auto all = battery();
  for (const int i : {1, 3, 4}) {
    const CoxeterSystem& s = all[static_cast<std::size_t>(i)].sys;
    CoxeterGroup g(s);
    const Hecke h(g);
    KLTables kl(h, 5);
    oracle::Group og{s, {}};
    oracle::Hecke oh{og};
    const auto elems = g.ball(5);
    long bar_bad = 0, tri_bad = 0, inv_bad = 0;
    for (const Elem w : elems) {
      const HeckeElement& cw = kl.c(w);
      oracle::Vec ov;
      for (const auto& [y, p] : cw) ov[g.word(y)] = p;
      if (kl.bar(cw) != cw || oh.bar(ov) != ov) ++bar_bad;
      for (const auto& [y, p] : cw)
        if (y == w ? p != LaurentPoly::constant(1) : !p.in_vinv_Z_vinv()) ++tri_bad;
      for (const Elem y : elems) {
        LaurentPoly sum;
        for (const Elem z : elems) sum += kl.p(y, z) * kl.q(z, w);
        if (sum != (y == w ? LaurentPoly::constant(1) : LaurentPoly{})) ++inv_bad;
      }
    }
    std::ostringstream what;
    what << s.describe() << " elements=" << elems.size() << " bar failures=" << bar_bad
         << " c_w - T_w not in H_<0=" << tri_bad << " p.q != identity entries=" << inv_bad;
    line.require(bar_bad == 0 && tri_bad == 0 && inv_bad == 0, what.str());
  }
  {
    CoxeterGroup g(all[3].sys);
    const Hecke h(g);
    const Elem top = *g.longest_element(parse_genset("rs"));
    KLTables kl(h, g.length(top));
    long bad = 0, pairs = 0;
    for (const Elem w : g.lower_interval(top))
      for (const Elem y : g.lower_interval(w)) {
        ++pairs;
        if (kl.p(y, w) != LaurentPoly::v_power(-2 * (g.length(w) - g.length(y)))) ++bad;
      }
    line.require(bad == 0, all[3].sys.describe() + " W_sr: p_{y,w} = v^{-2(l(w)-l(y))} on " +
                               std::to_string(pairs) + " pairs, failures=" + std::to_string(bad));
  }
  report(5, "c_w bar-invariant, unitriangular, p and q inverse; dihedral closed form", line);
}

void lowest_cell() {
  Line line;
  const auto all = battery();
  for (const int i : {1, 2, 3, 4}) {
    CoxeterGroup g(all[static_cast<std::size_t>(i)].sys);
    const Hecke h(g);
    const AFunctionReport p = check_a_function_characterization(h, 5, 8);
    long in_lambda = 0;
    for (const auto& e : p.entries) in_lambda += e.in_lambda ? 1 : 0;
    std::ostringstream a;
    a << p.config << " a=N on Lambda: elements=" << p.entries.size() << " in Lambda=" << in_lambda
      << " truncation gaps=" << p.truncation_gaps.size() << " violations=" << p.violations.size();
    line.require(p.pass, a.str());
    const LowestCellReport l = check_lowest_cell_witnesses(h, 8);
    long witnesses = 0, bad = 0;
    for (const auto& e : l.per_longest) {
      witnesses += e.cell_witnesses_checked + e.left_cell_witnesses_checked;
      bad += static_cast<long>(e.cell_witness_failures.size() + e.left_cell_witness_failures.size() +
                               e.only_in_coset.size() + e.only_in_descent_set.size());
    }
    std::ostringstream b;
    b << l.config << " lowest cell witnesses=" << witnesses << " failures=" << bad;
    line.require(l.pass, b.str());
  }
  report(6, "Lambda = {a = N} and lowest-cell witnesses", line);
}

std::pair<int, std::string> capture(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

void determinism() {
  Line line;
  const auto one = capture(std::string(WCG_BINARY) + " campaign --threads 1");
  const auto eight = capture(std::string(WCG_BINARY) + " campaign --threads 8");
  line.require(!one.second.empty(), "report produced (" + std::to_string(one.second.size()) + " bytes)");
  line.require(one.second == eight.second, "threads 1 and 8 reports byte-identical");
  line.require(one.first == 0 && eight.first == 0, "campaign exit status 0");
  report(7, "campaign output independent of thread count", line);
}

}  // namespace

int main() {
  boundedness();
  hecke_facts();
  word_oracle();
  lemma_suites();
  kl_layer();
  lowest_cell();
  determinism();
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
