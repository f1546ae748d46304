#include <chrono>
#include <functional>
#include <set>

#include "wcg/harness.hpp"

namespace wcg {

std::string_view suite_status_name(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::Pass: return "PASS";
    case SuiteStatus::Fail: return "FAIL";
    case SuiteStatus::NotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

SuiteStatus SuiteReport::status() const {
  if (!reason.empty()) return SuiteStatus::NotApplicable;
  for (const auto& c : clauses)
    if (c.failures != 0) return SuiteStatus::Fail;
  return SuiteStatus::Pass;
}

bool section_applies(const CaseShape& shape, const CoxeterSystem& relabeled, int section,
                     std::string* reason) {
  std::string why;
  switch (section) {
    case 4:
      if (shape.kind != CaseKind::Case3) why = "requires m_sr = inf and 3 <= m_st < inf";
      break;
    case 5:
      if (shape.kind != CaseKind::Case4) why = "requires inf > m_sr >= m_st >= 4 with m_sr >= 5";
      break;
    case 6:
      if (shape.kind != CaseKind::Case5 || relabeled.m_sr() < 8)
        why = "requires inf > m_sr >= 8 and m_st = 3";
      break;
    default:
      why = "no lemma section " + std::to_string(section);
  }
  if (reason) *reason = why;
  return why.empty();
}

namespace {

constexpr int R_ = 0, S_ = 1, T_ = 2;

std::string relabeling_text(const CaseShape& shape) {
  if (shape.is_identity_relabeling()) return "identity";
  std::string out;
  for (int a = 0; a < kRank; ++a) {
    if (!out.empty()) out += ' ';
    out += kGenLabels[a];
    out += '=';
    out += kGenLabels[shape.relabeling[a]];
  }
  return out;
}

std::string quoted(const CoxeterGroup& g, Elem w) { return "\"" + g.word(w) + "\""; }

// Shared vocabulary of the lemma statements.
struct Ctx {
  CoxeterGroup& g;
  Hecke hecke;
  const Radii& radii;

  explicit Ctx(CoxeterGroup& group, const Radii& r) : g(group), hecke(group), radii(r) {}

  const CoxeterSystem& sys() const { return g.system(); }
  Elem E(std::string_view word) { return g.normal_form(word); }
  GenSet R(Elem x) const { return g.descents(x, Side::Right); }
  GenSet L(Elem x) const { return g.descents(x, Side::Left); }
  Elem mul(Elem a, Elem b) { return g.mul(a, b); }
  Elem mul(Elem a, Elem b, Elem c) { return g.mul(g.mul(a, b), c); }
  static bool subset(GenSet A, GenSet B) { return (A & ~B) == 0; }
  static GenSet set(std::string_view labels) { return parse_genset(labels); }

  // x = x1 . u for some x1.
  bool ends_with(Elem x, std::string_view u) {
    const Elem ue = E(u);
    return g.length(g.mul(x, g.inverse(ue))) == g.length(x) - g.length(ue);
  }
  bool starts_with(Elem x, std::string_view u) {
    const Elem ue = E(u);
    return g.length(g.mul(g.inverse(ue), x)) == g.length(x) - g.length(ue);
  }
  Elem longest(int a, int b) { return *g.longest_element(static_cast<GenSet>(gen_bit(a) | gen_bit(b))); }
  long weight(std::string_view word) { return g.weight(E(word)); }

  int prod_degree(Elem x, Elem y) { return max_degree(hecke.t_mult(x, y)); }

  // Elements of W_{ab} with min_len <= length <= max_len (capped by
  // dihedral_menu_max when m_ab is infinite).
  std::vector<Elem> dihedral(int a, int b, int min_len, int max_len = 1 << 20) {
    const int m = sys().m(a, b);
    int top = m == kInfinity ? radii.dihedral_menu_max : m;
    top = std::min(top, max_len);
    std::set<Elem> out;
    for (int first : {a, b})
      for (int len = min_len; len <= top; ++len) {
        std::string w;
        for (int i = 0; i < len; ++i) w += kGenLabels[i % 2 == 0 ? first : (first == a ? b : a)];
        out.insert(E(w));
      }
    return {out.begin(), out.end()};
  }

  std::string xy(Elem x, Elem y) { return "x=" + quoted(g, x) + " y=" + quoted(g, y); }
};

ClauseResult clause(std::string id, std::string statement) {
  ClauseResult c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  return c;
}

using ElemPredicate = std::function<bool(Elem)>;

// hypothesis(w) => conclusion(w) for every w in the ball.
void check_elements(Ctx& cx, ClauseResult& c, const std::vector<Elem>& ball,
                    const ElemPredicate& hypothesis, const ElemPredicate& conclusion) {
  for (const Elem w : ball) {
    if (!hypothesis(w)) continue;
    ++c.checked;
    if (!conclusion(w)) c.fail("w=" + quoted(cx.g, w));
  }
}

using PairPredicate = std::function<bool(Elem, Elem)>;

void check_pairs(Ctx& cx, ClauseResult& c, const std::vector<Elem>& ball,
                 const PairPredicate& hypothesis,
                 const std::function<std::string(Elem, Elem)>& violation) {
  for (const Elem x : ball)
    for (const Elem y : ball) {
      if (!hypothesis(x, y)) continue;
      ++c.checked;
      std::string bad = violation(x, y);
      if (!bad.empty()) c.fail(cx.xy(x, y) + " " + bad);
    }
}

// Length additivity of x w y over the menu of w.
std::string additivity_failure(Ctx& cx, Elem x, const std::vector<Elem>& menu, Elem y) {
  for (const Elem w : menu) {
    const Elem p = cx.mul(x, w, y);
    if (cx.g.length(p) != cx.g.length(x) + cx.g.length(w) + cx.g.length(y))
      return "w=" + quoted(cx.g, w) + " l(xwy)=" + std::to_string(cx.g.length(p));
  }
  return {};
}

std::string fixed_length_failure(Ctx& cx, Elem x, Elem mid, Elem y, int extra) {
  const Elem p = cx.mul(x, mid, y);
  const int want = cx.g.length(x) + cx.g.length(y) + extra;
  if (cx.g.length(p) == want) return {};
  return "l=" + std::to_string(cx.g.length(p)) + " expected " + std::to_string(want);
}

std::string degree_failure(Ctx& cx, Elem a, Elem b, long bound) {
  const int d = cx.prod_degree(a, b);
  if (d <= bound) return {};
  return "deg=" + std::to_string(d) + " > " + std::to_string(bound);
}

SuiteReport new_suite(const Ctx& cx, std::string id, std::string universe) {
  SuiteReport rep;
  rep.config = cx.sys().describe();
  rep.suite = std::move(id);
  rep.universe = std::move(universe);
  return rep;
}

std::string ball_text(const char* vars, int radius) {
  return std::string(vars) + " of length <= " + std::to_string(radius);
}

// ---- word lemmas -------------------------------------------------------

std::vector<SuiteReport> word_lemmas(Ctx& cx, int section) {
  const int radius = cx.radii.word_ball;
  const auto ball = cx.g.ball(radius);
  auto notin = [&](int a, Side side) {
    return [&cx, a, side](Elem w) { return !contains(cx.g.descents(w, side), a); };
  };
  auto ends = [&](std::string u) { return [&cx, u](Elem w) { return cx.ends_with(w, u); }; };
  auto starts = [&](std::string u) { return [&cx, u](Elem w) { return cx.starts_with(w, u); }; };
  auto has = [&](int a, Side side) {
    return [&cx, a, side](Elem w) { return contains(cx.g.descents(w, side), a); };
  };
  auto always = [](Elem) { return true; };
  std::vector<SuiteReport> out;

  if (section == 4) {
    SuiteReport rep = new_suite(cx, "L4.1", ball_text("x", radius));
    auto c1 = clause("L4.1(1)", "s in R(x) => r not in R(x)");
    check_elements(cx, c1, ball, has(S_, Side::Right), notin(R_, Side::Right));
    auto c2 = clause("L4.1(2)", "s in L(x) => r not in L(x)");
    check_elements(cx, c2, ball, has(S_, Side::Left), notin(R_, Side::Left));
    auto c3 = clause("L4.1(3)", "x = x1.st => r not in R(x)");
    check_elements(cx, c3, ball, ends("st"), notin(R_, Side::Right));
    auto c4 = clause("L4.1(4)", "x = ts.x1 => r not in L(x)");
    check_elements(cx, c4, ball, starts("ts"), notin(R_, Side::Left));
    auto c5 = clause("L4.1(5)", "x = x1.rs => R(x) = {s}");
    check_elements(cx, c5, ball, ends("rs"), [&](Elem w) { return cx.R(w) == Ctx::set("s"); });
    auto c6 = clause("L4.1(6)", "x = sr.x1 => L(x) = {s}");
    check_elements(cx, c6, ball, starts("sr"), [&](Elem w) { return cx.L(w) == Ctx::set("s"); });
    rep.clauses = {c1, c2, c3, c4, c5, c6};
    out.push_back(std::move(rep));
  } else if (section == 5) {
    SuiteReport rep = new_suite(cx, "L5.1", ball_text("w", radius));
    auto c1 = clause("L5.1(1)", "w = w1.ts => r not in R(w)");
    check_elements(cx, c1, ball, ends("ts"), notin(R_, Side::Right));
    auto c2 = clause("L5.1(2)", "w = w1.rs => t not in R(w)");
    check_elements(cx, c2, ball, ends("rs"), notin(T_, Side::Right));
    auto c3 = clause("L5.1(3)", "w = w1.st, R(w1 s) = {s} => r not in R(w)");
    check_elements(
        cx, c3, ball,
        [&](Elem w) { return cx.ends_with(w, "st") && cx.R(cx.g.mul_gen(w, T_, Side::Right)) == Ctx::set("s"); },
        notin(R_, Side::Right));
    auto c4 = clause("L5.1(4)", "w = w1.sr, R(w1 s) = {s} => t not in R(w)");
    check_elements(
        cx, c4, ball,
        [&](Elem w) { return cx.ends_with(w, "sr") && cx.R(cx.g.mul_gen(w, R_, Side::Right)) == Ctx::set("s"); },
        notin(T_, Side::Right));
    auto c5 = clause("L5.1(5)", "w = w1.tst => r not in R(w)");
    check_elements(cx, c5, ball, ends("tst"), notin(R_, Side::Right));
    auto c6 = clause("L5.1(6)", "w = w1.rsr => t not in R(w)");
    check_elements(cx, c6, ball, ends("rsr"), notin(T_, Side::Right));
    auto c7 = clause("L5.1(7)", "no w = w1.st = w2.sr");
    check_elements(cx, c7, ball, always,
                   [&](Elem w) { return !(cx.ends_with(w, "st") && cx.ends_with(w, "sr")); });
    const Elem rt_wst = cx.mul(cx.E("rt"), cx.longest(S_, T_));
    const Elem tr_wsr = cx.mul(cx.E("tr"), cx.longest(S_, R_));
    auto c8 = clause("L5.1(8)", "L(w) in {r} => L(rt w_st w) = {r}");
    check_elements(cx, c8, ball, [&](Elem w) { return Ctx::subset(cx.L(w), Ctx::set("r")); },
                   [&](Elem w) { return cx.L(cx.mul(rt_wst, w)) == Ctx::set("r"); });
    auto c9 = clause("L5.1(9)", "L(w) in {t} => L(tr w_sr w) = {t}");
    check_elements(cx, c9, ball, [&](Elem w) { return Ctx::subset(cx.L(w), Ctx::set("t")); },
                   [&](Elem w) { return cx.L(cx.mul(tr_wsr, w)) == Ctx::set("t"); });
    rep.clauses = {c1, c2, c3, c4, c5, c6, c7, c8, c9};
    out.push_back(std::move(rep));
  } else if (section == 6) {
    SuiteReport rep = new_suite(cx, "L6.1", ball_text("w", radius));
    auto c1 = clause("L6.1(1)", "no w = w1.st = w2.sr");
    check_elements(cx, c1, ball, always,
                   [&](Elem w) { return !(cx.ends_with(w, "st") && cx.ends_with(w, "sr")); });
    auto c2 = clause("L6.1(2)", "w = w1.srs => t not in R(w)");
    check_elements(cx, c2, ball, ends("srs"), notin(T_, Side::Right));
    auto c3 = clause("L6.1(3)", "w = w1.srsr => t not in R(w)");
    check_elements(cx, c3, ball, ends("srsr"), notin(T_, Side::Right));
    auto c4 = clause("L6.1(4)", "w = w1.ts => r not in R(w)");
    check_elements(cx, c4, ball, ends("ts"), notin(R_, Side::Right));
    auto c5 = clause("L6.1(5)", "w = w1.tsr => s not in R(w)");
    check_elements(cx, c5, ball, ends("tsr"), notin(S_, Side::Right));
    rep.clauses = {c1, c2, c3, c4, c5};
    out.push_back(std::move(rep));
  }
  return out;
}

// ---- length lemmas -----------------------------------------------------

std::vector<SuiteReport> length_lemmas(Ctx& cx, int section) {
  const int radius = cx.radii.length_ball;
  const auto ball = cx.g.ball(radius);
  auto both_in = [&](std::string_view labels) {
    const GenSet J = Ctx::set(labels);
    return [&cx, J](Elem x, Elem y) { return Ctx::subset(cx.R(x), J) && Ctx::subset(cx.L(y), J); };
  };
  std::vector<SuiteReport> out;

  if (section == 4) {
    SuiteReport rep = new_suite(cx, "L4.2", ball_text("x, y", radius));
    const auto sr_menu = cx.dihedral(S_, R_, 4);
    const auto st_menu = cx.dihedral(S_, T_, 2);
    auto c1 = clause("L4.2(1)", "w in W_sr, l(w) >= 4 (sampled up to length " +
                                    std::to_string(cx.radii.dihedral_menu_max) +
                                    "), R(x), L(y) in {t} => l(xwy) = l(x)+l(w)+l(y)");
    check_pairs(cx, c1, ball, both_in("t"),
                [&](Elem x, Elem y) { return additivity_failure(cx, x, sr_menu, y); });
    auto c2 = clause("L4.2(2)", "R(x), L(y) in {s} => l(xtry) = l(xrty) = l(x)+l(y)+2");
    const Elem tr = cx.E("tr"), rt = cx.E("rt");
    check_pairs(cx, c2, ball, both_in("s"), [&](Elem x, Elem y) {
      std::string bad = fixed_length_failure(cx, x, tr, y, 2);
      return bad.empty() ? fixed_length_failure(cx, x, rt, y, 2) : bad;
    });
    auto c3 = clause("L4.2(3)", "w in W_st, l(w) >= 2, R(x), L(y) in {r} => l(xwy) = l(x)+l(w)+l(y)");
    check_pairs(cx, c3, ball, both_in("r"),
                [&](Elem x, Elem y) { return additivity_failure(cx, x, st_menu, y); });
    rep.clauses = {c1, c2, c3};
    out.push_back(std::move(rep));
  } else if (section == 5) {
    SuiteReport rep = new_suite(cx, "L5.2", ball_text("x, y", radius));
    const auto st_menu = cx.dihedral(S_, T_, 4);
    const auto sr_menu = cx.dihedral(S_, R_, 4);
    auto c1 = clause("L5.2(1)", "w in W_st, l(w) >= 4, R(x), L(y) in {r} => l(xwy) = l(x)+l(w)+l(y)");
    check_pairs(cx, c1, ball, both_in("r"),
                [&](Elem x, Elem y) { return additivity_failure(cx, x, st_menu, y); });
    auto c2 = clause("L5.2(2)", "w in W_sr, l(w) >= 4, R(x), L(y) in {t} => l(xwy) = l(x)+l(w)+l(y)");
    check_pairs(cx, c2, ball, both_in("t"),
                [&](Elem x, Elem y) { return additivity_failure(cx, x, sr_menu, y); });
    auto c3 = clause("L5.2(3)",
                     "R(x), L(y) in {s}, R(xt) = {t}, R(xr) = {r} => l(xtry) = l(x)+l(y)+2");
    const Elem tr = cx.E("tr");
    check_pairs(
        cx, c3, ball,
        [&](Elem x, Elem y) {
          return both_in("s")(x, y) && cx.R(cx.g.mul_gen(x, T_, Side::Right)) == Ctx::set("t") &&
                 cx.R(cx.g.mul_gen(x, R_, Side::Right)) == Ctx::set("r");
        },
        [&](Elem x, Elem y) { return fixed_length_failure(cx, x, tr, y, 2); });
    auto c4 = clause("L5.2(4)", "R(x), L(y) in {r}, R(xs) = {s} => l(xstsy) = l(x)+l(y)+3");
    const Elem sts = cx.E("sts");
    check_pairs(
        cx, c4, ball,
        [&](Elem x, Elem y) {
          return both_in("r")(x, y) && cx.R(cx.g.mul_gen(x, S_, Side::Right)) == Ctx::set("s");
        },
        [&](Elem x, Elem y) { return fixed_length_failure(cx, x, sts, y, 3); });
    auto c5 = clause("L5.2(5)", "R(x), L(y) in {t}, R(xs) = {s} => l(xsrsy) = l(x)+l(y)+3");
    const Elem srs = cx.E("srs");
    check_pairs(
        cx, c5, ball,
        [&](Elem x, Elem y) {
          return both_in("t")(x, y) && cx.R(cx.g.mul_gen(x, S_, Side::Right)) == Ctx::set("s");
        },
        [&](Elem x, Elem y) { return fixed_length_failure(cx, x, srs, y, 3); });
    auto c7 = clause("L5.2(7)", "R(x), L(y) in {r} => l(xtsty) = l(x)+l(y)+3");
    const Elem tst = cx.E("tst");
    check_pairs(cx, c7, ball, both_in("r"),
                [&](Elem x, Elem y) { return fixed_length_failure(cx, x, tst, y, 3); });
    rep.clauses = {c1, c2, c3, c4, c5, c7};
    out.push_back(std::move(rep));
  } else if (section == 6) {
    SuiteReport rep = new_suite(cx, "L6.2", ball_text("x, y", radius));
    auto menu = cx.dihedral(S_, R_, 6);
    const Elem srsrs = cx.E("srsrs");
    if (std::find(menu.begin(), menu.end(), srsrs) == menu.end()) menu.push_back(srsrs);
    std::sort(menu.begin(), menu.end());
    const auto hyp = both_in("t");
    auto c1 = clause("L6.2(length)",
                     "R(x), L(y) in {t}, w in W_sr with l(w) >= 6 or w = srsrs => l(xwy) = l(x)+l(w)+l(y)");
    auto c2 = clause("L6.2(right descents)", "same hypotheses => R(xwy) = R(wy)");
    auto c3 = clause("L6.2(left descents)", "same hypotheses => L(xwy) = L(xw)");
    for (const Elem x : ball)
      for (const Elem y : ball) {
        if (!hyp(x, y)) continue;
        for (const Elem w : menu) {
          const Elem xwy = cx.mul(x, w, y);
          const std::string where = cx.xy(x, y) + " w=" + quoted(cx.g, w);
          ++c1.checked;
          ++c2.checked;
          ++c3.checked;
          if (cx.g.length(xwy) != cx.g.length(x) + cx.g.length(w) + cx.g.length(y)) c1.fail(where);
          if (cx.R(xwy) != cx.R(cx.mul(w, y))) c2.fail(where);
          if (cx.L(xwy) != cx.L(cx.mul(x, w))) c3.fail(where);
        }
      }
    rep.clauses = {c1, c2, c3};
    out.push_back(std::move(rep));
  }
  return out;
}

// ---- Hecke lemmas ------------------------------------------------------

std::vector<SuiteReport> hecke_lemmas(Ctx& cx, int section) {
  const int radius = cx.radii.hecke_ball;
  const auto ball = cx.g.ball(radius);
  const std::string universe = ball_text("x, y", radius);
  auto hyp = [&](std::string_view rx, std::string_view ly) {
    const GenSet A = Ctx::set(rx), B = Ctx::set(ly);
    return [&cx, A, B](Elem x, Elem y) { return Ctx::subset(cx.R(x), A) && Ctx::subset(cx.L(y), B); };
  };
  auto Rof = [&](Elem x, std::string_view suffix) { return cx.R(cx.mul(x, cx.E(suffix))); };
  auto Lof = [&](std::string_view prefix, Elem y) { return cx.L(cx.mul(cx.E(prefix), y)); };
  const long Lr = cx.sys().weight(R_), Ls = cx.sys().weight(S_), Lt = cx.sys().weight(T_);
  std::vector<SuiteReport> out;

  if (section == 5) {
    const Elem sts = cx.E("sts"), tr = cx.E("tr");
    const Elem w_sr = cx.longest(S_, R_), w_st = cx.longest(S_, T_);
    {
      SuiteReport rep = new_suite(cx, "L5.2(6)", universe);
      auto c = clause("L5.2(6)", "R(x), L(y) in {r} => deg T_{x sts} T_y <= L(r)");
      check_pairs(cx, c, ball, hyp("r", "r"),
                  [&](Elem x, Elem y) { return degree_failure(cx, cx.mul(x, sts), y, Lr); });
      rep.clauses = {c};
      out.push_back(std::move(rep));
    }
    {
      SuiteReport rep = new_suite(cx, "L5.3", universe);
      auto c = clause("L5.3", "R(x), L(y) in {s} => deg T_{x tr} T_y <= L(s)");
      check_pairs(cx, c, ball, hyp("s", "s"),
                  [&](Elem x, Elem y) { return degree_failure(cx, cx.mul(x, tr), y, Ls); });
      rep.clauses = {c};
      out.push_back(std::move(rep));
    }
    {
      SuiteReport rep = new_suite(cx, "L5.4", universe);
      auto c = clause("L5.4", "R(x) in {t}, L(y) in {s} => deg T_{x w_sr} T_{try} <= L(sr)");
      check_pairs(cx, c, ball, hyp("t", "s"), [&](Elem x, Elem y) {
        return degree_failure(cx, cx.mul(x, w_sr), cx.mul(tr, y), Ls + Lr);
      });
      rep.clauses = {c};
      out.push_back(std::move(rep));
    }
    {
      SuiteReport rep = new_suite(cx, "L5.5", universe);
      auto c1 = clause("L5.5(general)",
                       "R(x) in {r}, L(y) in {s} => deg T_{x w_st} T_{try} <= max(L(st), L(sr))");
      check_pairs(cx, c1, ball, hyp("r", "s"), [&](Elem x, Elem y) {
        return degree_failure(cx, cx.mul(x, w_st), cx.mul(tr, y), std::max(Ls + Lt, Ls + Lr));
      });
      auto c2 = clause("L5.5(L(ry) = {r})",
                       "additionally L(ry) = {r} => deg T_{x w_st} T_{try} <= max(L(t), L(r))");
      check_pairs(
          cx, c2, ball,
          [&](Elem x, Elem y) { return hyp("r", "s")(x, y) && Lof("r", y) == Ctx::set("r"); },
          [&](Elem x, Elem y) {
            return degree_failure(cx, cx.mul(x, w_st), cx.mul(tr, y), std::max(Lt, Lr));
          });
      rep.clauses = {c1, c2};
      out.push_back(std::move(rep));
    }
    {
      SuiteReport rep = new_suite(cx, "L5.6", "c in W_st with l(c) <= m_st - 2 or c = s w_st");
      std::vector<Elem> menu = cx.dihedral(S_, T_, 0, cx.sys().m_st() - 2);
      menu.push_back(cx.g.mul_gen(w_st, S_, Side::Left));
      struct Target {
        const char* z;
        long bound;
        const char* text;
      };
      const Target targets[] = {{"st", Lt, "deg f_{w_st,c,st} <= L(t)"},
                                {"ts", Lt, "deg f_{w_st,c,ts} <= L(t)"},
                                {"tst", 2 * Lt, "deg f_{w_st,c,tst} <= 2 L(t)"},
                                {"sts", Ls + Lt, "deg f_{w_st,c,sts} <= L(st)"}};
      for (const auto& tg : targets) {
        auto c = clause(std::string("L5.6(") + tg.z + ")", tg.text);
        const Elem z = cx.E(tg.z);
        for (const Elem cc : menu) {
          ++c.checked;
          const int d = cx.hecke.f_coeff(w_st, cc, z).deg();
          if (d > tg.bound) c.fail("c=" + quoted(cx.g, cc) + " deg=" + std::to_string(d));
        }
        rep.clauses.push_back(c);
      }
      out.push_back(std::move(rep));
    }
  } else if (section == 6) {
    const Elem sts = cx.E("sts"), tr = cx.E("tr");
    const Elem w_sr = cx.longest(S_, R_), w_st = cx.longest(S_, T_);
    {
      SuiteReport rep = new_suite(cx, "L6.3", universe);
      auto c1 = clause("L6.3(1)", "R(x), L(y) in {r}, R(xs) = {s} => T_{x sts} T_y = T_{x sts y}");
      check_pairs(
          cx, c1, ball,
          [&](Elem x, Elem y) { return hyp("r", "r")(x, y) && Rof(x, "s") == Ctx::set("s"); },
          [&](Elem x, Elem y) {
            const Elem xsts = cx.mul(x, sts);
            return cx.hecke.t_mult(xsts, y) == cx.hecke.T(cx.mul(xsts, y)) ? std::string()
                                                                             : std::string("product is not a single basis element");
          });
      auto c2 = clause("L6.3(2)", "R(x), L(y) in {r}, R(xs) = {r,s} => deg T_{x sts} T_y <= L(r)");
      check_pairs(
          cx, c2, ball,
          [&](Elem x, Elem y) { return hyp("r", "r")(x, y) && Rof(x, "s") == Ctx::set("rs"); },
          [&](Elem x, Elem y) { return degree_failure(cx, cx.mul(x, sts), y, Lr); });
      rep.clauses = {c1, c2};
      out.push_back(std::move(rep));
    }
    {
      SuiteReport rep = new_suite(cx, "L6.4", universe);
      const GenSet sr = Ctx::set("rs"), st = Ctx::set("st");
      auto c1 = clause("L6.4(1)",
                       "R(x), L(y) in {s}, R(xr) != {s,r}, R(xt) != {s,t}, R(xrs) != {s,r} => T_{x tr} T_y = T_{x tr y}");
      check_pairs(
          cx, c1, ball,
          [&](Elem x, Elem y) {
            return hyp("s", "s")(x, y) && Rof(x, "r") != sr && Rof(x, "t") != st && Rof(x, "rs") != sr;
          },
          [&](Elem x, Elem y) {
            const Elem xtr = cx.mul(x, tr);
            return cx.hecke.t_mult(xtr, y) == cx.hecke.T(cx.mul(xtr, y)) ? std::string()
                                                                           : std::string("product is not a single basis element");
          });
      auto c2 = clause("L6.4(2)", "R(x), L(y) in {s}, R(xr) = {s,r} => deg T_{x tr} T_y <= L(sr)");
      check_pairs(
          cx, c2, ball, [&](Elem x, Elem y) { return hyp("s", "s")(x, y) && Rof(x, "r") == sr; },
          [&](Elem x, Elem y) { return degree_failure(cx, cx.mul(x, tr), y, Ls + Lr); });
      auto c3 = clause("L6.4(3)", "R(x), L(y) in {s}, R(xt) = {s,t} => deg T_{x tr} T_y <= L(sr)");
      check_pairs(
          cx, c3, ball, [&](Elem x, Elem y) { return hyp("s", "s")(x, y) && Rof(x, "t") == st; },
          [&](Elem x, Elem y) { return degree_failure(cx, cx.mul(x, tr), y, Ls + Lr); });
      auto c4 = clause("L6.4(4)", "R(x), L(y) in {s}, R(xrs) = {s,r} => deg T_{x tr} T_y <= L(r)");
      check_pairs(
          cx, c4, ball, [&](Elem x, Elem y) { return hyp("s", "s")(x, y) && Rof(x, "rs") == sr; },
          [&](Elem x, Elem y) { return degree_failure(cx, cx.mul(x, tr), y, Lr); });
      rep.clauses = {c1, c2, c3, c4};
      out.push_back(std::move(rep));
    }
    {
      SuiteReport rep = new_suite(cx, "L6.5", universe);
      auto c = clause("L6.5", "R(x) in {r}, L(y) in {t} => deg T_{x w_st} T_{w_sr y} <= L(sr)");
      check_pairs(cx, c, ball, hyp("r", "t"), [&](Elem x, Elem y) {
        return degree_failure(cx, cx.mul(x, w_st), cx.mul(w_sr, y), Ls + Lr);
      });
      rep.clauses = {c};
      out.push_back(std::move(rep));
    }
    {
      SuiteReport rep = new_suite(cx, "L6.6", universe);
      const long rsr = 2 * Lr + Ls;
      auto c1 = clause("L6.6(1)", "R(x) in {s}, L(y) in {t} => deg T_{x tr} T_{w_sr y} <= L(rsr)");
      check_pairs(cx, c1, ball, hyp("s", "t"), [&](Elem x, Elem y) {
        return degree_failure(cx, cx.mul(x, tr), cx.mul(w_sr, y), rsr);
      });
      auto c2 = clause("L6.6(2)", "R(x) in {t}, L(y) in {s} => deg T_{x w_sr} T_{try} <= L(rsr)");
      check_pairs(cx, c2, ball, hyp("t", "s"), [&](Elem x, Elem y) {
        return degree_failure(cx, cx.mul(x, w_sr), cx.mul(tr, y), rsr);
      });
      rep.clauses = {c1, c2};
      out.push_back(std::move(rep));
    }
    {
      SuiteReport rep = new_suite(cx, "L6.7", universe);
      const long srsr = 2 * (Ls + Lr);
      auto c1 = clause("L6.7(1)", "R(x) in {s}, L(y) in {r} => deg T_{x tr} T_{w_st y} <= L(srsr)");
      check_pairs(cx, c1, ball, hyp("s", "r"), [&](Elem x, Elem y) {
        return degree_failure(cx, cx.mul(x, tr), cx.mul(w_st, y), srsr);
      });
      auto c2 = clause("L6.7(2)", "R(x) in {r}, L(y) in {s} => deg T_{x w_st} T_{try} <= L(srsr)");
      check_pairs(cx, c2, ball, hyp("r", "s"), [&](Elem x, Elem y) {
        return degree_failure(cx, cx.mul(x, w_st), cx.mul(tr, y), srsr);
      });
      rep.clauses = {c1, c2};
      out.push_back(std::move(rep));
    }
  }
  return out;
}

const char* const kSectionSuites[7][8] = {
    {}, {}, {}, {},
    {"L4.1", "L4.2"},
    {"L5.1", "L5.2", "L5.2(6)", "L5.3", "L5.4", "L5.5", "L5.6"},
    {"L6.1", "L6.2", "L6.3", "L6.4", "L6.5", "L6.6", "L6.7"},
};

std::vector<SuiteReport> not_applicable(const CoxeterSystem& sys, int section, const CaseShape& shape,
                                        const std::string& reason, int kind) {
  // kind: 0 word, 1 length, 2 hecke, 3 all
  std::vector<SuiteReport> out;
  if (section < 4 || section > 6) {
    SuiteReport rep;
    rep.config = sys.describe();
    rep.suite = "L" + std::to_string(section);
    rep.reason = reason;
    rep.relabeling = relabeling_text(shape);
    out.push_back(rep);
    return out;
  }
  for (const char* id : kSectionSuites[section]) {
    if (!id) break;
    const std::string s(id);
    const bool is_word = s == "L4.1" || s == "L5.1" || s == "L6.1";
    const bool is_length = s == "L4.2" || s == "L5.2" || s == "L6.2";
    const bool is_hecke = !is_word && !is_length;
    if ((kind == 0 && !is_word) || (kind == 1 && !is_length) || (kind == 2 && !is_hecke)) continue;
    SuiteReport rep;
    rep.config = sys.describe();
    rep.suite = s;
    rep.reason = reason;
    rep.relabeling = relabeling_text(shape);
    out.push_back(rep);
  }
  return out;
}

using SuiteFn = std::vector<SuiteReport> (*)(Ctx&, int);

std::vector<SuiteReport> run_kind(const CoxeterSystem& sys, int section, const Radii& radii,
                                  std::size_t max_elements, int kind, bool timing) {
  const CaseShape shape = classify_case(sys);
  const CoxeterSystem rel = sys.relabeled(shape.relabeling);
  std::string reason;
  if (!section_applies(shape, rel, section, &reason))
    return not_applicable(sys, section, shape, reason, kind);
  CoxeterGroup g(rel, max_elements);
  Ctx cx(g, radii);
  const SuiteFn fns[3] = {word_lemmas, length_lemmas, hecke_lemmas};
  std::vector<SuiteReport> out;
  for (int k = 0; k < 3; ++k) {
    if (kind != 3 && kind != k) continue;
    const auto start = std::chrono::steady_clock::now();
    auto reps = fns[k](cx, section);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (auto& rep : reps) {
      rep.config = sys.describe();
      rep.relabeling = relabeling_text(shape);
      if (timing) rep.seconds = secs / static_cast<double>(reps.size());
      out.push_back(std::move(rep));
    }
  }
  if (kind == 3) {
    // Lemma order within the section.
    std::vector<SuiteReport> ordered;
    for (const char* id : kSectionSuites[section]) {
      if (!id) break;
      for (auto& rep : out)
        if (rep.suite == id) ordered.push_back(std::move(rep));
    }
    return ordered;
  }
  return out;
}

}  // namespace

std::vector<SuiteReport> suite_word_lemmas(const CoxeterSystem& sys, int section,
                                           const Radii& radii, std::size_t max_elements) {
  return run_kind(sys, section, radii, max_elements, 0, false);
}

std::vector<SuiteReport> suite_length_lemmas(const CoxeterSystem& sys, int section,
                                             const Radii& radii, std::size_t max_elements) {
  return run_kind(sys, section, radii, max_elements, 1, false);
}

std::vector<SuiteReport> suite_hecke_lemmas(const CoxeterSystem& sys, int section,
                                            const Radii& radii, std::size_t max_elements) {
  return run_kind(sys, section, radii, max_elements, 2, false);
}

std::vector<SuiteReport> run_lemma_section(const CoxeterSystem& sys, int section,
                                           const Radii& radii, std::size_t max_elements,
                                           bool timing) {
  return run_kind(sys, section, radii, max_elements, 3, timing);
}

}  // namespace wcg
