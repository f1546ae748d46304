#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracle.hpp"
#include "wcg/error.hpp"
#include "wcg/group.hpp"

using namespace wcg;

namespace {

CoxeterSystem sys(int m_rt, int m_sr, int m_st, int Lr, int Ls, int Lt) {
  return CoxeterSystem::make(m_rt, m_sr, m_st, Lr, Ls, Lt);
}

const CoxeterSystem kSystems[] = {
    sys(2, kInfinity, 2, 1, 3, 2), sys(2, kInfinity, kInfinity, 1, 5, 2), sys(2, kInfinity, 4, 1, 2, 3),
    sys(2, 5, 4, 2, 2, 1),         sys(2, 8, 3, 2, 1, 1),                 sys(2, 3, 3, 1, 1, 1),
    sys(2, 6, 3, 1, 1, 1),         sys(3, 3, 3, 1, 1, 1),                 sys(kInfinity, kInfinity, kInfinity, 1, 2, 3),
    sys(4, 4, 2, 1, 2, 3),
};

}  // namespace

TEST_CASE("system validation") {
  CHECK_THROWS_AS(sys(2, 5, 4, 1, 2, 1), ConfigError);
  CHECK_THROWS_AS(sys(2, 1, 4, 1, 1, 1), ConfigError);
  CHECK_THROWS_AS(sys(2, 4, 4, 0, 1, 1), ConfigError);
  CHECK_THROWS_AS(sys(2, -3, 4, 1, 1, 1), ConfigError);
  try {
    sys(2, 5, 4, 1, 2, 1);
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("m_sr") != std::string::npos);
  }
  CHECK(sys(2, kInfinity, 4, 1, 2, 3).describe() == "(2,inf,4),(1,2,3)");
}

TEST_CASE("case classification") {
  CHECK(classify_case(sys(2, kInfinity, 2, 1, 3, 2)).kind == CaseKind::Case1);
  CHECK(classify_case(sys(2, kInfinity, kInfinity, 1, 5, 2)).kind == CaseKind::Case2);
  CHECK(classify_case(sys(2, kInfinity, 4, 1, 2, 3)).kind == CaseKind::Case3);
  CHECK(classify_case(sys(2, 5, 4, 2, 2, 1)).kind == CaseKind::Case4);
  CHECK(classify_case(sys(2, 8, 3, 2, 1, 1)).kind == CaseKind::Case5);
  CHECK(classify_case(sys(2, 3, 3, 1, 1, 1)).kind == CaseKind::Finite);
  CHECK(classify_case(sys(2, 6, 3, 1, 1, 1)).kind == CaseKind::AffineSpecial);
  CHECK(classify_case(sys(2, 4, 4, 1, 1, 1)).kind == CaseKind::AffineSpecial);
  CHECK(classify_case(sys(3, 3, 3, 1, 1, 1)).kind == CaseKind::CompleteGraph);
  // m_st = inf and m_rt = 2 only after swapping roles.
  const CaseShape shape = classify_case(sys(kInfinity, 2, 4, 1, 1, 2));
  CHECK(shape.kind == CaseKind::Case3);
  const CoxeterSystem rel = sys(kInfinity, 2, 4, 1, 1, 2).relabeled(shape.relabeling);
  CHECK(rel.m_rt() == 2);
  CHECK(rel.m_sr() == kInfinity);
  CHECK(rel.m_st() == 4);
}

TEST_CASE("normal forms agree with the braid-move oracle") {
  for (const auto& s : kSystems) {
    CAPTURE(s.describe());
    CoxeterGroup g(s);
    oracle::Group og{s, {}};
    const auto elems = g.ball(6);
    const auto expected = og.ball(6);
    REQUIRE(elems.size() == expected.size());
    for (const Elem w : elems) {
      CHECK(expected.count(g.word(w)) == 1);
      CHECK(static_cast<std::size_t>(g.length(w)) == g.word(w).size());
      for (int a = 0; a < kRank; ++a) {
        const std::string wa = g.word(w) + kGenLabels[a];
        const std::string aw = kGenLabels[a] + g.word(w);
        CHECK(g.word(g.mul_gen(w, a, Side::Right)) == og.nf(wa));
        CHECK(g.word(g.mul_gen(w, a, Side::Left)) == og.nf(aw));
        CHECK(contains(g.descents(w, Side::Right), a) == (og.nf(wa).size() < wa.size() - 1));
        CHECK(contains(g.descents(w, Side::Left), a) == (og.nf(aw).size() < aw.size() - 1));
      }
      std::string rev(g.word(w).rbegin(), g.word(w).rend());
      CHECK(g.word(g.inverse(w)) == og.nf(rev));
    }
  }
}

TEST_CASE("normal_form of arbitrary words") {
  CoxeterGroup g(sys(2, 5, 4, 2, 2, 1));
  oracle::Group og{g.system(), {}};
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    std::string w;
    for (int k = std::uniform_int_distribution<int>(0, 9)(rng); k > 0; --k) w += "rst"[rng() % 3];
    CHECK(g.word(g.normal_form(w)) == og.nf(w));
  }
  CHECK_THROWS_AS(g.normal_form("rsx"), ParseError);
}

TEST_CASE("ball counts") {
  CoxeterGroup case2(sys(2, kInfinity, kInfinity, 1, 5, 2));
  // Length 2: rs rt sr st ts.
  CHECK(case2.ball_size(0) == 1);
  CHECK(case2.ball_size(1) == 4);
  CHECK(case2.ball_size(2) == 9);
  CHECK(case2.ball_size(3) == 17);
  CoxeterGroup a3(sys(2, 3, 3, 1, 1, 1));
  CHECK(a3.ball_size(20) == 24);
  CHECK(a3.max_length() == 6);
  CoxeterGroup b2(sys(2, 4, 2, 1, 1, 1));
  CHECK(b2.ball_size(20) == 16);
}

TEST_CASE("multiplication is associative and weights are additive") {
  CoxeterGroup g(sys(2, 8, 3, 2, 1, 1));
  const auto elems = g.ball(4);
  std::mt19937 rng(9);
  for (int i = 0; i < 500; ++i) {
    const Elem x = elems[rng() % elems.size()], y = elems[rng() % elems.size()], z = elems[rng() % elems.size()];
    CHECK(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
    CHECK(g.mul(x, g.inverse(x)) == g.identity());
    if (g.is_length_additive(x, y)) CHECK(g.weight(g.mul(x, y)) == g.weight(x) + g.weight(y));
  }
  CHECK(g.weight(g.normal_form("srs")) == 4);
}

TEST_CASE("parabolic factorization") {
  CoxeterGroup g(sys(2, kInfinity, 4, 1, 2, 3));
  const GenSet J = parse_genset("st");
  for (const Elem w : g.ball(7)) {
    const auto [a, b] = g.parabolic_factorize(w, J, Side::Right);
    CHECK(g.mul(a, b) == w);
    CHECK(g.length(a) + g.length(b) == g.length(w));
    CHECK((g.descents(a, Side::Right) & J) == 0);
    for (char c : g.word(b)) CHECK(contains(J, gen_index(c)));
    const auto [c, d] = g.parabolic_factorize(w, J, Side::Left);
    CHECK(g.mul(c, d) == w);
    CHECK((g.descents(d, Side::Left) & J) == 0);
  }
  CHECK(g.word(*g.longest_element(J)) == "stst");
  CHECK_FALSE(g.longest_element(parse_genset("rs")).has_value());
  CHECK(g.word(*g.longest_element(parse_genset("rt"))) == "rt");
}

TEST_CASE("Bruhat order agrees with the subword property") {
  for (const auto& s : {sys(2, kInfinity, 4, 1, 2, 3), sys(2, 3, 3, 1, 1, 1), sys(3, 3, 3, 1, 1, 1)}) {
    CAPTURE(s.describe());
    CoxeterGroup g(s);
    oracle::Group og{s, {}};
    const auto elems = g.ball(5);
    for (const Elem w : elems) {
      const auto below = g.lower_interval(w);
      std::set<Elem> below_set(below.begin(), below.end());
      for (const Elem y : elems) {
        const bool expected = og.bruhat_leq(g.word(y), g.word(w));
        CHECK(g.bruhat_leq(y, w) == expected);
        CHECK(below_set.count(y) == (expected ? 1u : 0u));
      }
    }
  }
}

TEST_CASE("element cap") {
  CoxeterGroup g(sys(kInfinity, kInfinity, kInfinity, 1, 1, 1), 100);
  CHECK_THROWS_AS(g.ensure_length(10), ResourceCapExceeded);
}
