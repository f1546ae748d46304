#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracle.hpp"
#include "wcg/hecke.hpp"

using namespace wcg;

namespace {

CoxeterSystem sys(int m_rt, int m_sr, int m_st, int Lr, int Ls, int Lt) {
  return CoxeterSystem::make(m_rt, m_sr, m_st, Lr, Ls, Lt);
}

oracle::Vec to_oracle(const CoxeterGroup& g, const HeckeElement& h) {
  oracle::Vec out;
  for (const auto& [w, c] : h) out[g.word(w)] = c;
  return out;
}

}  // namespace

TEST_CASE("quadratic relation") {
  CoxeterGroup g(sys(2, 5, 4, 2, 2, 1));
  const Hecke h(g);
  const Elem s = g.normal_form("s");
  const HeckeElement ss = h.t_mult(s, s);
  CHECK(hecke_to_string(g, ss) == "(1*v^0)*T_ + (1*v^2 + -1*v^-2)*T_s");
  const Elem t = g.normal_form("t");
  CHECK(hecke_to_string(g, h.t_mult(t, t)) == "(1*v^0)*T_ + (1*v^1 + -1*v^-1)*T_t");
}

TEST_CASE("T-basis products agree with the word oracle") {
  for (const auto& s : {sys(2, kInfinity, 4, 1, 2, 3), sys(2, 5, 4, 2, 2, 1), sys(2, 8, 3, 2, 1, 1),
                        sys(3, 3, 3, 1, 1, 1)}) {
    CAPTURE(s.describe());
    CoxeterGroup g(s);
    const Hecke h(g);
    oracle::Group og{s, {}};
    oracle::Hecke oh{og};
    const auto elems = g.ball(4);
    for (const Elem x : elems)
      for (const Elem y : elems) {
        const auto expected = oh.times(oracle::Vec{{g.word(x), LaurentPoly::constant(1)}}, g.word(y));
        CHECK(to_oracle(g, h.t_mult(x, y)) == expected);
      }
  }
}

TEST_CASE("associativity and f_coeff consistency") {
  CoxeterGroup g(sys(2, kInfinity, kInfinity, 1, 5, 2));
  const Hecke h(g);
  const auto elems = g.ball(4);
  std::mt19937 rng(1);
  for (int i = 0; i < 100; ++i) {
    const Elem x = elems[rng() % elems.size()], y = elems[rng() % elems.size()], z = elems[rng() % elems.size()];
    CHECK(h.mult(h.t_mult(x, y), h.T(z)) == h.mult(h.T(x), h.t_mult(y, z)));
    const HeckeElement prod = h.t_mult(x, y);
    for (const Elem w : g.ball(g.length(x) + g.length(y))) {
      auto it = prod.find(w);
      CHECK(h.f_coeff(x, y, w) == (it == prod.end() ? LaurentPoly{} : it->second));
    }
  }
}

TEST_CASE("bound N and its breakdown") {
  struct Case {
    CoxeterSystem s;
    long N;
    std::vector<std::string> M;
  };
  const Case cases[] = {
      // Finite parabolics {r,t}: weight 3, {s,t}: weight 5, {s}: 3.
      {sys(2, kInfinity, 2, 1, 3, 2), 5, {"st"}},
      {sys(2, kInfinity, kInfinity, 1, 5, 2), 5, {"s"}},
      {sys(2, kInfinity, 4, 1, 2, 3), 10, {"stst"}},
      {sys(2, 5, 4, 2, 2, 1), 10, {"rsrsr"}},
      {sys(2, 8, 3, 2, 1, 1), 12, {"rsrsrsrs"}},
      {sys(2, 3, 3, 1, 1, 1), 6, {"rsrtsr"}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.s.describe());
    CoxeterGroup g(c.s);
    const BoundInfo b = compute_bound(g);
    CHECK(b.N == c.N);
    std::vector<std::string> M;
    for (const Elem u : b.M) M.push_back(g.word(u));
    CHECK(M == c.M);
    // Oracle: maximum weight over all elements of finite parabolic subgroups.
    long best = 0;
    for (const Elem w : g.ball(12)) {
      GenSet J = 0;
      for (char ch : g.word(w)) J |= gen_bit(gen_index(ch));
      if (J != 0 && g.parabolic_is_finite(J)) best = std::max(best, g.weight(w));
    }
    CHECK(best == c.N);
  }
}

TEST_CASE("verify_bound on a small ball") {
  CoxeterGroup g(sys(2, kInfinity, 4, 1, 2, 3));
  const VerifyReport rep = verify_bound(g, 4, 4);
  CHECK(rep.pass);
  CHECK(rep.bound_violations == 0);
  CHECK(rep.fact_a_violations == 0);
  CHECK(rep.fact_b_violations == 0);
  CHECK(rep.max_degree == 10);
  CHECK(rep.sharp);
  CHECK(rep.pairs_checked == static_cast<long>(g.ball_size(4) * g.ball_size(4)));
  const VerifyReport threaded = verify_bound(g, 4, 4, 3);
  CHECK(threaded.witnesses == rep.witnesses);
  CHECK(threaded.triples_checked == rep.triples_checked);
  const VerifyReport low = verify_bound(g, 4, 4, 1, 9);
  CHECK_FALSE(low.pass);
  CHECK(low.bound_violations > 0);
}
