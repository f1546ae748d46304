#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wcg/group.hpp"
#include "wcg/laurent.hpp"

namespace wcg {

// Vector in the T-basis: coefficient of T_w keyed by w, zero entries absent.
using HeckeElement = std::map<Elem, LaurentPoly>;

void add_term(HeckeElement& h, Elem w, const LaurentPoly& c);
HeckeElement& operator+=(HeckeElement& h, const HeckeElement& o);
HeckeElement scaled(const HeckeElement& h, const LaurentPoly& c);

// Largest coefficient degree, kDegNegInf for 0.
int max_degree(const HeckeElement& h);
bool in_H_leq0(const HeckeElement& h);
// v^{-k} h in H_{<=0}.
bool in_H_leq0_shifted(const HeckeElement& h, int k);
// v^{-k} h in H_{<0}.
bool in_H_lt0_shifted(const HeckeElement& h, int k);

// "(1*v^1 + -1*v^-1)*T_s + (1*v^0)*T_" in ShortLex order of support; "0".
std::string hecke_to_string(const CoxeterGroup& g, const HeckeElement& h);

// Multiplication in the T-basis of the Hecke algebra of g's weighted system.
class Hecke {
 public:
  explicit Hecke(CoxeterGroup& g);

  CoxeterGroup& group() const { return g_; }

  HeckeElement T(Elem w) const { return HeckeElement{{w, LaurentPoly::constant(1)}}; }
  // v_a - v_a^{-1}.
  const LaurentPoly& xi(int a) const { return xi_[a]; }

  HeckeElement t_mult_gen(const HeckeElement& h, int a, Side side) const;
  HeckeElement t_mult(Elem x, Elem y) const;
  // h . T_y and T_x . h.
  HeckeElement right_mult(const HeckeElement& h, Elem y) const;
  HeckeElement left_mult(Elem x, const HeckeElement& h) const;
  HeckeElement mult(const HeckeElement& a, const HeckeElement& b) const;

  // Coefficient of T_z in T_x T_y; only terms that can still reach z are
  // carried through the fold.
  LaurentPoly f_coeff(Elem x, Elem y, Elem z) const;

 private:
  CoxeterGroup& g_;
  std::array<LaurentPoly, 3> xi_;
};

struct ParabolicEntry {
  GenSet J = 0;
  Elem longest;
  long weight = 0;
};

struct BoundInfo {
  long N = 0;
  // Every finite parabolic subgroup, ordered by size then label.
  std::vector<ParabolicEntry> breakdown;
  // Longest elements attaining N.
  std::vector<Elem> M;
};

BoundInfo compute_bound(CoxeterGroup& g);

struct DegreeWitness {
  Elem x, y, z;
  int degree = 0;
  auto operator<=>(const DegreeWitness&) const = default;
};

struct VerifyReport {
  std::string config;
  BoundInfo bound;
  long bound_checked = 0;  // N unless overridden by a test hook
  int x_max_len = 0;
  int y_max_len = 0;
  long pairs_checked = 0;
  long triples_checked = 0;
  int max_degree = kDegNegInf;
  std::vector<DegreeWitness> witnesses;  // first few triples at max_degree
  // Triples above bound_checked, including the f_{u,u,u} of m_witnesses.
  long bound_violations = 0;
  long fact_a_violations = 0;
  long fact_b_violations = 0;
  // deg f_{u,u,u} for u in M, computed outside the ball when needed.
  std::vector<std::pair<Elem, int>> m_witnesses;
  bool sharp = false;
  bool pass = false;
};

inline constexpr std::size_t kMaxWitnesses = 8;

// Streams all pairs (x, y) with l(x) <= x_max_len, l(y) <= y_max_len;
// workers take x by stride and their partial reports merge
// deterministically.
VerifyReport verify_bound(CoxeterGroup& g, int x_max_len, int y_max_len, int threads = 1,
                          std::optional<long> bound_override = std::nullopt);

}  // namespace wcg
