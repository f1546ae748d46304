#include "wcg/coxeter.hpp"

#include <algorithm>

#include "wcg/error.hpp"

namespace wcg {

int gen_index(char label) {
  for (int a = 0; a < kRank; ++a)
    if (kGenLabels[a] == label) return a;
  return -1;
}

std::string genset_string(GenSet J) {
  std::string out;
  for (int a = 0; a < kRank; ++a)
    if (contains(J, a)) out += kGenLabels[a];
  return out;
}

GenSet parse_genset(std::string_view text) {
  GenSet J = 0;
  for (char ch : text) {
    int a = gen_index(ch);
    if (a < 0 || contains(J, a))
      throw ParseError("bad generator set \"" + std::string(text) + "\"");
    J |= gen_bit(a);
  }
  return J;
}

namespace {

std::string bond_name(int a, int b) {
  return std::string("m_") + kGenLabels[a] + kGenLabels[b];
}

std::string bond_text(int m) { return m == kInfinity ? "inf" : std::to_string(m); }

// Bond comparison with infinity largest.
bool bond_geq(int x, int y) {
  if (x == kInfinity) return true;
  if (y == kInfinity) return false;
  return x >= y;
}

}  // namespace

CoxeterSystem CoxeterSystem::make(int m_rt, int m_sr, int m_st, int L_r, int L_s, int L_t) {
  CoxeterSystem sys;
  const int bonds[3][3] = {{1, m_sr, m_rt}, {m_sr, 1, m_st}, {m_rt, m_st, 1}};
  const int named[3][2] = {{0, 2}, {1, 0}, {1, 2}};
  for (auto [a, b] : named) {
    int m = bonds[a][b];
    if (m != kInfinity && m < 2)
      throw ConfigError("bond " + bond_name(a, b) + "=" + std::to_string(m) +
                        " must be >= 2 or 0 for infinity");
  }
  const int weights[3] = {L_r, L_s, L_t};
  for (int a = 0; a < kRank; ++a)
    if (weights[a] < 1)
      throw ConfigError(std::string("weight L(") + kGenLabels[a] + ")=" +
                        std::to_string(weights[a]) + " must be a positive integer");
  for (auto [a, b] : named) {
    int m = bonds[a][b];
    if (m != kInfinity && m % 2 == 1 && weights[a] != weights[b])
      throw ConfigError("odd bond " + bond_name(a, b) + "=" + std::to_string(m) +
                        " requires L(" + kGenLabels[a] + ")=L(" + kGenLabels[b] + ")");
  }
  for (int a = 0; a < 3; ++a) {
    sys.weight_[a] = weights[a];
    for (int b = 0; b < 3; ++b) sys.m_[a][b] = bonds[a][b];
  }
  return sys;
}

CoxeterSystem CoxeterSystem::relabeled(const std::array<int, 3>& perm) const {
  CoxeterSystem out;
  for (int a = 0; a < 3; ++a) {
    out.weight_[a] = weight_[perm[a]];
    for (int b = 0; b < 3; ++b) out.m_[a][b] = m_[perm[a]][perm[b]];
  }
  return out;
}

std::string CoxeterSystem::describe() const {
  return "(" + bond_text(m_rt()) + "," + bond_text(m_sr()) + "," + bond_text(m_st()) + "),(" +
         std::to_string(weight_[0]) + "," + std::to_string(weight_[1]) + "," +
         std::to_string(weight_[2]) + ")";
}

std::string_view case_kind_name(CaseKind k) {
  switch (k) {
    case CaseKind::Finite: return "FINITE";
    case CaseKind::Case1: return "CASE1";
    case CaseKind::Case2: return "CASE2";
    case CaseKind::Case3: return "CASE3";
    case CaseKind::Case4: return "CASE4";
    case CaseKind::Case5: return "CASE5";
    case CaseKind::AffineSpecial: return "AFFINE_SPECIAL";
    case CaseKind::CompleteGraph: return "COMPLETE_GRAPH";
  }
  return "?";
}

bool is_finite_group(const CoxeterSystem& sys) {
  const int p = sys.m_rt(), q = sys.m_sr(), r = sys.m_st();
  if (p == kInfinity || q == kInfinity || r == kInfinity) return false;
  // 1/p + 1/q + 1/r > 1, in integers.
  return q * r + p * r + p * q > p * q * r;
}

CaseShape classify_case(const CoxeterSystem& sys) {
  CaseShape shape;
  std::array<int, 3> perm{0, 1, 2};
  bool found = false;
  do {
    CoxeterSystem c = sys.relabeled(perm);
    if (c.m_rt() == 2 && bond_geq(c.m_sr(), c.m_st())) {
      found = true;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (is_finite_group(sys)) {
    shape.kind = CaseKind::Finite;
    if (found) shape.relabeling = perm;
    return shape;
  }
  if (!found) {
    shape.kind = CaseKind::CompleteGraph;
    shape.note = "no bond equals 2; Coxeter graph is complete";
    return shape;
  }
  shape.relabeling = perm;
  const CoxeterSystem c = sys.relabeled(perm);
  const int m_sr = c.m_sr(), m_st = c.m_st();
  if (m_sr == kInfinity) {
    if (m_st == 2)
      shape.kind = CaseKind::Case1;
    else if (m_st == kInfinity)
      shape.kind = CaseKind::Case2;
    else
      shape.kind = CaseKind::Case3;
  } else if (m_st >= 4) {
    if (m_sr == 4 && m_st == 4) {
      shape.kind = CaseKind::AffineSpecial;
      shape.note = "affine Weyl group of type B2~";
    } else {
      shape.kind = CaseKind::Case4;
    }
  } else if (m_st == 3) {
    if (m_sr == 6) {
      shape.kind = CaseKind::AffineSpecial;
      shape.note = "affine Weyl group of type G2~";
    } else {
      shape.kind = CaseKind::Case5;
      if (m_sr == 7) shape.note = "m_sr=7 forces equal weights";
    }
  } else {
    // m_st == 2 with m_sr finite gives a finite group, handled above.
    throw InvariantViolation("unclassifiable bond triple " + sys.describe());
  }
  return shape;
}

}  // namespace wcg
