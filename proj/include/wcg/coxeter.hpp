#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace wcg {

inline constexpr int kRank = 3;
inline constexpr char kGenLabels[kRank] = {'r', 's', 't'};
// Bond order encoding for m_ab = infinity.
inline constexpr int kInfinity = 0;

// Subset of {r, s, t} as a bitmask, bit a for generator a.
using GenSet = std::uint8_t;
inline constexpr GenSet kAllGens = 0b111;

constexpr GenSet gen_bit(int a) { return static_cast<GenSet>(1u << a); }
constexpr bool contains(GenSet J, int a) { return (J >> a) & 1u; }
// The two-element subset {a, b}; the index of a pair is its missing generator.
constexpr int pair_index(int a, int b) { return 3 - a - b; }

enum class Side { Left = 0, Right = 1 };

// Returns -1 for an unknown label.
int gen_index(char label);
std::string genset_string(GenSet J);
// "rs" -> {r,s}; throws ParseError on unknown or repeated labels.
GenSet parse_genset(std::string_view text);

// Rank-3 Coxeter matrix together with a positive weight function.
class CoxeterSystem {
 public:
  // Bonds use kInfinity (0) for infinity; throws ConfigError when a bond is
  // 1 or negative, a weight is not positive, or an odd bond joins
  // generators of different weight.
  static CoxeterSystem make(int m_rt, int m_sr, int m_st, int L_r, int L_s, int L_t);

  int m(int a, int b) const { return m_[a][b]; }
  bool finite_bond(int a, int b) const { return m_[a][b] != kInfinity; }
  int weight(int a) const { return weight_[a]; }

  int m_rt() const { return m_[0][2]; }
  int m_sr() const { return m_[1][0]; }
  int m_st() const { return m_[1][2]; }

  // System obtained by renaming generator perm[a] as a.
  CoxeterSystem relabeled(const std::array<int, 3>& perm) const;

  // "(m_rt,m_sr,m_st),(L_r,L_s,L_t)" with "inf" for infinite bonds.
  std::string describe() const;

  bool operator==(const CoxeterSystem&) const = default;

 private:
  std::array<std::array<int, 3>, 3> m_{};
  std::array<int, 3> weight_{};
};

enum class CaseKind {
  Finite,
  Case1,  // m_sr = inf, m_st = 2
  Case2,  // m_sr = m_st = inf
  Case3,  // m_sr = inf, 3 <= m_st < inf
  Case4,  // inf > m_sr >= m_st >= 4
  Case5,  // inf > m_sr >= m_st = 3
  AffineSpecial,
  CompleteGraph,
};

std::string_view case_kind_name(CaseKind k);

struct CaseShape {
  CaseKind kind = CaseKind::Finite;
  // relabeling[a] is the original generator that plays the role of a.
  std::array<int, 3> relabeling{0, 1, 2};
  std::string note;

  bool is_identity_relabeling() const { return relabeling == std::array<int, 3>{0, 1, 2}; }
};

CaseShape classify_case(const CoxeterSystem& sys);

// True when the Coxeter group of the bond triple is finite.
bool is_finite_group(const CoxeterSystem& sys);

}  // namespace wcg
