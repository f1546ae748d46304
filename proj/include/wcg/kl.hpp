#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wcg/hecke.hpp"

namespace wcg {

// Kazhdan-Lusztig data within a length scope: bar(T_w), c_w in the T-basis
// (p column), T_w in the c-basis (q column), and the structure constants
// h_{x,y,z} of the c-basis. Tables grow on demand; single-threaded.
class KLTables {
 public:
  KLTables(const Hecke& hecke, int scope);

  const Hecke& hecke() const { return hecke_; }
  CoxeterGroup& group() const { return hecke_.group(); }
  int scope() const { return scope_; }

  const HeckeElement& bar_T(Elem w);
  HeckeElement bar(const HeckeElement& h);

  // c_w = sum_y p_{y,w} T_y; throws ScopeExceeded beyond the scope.
  const HeckeElement& c(Elem w);
  // T_w = sum_y q_{y,w} c_y, keyed by y.
  const HeckeElement& q_column(Elem w);
  LaurentPoly p(Elem y, Elem w);
  LaurentPoly q(Elem y, Elem w);

  // Rewrites a T-basis element in the c-basis by stripping the ShortLex
  // largest support element; the result is keyed by the c-index.
  HeckeElement to_c_basis(HeckeElement h);
  // c-basis expansion of c_x c_y, i.e. z -> h_{x,y,z}.
  HeckeElement c_product(Elem x, Elem y);
  LaurentPoly h_coeff(Elem x, Elem y, Elem z);

  // max over x, y of length <= search_ball of deg h_{x,y,w}; requires
  // scope >= 2 * search_ball. All w are computed together and cached.
  int a_truncated(Elem w, int search_ball);

 private:
  const Hecke& hecke_;
  int scope_;
  std::unordered_map<std::uint32_t, HeckeElement> bar_t_;
  std::unordered_map<std::uint32_t, HeckeElement> c_;
  std::unordered_map<std::uint32_t, HeckeElement> q_;
  std::map<int, std::unordered_map<std::uint32_t, int>> a_cache_;

  void require_scope(Elem w, const char* what) const;
};

// M and Lambda restricted to a ball. Lambda is the closure of M under
// length-increasing one-letter multiplication on either side; each member
// carries one length-additive factorization x . u . y with u in M.
struct LowestCellSets {
  std::vector<Elem> M;
  int ball = 0;
  struct Factorization {
    Elem x, u, y;
  };
  std::map<Elem, Factorization> lambda;

  bool in_lambda(Elem w) const { return lambda.count(w) != 0; }
};

LowestCellSets lowest_cell_sets(CoxeterGroup& g, int ball);

struct BetaGamma {
  Coeff beta = 0;
  Coeff gamma = 0;
  int a = 0;  // a_truncated(z) used for gamma
};

BetaGamma beta_gamma(KLTables& kl, long N, Elem x, Elem y, Elem z, int search_ball);

// Exact top-coefficient scan over all pairs of a ball. When no product
// exceeds degree N, [v^N] h_{x,y,z} = [v^N] f_{x,y,z} for every pair in
// the ball (off-diagonal p and q lie in v^{-1}Z[v^{-1}]), so
// a_truncated(z, ball) = N exactly when some pair has deg f_{x,y,z} = N.
struct TopDegreeScan {
  int search_ball = 0;
  long N = 0;
  long pairs = 0;
  int max_degree = kDegNegInf;
  bool bound_holds = false;
  // For each target z (length <= target_ball) reaching degree N, the
  // ShortLex-first pair (x, y).
  std::map<Elem, std::pair<Elem, Elem>> reaches_N;
};

TopDegreeScan top_degree_scan(const Hecke& hecke, long N, int search_ball, int target_ball);

struct AFunctionEntry {
  Elem w;
  bool in_lambda = false;
  bool reaches_N = false;
  // "constructive", "search" or "" when a = N is not reached.
  std::string witness_kind;
  Elem wx, wy;  // witness pair with deg f_{wx,wy,w} = N
};

struct AFunctionReport {
  std::string config;
  long N = 0;
  int lambda_ball = 0;
  int witness_ball = 0;
  long pairs_scanned = 0;
  int scan_max_degree = kDegNegInf;
  bool bound_premise = false;
  std::vector<Elem> M;
  std::vector<AFunctionEntry> entries;
  // In Lambda but no pair of the witness ball reaches degree N: the
  // truncation is too small, not a counterexample.
  std::vector<Elem> truncation_gaps;
  // Outside Lambda yet some pair reaches degree N.
  std::vector<Elem> violations;
  bool pass = false;
};

AFunctionReport check_a_function_characterization(const Hecke& hecke, int lambda_ball,
                                                int witness_ball);

struct LowestCellReport {
  std::string config;
  long N = 0;
  int ball = 0;
  struct PerLongest {
    Elem wJ;
    GenSet J = 0;
    long cell_witnesses_checked = 0;
    std::vector<Elem> cell_witness_failures;  // y with deg f_{wJ y^-1, y wJ, wJ} != N
    long left_cell_witnesses_checked = 0;
    std::vector<Elem> left_cell_witness_failures;  // x wJ with deg f_{x wJ, wJ, x wJ} != N
    std::vector<Elem> only_in_coset;       // x . wJ with R != J
    std::vector<Elem> only_in_descent_set;  // R(z) = J but not of the form x . wJ
  };
  std::vector<PerLongest> per_longest;
  bool pass = false;
};

// Degree-N witnesses for the lowest two-sided cell and the left cell
// {x . w_J} = {x : R(x) = J}, over all elements of length <= ball.
LowestCellReport check_lowest_cell_witnesses(const Hecke& hecke, int ball);

struct CellGraph {
  int ball = 0;
  std::vector<Elem> nodes;
  // Edge w -> z when z occurs in c_a c_w (left) or c_w c_a (right).
  struct Edge {
    Elem from, to;
    bool left = false, right = false;
  };
  std::vector<Edge> edges;
  struct Component {
    std::vector<Elem> members;
    bool incomplete = false;  // contains an element on the ball boundary
  };
  std::vector<Component> left_cells, right_cells, two_sided_cells;
};

CellGraph cell_graph(KLTables& kl, int ball);
// "w z L|R|LR" lines, identity written as the empty string.
std::string cell_edge_list(const CoxeterGroup& g, const CellGraph& graph);

}  // namespace wcg
