#include "wcg/kl.hpp"

#include <algorithm>

#include "wcg/error.hpp"

namespace wcg {

KLTables::KLTables(const Hecke& hecke, int scope) : hecke_(hecke), scope_(scope) {
  group().ensure_length(scope);
}

void KLTables::require_scope(Elem w, const char* what) const {
  if (group().length(w) > scope_)
    throw ScopeExceeded(std::string(what) + " of \"" + group().word(w) + "\" needs length " +
                        std::to_string(group().length(w)) + " but tables cover " +
                        std::to_string(scope_));
}

const HeckeElement& KLTables::bar_T(Elem w) {
  if (auto it = bar_t_.find(w.id); it != bar_t_.end()) return it->second;
  CoxeterGroup& g = group();
  if (w == g.identity()) return bar_t_.emplace(w.id, hecke_.T(w)).first->second;
  // bar(T_{w'b}) = bar(T_{w'}) (T_b - (v_b - v_b^{-1})).
  const int b = gen_index(g.word(w).back());
  const HeckeElement& prev = bar_T(g.mul_gen(w, b, Side::Right));
  HeckeElement out = hecke_.t_mult_gen(prev, b, Side::Right);
  out += scaled(prev, -hecke_.xi(b));
  return bar_t_.emplace(w.id, std::move(out)).first->second;
}

HeckeElement KLTables::bar(const HeckeElement& h) {
  HeckeElement out;
  for (const auto& [w, c] : h) out += scaled(bar_T(w), c.bar());
  return out;
}

const HeckeElement& KLTables::c(Elem w) {
  if (auto it = c_.find(w.id); it != c_.end()) return it->second;
  require_scope(w, "c_w");
  // Solve p_x - bar(p_x) = D_x for x below w in decreasing ShortLex order,
  // where D_x is the T_x coefficient of sum_{y > x} bar(p_y) bar(T_y).
  HeckeElement acc = bar_T(w);
  HeckeElement cw{{w, LaurentPoly::constant(1)}};
  Elem current = w;
  while (true) {
    auto it = acc.lower_bound(current);
    if (it == acc.begin()) break;
    --it;
    const Elem x = it->first;
    const LaurentPoly defect = it->second;
    current = x;
    if (defect.coeff_at(0) != 0 || defect.bar() != -defect)
      throw InvariantViolation("bar defect of c_" + group().word(w) + " at T_" + group().word(x) +
                               " is not antisymmetric: " + defect.to_string());
    const LaurentPoly px = defect.negative_part();
    if (px.is_zero()) continue;
    cw.emplace(x, px);
    acc += scaled(bar_T(x), px.bar());
  }
  return c_.emplace(w.id, std::move(cw)).first->second;
}

HeckeElement KLTables::to_c_basis(HeckeElement h) {
  HeckeElement out;
  while (!h.empty()) {
    auto last = std::prev(h.end());
    const Elem u = last->first;
    const LaurentPoly a = last->second;
    out.emplace(u, a);
    h += scaled(c(u), -a);
    if (h.count(u) != 0) throw InvariantViolation("c-basis stripping did not clear the leading term");
  }
  return out;
}

const HeckeElement& KLTables::q_column(Elem w) {
  if (auto it = q_.find(w.id); it != q_.end()) return it->second;
  require_scope(w, "q column");
  return q_.emplace(w.id, to_c_basis(hecke_.T(w))).first->second;
}

LaurentPoly KLTables::p(Elem y, Elem w) {
  const auto& cw = c(w);
  auto it = cw.find(y);
  return it == cw.end() ? LaurentPoly{} : it->second;
}

LaurentPoly KLTables::q(Elem y, Elem w) {
  const auto& col = q_column(w);
  auto it = col.find(y);
  return it == col.end() ? LaurentPoly{} : it->second;
}

HeckeElement KLTables::c_product(Elem x, Elem y) {
  return to_c_basis(hecke_.mult(c(x), c(y)));
}

LaurentPoly KLTables::h_coeff(Elem x, Elem y, Elem z) {
  const HeckeElement prod = c_product(x, y);
  auto it = prod.find(z);
  return it == prod.end() ? LaurentPoly{} : it->second;
}

int KLTables::a_truncated(Elem w, int search_ball) {
  if (2 * search_ball > scope_)
    throw ScopeExceeded("a-function with search ball " + std::to_string(search_ball) +
                        " needs tables of scope " + std::to_string(2 * search_ball) +
                        ", have " + std::to_string(scope_));
  auto found = a_cache_.find(search_ball);
  if (found == a_cache_.end()) {
    std::unordered_map<std::uint32_t, int> table;
    const auto elems = group().ball(search_ball);
    for (const Elem x : elems)
      for (const Elem y : elems)
        for (const auto& [z, h] : c_product(x, y)) {
          auto [it, inserted] = table.try_emplace(z.id, h.deg());
          if (!inserted) it->second = std::max(it->second, h.deg());
        }
    found = a_cache_.emplace(search_ball, std::move(table)).first;
  }
  auto it = found->second.find(w.id);
  return it == found->second.end() ? kDegNegInf : it->second;
}

LowestCellSets lowest_cell_sets(CoxeterGroup& g, int ball) {
  LowestCellSets out;
  out.ball = ball;
  out.M = compute_bound(g).M;
  for (const Elem w : g.ball(ball)) {
    if (std::find(out.M.begin(), out.M.end(), w) != out.M.end()) {
      out.lambda.emplace(w, LowestCellSets::Factorization{g.identity(), w, g.identity()});
      continue;
    }
    bool done = false;
    for (int a = 0; a < kRank && !done; ++a) {
      if (!contains(g.descents(w, Side::Left), a)) continue;
      auto it = out.lambda.find(g.mul_gen(w, a, Side::Left));
      if (it == out.lambda.end()) continue;
      auto f = it->second;
      f.x = g.mul_gen(f.x, a, Side::Left);
      out.lambda.emplace(w, f);
      done = true;
    }
    for (int b = 0; b < kRank && !done; ++b) {
      if (!contains(g.descents(w, Side::Right), b)) continue;
      auto it = out.lambda.find(g.mul_gen(w, b, Side::Right));
      if (it == out.lambda.end()) continue;
      auto f = it->second;
      f.y = g.mul_gen(f.y, b, Side::Right);
      out.lambda.emplace(w, f);
      done = true;
    }
  }
  return out;
}

BetaGamma beta_gamma(KLTables& kl, long N, Elem x, Elem y, Elem z, int search_ball) {
  CoxeterGroup& g = kl.group();
  const Elem zi = g.inverse(z);
  BetaGamma out;
  out.beta = kl.hecke().f_coeff(x, y, zi).coeff_at(static_cast<int>(N));
  out.a = kl.a_truncated(z, search_ball);
  out.gamma = kl.h_coeff(x, y, zi).coeff_at(out.a);
  return out;
}

TopDegreeScan top_degree_scan(const Hecke& hecke, long N, int search_ball, int target_ball) {
  CoxeterGroup& g = hecke.group();
  TopDegreeScan scan;
  scan.search_ball = search_ball;
  scan.N = N;
  g.ensure_length(2 * search_ball);
  const auto elems = g.ball(search_ball);
  for (const Elem x : elems)
    for (const Elem y : elems) {
      ++scan.pairs;
      for (const auto& [z, c] : hecke.t_mult(x, y)) {
        const int d = c.deg();
        scan.max_degree = std::max(scan.max_degree, d);
        if (d == N && g.length(z) <= target_ball) scan.reaches_N.try_emplace(z, x, y);
      }
    }
  scan.bound_holds = scan.max_degree <= N;
  return scan;
}

AFunctionReport check_a_function_characterization(const Hecke& hecke, int lambda_ball,
                                                int witness_ball) {
  CoxeterGroup& g = hecke.group();
  AFunctionReport rep;
  rep.config = g.system().describe();
  rep.N = compute_bound(g).N;
  rep.lambda_ball = lambda_ball;
  rep.witness_ball = witness_ball;
  const LowestCellSets sets = lowest_cell_sets(g, lambda_ball);
  rep.M = sets.M;
  const TopDegreeScan scan = top_degree_scan(hecke, rep.N, witness_ball, lambda_ball);
  rep.pairs_scanned = scan.pairs;
  rep.scan_max_degree = scan.max_degree;
  rep.bound_premise = scan.bound_holds;

  for (const Elem w : g.ball(lambda_ball)) {
    AFunctionEntry e;
    e.w = w;
    e.in_lambda = sets.in_lambda(w);
    if (e.in_lambda) {
      // w = x . u . y gives T_{xu} T_{uy} = T_x T_u T_u T_y, whose T_w
      // coefficient inherits degree N from f_{u,u,u}.
      const auto& f = sets.lambda.at(w);
      const Elem xu = g.mul(f.x, f.u), uy = g.mul(f.u, f.y);
      if (g.length(xu) <= witness_ball && g.length(uy) <= witness_ball &&
          hecke.f_coeff(xu, uy, w).deg() == rep.N) {
        e.reaches_N = true;
        e.witness_kind = "constructive";
        e.wx = xu;
        e.wy = uy;
      }
    }
    if (!e.reaches_N) {
      if (auto it = scan.reaches_N.find(w); it != scan.reaches_N.end()) {
        e.reaches_N = true;
        e.witness_kind = "search";
        e.wx = it->second.first;
        e.wy = it->second.second;
      }
    }
    if (e.in_lambda && !e.reaches_N) rep.truncation_gaps.push_back(w);
    if (!e.in_lambda && e.reaches_N) rep.violations.push_back(w);
    rep.entries.push_back(e);
  }
  rep.pass = rep.bound_premise && rep.truncation_gaps.empty() && rep.violations.empty();
  return rep;
}

LowestCellReport check_lowest_cell_witnesses(const Hecke& hecke, int ball) {
  CoxeterGroup& g = hecke.group();
  LowestCellReport rep;
  rep.config = g.system().describe();
  const BoundInfo bound = compute_bound(g);
  rep.N = bound.N;
  rep.ball = ball;
  rep.pass = true;
  const auto elems = g.ball(ball);
  for (const Elem u : bound.M) {
    LowestCellReport::PerLongest per;
    per.wJ = u;
    per.J = g.descents(u, Side::Left);
    for (const Elem y : elems) {
      if (g.descents(y, Side::Right) & per.J) continue;
      ++per.cell_witnesses_checked;
      const Elem yu = g.mul(y, u);
      if (hecke.f_coeff(g.inverse(yu), yu, u).deg() != rep.N) per.cell_witness_failures.push_back(y);
    }
    std::vector<Elem> coset;
    for (const Elem x : g.ball(ball - g.length(u))) {
      if (g.descents(x, Side::Right) & per.J) continue;
      const Elem xu = g.mul(x, u);
      coset.push_back(xu);
      ++per.left_cell_witnesses_checked;
      if (hecke.f_coeff(xu, u, xu).deg() != rep.N) per.left_cell_witness_failures.push_back(xu);
    }
    std::sort(coset.begin(), coset.end());
    std::vector<Elem> by_descent;
    for (const Elem z : elems)
      if (g.descents(z, Side::Right) == per.J) by_descent.push_back(z);
    std::set_difference(coset.begin(), coset.end(), by_descent.begin(), by_descent.end(),
                        std::back_inserter(per.only_in_coset));
    std::set_difference(by_descent.begin(), by_descent.end(), coset.begin(), coset.end(),
                        std::back_inserter(per.only_in_descent_set));
    if (!per.cell_witness_failures.empty() || !per.left_cell_witness_failures.empty() ||
        !per.only_in_coset.empty() || !per.only_in_descent_set.empty())
      rep.pass = false;
    rep.per_longest.push_back(std::move(per));
  }
  return rep;
}

namespace {

// Tarjan's algorithm over vertices 0..n-1; components ordered by their
// smallest vertex, members ascending.
std::vector<std::vector<std::size_t>> strongly_connected(
    const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> comps;
  std::size_t counter = 0;
  struct Frame {
    std::size_t v, next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < adj[f.v].size()) {
        const std::size_t w = adj[f.v][f.next++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
    }
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

}  // namespace

CellGraph cell_graph(KLTables& kl, int ball) {
  CoxeterGroup& g = kl.group();
  const Hecke& hecke = kl.hecke();
  CellGraph graph;
  graph.ball = ball;
  graph.nodes = g.ball(ball);
  const std::size_t n = graph.nodes.size();
  std::map<std::pair<Elem, Elem>, CellGraph::Edge> edges;
  for (const Elem w : graph.nodes) {
    const HeckeElement& cw = kl.c(w);
    for (int a = 0; a < kRank; ++a) {
      const LaurentPoly va_inv = LaurentPoly::v_power(-g.system().weight(a));
      for (const Side side : {Side::Left, Side::Right}) {
        // c_a = T_a + v_a^{-1} T_e.
        HeckeElement prod = hecke.t_mult_gen(cw, a, side);
        prod += scaled(cw, va_inv);
        for (const auto& [z, coeff] : kl.to_c_basis(std::move(prod))) {
          if (z == w || g.length(z) > ball) continue;
          auto& e = edges[{w, z}];
          e.from = w;
          e.to = z;
          (side == Side::Left ? e.left : e.right) = true;
        }
      }
    }
  }
  std::vector<std::vector<std::size_t>> adj_l(n), adj_r(n), adj_lr(n);
  for (const auto& [key, e] : edges) {
    graph.edges.push_back(e);
    if (e.left) adj_l[e.from.id].push_back(e.to.id);
    if (e.right) adj_r[e.from.id].push_back(e.to.id);
    adj_lr[e.from.id].push_back(e.to.id);
  }
  auto to_components = [&](const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<CellGraph::Component> out;
    for (const auto& comp : strongly_connected(adj)) {
      CellGraph::Component c;
      for (std::size_t v : comp) {
        const Elem w{static_cast<std::uint32_t>(v)};
        c.members.push_back(w);
        if (g.length(w) >= ball) c.incomplete = true;
      }
      out.push_back(std::move(c));
    }
    return out;
  };
  graph.left_cells = to_components(adj_l);
  graph.right_cells = to_components(adj_r);
  graph.two_sided_cells = to_components(adj_lr);
  return graph;
}

std::string cell_edge_list(const CoxeterGroup& g, const CellGraph& graph) {
  std::string out;
  for (const auto& e : graph.edges) {
    out += g.word(e.from);
    out += ' ';
    out += g.word(e.to);
    out += ' ';
    out += e.left && e.right ? "LR" : (e.left ? "L" : "R");
    out += '\n';
  }
  return out;
}

}  // namespace wcg
