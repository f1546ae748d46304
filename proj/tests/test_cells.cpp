#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "wcg/kl.hpp"

using namespace wcg;

namespace {

CoxeterSystem sys(int m_rt, int m_sr, int m_st, int Lr, int Ls, int Lt) {
  return CoxeterSystem::make(m_rt, m_sr, m_st, Lr, Ls, Lt);
}

const CellGraph::Component* component_of(const std::vector<CellGraph::Component>& cs, Elem w) {
  for (const auto& c : cs)
    if (std::find(c.members.begin(), c.members.end(), w) != c.members.end()) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("finite A3: cells partition the group") {
  CoxeterGroup g(sys(2, 3, 3, 1, 1, 1));
  const Hecke h(g);
  KLTables kl(h, 7);
  const CellGraph graph = cell_graph(kl, 6);
  CHECK(graph.nodes.size() == 24);
  const Elem w0 = *g.longest_element(kAllGens);
  const auto* top = component_of(graph.two_sided_cells, w0);
  REQUIRE(top);
  CHECK(top->members == std::vector<Elem>{w0});
  const auto* bottom = component_of(graph.two_sided_cells, g.identity());
  REQUIRE(bottom);
  CHECK(bottom->members == std::vector<Elem>{g.identity()});
  // Two-sided cells of S4 correspond to the 5 partitions of 4; left cells
  // to the 10 standard tableaux.
  CHECK(graph.two_sided_cells.size() == 5);
  CHECK(graph.left_cells.size() == 10);
  CHECK(graph.right_cells.size() == 10);
  std::size_t total = 0;
  for (const auto& c : graph.left_cells) total += c.members.size();
  CHECK(total == 24);
}

TEST_CASE("identity is its own cell; x.w_J share a left cell with w_J") {
  CoxeterGroup g(sys(2, kInfinity, 4, 1, 2, 3));
  const Hecke h(g);
  KLTables kl(h, 8);
  const int ball = 7;
  const CellGraph graph = cell_graph(kl, ball);
  const auto* e = component_of(graph.left_cells, g.identity());
  REQUIRE(e);
  CHECK(e->members == std::vector<Elem>{g.identity()});
  const Elem wJ = compute_bound(g).M[0];
  const auto* cell = component_of(graph.left_cells, wJ);
  REQUIRE(cell);
  for (const Elem z : g.ball(ball - g.length(wJ))) {
    const Elem zw = g.mul(z, wJ);
    if (g.length(zw) != g.length(z) + g.length(wJ)) continue;
    CHECK(std::find(cell->members.begin(), cell->members.end(), zw) != cell->members.end());
  }
}

TEST_CASE("edge list format") {
  CoxeterGroup g(sys(2, 3, 3, 1, 1, 1));
  const Hecke h(g);
  KLTables kl(h, 3);
  const CellGraph graph = cell_graph(kl, 2);
  std::istringstream in(cell_edge_list(g, graph));
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    const auto a = line.find(' '), b = line.rfind(' ');
    REQUIRE(a != std::string::npos);
    REQUIRE(a != b);
    const std::string tag = line.substr(b + 1);
    CHECK((tag == "L" || tag == "R" || tag == "LR"));
    CHECK(line.substr(0, a).find_first_not_of("rst") == std::string::npos);
  }
  CHECK(lines == graph.edges.size());
  CHECK(lines > 0);
}
