#include "doctest.h"

#include "graphmotive/corpus.hpp"
#include "graphmotive/kirchhoff.hpp"
#include "test_util.hpp"

using namespace graphmotive;

namespace {

// Psi of a derived graph written in the parent's variables.
EdgePoly lift(const EdgePoly& p, const EdgeRemap& r, std::size_t parent_edges) {
  std::vector<std::optional<std::size_t>> map(p.variable_count());
  for (std::size_t old = 0; old < r.edge_map.size(); ++old) {
    if (r.edge_map[old]) map[*r.edge_map[old]] = old;
  }
  return p.remap(parent_edges, map);
}

}  // namespace

TEST_SUITE("kirchhoff") {
  TEST_CASE("small graphs") {
    // Complement of each spanning tree of the triangle is a single edge.
    CHECK(psi(complete_graph(3)).psi == parse_edgepoly("t1 + t2 + t3", 3));
    CHECK(psi(banana_graph(2)).psi == parse_edgepoly("t1 + t2", 2));
    CHECK(psi(banana_graph(3)).psi == parse_edgepoly("t1*t2 + t1*t3 + t2*t3", 3));
    CHECK(psi(single_edge()).psi == EdgePoly::constant(1, 1));
    CHECK(psi(complete_graph(4)).psi.term_count() == 16);
    CHECK(psi(banana_graph(3)).loop_number == 2);
  }

  TEST_CASE("deletion-contraction split") {
    const DelConSplit s = deletion_contraction_split(banana_graph(3), 2);
    CHECK(s.F == parse_edgepoly("t1 + t2", 3));
    CHECK(s.G == parse_edgepoly("t1*t2", 3));
    const DelConSplit t = deletion_contraction_split(complete_graph(3), 2);
    CHECK(t.F == EdgePoly::constant(3, 1));
    CHECK(t.G == parse_edgepoly("t1 + t2", 3));
    CHECK(deletion_contraction_split(path_graph(2), 0).F_zero);
    MultiGraph loop = banana_graph(2);
    loop.add_edge(0, 0);
    CHECK(deletion_contraction_split(loop, 2).G_zero);
  }

  TEST_CASE("structural invariants on random graphs") {
    auto& r = testutil::rng();
    for (int i = 0; i < 150; ++i) {
      const MultiGraph g = random_multigraph(r, 6, 9);
      const KirchhoffResult k = psi(g);
      CHECK(Integer(k.psi.term_count()) == spanning_forest_count(g));
      CHECK(k.psi.homogeneous_degree() == std::optional<unsigned>(static_cast<unsigned>(stats(g).b1)));
      for (const auto& [m, c] : k.psi.terms()) CHECK(c == 1);
      if (is_forest(g)) CHECK(k.psi == EdgePoly::constant(g.edge_count(), 1));
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const DelConSplit s = deletion_contraction_split(g, e);
        const EdgeKind kind = classify_edge(g, e);
        if (kind != EdgeKind::Bridge) {
          const EdgeRemap del = delete_edge(g, e);
          CHECK(s.F == lift(psi(del.graph).psi, del, g.edge_count()));
        }
        if (kind != EdgeKind::Loop) {
          const EdgeRemap con = contract_edge(g, e);
          CHECK(s.G == lift(psi(con.graph).psi, con, g.edge_count()));
        }
        CHECK(s.F_zero == (kind == EdgeKind::Bridge));
        CHECK(s.G_zero == (kind == EdgeKind::Loop));
      }
    }
  }

  TEST_CASE("multiplicativity") {
    auto& r = testutil::rng();
    for (int i = 0; i < 40; ++i) {
      const MultiGraph a = random_multigraph(r, 4, 5), b = random_multigraph(r, 4, 5);
      const std::size_t na = a.edge_count(), n = na + b.edge_count();
      std::vector<std::optional<std::size_t>> ma(na), mb(b.edge_count());
      for (std::size_t e = 0; e < na; ++e) ma[e] = e;
      for (std::size_t e = 0; e < b.edge_count(); ++e) mb[e] = na + e;
      const EdgePoly prod = psi(a).psi.remap(n, ma) * psi(b).psi.remap(n, mb);
      CHECK(psi(disjoint_union(a, b)).psi == prod);
      if (a.vertex_count() && b.vertex_count()) CHECK(psi(one_point_join(a, 0, b, 0)).psi == prod);
    }
  }

  TEST_CASE("guard") { CHECK_THROWS_AS(psi(complete_graph(7)), GuardError); }
}
