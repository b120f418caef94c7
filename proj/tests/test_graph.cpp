#include "doctest.h"

#include <sstream>

#include "graphmotive/corpus.hpp"
#include "graphmotive/graph.hpp"
#include "test_util.hpp"

using namespace graphmotive;

namespace {
MultiGraph triangle() { return parse_text_graph("1 2\n1 3\n2 3\n"); }
}

TEST_SUITE("graph") {
  TEST_CASE("deletion") {
    const EdgeRemap d = delete_edge(triangle(), 2);
    CHECK(d.graph.vertex_count() == 3);
    CHECK(d.graph.edge_count() == 2);
    CHECK(canonical_key(d.graph) == canonical_key(path_graph(2)));
    CHECK(d.edge_map[0] == 0);
    CHECK(!d.edge_map[2].has_value());
    const EdgeRemap l = delete_edge(single_loop(), 0);
    CHECK(l.graph.vertex_count() == 1);
    CHECK(l.graph.edge_count() == 0);
    CHECK(delete_edge(banana_graph(3), 1).graph == banana_graph(2));
  }

  TEST_CASE("contraction") {
    CHECK(canonical_key(contract_edge(triangle(), 0).graph) == canonical_key(banana_graph(2)));
    const MultiGraph c = contract_edge(banana_graph(2), 0).graph;
    CHECK(c.vertex_count() == 1);
    CHECK(canonical_key(c) == canonical_key(single_loop()));
    CHECK(contract_edge(single_loop(), 0).graph == delete_edge(single_loop(), 0).graph);
    // The doubling construction on the triangle: contracting a doubled edge
    // leaves a 2-cycle with a loop from its twin.
    const MultiGraph d = multiply_edge(complete_graph(3), 0, 2);
    CHECK(canonical_key(delete_edge(contract_edge(d, 0).graph, 0).graph) == canonical_key(cycle_graph(2)));
  }

  TEST_CASE("edge classification") {
    CHECK(classify_edge(path_graph(2), 0) == EdgeKind::Bridge);
    CHECK(classify_edge(single_loop(), 0) == EdgeKind::Loop);
    for (std::size_t e = 0; e < 3; ++e) CHECK(classify_edge(triangle(), e) == EdgeKind::Regular);
  }

  TEST_CASE("stats and 1PI") {
    CHECK(stats(triangle()).b0 == 1);
    CHECK(stats(triangle()).b1 == 1);
    for (std::size_t m = 1; m <= 6; ++m) CHECK(stats(banana_graph(m)).b1 == m - 1);
    const MultiGraph forest = disjoint_union(path_graph(2), disjoint_union(path_graph(1), path_graph(3)));
    CHECK(stats(forest).b0 == 3);
    CHECK(stats(forest).b1 == 0);
    CHECK(is_forest(forest));
    CHECK(is_1pi(triangle()));
    CHECK(!is_1pi(path_graph(2)));
    MultiGraph tb = disjoint_union(triangle(), triangle());
    tb.add_edge(0, 3);
    CHECK(!is_1pi(tb));
  }

  TEST_CASE("canonical keys") {
    const MultiGraph relabeled = parse_text_graph("c a\nb c\na b\n");
    CHECK(canonical_key(triangle()) == canonical_key(relabeled));
    CHECK(canonical_key(triangle()) != canonical_key(*family_graph("star(3)")));
    CHECK(canonical_key(banana_graph(2)) == canonical_key(parse_text_graph("x y\ny x\n")));
  }

  TEST_CASE("canonical key is invariant under random relabeling") {
    auto& r = testutil::rng();
    std::vector<MultiGraph> graphs;
    for (const auto& e : corpus()) graphs.push_back(e.graph);
    for (int i = 0; i < 100; ++i) graphs.push_back(random_multigraph(r, 7, 10));
    for (const auto& g : graphs) {
      for (int k = 0; k < 5; ++k) CHECK(canonical_key(testutil::permuted(g, r)) == canonical_key(g));
    }
  }

  TEST_CASE("canonical key separates non-isomorphic graphs") {
    auto& r = testutil::rng();
    std::vector<MultiGraph> graphs;
    for (int i = 0; i < 80; ++i) graphs.push_back(random_multigraph(r, 5, 6));
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (std::size_t j = i + 1; j < graphs.size(); ++j) {
        CHECK((canonical_key(graphs[i]) == canonical_key(graphs[j])) == testutil::isomorphic(graphs[i], graphs[j]));
      }
    }
  }

  TEST_CASE("edge multiplication") {
    CHECK(multiply_edge(single_edge(), 0, 3) == banana_graph(3));
    CHECK(multiply_edge(triangle(), 0, 2).edge_count() == 4);
    auto& r = testutil::rng();
    for (int i = 0; i < 40; ++i) {
      const MultiGraph g = random_multigraph(r, 5, 6);
      if (g.edge_count() == 0) continue;
      const std::size_t e = r() % g.edge_count();
      CHECK(canonical_key(multiply_edge(g, e, 1)) == canonical_key(g));
      for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t k = 0; k <= 3; ++k) {
          CHECK(canonical_key(multiply_edge(multiply_edge(g, e, m), e, k)) ==
                canonical_key(multiply_edge(g, e, m + k - 1)));
        }
      }
    }
  }

  TEST_CASE("Betti numbers under deletion and contraction") {
    auto& r = testutil::rng();
    for (int i = 0; i < 200; ++i) {
      const MultiGraph g = random_multigraph(r, 6, 8);
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const std::size_t b1 = stats(g).b1;
        const EdgeKind k = classify_edge(g, e);
        const std::size_t del = stats(delete_edge(g, e).graph).b1;
        const std::size_t con = stats(contract_edge(g, e).graph).b1;
        CHECK(del == (k == EdgeKind::Bridge ? b1 : b1 - 1));
        CHECK(con == (k == EdgeKind::Loop ? b1 - 1 : b1));
        CHECK(stats(delete_edge(g, e).graph).b0 == stats(g).b0 + (k == EdgeKind::Bridge ? 1 : 0));
      }
    }
  }

  TEST_CASE("blocks and quotients") {
    MultiGraph g = one_point_join(triangle(), 0, triangle(), 0);
    CHECK(blocks(g).size() == 2);
    g.add_edge(1, 1);
    CHECK(blocks(g).size() == 3);
    const std::vector<std::size_t> two = {0, 1};
    const MultiGraph q = quotient(banana_graph(3), two);
    CHECK(canonical_key(without_isolated_vertices(q)) == canonical_key(single_loop()));
    CHECK(edge_components(disjoint_union(triangle(), banana_graph(2))).size() == 2);
  }

  TEST_CASE("text and JSON round trips") {
    auto& r = testutil::rng();
    for (int i = 0; i < 50; ++i) {
      const MultiGraph g = random_multigraph(r, 6, 8);
      const MultiGraph t = parse_text_graph(to_text(g));
      const MultiGraph j = graph_from_json(to_json(g));
      CHECK(canonical_key(t) == canonical_key(g));
      CHECK(canonical_key(j) == canonical_key(g));
    }
    CHECK_THROWS_AS(parse_text_graph("1 2 3\n"), InputError);
    const MultiGraph c = parse_text_graph("# a comment\n1 2 # edge\n3\n");
    CHECK(c.vertex_count() == 3);
    CHECK(c.edge_count() == 1);
  }

  TEST_CASE("size guard") {
    CHECK_THROWS_AS(canonical_key(complete_graph(7)), GuardError);
  }

  TEST_CASE("family specs") {
    CHECK(canonical_key(*family_graph("lemon(1)")) == canonical_key(triangle()));
    const MultiGraph b = *family_graph("banana(4)");
    CHECK(b.vertex_count() == 2);
    CHECK(b.edge_count() == 4);
    CHECK(canonical_key(*family_graph("chain(3,3)")) == canonical_key(*family_graph("lemon(2)")));
    CHECK(!family_graph("nonsense").has_value());
  }
}
