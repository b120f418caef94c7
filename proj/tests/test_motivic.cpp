#include "doctest.h"

#include "graphmotive/corpus.hpp"
#include "graphmotive/motivic.hpp"
#include "graphmotive/pointcount.hpp"
#include "test_util.hpp"

using namespace graphmotive;

namespace {
const IntPoly T = IntPoly::variable();
const IntPoly L = T + IntPoly(1);

IntPoly engine(const MultiGraph& g) {
  const MotivicClass c = motivic_class(g);
  REQUIRE(c.provenance == Provenance::RuleDerived);
  return c.value;
}
}  // namespace

TEST_SUITE("motivic") {
  TEST_CASE("rule engine on small graphs") {
    CHECK(engine(single_edge()) == L);
    CHECK(engine(complete_graph(3)) == T * L * L);
    CHECK(engine(banana_graph(2)) == T * L);
    CHECK(engine(cycle_graph(2)) == L * engine(single_loop()));
    const MotivicClass k4 = motivic_class(complete_graph(4));
    CHECK(k4.provenance == Provenance::Unknown);
    CHECK(k4.residue.has_value());
    CHECK(engine(MultiGraph(4)) == IntPoly(1));
  }

  TEST_CASE("rule trace names") {
    const auto counts = motivic_class(*family_graph("doubled-triangle"), EngineOptions{std::nullopt, false}).trace_counts();
    CHECK(counts.count("parallel") == 1);
    const auto bt = motivic_class(*family_graph("path(3)"), EngineOptions{std::nullopt, false}).trace_counts();
    CHECK(bt.count("bridge") == 1);
  }

  TEST_CASE("rule confluence under random rule orders") {
    auto& r = testutil::rng();
    for (int i = 0; i < 60; ++i) {
      const MultiGraph g = testutil::random_series_parallel(r, 4 + r() % 10);
      const MotivicClass base = motivic_class(g, EngineOptions{std::nullopt, false});
      REQUIRE(base.provenance == Provenance::RuleDerived);
      CHECK(motivic_class(g).value == base.value);
      for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const MotivicClass c = motivic_class(g, EngineOptions{seed * 7919 + static_cast<std::uint64_t>(i), false});
        CHECK(c.provenance == Provenance::RuleDerived);
        CHECK(c.value == base.value);
      }
      CHECK(motivic_class(testutil::permuted(g, r)).value == base.value);
    }
    for (const auto& entry : corpus()) {
      const MotivicClass base = motivic_class(entry.graph);
      for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const MotivicClass c = motivic_class(entry.graph, EngineOptions{seed, false});
        CHECK(c.provenance == base.provenance);
        CHECK(c.value == base.value);
      }
    }
  }

  TEST_CASE("classes agree with point counts") {
    auto& r = testutil::rng();
    for (int i = 0; i < 25; ++i) {
      const MultiGraph g = testutil::random_series_parallel(r, 3 + r() % 5);
      CHECK(verify_class(engine(g), g, {2, 3, 5}).ok);
    }
  }

  TEST_CASE("multiplied edges") {
    const FGH two = multiplied_edge_coefficients(2);
    CHECK(two.f == T - IntPoly(1));
    CHECK(two.g == T);
    CHECK(two.h == L);
    const FGH zero = multiplied_edge_coefficients(0);
    CHECK(zero.f == IntPoly(0));
    CHECK(zero.g == IntPoly(1));
    CHECK(zero.h == IntPoly(0));
    const MultiGraph tri = complete_graph(3);
    CHECK(multiplied_edge_class(tri, 0, 3).value == engine(multiply_edge(tri, 0, 3)));

    const EdgeBases bridge{L, IntPoly(1), IntPoly(0)};
    const std::vector<IntPoly> want = {IntPoly(1), L, T * L, T * L * L};
    for (auto kind : {SeriesKind::Ordinary, SeriesKind::Exponential}) {
      const auto s = multiplied_edge_series(bridge, EdgeKind::Bridge, kind, 3);
      for (std::size_t m = 0; m <= 3; ++m) CHECK(s[m] == want[m]);
    }
    MultiGraph looped = banana_graph(2);
    looped.add_edge(0, 0);
    const auto ls = multiplied_edge_series(looped, 2, SeriesKind::Ordinary, 4);
    for (std::size_t m = 0; m <= 4; ++m) CHECK(ls[m] == T.pow(static_cast<unsigned>(m)) * engine(banana_graph(2)));
    const auto rs = multiplied_edge_series(tri, 1, SeriesKind::Exponential, 3);
    CHECK(rs[1] == engine(tri));

    auto& r = testutil::rng();
    for (int i = 0; i < 30; ++i) {
      const MultiGraph g = testutil::random_series_parallel(r, 3 + r() % 6);
      const std::size_t e = r() % g.edge_count();
      for (auto kind : {SeriesKind::Ordinary, SeriesKind::Exponential}) {
        const auto s = multiplied_edge_series(g, e, kind, 5);
        for (std::size_t m = 0; m <= 5; ++m) {
          const IntPoly direct = engine(multiply_edge(g, e, m));
          CHECK(s[m] == direct);
          if (classify_edge(g, e) == EdgeKind::Regular) CHECK(multiplied_edge_class(g, e, m).value == direct);
        }
      }
    }
  }

  TEST_CASE("banana family") {
    CHECK(banana_class(1) == L);
    CHECK(banana_class(2) == T * T + T);
    CHECK(banana_class(3) == T * L * L);
    for (std::size_t m = 0; m <= 8; ++m) {
      CHECK(banana_class(m) == engine(banana_graph(m)));
      if (m >= 1) CHECK(banana_class_derivative_form(m) == banana_class(m));
    }
  }

  TEST_CASE("lemon family") {
    CHECK(lemon_class(0) == L);
    CHECK(lemon_class(1) == T * L * L);
    CHECK(lemon_class(2) == T * L.pow(4));
    CHECK(lemon_class(8) == T.pow(4) * L.pow(10) * parse_intpoly("T^3 + 6*T^2 + 9*T + 1"));
    for (std::size_t m = 0; m <= 8; ++m) {
      CHECK(lemon_class(m) == lemon_class_closed(m));
      CHECK(lemon_class(m) == engine(lemon_graph(m)));
    }
  }

  TEST_CASE("lemon classes form a divisibility sequence") {
    for (std::size_t n = 1; n <= 12; ++n) {
      for (std::size_t m = 1; m <= n; ++m) {
        if (n % m) continue;
        CHECK(divides(lemon_class(m - 1), lemon_class(n - 1)));
      }
    }
  }

  TEST_CASE("polygon chains") {
    CHECK(polygon_chain_class({3}) == T * L * L);
    CHECK(polygon_chain_class({4}) == T * L.pow(3));
    CHECK(polygon_chain_class({4}) == engine(cycle_graph(4)));
    auto& r = testutil::rng();
    for (int i = 0; i < 20; ++i) {
      std::vector<std::size_t> sides;
      for (long k = 0, n = testutil::small(r, 1, 4); k < n; ++k) sides.push_back(testutil::small(r, 3, 6));
      CHECK(polygon_chain_class(sides) == engine(polygon_chain_graph(sides)));
    }
    CHECK_THROWS_AS(polygon_chain_class({2}), InputError);
  }

  TEST_CASE("lemonade") {
    const MultiGraph tri = complete_graph(3);
    const EdgeBases b = edge_bases(tri, 0);
    const auto s = lemonade_series(b, 4);
    CHECK(s[0] == b.whole);
    CHECK(s[1] == (T * T - IntPoly(1)) * b.whole + T * L * b.deleted + L * L * b.contracted);
    CHECK(s[2] == engine(lemonade_graph(tri, 0, 2)));
    for (std::size_t m = 0; m <= 4; ++m) CHECK(s[m] == engine(lemonade_graph(tri, 0, m)));
    CHECK_THROWS_AS(lemonade_graph(single_loop(), 0, 1), InputError);
  }

  TEST_CASE("Euler characteristics") {
    CHECK(euler_char(complete_graph(3)) == 1);
    CHECK(euler_char(banana_graph(2)) == 1);
    CHECK(euler_char(lemon_graph(2)) == 1);
    CHECK_THROWS_AS(euler_char(path_graph(2)), InputError);
    for (std::size_t m = 2; m <= 8; ++m) {
      const Integer want = banana_class(m).coeff(1);
      CHECK(euler_char(banana_graph(m)) == want);
    }
    const MultiGraph g = banana_graph(3);
    const auto s = euler_multiedge_series(g, 0, 6);
    CHECK(s[1] == euler_char(g));
    for (std::size_t m = 1; m <= 6; ++m) CHECK(s[m] == euler_char(multiply_edge(g, 0, m)));
    const MultiGraph d = *family_graph("doubled-triangle");
    for (std::size_t e = 0; e < d.edge_count(); ++e) {
      if (is_forest(delete_edge(d, e).graph)) continue;
      const EulerBases eb{euler_char(d), 0, euler_char(contract_edge(d, e).graph)};
      const auto ls = lemonade_euler_series(eb, 5);
      for (std::size_t m = 0; m <= 5; ++m) {
        CHECK(ls[m] == euler_char(lemonade_graph(d, e, m)));
        if (m > 1) CHECK(ls[m] == 0);
      }
    }
  }
}
