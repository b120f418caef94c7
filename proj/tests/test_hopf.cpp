#include "doctest.h"

#include "graphmotive/corpus.hpp"
#include "graphmotive/hopf.hpp"
#include "test_util.hpp"

using namespace graphmotive;

namespace {

GraphMonomial mono(const MultiGraph& g) { return {generator_key(g)}; }

std::vector<MultiGraph> hopf_graphs() {
  std::vector<MultiGraph> out;
  for (const auto& e : corpus()) {
    if (e.graph.edge_count() > 0 && e.graph.edge_count() <= 6 && is_1pi(e.graph)) out.push_back(e.graph);
  }
  return out;
}

}  // namespace

TEST_SUITE("hopf") {
  TEST_CASE("coproduct examples") {
    CHECK(coproduct(banana_graph(2)).terms.size() == 2);
    CHECK(coproduct(complete_graph(3)).terms.size() == 2);
    const GraphTensorSum b3 = coproduct(banana_graph(3));
    CHECK(b3.terms.size() == 3);
    CHECK(b3.terms.at({mono(banana_graph(2)), mono(single_loop())}) == 3);
    CHECK(divergent_subgraphs(banana_graph(4)).size() == 10);
  }

  TEST_CASE("antipode examples") {
    const GraphLinearComb t = antipode(complete_graph(3));
    CHECK(t.terms.size() == 1);
    CHECK(t.terms.at(mono(complete_graph(3))) == -1);
    CHECK(antipode(banana_graph(2)).terms.at(mono(banana_graph(2))) == -1);
    const GraphLinearComb b3 = antipode(banana_graph(3));
    CHECK(b3.terms.at(mono(banana_graph(3))) == -1);
    CHECK(b3.terms.at(monomial_product(mono(banana_graph(2)), mono(single_loop()))) == 3);
  }

  TEST_CASE("coassociativity") {
    for (const auto& g : {banana_graph(2), banana_graph(3), banana_graph(4), *family_graph("doubled-triangle")}) {
      CHECK(coassociativity_left(g).terms == coassociativity_right(g).terms);
    }
  }

  TEST_CASE("antipode identities") {
    for (const auto& g : hopf_graphs()) {
      CHECK(antipode_right_convolution(g).is_zero());
      CHECK(antipode_left_convolution(g).is_zero());
    }
  }

  TEST_CASE("Rota-Baxter identity") {
    const auto R = rota_baxter_polar;
    CHECK(R(LaurentPoly::monomial(1, -2) + LaurentPoly(3) + LaurentPoly::monomial(1, 1)) == LaurentPoly::monomial(1, -2));
    CHECK(R(LaurentPoly(4)).is_zero());
    auto& r = testutil::rng();
    for (int i = 0; i < 200; ++i) {
      const LaurentPoly x = testutil::random_laurent(r), y = testutil::random_laurent(r);
      CHECK(R(x) * R(y) == R(x * R(y)) + R(R(x) * y) - R(x * y));
    }
  }

  TEST_CASE("Birkhoff factorization") {
    const Character prim = [](const MultiGraph&) { return LaurentPoly::monomial(1, -1) + LaurentPoly(5); };
    const BirkhoffResult p = birkhoff(prim, complete_graph(3));
    CHECK(p.u_minus == LaurentPoly::monomial(-1, -1));
    CHECK(p.u_plus == LaurentPoly(5));
    const BirkhoffResult b2 = birkhoff(toy_character, banana_graph(2));
    CHECK(b2.u_minus == LaurentPoly::monomial(-1, -1));
    CHECK(b2.u_plus == LaurentPoly(2) + LaurentPoly::monomial(1, 1));
    const BirkhoffResult b3 = birkhoff(toy_character, banana_graph(3));
    CHECK(b3.u_minus == LaurentPoly::monomial(2, -2));
    CHECK(b3.u_plus == LaurentPoly(3) + LaurentPoly::monomial(1, 1));
    for (const auto& g : hopf_graphs()) {
      const BirkhoffResult b = birkhoff(toy_character, g);
      CHECK(b.u_plus.polar_part().is_zero());
      CHECK(b.u_minus.regular_part().is_zero());
      LaurentPoly rhs = b.u_minus + toy_character(g);
      for (const auto& t : divergent_subgraphs(g)) {
        LaurentPoly um(1);
        for (const auto& comp : t.components) um = um * birkhoff(toy_character, comp).u_minus;
        rhs += um * toy_character(t.quotient);
      }
      CHECK(b.u_plus == rhs);
    }
  }

  TEST_CASE("counit annihilation through a character") {
    for (const auto& g : hopf_graphs()) {
      for (const GraphLinearComb& s : {antipode_right_convolution(g), antipode_left_convolution(g)}) {
        LaurentPoly total;
        for (const auto& [m, c] : s.terms) total += LaurentPoly(Rational(c)) * evaluate(toy_character, m, s.graphs);
        CHECK(total.is_zero());
      }
    }
  }

  TEST_CASE("generators must be 1PI") {
    CHECK_THROWS_AS(coproduct(path_graph(2)), InputError);
    CHECK_THROWS_AS(coproduct(complete_graph(5)), GuardError);
  }
}
