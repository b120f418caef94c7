#include "doctest.h"

#include "graphmotive/corpus.hpp"
#include "graphmotive/kirchhoff.hpp"
#include "graphmotive/motivic.hpp"
#include "graphmotive/pointcount.hpp"
#include "test_util.hpp"

using namespace graphmotive;

namespace {
const IntPoly T = IntPoly::variable();

// Exhaustive count of the points where p does not vanish.
Integer brute_complement(const EdgePoly& p, std::uint64_t q) {
  const std::size_t n = p.variable_count();
  std::vector<std::uint64_t> pt(n, 0);
  Integer count = 0;
  while (true) {
    if (p.eval_mod_p(pt, q) != 0) count += 1;
    std::size_t i = 0;
    while (i < n && ++pt[i] == q) pt[i++] = 0;
    if (i == n) break;
  }
  return count;
}
}  // namespace

TEST_SUITE("pointcount") {
  TEST_CASE("small counts") {
    const CountResult t = count_complement(psi(complete_graph(3)).psi, 2);
    CHECK(t.complement_count == 4);
    CHECK(t.zero_count == 4);
    CHECK(count_complement(psi(banana_graph(2)).psi, 2).complement_count == 2);
    CHECK(count_complement(psi(path_graph(3)).psi, 5).complement_count == 125);
    CHECK_THROWS_AS(count_complement(psi(banana_graph(2)).psi, 4), InputError);
  }

  TEST_CASE("agrees with exhaustive evaluation") {
    auto& r = testutil::rng();
    for (int i = 0; i < 60; ++i) {
      const MultiGraph g = random_multigraph(r, 5, 6);
      const EdgePoly p = psi(g).psi;
      for (std::uint64_t q : {2, 3}) {
        const CountResult c = count_complement(p, q);
        CHECK(c.complement_count == brute_complement(p, q));
        CHECK(c.complement_count + c.zero_count == ipow(q, static_cast<unsigned>(g.edge_count())));
      }
    }
  }

  TEST_CASE("elimination order and thread count do not matter") {
    for (const char* spec : {"k4", "lemon(3)", "doubled-triangle", "banana(5)"}) {
      const EdgePoly p = psi(*family_graph(spec)).psi;
      for (std::uint64_t q : {3, 5}) {
        const Integer base = count_complement(p, q, CountOptions{std::nullopt, 1}).complement_count;
        for (std::size_t v = 0; v < p.variable_count(); ++v) {
          CHECK(count_complement(p, q, CountOptions{v, 1}).complement_count == base);
        }
        for (std::size_t th : {2, 3, 8}) CHECK(count_complement(p, q, CountOptions{std::nullopt, th}).complement_count == base);
      }
    }
  }

  TEST_CASE("budget guard") {
    const auto saved = limits().count_budget;
    limits().count_budget = 100;
    CHECK_THROWS_AS(count_complement(psi(complete_graph(4)).psi, 7), GuardError);
    limits().count_budget = saved;
  }

  TEST_CASE("interpolation") {
    const ClassCandidate tri = interpolate_class(complete_graph(3), {2, 3, 5, 7}, 11);
    CHECK(tri.exact_fit);
    CHECK(tri.poly == T * (T + IntPoly(1)).pow(2));
    const ClassCandidate b3 = interpolate_class(banana_graph(3), {2, 3, 5, 7}, 11);
    CHECK(b3.exact_fit);
    CHECK(b3.poly == banana_class(3));
    CHECK_THROWS_AS(interpolate_class(complete_graph(3), {2, 3}, 5), InputError);
    CHECK_THROWS_AS(interpolate_class(complete_graph(3), {2, 3, 5, 7}, 7), InputError);
  }

  TEST_CASE("deletion-contraction at the counting level") {
    const DelconReport t = verify_delcon(complete_graph(3), 2, {2});
    CHECK(t.ok);
    CHECK(t.rows.at(0).complement == 4);
    CHECK(t.rows.at(0).predicted == 4);
    for (std::size_t e = 0; e < 3; ++e) CHECK(verify_delcon(banana_graph(3), e, {2, 3}).ok);
    const MultiGraph l2 = lemon_graph(2);
    for (std::size_t e = 0; e < l2.edge_count(); ++e) {
      if (classify_edge(l2, e) == EdgeKind::Regular) CHECK(verify_delcon(l2, e, {2, 3, 5}).ok);
    }
    auto& r = testutil::rng();
    for (int i = 0; i < 30; ++i) {
      const MultiGraph g = random_multigraph(r, 5, 6);
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (classify_edge(g, e) == EdgeKind::Regular) CHECK(verify_delcon(g, e, {2, 3}).ok);
      }
    }
  }

  TEST_CASE("class verification") {
    const ClassCheck t = verify_class(T * (T + IntPoly(1)).pow(2), complete_graph(3), {3});
    CHECK(t.ok);
    CHECK(t.rows.at(0).counted == 18);
    CHECK(verify_class(lemon_class(2), polygon_chain_graph({3, 3}), {2, 3, 5}).ok);
    CHECK(!verify_class(lemon_class(2) + IntPoly(1), polygon_chain_graph({3, 3}), {2, 3, 5}).ok);
  }

  TEST_CASE("joint zeros") {
    const DelConSplit s = deletion_contraction_split(banana_graph(3), 0);
    const EdgePoly p = psi(banana_graph(3)).psi;
    for (std::uint64_t q : {2, 3, 5}) {
      const JointZeroCounts j = count_joint_zeros(p, s.F, q);
      Integer pz = 0, both = 0;
      const std::size_t n = p.variable_count();
      std::vector<std::uint64_t> pt(n, 0);
      while (true) {
        const bool a = p.eval_mod_p(pt, q) == 0, b = s.F.eval_mod_p(pt, q) == 0;
        if (a) pz += 1;
        if (a && b) both += 1;
        std::size_t i = 0;
        while (i < n && ++pt[i] == q) pt[i++] = 0;
        if (i == n) break;
      }
      CHECK(j.p_zero == pz);
      CHECK(j.both_zero == both);
    }
  }
}
