#include "doctest.h"

#include "graphmotive/poly.hpp"
#include "graphmotive/series.hpp"
#include "test_util.hpp"

using namespace graphmotive;

namespace {
const IntPoly T = IntPoly::variable();
}

TEST_SUITE("poly") {
  TEST_CASE("ring operations") {
    CHECK((T + IntPoly(1)) * T == parse_intpoly("T^2 + T"));
    const BiPoly xm = BiPoly::x() - BiPoly(1), ym = BiPoly::y() - BiPoly(1);
    CHECK(xm.pow(0) * ym.pow(1) + xm.pow(1) * ym.pow(0) == parse_bipoly("x + y - 2"));
    const EdgePoly p = parse_edgepoly("t1*t2 + t1*t3", 3);
    const std::vector<std::uint64_t> pt = {1, 1, 0};
    CHECK(p.eval_mod_p(pt, 2) == 1);
  }

  TEST_CASE("partial derivative and restriction") {
    const EdgePoly q = parse_edgepoly("t1*t2 + t1*t3 + t2*t3", 3);
    CHECK(q.partial_derivative(2) == parse_edgepoly("t1 + t2", 3));
    CHECK(parse_edgepoly("t1 + t2", 2).partial_derivative(0) == EdgePoly::constant(2, 1));
    CHECK(parse_edgepoly("t1*t2", 3).partial_derivative(2).is_zero());
    CHECK(q.set_zero(2) == parse_edgepoly("t1*t2", 3));
    CHECK(parse_edgepoly("t1 + t2", 2).set_zero(1) == parse_edgepoly("t1", 2));
    CHECK(EdgePoly::constant(1, 1).set_zero(0) == EdgePoly::constant(1, 1));
  }

  TEST_CASE("evaluation mod p") {
    const EdgePoly q = parse_edgepoly("t1*t2 + t1*t3 + t2*t3", 3);
    const std::vector<std::uint64_t> ones = {1, 1, 1}, e1 = {1, 0, 0}, zero = {0, 0, 0};
    CHECK(q.eval_mod_p(ones, 2) == 1);
    CHECK(q.eval_mod_p(e1, 2) == 0);
    CHECK(q.eval_mod_p(zero, 7) == 0);
  }

  TEST_CASE("EdgePoly rejects squared variables") {
    const EdgePoly t1 = EdgePoly::variable(2, 0);
    CHECK_THROWS_AS(t1 * t1, InputError);
  }

  TEST_CASE("series_solve_order2") {
    const auto fib = series_solve_order2<IntPoly>(1, 1, 1, 1, 5);
    const std::vector<long> want = {1, 1, 2, 3, 5, 8};
    for (std::size_t m = 0; m <= 5; ++m) CHECK(fib[m] == IntPoly(want[m]));
    const auto f = series_solve_order2<IntPoly>(T - IntPoly(1), T, 0, 1, 10);
    for (std::size_t m = 0; m <= 10; ++m) {
      const IntPoly closed = divexact(T.pow(static_cast<unsigned>(m)) - IntPoly(m % 2 ? -1 : 1), T + IntPoly(1));
      CHECK(f[m] == closed);
    }
    CHECK(f[3] == parse_intpoly("T^2 - T + 1"));
    const auto z = series_solve_order2<IntPoly>(T, T, 0, 0, 6);
    for (const auto& t : z.terms()) CHECK(t.is_zero());
  }

  TEST_CASE("exact division") {
    for (unsigned m = 0; m <= 12; ++m) {
      const IntPoly num = T.pow(m) - IntPoly(m % 2 ? -1 : 1);
      CHECK(divexact(num, T + IntPoly(1)) * (T + IntPoly(1)) == num);
    }
    CHECK_THROWS_AS(divexact(T + IntPoly(2), T + IntPoly(1)), ExactDivisionError);
    CHECK_THROWS_AS(divexact(T, IntPoly(2)), ExactDivisionError);
    CHECK(factored_str(parse_intpoly("T^3 + 2*T^2 + T")) == "T*(T+1)^2");
  }

  TEST_CASE("IntPoly ring axioms on random instances") {
    auto& r = testutil::rng();
    for (int i = 0; i < 300; ++i) {
      const IntPoly a = testutil::random_intpoly(r), b = testutil::random_intpoly(r), c = testutil::random_intpoly(r);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      CHECK(a - a == IntPoly());
      CHECK(parse_intpoly(a.str()) == a);
      if (!b.is_zero()) CHECK(divexact(a * b, b) == a);
      CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
  }

  TEST_CASE("BiPoly ring axioms on random instances") {
    auto& r = testutil::rng();
    for (int i = 0; i < 200; ++i) {
      const BiPoly a = testutil::random_bipoly(r), b = testutil::random_bipoly(r), c = testutil::random_bipoly(r);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(parse_bipoly(a.str()) == a);
    }
  }

  TEST_CASE("LaurentPoly ring axioms and polar decomposition") {
    auto& r = testutil::rng();
    for (int i = 0; i < 200; ++i) {
      const LaurentPoly a = testutil::random_laurent(r), b = testutil::random_laurent(r), c = testutil::random_laurent(r);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a.polar_part() + a.regular_part() == a);
      const LaurentPoly polar = a.polar_part();
      for (const auto& [e, v] : polar.terms()) CHECK(e < 0);
    }
    const LaurentPoly x = LaurentPoly::monomial(1, -2) + LaurentPoly(3) + LaurentPoly::monomial(1, 1);
    CHECK(x.polar_part() == LaurentPoly::monomial(1, -2));
    CHECK(LaurentPoly(5).polar_part().is_zero());
  }

  TEST_CASE("exponential product agrees with ordinary conversion") {
    auto& r = testutil::rng();
    for (int i = 0; i < 50; ++i) {
      using S = SeriesTrunc<IntPoly>;
      std::vector<IntPoly> a, b;
      for (int k = 0; k <= 6; ++k) {
        a.push_back(testutil::random_intpoly(r, 2) * IntPoly(factorial(static_cast<unsigned>(k))));
        b.push_back(testutil::random_intpoly(r, 2) * IntPoly(factorial(static_cast<unsigned>(k))));
      }
      const S ea(SeriesKind::Exponential, a), eb(SeriesKind::Exponential, b);
      CHECK((ea * eb).to_ordinary() == ea.to_ordinary() * eb.to_ordinary());
    }
  }

  TEST_CASE("ordinary inverse") {
    using S = SeriesTrunc<IntPoly>;
    const S one_minus_ts = S::constant(SeriesKind::Ordinary, 1, 6) - S::s_series(SeriesKind::Ordinary, 6).scaled(T);
    CHECK(one_minus_ts.inverse() == S::geometric(T, 6));
    CHECK(one_minus_ts * one_minus_ts.inverse() == S::constant(SeriesKind::Ordinary, 1, 6));
  }
}
