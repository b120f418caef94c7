#include "graphmotive/universal.hpp"

#include <cmath>

namespace graphmotive {

namespace {

const IntPoly kT = IntPoly::variable();

std::optional<Rational> rational_sqrt(const Rational& v) {
  if (v < 0) return std::nullopt;
  Integer n = v.get_num(), d = v.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace

Rep3<IntPoly> motivic_rep() { return {kT - IntPoly(1), kT, kT + IntPoly(1), kT}; }

Rep3<BiPoly> tutte_rep() { return {BiPoly(0), BiPoly(1), BiPoly(1) + BiPoly::y(), BiPoly::y()}; }

Rep3<IntPoly> csm_rep() { return {IntPoly(2) * kT - IntPoly(1), -(kT * (kT - IntPoly(1))), IntPoly(1), kT}; }

LambdaCheck lambda_roots_check(const Rational& f2, const Rational& g2, std::size_t m) {
  LambdaCheck out;
  out.recursion_value = coefficients(Rep3<Rational>{f2, g2, Rational(0), Rational(0)}, m).f;
  const Rational disc = f2 * f2 + 4 * g2;
  if (disc == 0) {
    out.degenerate = true;
    out.exact = true;
    const Rational lam = f2 / 2;
    out.lambda_plus = out.lambda_minus = lam;
    const Rational closed = m == 0 ? Rational(0) : Rational(static_cast<long>(m)) * rpow(lam, static_cast<unsigned>(m - 1));
    out.closed_value = closed.get_d();
    out.ok = closed == out.recursion_value;
    return out;
  }
  if (auto root = rational_sqrt(disc)) {
    out.exact = true;
    const Rational lp = (f2 + *root) / 2, lm = (f2 - *root) / 2;
    out.lambda_plus = lp;
    out.lambda_minus = lm;
    const Rational closed = (rpow(lp, static_cast<unsigned>(m)) - rpow(lm, static_cast<unsigned>(m))) / (lp - lm);
    out.closed_value = closed.get_d();
    out.ok = closed == out.recursion_value;
    return out;
  }
  // Irrational or complex roots: compare in floating point.
  const double a = f2.get_d(), d = disc.get_d();
  const double md = static_cast<double>(m);
  double closed;
  if (d > 0) {
    const double s = std::sqrt(d);
    closed = (std::pow((a + s) / 2, md) - std::pow((a - s) / 2, md)) / s;
  } else {
    // l+- = r e^{+-i theta}: f_m = r^{m-1} sin(m theta) / sin(theta)
    const double re = a / 2, im = std::sqrt(-d) / 2;
    const double r = std::hypot(re, im), theta = std::atan2(im, re);
    closed = std::pow(r, md - 1) * std::sin(md * theta) / std::sin(theta);
  }
  out.closed_value = closed;
  const double expect = out.recursion_value.get_d();
  out.ok = std::fabs(closed - expect) <= 1e-9 * std::max(1.0, std::fabs(expect));
  return out;
}

IntPoly csm_predict(const IntPoly& whole, const IntPoly& deleted, const IntPoly& contracted, std::size_t m) {
  const auto c = coefficients(csm_rep(), m + 1);
  return c.f * whole + c.g * deleted + c.h * contracted;
}

SeriesTriple csm_series(std::size_t order) {
  using S = SeriesTrunc<IntPoly>;
  const IntPoly tm1 = kT - IntPoly(1);
  const S eT = S::exp_of(kT, order), eTm1 = S::exp_of(tm1, order);
  const S s = S::s_series(SeriesKind::Exponential, order);
  const S one = S::constant(SeriesKind::Exponential, IntPoly(1), order);
  return {eT - eTm1, eTm1.scaled(kT) - eT.scaled(tm1), eTm1 + (s - one) * eT};
}

bool satisfies_diffeq(const Rep3<IntPoly>& rep, const SeriesTriple& s) {
  const std::size_t n = s.F.order();
  for (std::size_t m = 0; m + 2 <= n; ++m) {
    if (s.F[m + 2] != rep.f2 * s.F[m + 1] + rep.g2 * s.F[m]) return false;
  }
  for (std::size_t m = 0; m + 1 <= n; ++m) {
    if (s.G[m + 1] != rep.g2 * s.F[m]) return false;
    if (s.H[m + 1] != rep.h2 * s.F[m] + rep.Z * s.H[m]) return false;
  }
  return true;
}

}  // namespace graphmotive
