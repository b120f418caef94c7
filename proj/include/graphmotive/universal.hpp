#ifndef GRAPHMOTIVE_UNIVERSAL_HPP
#define GRAPHMOTIVE_UNIVERSAL_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "graphmotive/errors.hpp"
#include "graphmotive/poly.hpp"
#include "graphmotive/series.hpp"

namespace graphmotive {

// Edge multiplication acts on (g, f, h) through A_1 = ((0,g2,0),(1,f2,0),(0,h2,Z)).
template <class R>
struct Rep3 {
  R f2, g2, h2, Z;
};

template <class R>
using Mat3 = std::array<std::array<R, 3>, 3>;

template <class R>
Mat3<R> mat_identity() {
  Mat3<R> m;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = R(i == j ? 1 : 0);
  }
  return m;
}

template <class R>
Mat3<R> operator*(const Mat3<R>& a, const Mat3<R>& b) {
  Mat3<R> r;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      R acc(0);
      for (std::size_t k = 0; k < 3; ++k) acc += a[i][k] * b[k][j];
      r[i][j] = acc;
    }
  }
  return r;
}

template <class R>
Mat3<R> generator_matrix(const Rep3<R>& rep) {
  Mat3<R> a;
  a[0] = {R(0), rep.g2, R(0)};
  a[1] = {R(1), rep.f2, R(0)};
  a[2] = {R(0), rep.h2, rep.Z};
  return a;
}

// A_m = A_1^m by repeated squaring.
template <class R>
Mat3<R> rep_matrix(const Rep3<R>& rep, std::size_t m) {
  Mat3<R> result = mat_identity<R>(), base = generator_matrix(rep);
  while (m > 0) {
    if (m & 1) result = result * base;
    base = base * base;
    m >>= 1;
  }
  return result;
}

template <class R>
struct Coeffs {
  R f, g, h;
};

// Sequences from f0=0, f1=1, g0=1, g1=0, h0=h1=0 with
// f_{m+2} = f2 f_{m+1} + g2 f_m, g_{m+1} = g2 f_m, h_{m+1} = h2 f_m + Z h_m.
template <class R>
std::vector<Coeffs<R>> coefficient_table(const Rep3<R>& rep, std::size_t max_m) {
  std::vector<Coeffs<R>> c(std::max<std::size_t>(max_m, 1) + 1, Coeffs<R>{R(0), R(0), R(0)});
  c[0] = {R(0), R(1), R(0)};
  c[1] = {R(1), R(0), R(0)};
  for (std::size_t m = 1; m < c.size() - 1; ++m) {
    c[m + 1].f = rep.f2 * c[m].f + rep.g2 * c[m - 1].f;
    c[m + 1].g = rep.g2 * c[m].f;
    c[m + 1].h = rep.h2 * c[m].f + rep.Z * c[m].h;
  }
  c.resize(max_m + 1);
  return c;
}

template <class R>
Coeffs<R> coefficients(const Rep3<R>& rep, std::size_t m) {
  return coefficient_table(rep, m)[m];
}

// ((g_m, g_{m+1}, 0), (f_m, f_{m+1}, 0), (h_m, h_{m+1}, Z^m))
template <class R>
Mat3<R> matrix_from_coefficients(const Rep3<R>& rep, std::size_t m) {
  const auto c = coefficient_table(rep, m + 1);
  R zm(1);
  for (std::size_t i = 0; i < m; ++i) zm = zm * rep.Z;
  Mat3<R> a;
  a[0] = {c[m].g, c[m + 1].g, R(0)};
  a[1] = {c[m].f, c[m + 1].f, R(0)};
  a[2] = {c[m].h, c[m + 1].h, zm};
  return a;
}

template <class R>
R exact_quotient(const R& a, const R& b) {
  if constexpr (std::is_same_v<R, Integer>) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
      throw ExactDivisionError("integer division is not exact");
    }
    return Integer(a / b);
  } else {
    return divexact(a, b);
  }
}

template <class R>
struct DivisibilityCertificate {
  bool ok = false;
  bool degenerate = false;  // f_m = 0, so only f_{rm} = 0 can be asserted
  std::optional<R> quotient;
  std::string detail;
};

// f_m | f_{rm}, with the quotient checked against
// q_{r+2} = (f2 f_m + 2 g2 f_{m-1}) q_{r+1} - (-g2)^m q_r, q_0 = 0, q_1 = 1.
template <class R>
DivisibilityCertificate<R> divisibility_check(const Rep3<R>& rep, std::size_t m, std::size_t r) {
  if (m < 1 || r < 1) throw InputError("divisibility check needs m >= 1 and r >= 1");
  const auto c = coefficient_table(rep, r * m);
  DivisibilityCertificate<R> cert;
  if (c[m].f == R(0)) {
    cert.degenerate = true;
    cert.ok = c[r * m].f == R(0);
    cert.detail = cert.ok ? "f_m = 0 and f_rm = 0" : "f_m = 0 but f_rm is nonzero";
    return cert;
  }
  R q;
  try {
    q = exact_quotient(c[r * m].f, c[m].f);
  } catch (const ExactDivisionError&) {
    cert.detail = "f_m does not divide f_rm";
    return cert;
  }
  R neg_g2_pow(1);
  for (std::size_t i = 0; i < m; ++i) neg_g2_pow = neg_g2_pow * (R(0) - rep.g2);
  const R a = rep.f2 * c[m].f + R(2) * rep.g2 * c[m - 1].f;
  R q0(0), q1(1);
  for (std::size_t k = 1; k < r; ++k) {
    R q2 = a * q1 - neg_g2_pow * q0;
    q0 = std::move(q1);
    q1 = std::move(q2);
  }
  cert.ok = q1 == q;
  cert.detail = cert.ok ? "quotient matches its recursion" : "quotient disagrees with its recursion";
  cert.quotient = std::move(q);
  return cert;
}

Rep3<IntPoly> motivic_rep();
Rep3<BiPoly> tutte_rep();
Rep3<IntPoly> csm_rep();

// Closed form f_m = (l+^m - l-^m)/(l+ - l-) checked against the recursion at
// a rational sample of (f2, g2).
struct LambdaCheck {
  Rational recursion_value;
  double closed_value = 0;
  bool exact = false;       // discriminant was a rational square
  bool degenerate = false;  // l+ = l-, where f_m = m l^{m-1}
  std::optional<Rational> lambda_plus, lambda_minus;
  bool ok = false;
};
LambdaCheck lambda_roots_check(const Rational& f2, const Rational& g2, std::size_t m);

// f_{m+1} C(G) + g_{m+1} C(G - e) + h_{m+1} C(G / e) with the CSM
// representation: the prediction for e replaced by m+1 parallel edges.
IntPoly csm_predict(const IntPoly& whole, const IntPoly& deleted, const IntPoly& contracted, std::size_t m);

// Exponential generating series of the CSM coefficients from their closed
// forms: F = e^{Ts} - e^{(T-1)s}, G = T e^{(T-1)s} - (T-1) e^{Ts},
// H = e^{(T-1)s} + (s - 1) e^{Ts}.
struct SeriesTriple {
  SeriesTrunc<IntPoly> F, G, H;
};
SeriesTriple csm_series(std::size_t order);

// F'' = f2 F' + g2 F, G' = g2 F, H' = h2 F + Z H on sequence terms.
bool satisfies_diffeq(const Rep3<IntPoly>& rep, const SeriesTriple& s);

}  // namespace graphmotive

#endif
