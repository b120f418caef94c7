#ifndef GRAPHMOTIVE_SERIES_HPP
#define GRAPHMOTIVE_SERIES_HPP

#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "graphmotive/errors.hpp"
#include "graphmotive/poly.hpp"

namespace graphmotive {

enum class SeriesKind { Exponential, Ordinary };

inline const char* to_string(SeriesKind k) {
  return k == SeriesKind::Exponential ? "exp" : "ord";
}

// Truncated generating series with coefficients in R (Integer, IntPoly or
// BiPoly). For the exponential kind, term m stores m! times the coefficient
// of s^m, i.e. the sequence term itself, so all arithmetic stays integral.
template <class R>
class SeriesTrunc {
 public:
  SeriesTrunc(SeriesKind kind, std::size_t order) : kind_(kind), terms_(order + 1, R(0)) {}
  SeriesTrunc(SeriesKind kind, std::vector<R> terms) : kind_(kind), terms_(std::move(terms)) {
    if (terms_.empty()) throw InputError("series needs at least one term");
  }

  // e^{a s}: sequence terms a^m.
  static SeriesTrunc exp_of(const R& a, std::size_t order) {
    SeriesTrunc s(SeriesKind::Exponential, order);
    R p(1);
    for (std::size_t m = 0; m <= order; ++m) {
      s.terms_[m] = p;
      p = p * a;
    }
    return s;
  }

  // The series "s" in either kind (sequence term 1 at m = 1 in both).
  static SeriesTrunc s_series(SeriesKind kind, std::size_t order) {
    SeriesTrunc s(kind, order);
    if (order >= 1) s.terms_[1] = R(1);
    return s;
  }

  static SeriesTrunc constant(SeriesKind kind, const R& c, std::size_t order) {
    SeriesTrunc s(kind, order);
    s.terms_[0] = c;
    return s;
  }

  // 1/(1 - a s) as an ordinary series: terms a^m.
  static SeriesTrunc geometric(const R& a, std::size_t order) {
    auto s = exp_of(a, order);
    s.kind_ = SeriesKind::Ordinary;
    return s;
  }

  SeriesKind kind() const { return kind_; }
  std::size_t order() const { return terms_.size() - 1; }
  const R& operator[](std::size_t m) const { return terms_.at(m); }
  R& operator[](std::size_t m) { return terms_.at(m); }
  const std::vector<R>& terms() const { return terms_; }

  SeriesTrunc& operator+=(const SeriesTrunc& o) {
    check(o);
    for (std::size_t m = 0; m < terms_.size(); ++m) terms_[m] += o.terms_[m];
    return *this;
  }
  SeriesTrunc& operator-=(const SeriesTrunc& o) {
    check(o);
    for (std::size_t m = 0; m < terms_.size(); ++m) terms_[m] -= o.terms_[m];
    return *this;
  }
  friend SeriesTrunc operator+(SeriesTrunc a, const SeriesTrunc& b) { return a += b; }
  friend SeriesTrunc operator-(SeriesTrunc a, const SeriesTrunc& b) { return a -= b; }

  // Exponential kind uses the binomial convolution sum C(m,k) a_k b_{m-k};
  // ordinary kind the Cauchy product.
  friend SeriesTrunc operator*(const SeriesTrunc& a, const SeriesTrunc& b) {
    a.check(b);
    SeriesTrunc r(a.kind_, a.order());
    for (std::size_t m = 0; m < r.terms_.size(); ++m) {
      R acc(0);
      for (std::size_t k = 0; k <= m; ++k) {
        R term = a.terms_[k] * b.terms_[m - k];
        if (a.kind_ == SeriesKind::Exponential) {
          term = term * R(binomial(static_cast<unsigned>(m), static_cast<unsigned>(k)));
        }
        acc += term;
      }
      r.terms_[m] = std::move(acc);
    }
    return r;
  }

  SeriesTrunc scaled(const R& c) const {
    SeriesTrunc r = *this;
    for (auto& t : r.terms_) t = t * c;
    return r;
  }

  // Coefficientwise exact division by a ring element.
  SeriesTrunc divided_by(const R& d) const {
    SeriesTrunc r = *this;
    for (auto& t : r.terms_) t = exact_div(t, d);
    return r;
  }

  // Ordinary-kind inverse; the constant term must be +1 or -1.
  SeriesTrunc inverse() const {
    if (kind_ != SeriesKind::Ordinary) throw InputError("inverse is only defined for ordinary series");
    const R& c0 = terms_[0];
    R inv0(0);
    if (c0 == R(1)) {
      inv0 = R(1);
    } else if (c0 == R(-1)) {
      inv0 = R(-1);
    } else {
      throw ExactDivisionError("series constant term is not a unit");
    }
    SeriesTrunc r(kind_, order());
    r.terms_[0] = inv0;
    for (std::size_t m = 1; m < terms_.size(); ++m) {
      R acc(0);
      for (std::size_t k = 1; k <= m; ++k) acc += terms_[k] * r.terms_[m - k];
      r.terms_[m] = R(0) - inv0 * acc;
    }
    return r;
  }

  SeriesTrunc to_ordinary() const {
    if (kind_ == SeriesKind::Ordinary) return *this;
    SeriesTrunc r(SeriesKind::Ordinary, order());
    for (std::size_t m = 0; m < terms_.size(); ++m) {
      r.terms_[m] = exact_div(terms_[m], R(factorial(static_cast<unsigned>(m))));
    }
    return r;
  }

  SeriesTrunc to_exponential() const {
    if (kind_ == SeriesKind::Exponential) return *this;
    SeriesTrunc r(SeriesKind::Exponential, order());
    for (std::size_t m = 0; m < terms_.size(); ++m) {
      r.terms_[m] = terms_[m] * R(factorial(static_cast<unsigned>(m)));
    }
    return r;
  }

  friend bool operator==(const SeriesTrunc& a, const SeriesTrunc& b) {
    return a.kind_ == b.kind_ && a.terms_ == b.terms_;
  }

 private:
  static R exact_div(const R& a, const R& d) {
    if constexpr (std::is_same_v<R, Integer>) {
      if (d == 0 || !mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
        throw ExactDivisionError("integer division is not exact");
      }
      return Integer(a / d);
    } else {
      return divexact(a, d);
    }
  }

  void check(const SeriesTrunc& o) const {
    if (kind_ != o.kind_ || terms_.size() != o.terms_.size()) {
      throw InputError("series kinds or orders differ");
    }
  }

  SeriesKind kind_;
  std::vector<R> terms_;
};

// a_{m+2} = f2 a_{m+1} + g2 a_m from seeds a_0, a_1, through order M.
template <class R>
SeriesTrunc<R> series_solve_order2(const R& f2, const R& g2, const R& seed0, const R& seed1,
                                   std::size_t order, SeriesKind kind = SeriesKind::Ordinary) {
  if (order < 1) throw InputError("series_solve_order2 needs order >= 1");
  std::vector<R> a(order + 1, R(0));
  a[0] = seed0;
  a[1] = seed1;
  for (std::size_t m = 0; m + 2 <= order; ++m) a[m + 2] = f2 * a[m + 1] + g2 * a[m];
  return SeriesTrunc<R>(kind, std::move(a));
}

}  // namespace graphmotive

#endif
