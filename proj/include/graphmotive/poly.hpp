#ifndef GRAPHMOTIVE_POLY_HPP
#define GRAPHMOTIVE_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphmotive/errors.hpp"

namespace graphmotive {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Integer ipow(const Integer& base, unsigned e);
Rational rpow(const Rational& base, unsigned e);

// ---------------------------------------------------------------------------
// Univariate polynomials over Z. Coefficients are stored low degree first and
// never carry a trailing zero; the zero polynomial is the empty vector.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long c);            // NOLINT(google-explicit-constructor)
  IntPoly(const Integer& c);  // NOLINT(google-explicit-constructor)
  explicit IntPoly(std::vector<Integer> coeffs);

  static IntPoly variable();
  static IntPoly monomial(const Integer& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Integer coeff(std::size_t d) const;
  const std::vector<Integer>& coefficients() const { return c_; }

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  IntPoly pow(unsigned e) const;
  Integer operator()(const Integer& t) const;
  Rational eval(const Rational& t) const;
  IntPoly derivative() const;
  // p(inner(T))
  IntPoly compose(const IntPoly& inner) const;

  // Descending powers with explicit '^', e.g. "T^4 + 6*T^3 + 9*T^2 + T".
  std::string str(std::string_view var = "T") const;

 private:
  void trim();
  std::vector<Integer> c_;
};

// Exact division over Z[T]; throws ExactDivisionError on a nonzero remainder
// or a non-integral quotient.
IntPoly divexact(const IntPoly& a, const IntPoly& b);
bool divides(const IntPoly& d, const IntPoly& a);

// Pulls out T^a (T+1)^b by exact division and renders the cofactor in
// parentheses: "T^4*(T+1)^10*(T^3 + 6*T^2 + 9*T + 1)".
std::string factored_str(const IntPoly& p);

IntPoly parse_intpoly(std::string_view text, std::string_view var = "T");

// ---------------------------------------------------------------------------
// Sparse polynomials over Z in (x, y).
class BiPoly {
 public:
  using Exponent = std::pair<unsigned, unsigned>;

  BiPoly() = default;
  BiPoly(long c);            // NOLINT(google-explicit-constructor)
  BiPoly(const Integer& c);  // NOLINT(google-explicit-constructor)

  static BiPoly x();
  static BiPoly y();
  static BiPoly monomial(const Integer& c, unsigned dx, unsigned dy);

  bool is_zero() const { return t_.empty(); }
  Integer coeff(unsigned dx, unsigned dy) const;
  const std::map<Exponent, Integer>& terms() const { return t_; }
  unsigned degree_x() const;
  unsigned degree_y() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(BiPoly a);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

  BiPoly pow(unsigned e) const;

  // Substitution into any commutative ring with Integer scalars.
  template <class R>
  R evaluate(const R& xv, const R& yv) const {
    R acc{0};
    for (const auto& [e, c] : t_) {
      acc += R(c) * pow_in(xv, e.first) * pow_in(yv, e.second);
    }
    return acc;
  }
  IntPoly substitute(const IntPoly& xv, const IntPoly& yv) const { return evaluate(xv, yv); }

  // Graded order: total degree descending, then x-degree descending.
  std::string str() const;

 private:
  template <class R>
  static R pow_in(const R& base, unsigned e) {
    R r{1};
    for (unsigned i = 0; i < e; ++i) r = r * base;
    return r;
  }
  std::map<Exponent, Integer> t_;
};

BiPoly divexact(const BiPoly& a, const BiPoly& b);
BiPoly parse_bipoly(std::string_view text);

// ---------------------------------------------------------------------------
// Polynomials in edge variables t_1..t_n. Monomials are bitmasks, so every
// stored term is multilinear; products that would leave a squared variable
// with nonzero coefficient are rejected.
class EdgePoly {
 public:
  using Mask = std::uint32_t;
  static constexpr std::size_t kMaxVariables = 32;

  EdgePoly() = default;
  explicit EdgePoly(std::size_t variables);

  static EdgePoly constant(std::size_t variables, const Integer& c);
  static EdgePoly variable(std::size_t variables, std::size_t index);

  void add_term(Mask monomial, const Integer& c);

  std::size_t variable_count() const { return n_; }
  const std::map<Mask, Integer>& terms() const { return t_; }
  std::size_t term_count() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool depends_on(std::size_t index) const;
  // Common degree of all monomials; nullopt for zero or non-homogeneous.
  std::optional<unsigned> homogeneous_degree() const;

  EdgePoly& operator+=(const EdgePoly& o);
  EdgePoly& operator-=(const EdgePoly& o);
  friend EdgePoly operator+(EdgePoly a, const EdgePoly& b) { return a += b; }
  friend EdgePoly operator-(EdgePoly a, const EdgePoly& b) { return a -= b; }
  friend EdgePoly operator*(const EdgePoly& a, const EdgePoly& b);
  friend bool operator==(const EdgePoly& a, const EdgePoly& b) {
    return a.n_ == b.n_ && a.t_ == b.t_;
  }

  EdgePoly partial_derivative(std::size_t index) const;
  EdgePoly set_zero(std::size_t index) const;
  // Removes an unused variable and shifts higher indices down by one.
  EdgePoly drop_variable(std::size_t index) const;
  // Renames variable i to map[i] in a ring of new_count variables; variables
  // mapped to nullopt must not occur.
  EdgePoly remap(std::size_t new_count, std::span<const std::optional<std::size_t>> map) const;

  std::uint64_t eval_mod_p(std::span<const std::uint64_t> point, std::uint64_t q) const;
  Integer eval(std::span<const Integer> point) const;

  // "t1*t2 + t1*t3 + t2*t3", one-based variable names.
  std::string str() const;

 private:
  void check_index(std::size_t index) const;
  void check_compatible(const EdgePoly& o) const;
  std::size_t n_ = 0;
  std::map<Mask, Integer> t_;
};

EdgePoly parse_edgepoly(std::string_view text, std::size_t variables);

// ---------------------------------------------------------------------------
// Laurent polynomials in the regulator z with rational coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);              // NOLINT(google-explicit-constructor)
  LaurentPoly(const Rational& c);   // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Rational& c, int exponent);

  bool is_zero() const { return t_.empty(); }
  Rational coeff(int exponent) const;
  const std::map<int, Rational>& terms() const { return t_; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }

  LaurentPoly pow(unsigned e) const;
  // Strictly negative powers of z.
  LaurentPoly polar_part() const;
  LaurentPoly regular_part() const;

  std::string str(std::string_view var = "z") const;

 private:
  std::map<int, Rational> t_;
};

}  // namespace graphmotive

#endif
