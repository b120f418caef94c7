#include "graphmotive/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace graphmotive {

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer ipow(const Integer& base, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational rpow(const Rational& base, unsigned e) {
  Rational r(ipow(base.get_num(), e), ipow(base.get_den(), e));
  r.canonicalize();
  return r;
}

namespace {

// Shared term renderer: sign handling and "c*" prefix suppression for +-1.
void append_term(std::string& out, const Integer& c, const std::string& mono) {
  const bool neg = sgn(c) < 0;
  Integer a = abs(c);
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (mono.empty()) {
    out += a.get_str();
  } else if (a == 1) {
    out += mono;
  } else {
    out += a.get_str() + "*" + mono;
  }
}

std::string power_str(std::string_view var, unsigned e) {
  if (e == 0) return {};
  std::string s(var);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

// Minimal parser for sums of terms "c*v^a*w^b" used by the text formats.
using ParsedTerms = std::vector<std::pair<Integer, std::map<std::string, unsigned>>>;

ParsedTerms parse_terms(std::string_view text) {
  ParsedTerms out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& what) {
    throw InputError("polynomial parse error at offset " + std::to_string(i) + ": " + what);
  };
  skip();
  if (i == text.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Integer c = 1;
    std::map<std::string, unsigned> mono;
    bool have_factor = false;
    while (true) {
      skip();
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        c *= Integer(std::string(text.substr(i, j - i)));
        i = j;
      } else if (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
        std::size_t j = i;
        while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
        std::string name(text.substr(i, j - i));
        i = j;
        unsigned e = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip();
          std::size_t k = i;
          while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
          if (k == i) fail("missing exponent");
          e = static_cast<unsigned>(std::stoul(std::string(text.substr(i, k - i))));
          i = k;
        }
        mono[name] += e;
      } else {
        fail("expected factor");
      }
      have_factor = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!have_factor) fail("empty term");
    out.emplace_back(sign * c, std::move(mono));
  }
  return out;
}

}  // namespace

// ----------------------------------------------------------------- IntPoly

IntPoly::IntPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

IntPoly::IntPoly(const Integer& c) {
  if (c != 0) c_.push_back(c);
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::variable() { return monomial(1, 1); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
  IntPoly p;
  if (c != 0) {
    p.c_.assign(degree + 1, Integer(0));
    p.c_[degree] = c;
  }
  return p;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPoly::coeff(std::size_t d) const { return d < c_.size() ? c_[d] : Integer(0); }

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly operator-(IntPoly a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result(1);
  IntPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Integer IntPoly::operator()(const Integer& t) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Rational IntPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + Rational(*it);
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Integer> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::compose(const IntPoly& inner) const {
  IntPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + IntPoly(*it);
  return acc;
}

std::string IntPoly::str(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t d = c_.size(); d-- > 0;) {
    if (c_[d] == 0) continue;
    append_term(out, c_[d], power_str(var, static_cast<unsigned>(d)));
  }
  return out;
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw ExactDivisionError("division by the zero polynomial");
  std::vector<Integer> rem = a.coefficients();
  const auto& d = b.coefficients();
  if (rem.size() < d.size()) {
    if (!a.is_zero()) throw ExactDivisionError("nonzero remainder in " + a.str() + " / " + b.str());
    return {};
  }
  std::vector<Integer> q(rem.size() - d.size() + 1, Integer(0));
  const Integer& lead = d.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Integer& top = rem[k + d.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw ExactDivisionError("non-integral quotient in " + a.str() + " / " + b.str());
    }
    Integer f = top / lead;
    q[k] = f;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= f * d[j];
  }
  for (const auto& r : rem) {
    if (r != 0) throw ExactDivisionError("nonzero remainder in " + a.str() + " / " + b.str());
  }
  return IntPoly(std::move(q));
}

bool divides(const IntPoly& d, const IntPoly& a) {
  if (d.is_zero()) return a.is_zero();
  try {
    (void)divexact(a, d);
    return true;
  } catch (const ExactDivisionError&) {
    return false;
  }
}

std::string factored_str(const IntPoly& p) {
  if (p.is_zero()) return "0";
  IntPoly rest = p;
  const IntPoly t = IntPoly::variable();
  const IntPoly t1 = t + IntPoly(1);
  unsigned a = 0;
  while (rest.degree() > 0 && rest.coeff(0) == 0) {
    rest = divexact(rest, t);
    ++a;
  }
  unsigned b = 0;
  while (rest.degree() > 0 && divides(t1, rest)) {
    rest = divexact(rest, t1);
    ++b;
  }
  std::vector<std::string> parts;
  if (a) parts.push_back(power_str("T", a));
  if (b) parts.push_back(b == 1 ? "(T+1)" : "(T+1)^" + std::to_string(b));
  std::string out;
  if (rest == IntPoly(-1)) {
    out = "-";
  } else if (rest.degree() == 0 && !(rest == IntPoly(1))) {
    parts.insert(parts.begin(), rest.str());
  } else if (!(rest == IntPoly(1)) || parts.empty()) {
    parts.push_back(rest.degree() == 0 ? rest.str() : "(" + rest.str() + ")");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "*";
    out += parts[i];
  }
  return out;
}

IntPoly parse_intpoly(std::string_view text, std::string_view var) {
  IntPoly p;
  for (const auto& [c, mono] : parse_terms(text)) {
    unsigned e = 0;
    for (const auto& [name, k] : mono) {
      if (name != var) throw InputError("unexpected variable '" + name + "'");
      e += k;
    }
    p += IntPoly::monomial(c, e);
  }
  return p;
}

// ------------------------------------------------------------------ BiPoly

BiPoly::BiPoly(long c) {
  if (c != 0) t_[{0, 0}] = c;
}

BiPoly::BiPoly(const Integer& c) {
  if (c != 0) t_[{0, 0}] = c;
}

BiPoly BiPoly::x() { return monomial(1, 1, 0); }
BiPoly BiPoly::y() { return monomial(1, 0, 1); }

BiPoly BiPoly::monomial(const Integer& c, unsigned dx, unsigned dy) {
  BiPoly p;
  if (c != 0) p.t_[{dx, dy}] = c;
  return p;
}

Integer BiPoly::coeff(unsigned dx, unsigned dy) const {
  auto it = t_.find({dx, dy});
  return it == t_.end() ? Integer(0) : it->second;
}

unsigned BiPoly::degree_x() const {
  unsigned d = 0;
  for (const auto& [e, c] : t_) d = std::max(d, e.first);
  return d;
}

unsigned BiPoly::degree_y() const {
  unsigned d = 0;
  for (const auto& [e, c] : t_) d = std::max(d, e.second);
  return d;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (&o == this) return *this = *this * BiPoly(2);
  for (const auto& [e, c] : o.t_) {
    auto& slot = t_[e];
    slot += c;
    if (slot == 0) t_.erase(e);
  }
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (&o == this) return *this = BiPoly();
  for (const auto& [e, c] : o.t_) {
    auto& slot = t_[e];
    slot -= c;
    if (slot == 0) t_.erase(e);
  }
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.t_) {
    for (const auto& [eb, cb] : b.t_) {
      r.t_[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
    }
  }
  std::erase_if(r.t_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

BiPoly operator-(BiPoly a) {
  for (auto& [e, c] : a.t_) c = -c;
  return a;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly r(1);
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

std::string BiPoly::str() const {
  if (t_.empty()) return "0";
  std::vector<std::pair<Exponent, Integer>> terms(t_.begin(), t_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    const unsigned dl = l.first.first + l.first.second;
    const unsigned dr = r.first.first + r.first.second;
    if (dl != dr) return dl > dr;
    return l.first.first > r.first.first;
  });
  std::string out;
  for (const auto& [e, c] : terms) {
    std::string mono = power_str("x", e.first);
    const std::string ys = power_str("y", e.second);
    if (!ys.empty()) mono = mono.empty() ? ys : mono + "*" + ys;
    append_term(out, c, mono);
  }
  return out;
}

BiPoly divexact(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw ExactDivisionError("division by the zero polynomial");
  // Lexicographic leading terms (x first): exact quotients are recovered
  // term by term because leading terms multiply.
  const auto& [lead_e, lead_c] = *b.terms().rbegin();
  BiPoly rem = a;
  BiPoly q;
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms().rbegin();
    if (e.first < lead_e.first || e.second < lead_e.second ||
        !mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t())) {
      throw ExactDivisionError("nonzero remainder in " + a.str() + " / " + b.str());
    }
    BiPoly t = BiPoly::monomial(Integer(c / lead_c), e.first - lead_e.first, e.second - lead_e.second);
    q += t;
    rem -= t * b;
  }
  return q;
}

BiPoly parse_bipoly(std::string_view text) {
  BiPoly p;
  for (const auto& [c, mono] : parse_terms(text)) {
    unsigned dx = 0;
    unsigned dy = 0;
    for (const auto& [name, k] : mono) {
      if (name == "x") {
        dx += k;
      } else if (name == "y") {
        dy += k;
      } else {
        throw InputError("unexpected variable '" + name + "'");
      }
    }
    p += BiPoly::monomial(c, dx, dy);
  }
  return p;
}

// ---------------------------------------------------------------- EdgePoly

EdgePoly::EdgePoly(std::size_t variables) : n_(variables) {
  if (variables > kMaxVariables) throw GuardError("too many edge variables");
}

EdgePoly EdgePoly::constant(std::size_t variables, const Integer& c) {
  EdgePoly p(variables);
  p.add_term(0, c);
  return p;
}

EdgePoly EdgePoly::variable(std::size_t variables, std::size_t index) {
  EdgePoly p(variables);
  p.check_index(index);
  p.add_term(Mask{1} << index, 1);
  return p;
}

void EdgePoly::check_index(std::size_t index) const {
  if (index >= n_) {
    throw InputError("variable index " + std::to_string(index + 1) + " out of range 1.." +
                     std::to_string(n_));
  }
}

void EdgePoly::check_compatible(const EdgePoly& o) const {
  if (n_ != o.n_) {
    throw InputError("edge polynomial variable counts differ: " + std::to_string(n_) + " vs " +
                     std::to_string(o.n_));
  }
}

void EdgePoly::add_term(Mask monomial, const Integer& c) {
  if (n_ < kMaxVariables && (monomial >> n_) != 0) throw InputError("monomial uses unknown variable");
  if (c == 0) return;
  auto& slot = t_[monomial];
  slot += c;
  if (slot == 0) t_.erase(monomial);
}

bool EdgePoly::depends_on(std::size_t index) const {
  check_index(index);
  const Mask bit = Mask{1} << index;
  return std::any_of(t_.begin(), t_.end(), [&](const auto& kv) { return (kv.first & bit) != 0; });
}

std::optional<unsigned> EdgePoly::homogeneous_degree() const {
  if (t_.empty()) return std::nullopt;
  const auto d = static_cast<unsigned>(std::popcount(t_.begin()->first));
  for (const auto& [m, c] : t_) {
    if (static_cast<unsigned>(std::popcount(m)) != d) return std::nullopt;
  }
  return d;
}

EdgePoly& EdgePoly::operator+=(const EdgePoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

EdgePoly& EdgePoly::operator-=(const EdgePoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.t_) add_term(m, Integer(-c));
  return *this;
}

EdgePoly operator*(const EdgePoly& a, const EdgePoly& b) {
  a.check_compatible(b);
  EdgePoly r(a.n_);
  // Overlapping supports produce squared variables; collect them separately
  // and insist that they cancel.
  std::map<std::pair<EdgePoly::Mask, EdgePoly::Mask>, Integer> squares;
  for (const auto& [ma, ca] : a.t_) {
    for (const auto& [mb, cb] : b.t_) {
      if ((ma & mb) == 0) {
        r.add_term(ma | mb, Integer(ca * cb));
      } else {
        squares[{ma | mb, ma & mb}] += ca * cb;
      }
    }
  }
  for (const auto& [k, c] : squares) {
    if (c != 0) throw InputError("edge polynomial product is not multilinear");
  }
  return r;
}

EdgePoly EdgePoly::partial_derivative(std::size_t index) const {
  check_index(index);
  const Mask bit = Mask{1} << index;
  EdgePoly r(n_);
  for (const auto& [m, c] : t_) {
    if (m & bit) r.t_.emplace(m & ~bit, c);
  }
  return r;
}

EdgePoly EdgePoly::set_zero(std::size_t index) const {
  check_index(index);
  const Mask bit = Mask{1} << index;
  EdgePoly r(n_);
  for (const auto& [m, c] : t_) {
    if (!(m & bit)) r.t_.emplace(m, c);
  }
  return r;
}

EdgePoly EdgePoly::drop_variable(std::size_t index) const {
  std::vector<std::optional<std::size_t>> map(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (i < index) map[i] = i;
    if (i > index) map[i] = i - 1;
  }
  return remap(n_ - 1, map);
}

EdgePoly EdgePoly::remap(std::size_t new_count,
                         std::span<const std::optional<std::size_t>> map) const {
  if (map.size() != n_) throw InputError("variable map has the wrong length");
  EdgePoly r(new_count);
  for (const auto& [m, c] : t_) {
    Mask out = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!(m & (Mask{1} << i))) continue;
      if (!map[i]) throw InputError("remap drops a variable that occurs");
      if (*map[i] >= new_count) throw InputError("remap target out of range");
      out |= Mask{1} << *map[i];
    }
    r.add_term(out, c);
  }
  return r;
}

std::uint64_t EdgePoly::eval_mod_p(std::span<const std::uint64_t> point, std::uint64_t q) const {
  if (point.size() != n_) throw InputError("evaluation point has the wrong length");
  std::uint64_t acc = 0;
  for (const auto& [m, c] : t_) {
    Integer cr = c % Integer(static_cast<unsigned long>(q));
    if (cr < 0) cr += static_cast<unsigned long>(q);
    std::uint64_t v = cr.get_ui();
    for (Mask bits = m; bits && v; bits &= bits - 1) {
      v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * (point[std::countr_zero(bits)] % q)) % q);
    }
    acc = (acc + v) % q;
  }
  return acc;
}

Integer EdgePoly::eval(std::span<const Integer> point) const {
  if (point.size() != n_) throw InputError("evaluation point has the wrong length");
  Integer acc = 0;
  for (const auto& [m, c] : t_) {
    Integer v = c;
    for (Mask bits = m; bits; bits &= bits - 1) v *= point[std::countr_zero(bits)];
    acc += v;
  }
  return acc;
}

std::string EdgePoly::str() const {
  if (t_.empty()) return "0";
  std::vector<std::pair<std::vector<std::size_t>, Integer>> terms;
  for (const auto& [m, c] : t_) {
    std::vector<std::size_t> idx;
    for (Mask bits = m; bits; bits &= bits - 1) idx.push_back(std::countr_zero(bits));
    terms.emplace_back(std::move(idx), c);
  }
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    if (l.first.size() != r.first.size()) return l.first.size() > r.first.size();
    return l.first < r.first;
  });
  std::string out;
  for (const auto& [idx, c] : terms) {
    std::string mono;
    for (std::size_t i : idx) {
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(i + 1);
    }
    append_term(out, c, mono);
  }
  return out;
}

EdgePoly parse_edgepoly(std::string_view text, std::size_t variables) {
  EdgePoly p(variables);
  for (const auto& [c, mono] : parse_terms(text)) {
    EdgePoly::Mask m = 0;
    for (const auto& [name, k] : mono) {
      if (name.size() < 2 || name[0] != 't' || k != 1) {
        throw InputError("bad edge variable '" + name + "'");
      }
      const std::size_t idx = std::stoul(name.substr(1));
      if (idx == 0 || idx > variables) throw InputError("edge variable out of range: " + name);
      m |= EdgePoly::Mask{1} << (idx - 1);
    }
    p.add_term(m, c);
  }
  return p;
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) t_[0] = c;
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) {
    t_[0] = c;
    t_[0].canonicalize();
  }
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  LaurentPoly p;
  if (c != 0) {
    p.t_[exponent] = c;
    p.t_[exponent].canonicalize();
  }
  return p;
}

Rational LaurentPoly::coeff(int exponent) const {
  auto it = t_.find(exponent);
  return it == t_.end() ? Rational(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (&o == this) return *this = *this * LaurentPoly(2);
  for (const auto& [e, c] : o.t_) {
    auto& slot = t_[e];
    slot += c;
    if (slot == 0) t_.erase(e);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (&o == this) return *this = LaurentPoly();
  for (const auto& [e, c] : o.t_) {
    auto& slot = t_[e];
    slot -= c;
    if (slot == 0) t_.erase(e);
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.t_) {
    for (const auto& [eb, cb] : b.t_) r.t_[ea + eb] += ca * cb;
  }
  std::erase_if(r.t_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& [e, c] : a.t_) c = -c;
  return a;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly r(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

LaurentPoly LaurentPoly::polar_part() const {
  LaurentPoly r;
  for (const auto& [e, c] : t_) {
    if (e < 0) r.t_.emplace(e, c);
  }
  return r;
}

LaurentPoly LaurentPoly::regular_part() const {
  LaurentPoly r;
  for (const auto& [e, c] : t_) {
    if (e >= 0) r.t_.emplace(e, c);
  }
  return r;
}

std::string LaurentPoly::str(std::string_view var) const {
  if (t_.empty()) return "0";
  std::string out;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = sgn(c) < 0;
    Rational a = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    if (e != 0) {
      mono = std::string(var);
      if (e != 1) mono += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
    if (mono.empty()) {
      out += a.get_str();
    } else if (a == 1) {
      out += mono;
    } else {
      out += a.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace graphmotive
