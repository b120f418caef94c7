#include "graphmotive/pointcount.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <thread>

#include "graphmotive/kirchhoff.hpp"

namespace graphmotive {

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

namespace {

void check_field(std::uint64_t q) {
  if (!is_prime(q)) throw InputError(std::to_string(q) + " is not prime");
  if (q >= (std::uint64_t{1} << 31)) throw InputError("field size too large");
}

// A polynomial over F_q in compressed variable positions.
struct CompiledPoly {
  std::vector<std::pair<std::uint64_t, std::vector<std::size_t>>> terms;

  std::uint64_t eval(const std::vector<std::uint64_t>& x, std::uint64_t q) const {
    std::uint64_t acc = 0;
    for (const auto& [c, vars] : terms) {
      std::uint64_t t = c;
      for (auto v : vars) {
        t = t * x[v] % q;
        if (t == 0) break;
      }
      acc += t;
    }
    return acc % q;
  }
};

CompiledPoly compile(const EdgePoly& p, const std::vector<std::size_t>& position, std::uint64_t q) {
  CompiledPoly c;
  const Integer qi(static_cast<unsigned long>(q));
  for (const auto& [mask, coeff] : p.terms()) {
    Integer r = coeff % qi;
    if (r < 0) r += qi;
    if (r == 0) continue;
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < p.variable_count(); ++i) {
      if (mask >> i & 1) vars.push_back(position[i]);
    }
    c.terms.push_back({r.get_ui(), std::move(vars)});
  }
  return c;
}

std::size_t thread_count(std::size_t requested) {
  std::size_t t = requested ? requested : limits().threads;
  if (t == 0) t = std::max<unsigned>(1, std::thread::hardware_concurrency());
  return t;
}

Integer power(std::uint64_t q, std::size_t e) { return ipow(Integer(static_cast<unsigned long>(q)), static_cast<unsigned>(e)); }

// Counts points of F_q^n by the zero pattern of up to two polynomials in n
// variables: index bit 0 set when the first vanishes, bit 1 when the second
// does. Variables no polynomial uses contribute a factor q each.
std::array<Integer, 4> zero_patterns(const std::vector<const EdgePoly*>& polys, std::size_t n, std::uint64_t q,
                                     std::size_t threads) {
  check_field(q);
  std::vector<std::size_t> position(n, n);
  std::size_t used = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (auto* p : polys) {
      if (p->depends_on(i)) {
        position[i] = used++;
        break;
      }
    }
  }
  std::vector<CompiledPoly> compiled;
  for (auto* p : polys) compiled.push_back(compile(*p, position, q));

  // q^used must fit the budget.
  std::uint64_t steps = 1;
  for (std::size_t i = 0; i < used; ++i) {
    if (steps > limits().count_budget / q) {
      throw GuardError("point count needs " + std::to_string(q) + "^" + std::to_string(used) +
                       " evaluations, over the budget of " + std::to_string(limits().count_budget));
    }
    steps *= q;
  }

  const std::size_t nt = std::min<std::uint64_t>(thread_count(threads), steps);
  std::vector<std::array<std::uint64_t, 4>> partial(nt, {0, 0, 0, 0});
  auto work = [&](std::size_t id) {
    const std::uint64_t begin = steps * id / nt, end = steps * (id + 1) / nt;
    std::vector<std::uint64_t> x(used, 0);
    std::uint64_t idx = begin;
    for (std::size_t i = 0; i < used; ++i) {
      x[i] = idx % q;
      idx /= q;
    }
    auto& out = partial[id];
    for (std::uint64_t k = begin; k < end; ++k) {
      unsigned pattern = 0;
      for (std::size_t j = 0; j < compiled.size(); ++j) {
        if (compiled[j].eval(x, q) == 0) pattern |= 1u << j;
      }
      ++out[pattern];
      for (std::size_t i = 0; i < used; ++i) {
        if (++x[i] < q) break;
        x[i] = 0;
      }
    }
  };
  if (nt == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t id = 0; id < nt; ++id) pool.emplace_back(work, id);
    for (auto& t : pool) t.join();
  }
  const Integer free = power(q, n - used);
  std::array<Integer, 4> total{0, 0, 0, 0};
  for (const auto& p : partial) {
    for (std::size_t j = 0; j < 4; ++j) total[j] += Integer(static_cast<unsigned long>(p[j]));
  }
  for (auto& t : total) t *= free;
  return total;
}

// Zeros of t F + G on A^n given counts over the other n-1 coordinates.
Integer zeros_from_split(const EdgePoly& f, const EdgePoly& g, std::uint64_t q, std::size_t threads) {
  const auto c = zero_patterns({&f, &g}, f.variable_count(), q, threads);
  const Integer f_nonzero = c[0] + c[2];
  const Integer both = c[3];
  return f_nonzero + Integer(static_cast<unsigned long>(q)) * both;
}

// Rational polynomial helpers for interpolation.
using RatPoly = std::vector<Rational>;

RatPoly rat_mul_linear(const RatPoly& p, const Rational& root) {
  RatPoly r(p.size() + 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i + 1] += p[i];
    r[i] -= p[i] * root;
  }
  return r;
}

}  // namespace

CountResult count_complement(const EdgePoly& psi, std::uint64_t q, const CountOptions& opts) {
  check_field(q);
  const std::size_t n = psi.variable_count();
  CountResult r;
  r.q = q;
  r.n = n;
  const Integer total = power(q, n);

  std::optional<std::size_t> split = opts.split_variable;
  if (split) {
    if (*split >= n) throw InputError("split variable out of range");
  } else {
    std::size_t best_cost = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!psi.depends_on(i)) continue;
      const std::size_t cost = std::max(psi.partial_derivative(i).term_count(), psi.set_zero(i).term_count());
      if (!split || cost < best_cost) {
        split = i;
        best_cost = cost;
      }
    }
  }
  if (!split) {
    // psi is a constant
    const auto c = zero_patterns({&psi}, n, q, opts.threads);
    r.zero_count = c[1];
  } else {
    const EdgePoly f = psi.partial_derivative(*split).drop_variable(*split);
    const EdgePoly g = psi.set_zero(*split).drop_variable(*split);
    r.zero_count = zeros_from_split(f, g, q, opts.threads);
  }
  r.complement_count = total - r.zero_count;
  return r;
}

JointZeroCounts count_joint_zeros(const EdgePoly& p, const EdgePoly& q_poly, std::uint64_t q, std::size_t threads) {
  if (p.variable_count() != q_poly.variable_count()) throw InputError("variable counts differ");
  const auto c = zero_patterns({&p, &q_poly}, p.variable_count(), q, threads);
  return {c[1] + c[3], c[3]};
}

ClassCandidate interpolate_class(const MultiGraph& g, const std::vector<std::uint64_t>& primes,
                                 std::uint64_t holdout) {
  const std::size_t n = g.edge_count();
  std::vector<std::uint64_t> sorted = primes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("sample primes repeat");
  if (std::find(sorted.begin(), sorted.end(), holdout) != sorted.end()) {
    throw InputError("holdout prime is also a sample prime");
  }
  if (primes.size() < n + 1) {
    throw InputError("interpolation needs at least " + std::to_string(n + 1) + " sample primes for " +
                     std::to_string(n) + " edges");
  }
  const EdgePoly p = psi(g).psi;
  ClassCandidate c;
  c.sample_primes = primes;
  c.holdout = holdout;
  for (auto q : primes) c.counts.push_back(count_complement(p, q).complement_count);
  const Integer held = count_complement(p, holdout).complement_count;
  c.counts.push_back(held);

  // Lagrange form in q.
  RatPoly poly(1, Rational(0));
  for (std::size_t i = 0; i < primes.size(); ++i) {
    RatPoly basis(1, Rational(1));
    Rational denom = 1;
    for (std::size_t j = 0; j < primes.size(); ++j) {
      if (j == i) continue;
      basis = rat_mul_linear(basis, Rational(Integer(static_cast<unsigned long>(primes[j]))));
      denom *= Rational(Integer(static_cast<unsigned long>(primes[i]))) -
               Rational(Integer(static_cast<unsigned long>(primes[j])));
    }
    if (poly.size() < basis.size()) poly.resize(basis.size(), Rational(0));
    for (std::size_t k = 0; k < basis.size(); ++k) poly[k] += Rational(c.counts[i]) * basis[k] / denom;
  }
  while (!poly.empty() && poly.back() == 0) poly.pop_back();

  std::vector<Integer> coeffs;
  for (auto& r : poly) {
    r.canonicalize();
    if (r.get_den() != 1) {
      c.reason = "interpolating polynomial has non-integer coefficients";
      return c;
    }
    coeffs.push_back(r.get_num());
  }
  const IntPoly in_q(coeffs);
  if (in_q.degree() > static_cast<int>(n)) {
    c.reason = "interpolating polynomial has degree above the edge count";
    return c;
  }
  c.poly = in_q.compose(IntPoly::variable() + IntPoly(1));
  if (in_q(Integer(static_cast<unsigned long>(holdout))) != held) {
    c.reason = "held-out count disagrees with the interpolating polynomial";
    return c;
  }
  c.exact_fit = true;
  return c;
}

DelconReport verify_delcon(const MultiGraph& g, std::size_t e, const std::vector<std::uint64_t>& primes) {
  if (classify_edge(g, e) != EdgeKind::Regular) throw InputError("deletion-contraction check needs a regular edge");
  const EdgePoly whole = psi(g).psi;
  const EdgePoly f = psi(delete_edge(g, e).graph).psi;
  const EdgePoly gg = psi(contract_edge(g, e).graph).psi;
  const EdgePoly d = whole.partial_derivative(e);
  const std::size_t n = g.edge_count();
  DelconReport rep;
  rep.ok = true;
  for (auto q : primes) {
    DelconRow row;
    row.q = q;
    const Integer qi(static_cast<unsigned long>(q));
    row.complement = count_complement(whole, q).complement_count;
    const JointZeroCounts fg = count_joint_zeros(f, gg, q);
    const Integer ambient = power(q, n - 1);
    row.predicted = qi * (ambient - fg.both_zero) - (ambient - fg.p_zero);
    row.psi_f_zero = count_joint_zeros(whole, d, q).both_zero;
    row.q_times_f_g_zero = qi * fg.both_zero;
    row.ok = row.complement == row.predicted && row.psi_f_zero == row.q_times_f_g_zero;
    rep.ok = rep.ok && row.ok;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

ClassCheck verify_class(const IntPoly& value, const MultiGraph& g, const std::vector<std::uint64_t>& primes) {
  const EdgePoly p = psi(g).psi;
  ClassCheck check;
  check.ok = true;
  for (auto q : primes) {
    ClassCheckRow row;
    row.q = q;
    row.predicted = value(Integer(static_cast<unsigned long>(q - 1)));
    row.counted = count_complement(p, q).complement_count;
    check.ok = check.ok && row.predicted == row.counted;
    check.rows.push_back(std::move(row));
  }
  return check;
}

}  // namespace graphmotive
