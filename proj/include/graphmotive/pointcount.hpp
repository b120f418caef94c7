#ifndef GRAPHMOTIVE_POINTCOUNT_HPP
#define GRAPHMOTIVE_POINTCOUNT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphmotive/graph.hpp"
#include "graphmotive/poly.hpp"

namespace graphmotive {

bool is_prime(std::uint64_t q);

struct CountResult {
  std::uint64_t q = 0;
  std::size_t n = 0;
  Integer complement_count;
  Integer zero_count;
};

struct CountOptions {
  std::optional<std::size_t> split_variable;  // default: smallest max(|F|, |G|)
  std::size_t threads = 0;                    // 0: limits().threads
};

// Points of A^n over F_q where psi does not vanish. Writes psi = t F + G for
// one variable t and enumerates the other n-1 coordinates: F != 0 gives one
// root in t, F = G = 0 gives q.
CountResult count_complement(const EdgePoly& psi, std::uint64_t q, const CountOptions& opts = {});

// Over F_q^n, the number of points with P = 0 and the number with P = Q = 0.
struct JointZeroCounts {
  Integer p_zero;
  Integer both_zero;
};
JointZeroCounts count_joint_zeros(const EdgePoly& p, const EdgePoly& q_poly, std::uint64_t q,
                                  std::size_t threads = 0);

struct ClassCandidate {
  IntPoly poly;
  std::vector<std::uint64_t> sample_primes;
  std::uint64_t holdout = 0;
  std::vector<Integer> counts;  // per sample prime, then the holdout
  bool exact_fit = false;
  std::string reason;           // why the fit was rejected
};

// Lagrange interpolation of the complement count as a polynomial in q,
// rewritten in T = q - 1 and checked at the held-out prime.
ClassCandidate interpolate_class(const MultiGraph& g, const std::vector<std::uint64_t>& primes,
                                 std::uint64_t holdout);

struct DelconRow {
  std::uint64_t q = 0;
  Integer complement;          // #(A^n minus X_G)
  Integer predicted;           // q #(A^{n-1} minus (X_{G-e} cap X_{G/e})) - #(A^{n-1} minus X_{G-e})
  Integer psi_f_zero;          // #{Psi = F = 0} in A^n
  Integer q_times_f_g_zero;    // q #{F = G = 0} in A^{n-1}
  bool ok = false;
};
struct DelconReport {
  std::vector<DelconRow> rows;
  bool ok = false;
};
DelconReport verify_delcon(const MultiGraph& g, std::size_t e, const std::vector<std::uint64_t>& primes);

struct ClassCheckRow {
  std::uint64_t q = 0;
  Integer predicted;  // value(q - 1)
  Integer counted;
};
struct ClassCheck {
  std::vector<ClassCheckRow> rows;
  bool ok = false;
};
ClassCheck verify_class(const IntPoly& value, const MultiGraph& g, const std::vector<std::uint64_t>& primes);

}  // namespace graphmotive

#endif
