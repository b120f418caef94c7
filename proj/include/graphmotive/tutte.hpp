#ifndef GRAPHMOTIVE_TUTTE_HPP
#define GRAPHMOTIVE_TUTTE_HPP

#include <cstddef>

#include "graphmotive/graph.hpp"
#include "graphmotive/poly.hpp"
#include "graphmotive/series.hpp"

namespace graphmotive {

// Deletion-contraction with loops and bridges peeled off first, memoized on
// the canonical key.
BiPoly tutte(const MultiGraph& g);

// Brute-force sum over all spanning subgraphs.
BiPoly tutte_states(const MultiGraph& g);

// gamma^{b0} alpha^{#V-b0} beta^{b1} T(gamma x / alpha, y / beta), expanded
// term by term so no division is ever needed: x-degrees never exceed the
// rank #V-b0 and y-degrees never exceed b1.
template <class R>
R tg_invariant(const MultiGraph& g, const R& alpha, const R& beta, const R& gamma, const R& x, const R& y) {
  const GraphStats s = stats(g);
  const std::size_t rank = g.vertex_count() - s.b0;
  auto power = [](const R& b, std::size_t e) {
    R r(1);
    for (std::size_t i = 0; i < e; ++i) r = r * b;
    return r;
  };
  R acc(0);
  const BiPoly t = tutte(g);
  for (const auto& [e, c] : t.terms()) {
    const auto [i, j] = e;
    if (i > rank || j > s.b1) throw ExactDivisionError("Tutte monomial exceeds rank or nullity");
    acc += R(c) * power(gamma, s.b0 + i) * power(x, i) * power(alpha, rank - i) * power(y, j) *
           power(beta, s.b1 - j);
  }
  return acc;
}

// (-1)^{#V-b0} lambda^{b0} T(1 - lambda, 0), as a polynomial in lambda.
IntPoly chromatic(const MultiGraph& g);

// T of g with e replaced by m parallel copies, by the closed forms for
// regular, bridge and loop edges.
BiPoly tutte_multiedge(const MultiGraph& g, std::size_t e, std::size_t m);

// Generating series whose term m is tutte_multiedge(g, e, m).
SeriesTrunc<BiPoly> tutte_multiedge_series(const MultiGraph& g, std::size_t e, SeriesKind kind,
                                           std::size_t order);

void clear_tutte_memo();

}  // namespace graphmotive

#endif
