#ifndef GRAPHMOTIVE_MOTIVIC_HPP
#define GRAPHMOTIVE_MOTIVIC_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphmotive/graph.hpp"
#include "graphmotive/poly.hpp"
#include "graphmotive/series.hpp"

namespace graphmotive {

enum class Provenance { RuleDerived, Interpolated, Unknown };
const char* to_string(Provenance p);

// U(G) in Z[T], T = L - 1.
struct MotivicClass {
  IntPoly value;
  Provenance provenance = Provenance::Unknown;
  std::vector<std::string> rule_trace;
  std::optional<MultiGraph> residue;  // first irreducible piece, if any

  std::map<std::string, std::size_t> trace_counts() const;
};

struct EngineOptions {
  // With a seed the engine picks a random applicable rule at every step and
  // bypasses the memo, which is how confluence is tested.
  std::optional<std::uint64_t> seed;
  bool use_memo = true;
};

// Reduction by components, cut vertices, loops, bridges, series and
// parallel rules. Graphs outside that closure come back Unknown.
MotivicClass motivic_class(const MultiGraph& g, const EngineOptions& opts = {});
void clear_motivic_memo();

// U(G), U(G - e), U(G / e) for one edge.
struct EdgeBases {
  IntPoly whole;
  IntPoly deleted;
  IntPoly contracted;
};
// Throws InputError when any of the three classes is not rule-derived.
EdgeBases edge_bases(const MultiGraph& g, std::size_t e);

// Coefficients (f_m, g_m, h_m) of U(G_me) = f U(G) + g U(G - e) + h U(G / e)
// for a regular edge, by exact division.
struct FGH {
  IntPoly f, g, h;
};
FGH multiplied_edge_coefficients(std::size_t m);
IntPoly multiplied_edge_class(const EdgeBases& b, std::size_t m);
MotivicClass multiplied_edge_class(const MultiGraph& g, std::size_t e, std::size_t m);

// Term m is U(G_me). Loop edges give T^m U(G - e), bridges the banana
// class times U(G - e), regular edges the three-term combination.
SeriesTrunc<IntPoly> multiplied_edge_series(const EdgeBases& b, EdgeKind edge, SeriesKind kind,
                                            std::size_t order);
SeriesTrunc<IntPoly> multiplied_edge_series(const MultiGraph& g, std::size_t e, SeriesKind kind,
                                            std::size_t order);

IntPoly banana_class(std::size_t m);
// (T+1)(f_m + d/dT g_m), m >= 1.
IntPoly banana_class_derivative_form(std::size_t m);

IntPoly lemon_class(std::size_t m);
// (T+1)^{m+1} sum_i C(m-i, i) T^{m-i}
IntPoly lemon_class_closed(std::size_t m);
IntPoly polygon_chain_class(const std::vector<std::size_t>& sides);

// Terms of the lemonade series for edge e of G.
SeriesTrunc<IntPoly> lemonade_series(const EdgeBases& b, std::size_t order);

MultiGraph lemon_graph(std::size_t m);
MultiGraph polygon_chain_graph(const std::vector<std::size_t>& sides);
MultiGraph lemonade_graph(const MultiGraph& g, std::size_t e, std::size_t m);

// Euler characteristic of the projective complement: U/T evaluated at T=0.
Integer euler_char(const IntPoly& value, bool is_forest);
Integer euler_char(const MultiGraph& g);

struct EulerBases {
  Integer whole;
  Integer deleted;
  Integer contracted;
};
EulerBases euler_bases(const MultiGraph& g, std::size_t e);
// (1 - e^{-s}) chi(G) + chi(G - e) + (s - 1 + e^{-s}) chi(G / e)
SeriesTrunc<Integer> euler_multiedge_series(const EulerBases& b, std::size_t order);
SeriesTrunc<Integer> euler_multiedge_series(const MultiGraph& g, std::size_t e, std::size_t order);
// (1 - s) chi(G) + s chi(G / e) as an ordinary series; needs G - e not a forest
SeriesTrunc<Integer> lemonade_euler_series(const EulerBases& b, std::size_t order);

}  // namespace graphmotive

#endif
