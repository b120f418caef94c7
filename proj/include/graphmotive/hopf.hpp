#ifndef GRAPHMOTIVE_HOPF_HPP
#define GRAPHMOTIVE_HOPF_HPP

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "graphmotive/graph.hpp"
#include "graphmotive/poly.hpp"

namespace graphmotive {

// A monomial in connected 1PI generators, as a sorted list of canonical
// keys; the empty list is the unit.
using GraphMonomial = std::vector<CanonicalKey>;

GraphMonomial monomial_product(const GraphMonomial& a, const GraphMonomial& b);

// Integer combination of monomials, with representatives for every key.
struct GraphLinearComb {
  std::map<GraphMonomial, Integer> terms;
  std::map<CanonicalKey, MultiGraph> graphs;

  void add(const GraphMonomial& m, const Integer& c);
  bool is_zero() const { return terms.empty(); }
};

struct GraphTensorSum {
  std::map<std::pair<GraphMonomial, GraphMonomial>, Integer> terms;
  std::map<CanonicalKey, MultiGraph> graphs;

  void add(const GraphMonomial& l, const GraphMonomial& r, const Integer& c);
};

struct GraphTripleSum {
  std::map<std::tuple<GraphMonomial, GraphMonomial, GraphMonomial>, Integer> terms;
  void add(const GraphMonomial& a, const GraphMonomial& b, const GraphMonomial& c, const Integer& k);
};

// Connected 1PI generator key (checked).
CanonicalKey generator_key(const MultiGraph& g);

// One proper subgraph term of the coproduct: the components of gamma and
// the quotient G/gamma.
struct SubgraphTerm {
  std::vector<std::size_t> edges;
  std::vector<MultiGraph> components;
  MultiGraph quotient;
};
// Proper nonempty edge subsets whose components are all 1PI.
std::vector<SubgraphTerm> divergent_subgraphs(const MultiGraph& g);

// G (x) 1 + 1 (x) G + sum gamma (x) G/gamma
GraphTensorSum coproduct(const MultiGraph& g);
// Multiplicative extension to a monomial whose generators are in `graphs`.
GraphTensorSum coproduct(const GraphMonomial& m, const std::map<CanonicalKey, MultiGraph>& graphs);

GraphTripleSum coassociativity_left(const MultiGraph& g);   // (Delta (x) id) Delta
GraphTripleSum coassociativity_right(const MultiGraph& g);  // (id (x) Delta) Delta

// S(G) = -G - sum S(gamma) G/gamma
GraphLinearComb antipode(const MultiGraph& g);
GraphLinearComb antipode(const GraphMonomial& m, const std::map<CanonicalKey, MultiGraph>& graphs);
// m(id (x) S) Delta(G), which must vanish.
GraphLinearComb antipode_right_convolution(const MultiGraph& g);
// m(S (x) id) Delta(G), likewise.
GraphLinearComb antipode_left_convolution(const MultiGraph& g);

std::string describe(const MultiGraph& g);
std::string describe(const GraphMonomial& m, const std::map<CanonicalKey, MultiGraph>& graphs);

// Polar-part projection: a Rota-Baxter operator of weight -1.
LaurentPoly rota_baxter_polar(const LaurentPoly& x);

using Character = std::function<LaurentPoly(const MultiGraph&)>;
// z^{-b1} (1 + z)^{#E}
LaurentPoly toy_character(const MultiGraph& g);
LaurentPoly evaluate(const Character& u, const GraphMonomial& m, const std::map<CanonicalKey, MultiGraph>& graphs);

struct BirkhoffResult {
  LaurentPoly u_minus;
  LaurentPoly u_plus;
  LaurentPoly bar;  // U(G) + sum U_-(gamma) U(G/gamma)
};
BirkhoffResult birkhoff(const Character& u, const MultiGraph& g);

}  // namespace graphmotive

#endif
