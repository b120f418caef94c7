#ifndef GRAPHMOTIVE_ACCEPTANCE_HPP
#define GRAPHMOTIVE_ACCEPTANCE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "graphmotive/graph.hpp"
#include "graphmotive/poly.hpp"

namespace graphmotive {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20090701;
  std::string csm_fixture;  // path to the doubled-triangle fixture
  std::set<int> only;       // empty: every criterion
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);
std::string format_result(const CriterionResult& r);

// Evaluates a CSM fixture: named external inputs, then product and
// csm_predict steps. Returns every named value.
std::map<std::string, IntPoly> evaluate_csm_fixture(const nlohmann::json& fixture);

// Brute-force proper colorings with lambda colors.
Integer count_colorings(const MultiGraph& g, unsigned lambda);

// Random multigraph with loops and parallel edges.
template <class Rng>
MultiGraph random_multigraph(Rng& rng, std::size_t max_vertices, std::size_t max_edges) {
  const std::size_t nv = 1 + rng() % max_vertices;
  const std::size_t ne = rng() % (max_edges + 1);
  MultiGraph g(nv);
  for (std::size_t i = 0; i < ne; ++i) g.add_edge(rng() % nv, rng() % nv);
  return g;
}

}  // namespace graphmotive

#endif
