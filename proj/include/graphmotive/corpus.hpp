#ifndef GRAPHMOTIVE_CORPUS_HPP
#define GRAPHMOTIVE_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "graphmotive/graph.hpp"

namespace graphmotive {

struct CorpusEntry {
  std::string name;
  MultiGraph graph;
};

// Small multigraphs used by the consistency checks.
std::vector<CorpusEntry> corpus();

// Inline family specs: edge, loop, triangle, square, k4, doubled-triangle,
// banana(m), lemon(m), cycle(n), path(n), complete(n), star(n),
// chain(r1,r2,...), lemonade(m) (on a triangle edge).
std::optional<MultiGraph> family_graph(const std::string& spec);

}  // namespace graphmotive

#endif
