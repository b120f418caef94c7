#ifndef GRAPHMOTIVE_GRAPH_HPP
#define GRAPHMOTIVE_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "graphmotive/errors.hpp"

namespace graphmotive {

// Size guards for the exponential algorithms. Every entry point that
// enumerates subsets, forests or states checks against these.
struct Limits {
  std::size_t max_edges = 16;         // psi, tutte, canonical labeling
  std::size_t max_state_edges = 20;   // brute-force Tutte state sum
  std::size_t max_coproduct_edges = 8;
  std::size_t max_rule_edges = 64;    // series-parallel reduction engine
  std::uint64_t count_budget = 1'000'000'000;  // F_q evaluations per count
  std::size_t threads = 0;            // 0: hardware concurrency
};

Limits& limits();

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected multigraph with loops. Edge indices 0..n-1 fix the variable
// order t_1..t_n; vertex names are kept for I/O only.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(std::size_t vertex_count);
  MultiGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t add_vertex(std::string name = {});
  std::size_t add_edge(std::size_t u, std::size_t v);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const;
  const std::string& vertex_name(std::size_t v) const { return names_.at(v); }
  void set_vertex_name(std::size_t v, std::string name) { names_.at(v) = std::move(name); }

  // Loops contribute 2.
  std::size_t degree(std::size_t v) const;

  void check_edge(std::size_t e) const;

  // Structural equality (names ignored).
  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
};

enum class EdgeKind { Bridge, Loop, Regular };
const char* to_string(EdgeKind k);

struct GraphStats {
  std::size_t b0 = 0;  // connected components
  std::size_t b1 = 0;  // first Betti number, #E - #V + b0
  std::size_t loop_number() const { return b1; }
};

// A derived graph plus the order-preserving map from old edge indices to new
// ones (nullopt for removed edges).
struct EdgeRemap {
  MultiGraph graph;
  std::vector<std::optional<std::size_t>> edge_map;
};

EdgeRemap delete_edge(const MultiGraph& g, std::size_t e);
// Merges the endpoints of e (the higher-numbered vertex disappears). A loop
// is contracted by deleting it.
EdgeRemap contract_edge(const MultiGraph& g, std::size_t e);
EdgeKind classify_edge(const MultiGraph& g, std::size_t e);
GraphStats stats(const MultiGraph& g);
bool is_1pi(const MultiGraph& g);
bool is_forest(const MultiGraph& g);
// Replaces e by m parallel copies placed at e's position.
MultiGraph multiply_edge(const MultiGraph& g, std::size_t e, std::size_t m);

// Component index per vertex and the component count.
std::pair<std::vector<std::size_t>, std::size_t> component_labels(const MultiGraph& g);

// Subgraph spanned by a set of edges: the edges plus their endpoints.
struct Subgraph {
  MultiGraph graph;
  std::vector<std::size_t> edges;     // indices into the parent
  std::vector<std::size_t> vertices;  // parent vertex per subgraph vertex
};
Subgraph edge_induced_subgraph(const MultiGraph& g, std::span<const std::size_t> edges);

// Connected components that carry at least one edge.
std::vector<Subgraph> edge_components(const MultiGraph& g);
// Blocks: maximal 2-connected pieces, bridges and individual loops.
std::vector<Subgraph> blocks(const MultiGraph& g);
// Shrinks each listed edge set's components to single vertices and removes
// those edges.
MultiGraph quotient(const MultiGraph& g, std::span<const std::size_t> edges);

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b);
// Identifies vertex va of a with vertex vb of b.
MultiGraph one_point_join(const MultiGraph& a, std::size_t va, const MultiGraph& b, std::size_t vb);
// perm[old] = new
MultiGraph relabel_vertices(const MultiGraph& g, std::span<const std::size_t> perm);
MultiGraph without_isolated_vertices(const MultiGraph& g);

// Isomorphism-invariant key, computed by individualization/refinement with
// exhaustive search over the remaining ties.
using CanonicalKey = std::string;
CanonicalKey canonical_key(const MultiGraph& g);

// Graph families used throughout.
MultiGraph single_edge();
MultiGraph single_loop();
MultiGraph path_graph(std::size_t edges);
MultiGraph cycle_graph(std::size_t n);  // n >= 1; n = 1 is a loop, 2 is banana(2)
MultiGraph complete_graph(std::size_t n);
MultiGraph banana_graph(std::size_t m);

// Text format: one edge "u v" per line; a single token declares a vertex;
// '#' starts a comment.
MultiGraph parse_text_graph(std::istream& in);
MultiGraph parse_text_graph(const std::string& text);
std::string to_text(const MultiGraph& g);
MultiGraph graph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MultiGraph& g);

// Shared memo keyed by canonical key with insert-if-absent semantics.
template <class V>
class MemoTable {
 public:
  std::optional<V> find(const CanonicalKey& k) const {
    std::lock_guard lock(mu_);
    auto it = map_.find(k);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  // Returns the stored value, which is the first one inserted for k.
  V insert(const CanonicalKey& k, V v) {
    std::lock_guard lock(mu_);
    return map_.try_emplace(k, std::move(v)).first->second;
  }
  std::size_t size() const {
    std::lock_guard lock(mu_);
    return map_.size();
  }
  void clear() {
    std::lock_guard lock(mu_);
    map_.clear();
  }

 private:
  mutable std::mutex mu_;
  std::unordered_map<CanonicalKey, V> map_;
};

}  // namespace graphmotive

#endif
