#include "graphmotive/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

namespace graphmotive {

Limits& limits() {
  static Limits l = [] {
    Limits d;
    if (const char* env = std::getenv("GRAPHMOTIVE_BUDGET")) {
      try {
        d.count_budget = std::stoull(env);
      } catch (const std::exception&) {
        throw InputError(std::string("GRAPHMOTIVE_BUDGET is not a number: ") + env);
      }
    }
    return d;
  }();
  return l;
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

MultiGraph with_names_of(const MultiGraph& g) {
  MultiGraph r;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) r.add_vertex(g.vertex_name(v));
  return r;
}

}  // namespace

MultiGraph::MultiGraph(std::size_t vertex_count) {
  for (std::size_t v = 0; v < vertex_count; ++v) add_vertex();
}

MultiGraph::MultiGraph(std::size_t vertex_count, std::vector<Edge> edges) : MultiGraph(vertex_count) {
  for (const auto& e : edges) add_edge(e.u, e.v);
}

std::size_t MultiGraph::add_vertex(std::string name) {
  if (name.empty()) name = std::to_string(names_.size() + 1);
  names_.push_back(std::move(name));
  return names_.size() - 1;
}

std::size_t MultiGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= names_.size() || v >= names_.size()) throw InputError("edge endpoint is not a vertex");
  edges_.push_back({u, v});
  return edges_.size() - 1;
}

const Edge& MultiGraph::edge(std::size_t e) const {
  check_edge(e);
  return edges_[e];
}

void MultiGraph::check_edge(std::size_t e) const {
  if (e >= edges_.size()) {
    throw InputError("unknown edge id " + std::to_string(e + 1) + " (graph has " +
                     std::to_string(edges_.size()) + " edges)");
  }
}

std::size_t MultiGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (const auto& e : edges_) d += (e.u == v) + (e.v == v);
  return d;
}

const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Bridge: return "bridge";
    case EdgeKind::Loop: return "loop";
    case EdgeKind::Regular: return "regular";
  }
  return "?";
}

EdgeRemap delete_edge(const MultiGraph& g, std::size_t e) {
  g.check_edge(e);
  EdgeRemap r{with_names_of(g), {}};
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (i == e) {
      r.edge_map.push_back(std::nullopt);
    } else {
      r.edge_map.push_back(r.graph.add_edge(g.edges()[i].u, g.edges()[i].v));
    }
  }
  return r;
}

EdgeRemap contract_edge(const MultiGraph& g, std::size_t e) {
  g.check_edge(e);
  const Edge ce = g.edges()[e];
  if (ce.is_loop()) return delete_edge(g, e);
  const std::size_t keep = std::min(ce.u, ce.v);
  const std::size_t gone = std::max(ce.u, ce.v);
  auto image = [&](std::size_t w) { return w == gone ? keep : (w > gone ? w - 1 : w); };
  EdgeRemap r;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (v != gone) r.graph.add_vertex(g.vertex_name(v));
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (i == e) {
      r.edge_map.push_back(std::nullopt);
    } else {
      r.edge_map.push_back(r.graph.add_edge(image(g.edges()[i].u), image(g.edges()[i].v)));
    }
  }
  return r;
}

EdgeKind classify_edge(const MultiGraph& g, std::size_t e) {
  g.check_edge(e);
  const Edge ce = g.edges()[e];
  if (ce.is_loop()) return EdgeKind::Loop;
  UnionFind uf(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (i != e) uf.unite(g.edges()[i].u, g.edges()[i].v);
  }
  return uf.find(ce.u) == uf.find(ce.v) ? EdgeKind::Regular : EdgeKind::Bridge;
}

std::pair<std::vector<std::size_t>, std::size_t> component_labels(const MultiGraph& g) {
  UnionFind uf(g.vertex_count());
  for (const auto& e : g.edges()) uf.unite(e.u, e.v);
  std::vector<std::size_t> label(g.vertex_count());
  std::map<std::size_t, std::size_t> ids;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    label[v] = ids.try_emplace(uf.find(v), ids.size()).first->second;
  }
  return {label, ids.size()};
}

GraphStats stats(const MultiGraph& g) {
  GraphStats s;
  s.b0 = component_labels(g).second;
  s.b1 = g.edge_count() + s.b0 - g.vertex_count();
  return s;
}

bool is_forest(const MultiGraph& g) { return stats(g).b1 == 0; }

bool is_1pi(const MultiGraph& g) {
  if (stats(g).b0 > 1) return false;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (classify_edge(g, e) == EdgeKind::Bridge) return false;
  }
  return true;
}

MultiGraph multiply_edge(const MultiGraph& g, std::size_t e, std::size_t m) {
  g.check_edge(e);
  MultiGraph r = with_names_of(g);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const std::size_t copies = i == e ? m : 1;
    for (std::size_t k = 0; k < copies; ++k) r.add_edge(g.edges()[i].u, g.edges()[i].v);
  }
  return r;
}

Subgraph edge_induced_subgraph(const MultiGraph& g, std::span<const std::size_t> edges) {
  Subgraph s;
  std::vector<std::size_t> verts;
  for (auto e : edges) {
    g.check_edge(e);
    verts.push_back(g.edges()[e].u);
    verts.push_back(g.edges()[e].v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::map<std::size_t, std::size_t> local;
  for (auto v : verts) {
    local[v] = s.graph.add_vertex(g.vertex_name(v));
    s.vertices.push_back(v);
  }
  for (auto e : edges) {
    s.graph.add_edge(local[g.edges()[e].u], local[g.edges()[e].v]);
    s.edges.push_back(e);
  }
  return s;
}

std::vector<Subgraph> edge_components(const MultiGraph& g) {
  auto [label, count] = component_labels(g);
  std::vector<std::vector<std::size_t>> groups(count);
  for (std::size_t e = 0; e < g.edge_count(); ++e) groups[label[g.edges()[e].u]].push_back(e);
  std::vector<Subgraph> out;
  for (const auto& grp : groups) {
    if (!grp.empty()) out.push_back(edge_induced_subgraph(g, grp));
  }
  return out;
}

std::vector<Subgraph> blocks(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (neighbor, edge)
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edges()[e];
    if (ed.is_loop()) {
      groups.push_back({e});
      continue;
    }
    adj[ed.u].push_back({ed.v, e});
    adj[ed.v].push_back({ed.u, e});
  }
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::size_t timer = 0;
  std::vector<std::size_t> stack;
  std::function<void(std::size_t, std::optional<std::size_t>)> dfs = [&](std::size_t v,
                                                                         std::optional<std::size_t> via) {
    disc[v] = low[v] = ++timer;
    for (auto [w, e] : adj[v]) {
      if (via && e == *via) continue;
      if (disc[w] == 0) {
        stack.push_back(e);
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<std::size_t> grp;
          while (true) {
            const std::size_t top = stack.back();
            stack.pop_back();
            grp.push_back(top);
            if (top == e) break;
          }
          std::sort(grp.begin(), grp.end());
          groups.push_back(std::move(grp));
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (disc[v] == 0) dfs(v, std::nullopt);
  }
  std::sort(groups.begin(), groups.end());
  std::vector<Subgraph> out;
  for (const auto& grp : groups) out.push_back(edge_induced_subgraph(g, grp));
  return out;
}

MultiGraph quotient(const MultiGraph& g, std::span<const std::size_t> edges) {
  UnionFind uf(g.vertex_count());
  std::vector<bool> removed(g.edge_count(), false);
  for (auto e : edges) {
    g.check_edge(e);
    removed[e] = true;
    uf.unite(g.edges()[e].u, g.edges()[e].v);
  }
  MultiGraph r;
  std::vector<std::size_t> image(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (uf.find(v) == v) image[v] = r.add_vertex(g.vertex_name(v));
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) image[v] = image[uf.find(v)];
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!removed[e]) r.add_edge(image[g.edges()[e].u], image[g.edges()[e].v]);
  }
  return r;
}

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b) {
  MultiGraph r = a;
  const std::size_t off = a.vertex_count();
  for (std::size_t v = 0; v < b.vertex_count(); ++v) r.add_vertex();
  for (const auto& e : b.edges()) r.add_edge(e.u + off, e.v + off);
  return r;
}

MultiGraph one_point_join(const MultiGraph& a, std::size_t va, const MultiGraph& b, std::size_t vb) {
  if (va >= a.vertex_count() || vb >= b.vertex_count()) throw InputError("join vertex out of range");
  MultiGraph r = a;
  std::vector<std::size_t> image(b.vertex_count());
  for (std::size_t v = 0; v < b.vertex_count(); ++v) image[v] = v == vb ? va : r.add_vertex();
  for (const auto& e : b.edges()) r.add_edge(image[e.u], image[e.v]);
  return r;
}

MultiGraph relabel_vertices(const MultiGraph& g, std::span<const std::size_t> perm) {
  const std::size_t n = g.vertex_count();
  if (perm.size() != n) throw InputError("permutation size mismatch");
  std::vector<std::size_t> inverse(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    if (perm[v] >= n || inverse[perm[v]] != n) throw InputError("not a permutation");
    inverse[perm[v]] = v;
  }
  MultiGraph r;
  for (std::size_t w = 0; w < n; ++w) r.add_vertex(g.vertex_name(inverse[w]));
  for (const auto& e : g.edges()) r.add_edge(perm[e.u], perm[e.v]);
  return r;
}

MultiGraph without_isolated_vertices(const MultiGraph& g) {
  std::vector<bool> used(g.vertex_count(), false);
  for (const auto& e : g.edges()) used[e.u] = used[e.v] = true;
  MultiGraph r;
  std::vector<std::size_t> image(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (used[v]) image[v] = r.add_vertex(g.vertex_name(v));
  }
  for (const auto& e : g.edges()) r.add_edge(image[e.u], image[e.v]);
  return r;
}

// ---------------------------------------------------------------------------
// Canonical labeling

namespace {

using Matrix = std::vector<std::vector<unsigned>>;

class Canonizer {
 public:
  explicit Canonizer(const MultiGraph& g) : n_(g.vertex_count()), adj_(n_, std::vector<unsigned>(n_, 0)) {
    for (const auto& e : g.edges()) {
      ++adj_[e.u][e.v];
      if (!e.is_loop()) ++adj_[e.v][e.u];
    }
  }

  std::string run() {
    std::vector<std::vector<std::size_t>> sig(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      std::size_t deg = 0;
      for (std::size_t w = 0; w < n_; ++w) deg += adj_[v][w] * (v == w ? 2 : 1);
      sig[v] = {adj_[v][v], deg};
    }
    search(refine(rank(sig)));
    return best_;
  }

 private:
  template <class S>
  static std::vector<std::size_t> rank(const std::vector<S>& sig) {
    std::vector<S> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::size_t> out(sig.size());
    for (std::size_t v = 0; v < sig.size(); ++v) {
      out[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    return out;
  }

  static std::size_t count_colors(const std::vector<std::size_t>& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  }

  std::vector<std::size_t> refine(std::vector<std::size_t> colors) const {
    std::size_t k = count_colors(colors);
    while (true) {
      std::vector<std::vector<std::size_t>> sig(n_);
      for (std::size_t v = 0; v < n_; ++v) {
        std::vector<std::pair<std::size_t, unsigned>> nb;
        for (std::size_t w = 0; w < n_; ++w) {
          if (w != v && adj_[v][w] > 0) nb.push_back({colors[w], adj_[v][w]});
        }
        std::sort(nb.begin(), nb.end());
        sig[v].push_back(colors[v]);
        for (auto [c, m] : nb) {
          sig[v].push_back(c);
          sig[v].push_back(m);
        }
      }
      auto next = rank(sig);
      const std::size_t nk = count_colors(next);
      if (nk == k) return next;
      colors = std::move(next);
      k = nk;
    }
  }

  bool twins(std::size_t a, std::size_t b) const {
    if (adj_[a][a] != adj_[b][b]) return false;
    for (std::size_t w = 0; w < n_; ++w) {
      if (w != a && w != b && adj_[a][w] != adj_[b][w]) return false;
    }
    return true;
  }

  void search(const std::vector<std::size_t>& colors) {
    const std::size_t k = count_colors(colors);
    if (k == n_) {
      leaf(colors);
      return;
    }
    std::vector<std::size_t> size(k, 0);
    for (auto c : colors) ++size[c];
    std::size_t target = k;
    for (std::size_t c = 0; c < k; ++c) {
      if (size[c] > 1 && (target == k || size[c] < size[target])) target = c;
    }
    std::vector<std::size_t> tried;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      bool redundant = false;
      for (auto t : tried) {
        if (twins(t, v)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      tried.push_back(v);
      std::vector<std::size_t> next(n_);
      for (std::size_t w = 0; w < n_; ++w) next[w] = 2 * colors[w] + 1;
      next[v] = 2 * colors[v];
      search(refine(rank(next)));
    }
  }

  void leaf(const std::vector<std::size_t>& colors) {
    std::vector<std::size_t> order(n_);
    for (std::size_t v = 0; v < n_; ++v) order[colors[v]] = v;
    std::string s = std::to_string(n_) + ":";
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) {
        s += std::to_string(adj_[order[i]][order[j]]);
        s += ',';
      }
    }
    if (best_.empty() || s < best_) best_ = std::move(s);
  }

  std::size_t n_;
  Matrix adj_;
  std::string best_;
};

}  // namespace

CanonicalKey canonical_key(const MultiGraph& g) {
  if (g.edge_count() > limits().max_edges) {
    throw GuardError("canonical_key: " + std::to_string(g.edge_count()) + " edges exceeds the guard of " +
                     std::to_string(limits().max_edges));
  }
  if (g.vertex_count() == 0) return "0:";
  return Canonizer(g).run();
}

// ---------------------------------------------------------------------------
// Families

MultiGraph single_edge() { return MultiGraph(2, {{0, 1}}); }

MultiGraph single_loop() { return MultiGraph(1, {{0, 0}}); }

MultiGraph path_graph(std::size_t edges) {
  MultiGraph g(edges + 1);
  for (std::size_t i = 0; i < edges; ++i) g.add_edge(i, i + 1);
  return g;
}

MultiGraph cycle_graph(std::size_t n) {
  if (n == 0) throw InputError("cycle needs at least one edge");
  MultiGraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

MultiGraph complete_graph(std::size_t n) {
  MultiGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

MultiGraph banana_graph(std::size_t m) {
  MultiGraph g(2);
  for (std::size_t i = 0; i < m; ++i) g.add_edge(0, 1);
  return g;
}

// ---------------------------------------------------------------------------
// I/O

namespace {

std::size_t vertex_by_name(MultiGraph& g, std::map<std::string, std::size_t>& ids, const std::string& name) {
  auto it = ids.find(name);
  if (it != ids.end()) return it->second;
  const std::size_t v = g.add_vertex(name);
  ids.emplace(name, v);
  return v;
}

}  // namespace

MultiGraph parse_text_graph(std::istream& in) {
  MultiGraph g;
  std::map<std::string, std::size_t> ids;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() > 2) throw InputError("line " + std::to_string(lineno) + ": expected \"u v\"");
    const std::size_t u = vertex_by_name(g, ids, tok[0]);
    if (tok.size() == 2) g.add_edge(u, vertex_by_name(g, ids, tok[1]));
  }
  return g;
}

MultiGraph parse_text_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_text_graph(in);
}

std::string to_text(const MultiGraph& g) {
  std::vector<bool> used(g.vertex_count(), false);
  for (const auto& e : g.edges()) used[e.u] = used[e.v] = true;
  std::string out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!used[v]) out += g.vertex_name(v) + "\n";
  }
  for (const auto& e : g.edges()) out += g.vertex_name(e.u) + " " + g.vertex_name(e.v) + "\n";
  return out;
}

MultiGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array()) {
    throw InputError("graph JSON needs an \"edges\" array");
  }
  auto name_of = [](const nlohmann::json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw InputError("vertex names must be strings or integers");
  };
  MultiGraph g;
  std::map<std::string, std::size_t> ids;
  const bool declared = j.contains("vertices");
  if (declared) {
    if (!j["vertices"].is_array()) throw InputError("\"vertices\" must be an array");
    for (const auto& v : j["vertices"]) {
      const std::string n = name_of(v);
      if (ids.count(n)) throw InputError("duplicate vertex " + n);
      vertex_by_name(g, ids, n);
    }
  }
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair [u, v]");
    std::size_t ends[2];
    for (int k = 0; k < 2; ++k) {
      const std::string n = name_of(e[k]);
      if (declared && !ids.count(n)) throw InputError("edge references unknown vertex " + n);
      ends[k] = vertex_by_name(g, ids, n);
    }
    g.add_edge(ends[0], ends[1]);
  }
  return g;
}

nlohmann::json to_json(const MultiGraph& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(g.vertex_name(v));
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges()) j["edges"].push_back({g.vertex_name(e.u), g.vertex_name(e.v)});
  return j;
}

}  // namespace graphmotive
