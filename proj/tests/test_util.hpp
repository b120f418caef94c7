#ifndef GRAPHMOTIVE_TEST_UTIL_HPP
#define GRAPHMOTIVE_TEST_UTIL_HPP

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <vector>

#include "graphmotive/acceptance.hpp"
#include "graphmotive/graph.hpp"
#include "graphmotive/poly.hpp"

namespace graphmotive {
inline std::ostream& operator<<(std::ostream& o, const IntPoly& p) { return o << p.str(); }
inline std::ostream& operator<<(std::ostream& o, const BiPoly& p) { return o << p.str(); }
inline std::ostream& operator<<(std::ostream& o, const EdgePoly& p) { return o << p.str(); }
inline std::ostream& operator<<(std::ostream& o, const LaurentPoly& p) { return o << p.str(); }
}  // namespace graphmotive

namespace testutil {

using namespace graphmotive;

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20090701);
  return r;
}

inline long small(std::mt19937_64& r, long lo, long hi) {
  return lo + static_cast<long>(r() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline IntPoly random_intpoly(std::mt19937_64& r, int max_degree = 4) {
  std::vector<Integer> c;
  const int d = static_cast<int>(small(r, -1, max_degree));
  for (int i = 0; i <= d; ++i) c.push_back(small(r, -9, 9));
  return IntPoly(c);
}

inline BiPoly random_bipoly(std::mt19937_64& r) {
  BiPoly p;
  const long n = small(r, 0, 4);
  for (long i = 0; i < n; ++i) {
    p += BiPoly::monomial(small(r, -5, 5), static_cast<unsigned>(small(r, 0, 3)), static_cast<unsigned>(small(r, 0, 3)));
  }
  return p;
}

inline LaurentPoly random_laurent(std::mt19937_64& r) {
  LaurentPoly p;
  const long n = small(r, 0, 4);
  for (long i = 0; i < n; ++i) {
    p += LaurentPoly::monomial(Rational(small(r, -7, 7), small(r, 1, 4)), static_cast<int>(small(r, -3, 3)));
  }
  return p;
}

inline MultiGraph permuted(const MultiGraph& g, std::mt19937_64& r) {
  std::vector<std::size_t> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), r);
  MultiGraph h = relabel_vertices(g, perm);
  std::vector<Edge> edges = h.edges();
  std::shuffle(edges.begin(), edges.end(), r);
  for (auto& e : edges) {
    if (r() & 1) std::swap(e.u, e.v);
  }
  return MultiGraph(h.vertex_count(), edges);
}

// Replaces edge e by a path of two edges through a new vertex.
inline MultiGraph subdivide(const MultiGraph& g, std::size_t e) {
  MultiGraph h(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (i != e) h.add_edge(g.edges()[i].u, g.edges()[i].v);
  }
  const std::size_t w = h.add_vertex();
  h.add_edge(g.edges()[e].u, w);
  h.add_edge(w, g.edges()[e].v);
  return h;
}

// Random graph in the closure of the reduction rules: grown from an edge by
// parallel and series moves, pendant edges, loops and one-point joins.
inline MultiGraph random_series_parallel(std::mt19937_64& r, std::size_t max_edges) {
  MultiGraph g(2);
  g.add_edge(0, 1);
  while (g.edge_count() < max_edges) {
    const std::size_t e = r() % g.edge_count();
    switch (r() % 6) {
      case 0:
      case 1:
        if (!g.edges()[e].is_loop()) g = multiply_edge(g, e, 2);
        break;
      case 2:
      case 3:
        g = subdivide(g, e);
        break;
      case 4: {
        const std::size_t w = g.add_vertex();
        g.add_edge(r() % (g.vertex_count() - 1), w);
        break;
      }
      default: {
        const std::size_t v = r() % g.vertex_count();
        if (r() % 2) {
          g.add_edge(v, v);
        } else {
          g = one_point_join(g, v, complete_graph(3), 0);
        }
        break;
      }
    }
  }
  return g;
}

// Brute-force isomorphism over all vertex bijections.
inline bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const std::size_t n = a.vertex_count();
  auto matrix = [n](const MultiGraph& g, const std::vector<std::size_t>& p) {
    std::vector<std::size_t> m(n * n, 0);
    for (const auto& e : g.edges()) {
      const std::size_t u = p[e.u], v = p[e.v];
      ++m[u * n + v];
      if (u != v) ++m[v * n + u];
    }
    return m;
  };
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  const auto target = matrix(b, id);
  std::vector<std::size_t> p = id;
  do {
    if (matrix(a, p) == target) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace testutil

#endif
