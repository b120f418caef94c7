#include "graphmotive/kirchhoff.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphmotive {

namespace {

class ForestEnumerator {
 public:
  explicit ForestEnumerator(const MultiGraph& g)
      : g_(g), comp_(g.vertex_count()), result_(g.edge_count()) {
    std::iota(comp_.begin(), comp_.end(), 0);
    needed_ = g.vertex_count() - stats(g).b0;
  }

  EdgePoly run() {
    const EdgePoly::Mask all = g_.edge_count() == 32 ? ~EdgePoly::Mask{0}
                                                     : (EdgePoly::Mask{1} << g_.edge_count()) - 1;
    recurse(0, 0, all);
    return std::move(result_);
  }

 private:
  // comp_ holds a component label per vertex; merging relabels, and the
  // caller restores the saved copy on backtrack.
  void recurse(std::size_t e, std::size_t forest_size, EdgePoly::Mask complement) {
    if (forest_size == needed_) {
      add(complement);
      return;
    }
    if (e == g_.edge_count() || forest_size + (g_.edge_count() - e) < needed_) return;
    const Edge& ed = g_.edges()[e];
    const std::size_t cu = comp_[ed.u], cv = comp_[ed.v];
    if (cu != cv) {
      const auto saved = comp_;
      for (auto& c : comp_) {
        if (c == cv) c = cu;
      }
      recurse(e + 1, forest_size + 1, complement & ~(EdgePoly::Mask{1} << e));
      comp_ = saved;
    }
    recurse(e + 1, forest_size, complement);
  }

  void add(EdgePoly::Mask complement) {
    if (result_.terms().count(complement)) throw std::logic_error("spanning forest enumerated twice");
    result_.add_term(complement, 1);
  }

  const MultiGraph& g_;
  std::vector<std::size_t> comp_;
  std::size_t needed_ = 0;
  EdgePoly result_;
};

// Fraction-free Gaussian elimination.
Integer bareiss_determinant(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

Integer spanning_forest_count(const MultiGraph& g) {
  auto [label, count] = component_labels(g);
  Integer total = 1;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<std::size_t> verts;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (label[v] == c) verts.push_back(v);
    }
    std::vector<std::size_t> local(g.vertex_count(), 0);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = i;
    // Laplacian with the first vertex's row and column removed.
    const std::size_t k = verts.size() - 1;
    std::vector<std::vector<Integer>> lap(k, std::vector<Integer>(k, 0));
    for (const auto& e : g.edges()) {
      if (e.is_loop() || label[e.u] != c) continue;
      const std::size_t a = local[e.u], b = local[e.v];
      if (a > 0) lap[a - 1][a - 1] += 1;
      if (b > 0) lap[b - 1][b - 1] += 1;
      if (a > 0 && b > 0) {
        lap[a - 1][b - 1] -= 1;
        lap[b - 1][a - 1] -= 1;
      }
    }
    total *= bareiss_determinant(std::move(lap));
  }
  return total;
}

KirchhoffResult psi(const MultiGraph& g) {
  if (g.edge_count() > limits().max_edges) {
    throw GuardError("psi: " + std::to_string(g.edge_count()) + " edges exceeds the guard of " +
                     std::to_string(limits().max_edges));
  }
  KirchhoffResult r;
  r.loop_number = stats(g).b1;
  r.psi = ForestEnumerator(g).run();
  for (const auto& [m, c] : r.psi.terms()) {
    if (c != 1) throw std::logic_error("Kirchhoff polynomial has a coefficient other than 1");
  }
  if (Integer(r.psi.term_count()) != spanning_forest_count(g)) {
    throw std::logic_error("spanning forest enumeration disagrees with the matrix-tree count");
  }
  return r;
}

DelConSplit deletion_contraction_split(const EdgePoly& p, std::size_t e) {
  DelConSplit s;
  s.F = p.partial_derivative(e);
  s.G = p.set_zero(e);
  s.F_zero = s.F.is_zero();
  s.G_zero = s.G.is_zero();
  return s;
}

DelConSplit deletion_contraction_split(const MultiGraph& g, std::size_t e) {
  g.check_edge(e);
  return deletion_contraction_split(psi(g).psi, e);
}

}  // namespace graphmotive
