#include "graphmotive/tutte.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace graphmotive {

namespace {

MemoTable<BiPoly>& memo() {
  static MemoTable<BiPoly> table;
  return table;
}

BiPoly tutte_rec(const MultiGraph& raw) {
  const MultiGraph g = without_isolated_vertices(raw);
  if (g.edge_count() == 0) return 1;
  const CanonicalKey key = canonical_key(g);
  if (auto hit = memo().find(key)) return *hit;

  BiPoly factor = 1;
  MultiGraph cur = g;
  // Peel loops and bridges; each contributes a monomial factor.
  for (bool changed = true; changed && cur.edge_count() > 0;) {
    changed = false;
    for (std::size_t e = 0; e < cur.edge_count(); ++e) {
      const EdgeKind k = classify_edge(cur, e);
      if (k == EdgeKind::Loop) {
        factor *= BiPoly::y();
        cur = delete_edge(cur, e).graph;
      } else if (k == EdgeKind::Bridge) {
        factor *= BiPoly::x();
        cur = contract_edge(cur, e).graph;
      } else {
        continue;
      }
      changed = true;
      break;
    }
  }
  BiPoly value;
  if (cur.edge_count() == 0) {
    value = factor;
  } else {
    value = factor * (tutte_rec(delete_edge(cur, 0).graph) + tutte_rec(contract_edge(cur, 0).graph));
  }
  return memo().insert(key, std::move(value));
}

BiPoly geometric_y(std::size_t m) {
  BiPoly s;
  for (std::size_t k = 0; k < m; ++k) s += BiPoly::monomial(1, 0, static_cast<unsigned>(k));
  return s;
}

}  // namespace

void clear_tutte_memo() { memo().clear(); }

BiPoly tutte(const MultiGraph& g) {
  if (g.edge_count() > limits().max_edges) {
    throw GuardError("tutte: " + std::to_string(g.edge_count()) + " edges exceeds the guard of " +
                     std::to_string(limits().max_edges));
  }
  return tutte_rec(g);
}

BiPoly tutte_states(const MultiGraph& g) {
  const std::size_t n = g.edge_count();
  if (n > limits().max_state_edges) {
    throw GuardError("tutte_states: " + std::to_string(n) + " edges exceeds the guard of " +
                     std::to_string(limits().max_state_edges));
  }
  const std::size_t b0 = stats(g).b0;
  std::map<std::pair<unsigned, unsigned>, Integer> counts;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    MultiGraph sub(g.vertex_count());
    for (std::size_t e = 0; e < n; ++e) {
      if (mask >> e & 1) sub.add_edge(g.edges()[e].u, g.edges()[e].v);
    }
    const GraphStats s = stats(sub);
    counts[{static_cast<unsigned>(s.b0 - b0), static_cast<unsigned>(s.b1)}] += 1;
  }
  const BiPoly xm = BiPoly::x() - BiPoly(1), ym = BiPoly::y() - BiPoly(1);
  BiPoly total;
  for (const auto& [e, c] : counts) total += BiPoly(c) * xm.pow(e.first) * ym.pow(e.second);
  return total;
}

IntPoly chromatic(const MultiGraph& g) {
  const GraphStats s = stats(g);
  const IntPoly lambda = IntPoly::variable();
  IntPoly value = tutte(g).evaluate<IntPoly>(IntPoly(1) - lambda, IntPoly(0));
  value = value * lambda.pow(static_cast<unsigned>(s.b0));
  if ((g.vertex_count() - s.b0) % 2 == 1) value = -value;
  return value;
}

BiPoly tutte_multiedge(const MultiGraph& g, std::size_t e, std::size_t m) {
  const EdgeKind kind = classify_edge(g, e);
  const BiPoly t_del = tutte(delete_edge(g, e).graph);
  switch (kind) {
    case EdgeKind::Loop:
      return BiPoly::y().pow(static_cast<unsigned>(m)) * t_del;
    case EdgeKind::Bridge:
      if (m == 0) return t_del;
      return (BiPoly::x() + geometric_y(m) - BiPoly(1)) * t_del;
    case EdgeKind::Regular:
      break;
  }
  return t_del + geometric_y(m) * tutte(contract_edge(g, e).graph);
}

SeriesTrunc<BiPoly> tutte_multiedge_series(const MultiGraph& g, std::size_t e, SeriesKind kind,
                                           std::size_t order) {
  using S = SeriesTrunc<BiPoly>;
  const EdgeKind ek = classify_edge(g, e);
  const BiPoly x = BiPoly::x(), y = BiPoly::y(), one(1);
  const BiPoly t_del = tutte(delete_edge(g, e).graph);

  if (kind == SeriesKind::Exponential) {
    const S es = S::exp_of(one, order), eys = S::exp_of(y, order);
    // (e^{ys} - e^{s}) / (y - 1) has terms 1 + y + ... + y^{m-1}.
    const S geo = (eys - es).divided_by(y - one);
    switch (ek) {
      case EdgeKind::Loop:
        return eys.scaled(t_del);
      case EdgeKind::Bridge:
        return ((es - S::constant(kind, one, order)).scaled(x - one) + geo + S::constant(kind, one, order))
            .scaled(t_del);
      case EdgeKind::Regular:
        return es.scaled(t_del) + geo.scaled(tutte(contract_edge(g, e).graph));
    }
  }
  const S inv1 = S::geometric(one, order);  // 1/(1-s)
  const S invy = S::geometric(y, order);    // 1/(1-ys)
  const S s = S::s_series(kind, order);
  switch (ek) {
    case EdgeKind::Loop:
      return invy.scaled(t_del);
    case EdgeKind::Bridge:
      return ((s * inv1).scaled(x - one) + s * inv1 * invy + S::constant(kind, one, order)).scaled(t_del);
    case EdgeKind::Regular:
      break;
  }
  return inv1.scaled(t_del) + (s * inv1 * invy).scaled(tutte(contract_edge(g, e).graph));
}

}  // namespace graphmotive
