#include "graphmotive/hopf.hpp"

#include <algorithm>

namespace graphmotive {

GraphMonomial monomial_product(const GraphMonomial& a, const GraphMonomial& b) {
  GraphMonomial r;
  r.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

void GraphLinearComb::add(const GraphMonomial& m, const Integer& c) {
  if (c == 0) return;
  auto& slot = terms[m];
  slot += c;
  if (slot == 0) terms.erase(m);
}

void GraphTensorSum::add(const GraphMonomial& l, const GraphMonomial& r, const Integer& c) {
  if (c == 0) return;
  auto key = std::make_pair(l, r);
  auto& slot = terms[key];
  slot += c;
  if (slot == 0) terms.erase(key);
}

void GraphTripleSum::add(const GraphMonomial& a, const GraphMonomial& b, const GraphMonomial& c, const Integer& k) {
  if (k == 0) return;
  auto key = std::make_tuple(a, b, c);
  auto& slot = terms[key];
  slot += k;
  if (slot == 0) terms.erase(key);
}

CanonicalKey generator_key(const MultiGraph& g) {
  const MultiGraph h = without_isolated_vertices(g);
  if (h.edge_count() == 0 || !is_1pi(h)) throw InputError("Hopf generators must be connected 1PI graphs with edges");
  return canonical_key(h);
}

std::vector<SubgraphTerm> divergent_subgraphs(const MultiGraph& g) {
  const std::size_t n = g.edge_count();
  if (n > limits().max_coproduct_edges) {
    throw GuardError("coproduct: " + std::to_string(n) + " edges exceeds the guard of " +
                     std::to_string(limits().max_coproduct_edges));
  }
  std::vector<SubgraphTerm> out;
  for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << n); ++mask) {
    std::vector<std::size_t> edges;
    for (std::size_t e = 0; e < n; ++e) {
      if (mask >> e & 1) edges.push_back(e);
    }
    const Subgraph sub = edge_induced_subgraph(g, edges);
    SubgraphTerm t;
    bool all_1pi = true;
    for (const auto& comp : edge_components(sub.graph)) {
      if (!is_1pi(comp.graph)) {
        all_1pi = false;
        break;
      }
      t.components.push_back(comp.graph);
    }
    if (!all_1pi) continue;
    t.edges = std::move(edges);
    t.quotient = without_isolated_vertices(quotient(g, t.edges));
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

GraphMonomial monomial_of(const std::vector<MultiGraph>& parts, std::map<CanonicalKey, MultiGraph>& graphs) {
  GraphMonomial m;
  for (const auto& p : parts) {
    auto k = generator_key(p);
    graphs.try_emplace(k, p);
    m.push_back(std::move(k));
  }
  std::sort(m.begin(), m.end());
  return m;
}

MemoTable<GraphLinearComb>& antipode_memo() {
  static MemoTable<GraphLinearComb> table;
  return table;
}

}  // namespace

GraphTensorSum coproduct(const MultiGraph& g) {
  GraphTensorSum s;
  const CanonicalKey key = generator_key(g);
  s.graphs.emplace(key, g);
  s.add({key}, {}, 1);
  s.add({}, {key}, 1);
  for (const auto& t : divergent_subgraphs(g)) {
    const GraphMonomial left = monomial_of(t.components, s.graphs);
    const GraphMonomial right = monomial_of({t.quotient}, s.graphs);
    s.add(left, right, 1);
  }
  return s;
}

GraphTensorSum coproduct(const GraphMonomial& m, const std::map<CanonicalKey, MultiGraph>& graphs) {
  GraphTensorSum acc;
  acc.add({}, {}, 1);
  for (const auto& k : m) {
    const GraphTensorSum d = coproduct(graphs.at(k));
    GraphTensorSum next;
    next.graphs = acc.graphs;
    next.graphs.insert(d.graphs.begin(), d.graphs.end());
    for (const auto& [lr, c] : acc.terms) {
      for (const auto& [lr2, c2] : d.terms) {
        next.add(monomial_product(lr.first, lr2.first), monomial_product(lr.second, lr2.second), c * c2);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

GraphTripleSum coassociativity_left(const MultiGraph& g) {
  const GraphTensorSum d = coproduct(g);
  GraphTripleSum out;
  for (const auto& [lr, c] : d.terms) {
    const GraphTensorSum dl = coproduct(lr.first, d.graphs);
    for (const auto& [ab, c2] : dl.terms) out.add(ab.first, ab.second, lr.second, c * c2);
  }
  return out;
}

GraphTripleSum coassociativity_right(const MultiGraph& g) {
  const GraphTensorSum d = coproduct(g);
  GraphTripleSum out;
  for (const auto& [lr, c] : d.terms) {
    const GraphTensorSum dr = coproduct(lr.second, d.graphs);
    for (const auto& [ab, c2] : dr.terms) out.add(lr.first, ab.first, ab.second, c * c2);
  }
  return out;
}

GraphLinearComb antipode(const MultiGraph& g) {
  const CanonicalKey key = generator_key(g);
  if (auto hit = antipode_memo().find(key)) return *hit;
  GraphLinearComb s;
  s.graphs.emplace(key, g);
  s.add({key}, -1);
  for (const auto& t : divergent_subgraphs(g)) {
    const GraphMonomial right = monomial_of({t.quotient}, s.graphs);
    const GraphMonomial left = monomial_of(t.components, s.graphs);
    const GraphLinearComb sl = antipode(left, s.graphs);
    s.graphs.insert(sl.graphs.begin(), sl.graphs.end());
    for (const auto& [m, c] : sl.terms) s.add(monomial_product(m, right), -c);
  }
  return antipode_memo().insert(key, std::move(s));
}

GraphLinearComb antipode(const GraphMonomial& m, const std::map<CanonicalKey, MultiGraph>& graphs) {
  GraphLinearComb acc;
  acc.add({}, 1);
  for (const auto& k : m) {
    const GraphLinearComb sk = antipode(graphs.at(k));
    GraphLinearComb next;
    next.graphs = acc.graphs;
    next.graphs.insert(sk.graphs.begin(), sk.graphs.end());
    for (const auto& [a, ca] : acc.terms) {
      for (const auto& [b, cb] : sk.terms) next.add(monomial_product(a, b), ca * cb);
    }
    acc = std::move(next);
  }
  return acc;
}

GraphLinearComb antipode_right_convolution(const MultiGraph& g) {
  const GraphTensorSum d = coproduct(g);
  GraphLinearComb out;
  out.graphs = d.graphs;
  for (const auto& [lr, c] : d.terms) {
    const GraphLinearComb sr = antipode(lr.second, d.graphs);
    out.graphs.insert(sr.graphs.begin(), sr.graphs.end());
    for (const auto& [m, c2] : sr.terms) out.add(monomial_product(lr.first, m), c * c2);
  }
  return out;
}

GraphLinearComb antipode_left_convolution(const MultiGraph& g) {
  const GraphTensorSum d = coproduct(g);
  GraphLinearComb out;
  out.graphs = d.graphs;
  for (const auto& [lr, c] : d.terms) {
    const GraphLinearComb sl = antipode(lr.first, d.graphs);
    out.graphs.insert(sl.graphs.begin(), sl.graphs.end());
    for (const auto& [m, c2] : sl.terms) out.add(monomial_product(m, lr.second), c * c2);
  }
  return out;
}

std::string describe(const MultiGraph& g) {
  std::string s = "[";
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (e) s += ' ';
    s += g.vertex_name(g.edges()[e].u) + "-" + g.vertex_name(g.edges()[e].v);
  }
  return s + "]";
}

std::string describe(const GraphMonomial& m, const std::map<CanonicalKey, MultiGraph>& graphs) {
  if (m.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += "*";
    s += describe(graphs.at(m[i]));
  }
  return s;
}

LaurentPoly rota_baxter_polar(const LaurentPoly& x) { return x.polar_part(); }

LaurentPoly toy_character(const MultiGraph& g) {
  const GraphStats s = stats(g);
  return LaurentPoly::monomial(1, -static_cast<int>(s.b1)) *
         (LaurentPoly(1) + LaurentPoly::monomial(1, 1)).pow(static_cast<unsigned>(g.edge_count()));
}

LaurentPoly evaluate(const Character& u, const GraphMonomial& m, const std::map<CanonicalKey, MultiGraph>& graphs) {
  LaurentPoly acc(1);
  for (const auto& k : m) acc = acc * u(graphs.at(k));
  return acc;
}

namespace {

LaurentPoly counterterm(const Character& u, const MultiGraph& g, std::map<CanonicalKey, LaurentPoly>& cache,
                        LaurentPoly* bar_out) {
  const CanonicalKey key = generator_key(g);
  if (!bar_out) {
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  LaurentPoly bar = u(g);
  for (const auto& t : divergent_subgraphs(g)) {
    LaurentPoly um(1);
    for (const auto& comp : t.components) um = um * counterterm(u, comp, cache, nullptr);
    bar += um * u(t.quotient);
  }
  LaurentPoly result = -rota_baxter_polar(bar);
  cache[key] = result;
  if (bar_out) *bar_out = bar;
  return result;
}

}  // namespace

BirkhoffResult birkhoff(const Character& u, const MultiGraph& g) {
  std::map<CanonicalKey, LaurentPoly> cache;
  BirkhoffResult r;
  r.u_minus = counterterm(u, g, cache, &r.bar);
  r.u_plus = r.bar - rota_baxter_polar(r.bar);
  return r;
}

}  // namespace graphmotive
