#include "graphmotive/motivic.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

namespace graphmotive {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::RuleDerived: return "rule-derived";
    case Provenance::Interpolated: return "interpolated";
    case Provenance::Unknown: return "unknown";
  }
  return "?";
}

std::map<std::string, std::size_t> MotivicClass::trace_counts() const {
  std::map<std::string, std::size_t> out;
  for (const auto& r : rule_trace) ++out[r];
  return out;
}

namespace {

const IntPoly kT = IntPoly::variable();
const IntPoly kL = IntPoly::variable() + IntPoly(1);

MemoTable<IntPoly>& memo() {
  static MemoTable<IntPoly> table;
  return table;
}

enum class RuleKind { Loop, Bridge, CutVertex, Series, Parallel };

struct Rule {
  RuleKind kind;
  std::size_t a = 0;  // edge, or the degree-2 vertex for Series
  std::size_t b = 0;  // second edge of a parallel pair
};

// Rules in priority order; with collect_all false the scan stops at the
// first hit.
std::vector<Rule> applicable_rules(const MultiGraph& g, bool collect_all) {
  std::vector<Rule> out;
  auto done = [&] { return !collect_all && !out.empty(); };
  for (std::size_t e = 0; e < g.edge_count() && !done(); ++e) {
    if (g.edges()[e].is_loop()) out.push_back({RuleKind::Loop, e});
  }
  for (std::size_t e = 0; e < g.edge_count() && !done(); ++e) {
    if (!g.edges()[e].is_loop() && classify_edge(g, e) == EdgeKind::Bridge) out.push_back({RuleKind::Bridge, e});
  }
  if (!done() && blocks(g).size() > 1) out.push_back({RuleKind::CutVertex});
  for (std::size_t v = 0; v < g.vertex_count() && !done(); ++v) {
    if (g.degree(v) != 2) continue;
    std::size_t incident = 0;
    bool loop = false;
    for (const auto& e : g.edges()) {
      if (e.u == v || e.v == v) {
        ++incident;
        loop = loop || e.is_loop();
      }
    }
    if (incident == 2 && !loop) out.push_back({RuleKind::Series, v});
  }
  for (std::size_t e = 0; e < g.edge_count() && !done(); ++e) {
    const Edge& x = g.edges()[e];
    if (x.is_loop()) continue;
    for (std::size_t f = e + 1; f < g.edge_count() && !done(); ++f) {
      const Edge& y = g.edges()[f];
      if ((x.u == y.u && x.v == y.v) || (x.u == y.v && x.v == y.u)) out.push_back({RuleKind::Parallel, e, f});
    }
  }
  return out;
}

// Replaces the two edges at degree-2 vertex v by one edge between their
// other endpoints.
MultiGraph suppress_vertex(const MultiGraph& g, std::size_t v) {
  std::vector<std::size_t> ends;
  MultiGraph r;
  std::vector<std::size_t> image(g.vertex_count());
  for (std::size_t w = 0; w < g.vertex_count(); ++w) {
    if (w != v) image[w] = r.add_vertex(g.vertex_name(w));
  }
  for (const auto& e : g.edges()) {
    if (e.u == v) {
      ends.push_back(e.v);
    } else if (e.v == v) {
      ends.push_back(e.u);
    } else {
      r.add_edge(image[e.u], image[e.v]);
    }
  }
  r.add_edge(image[ends.at(0)], image[ends.at(1)]);
  return r;
}

class Engine {
 public:
  explicit Engine(const EngineOptions& opts) : opts_(opts) {
    if (opts.seed) rng_.seed(*opts.seed);
  }

  std::optional<IntPoly> reduce(const MultiGraph& raw) {
    const MultiGraph g = without_isolated_vertices(raw);
    if (g.edge_count() == 0) return IntPoly(1);
    if (g.edge_count() > limits().max_rule_edges) {
      throw GuardError("motivic_class: " + std::to_string(g.edge_count()) + " edges exceeds the guard of " +
                       std::to_string(limits().max_rule_edges));
    }
    const bool memoize = opts_.use_memo && !opts_.seed && g.edge_count() <= limits().max_edges;
    CanonicalKey key;
    if (memoize) {
      key = canonical_key(g);
      if (auto hit = memo().find(key)) {
        trace.push_back("memo");
        return *hit;
      }
    }
    auto value = reduce_connected_or_split(g);
    if (value && memoize) memo().insert(key, *value);
    return value;
  }

  std::vector<std::string> trace;
  std::optional<MultiGraph> residue;

 private:
  std::optional<IntPoly> product(const std::vector<Subgraph>& parts, const char* rule) {
    trace.push_back(rule);
    IntPoly acc(1);
    for (const auto& p : parts) {
      auto v = reduce(p.graph);
      if (!v) return std::nullopt;
      acc *= *v;
    }
    return acc;
  }

  std::optional<IntPoly> times(const IntPoly& c, const MultiGraph& g) {
    auto v = reduce(g);
    if (!v) return std::nullopt;
    return c * *v;
  }

  std::optional<IntPoly> reduce_connected_or_split(const MultiGraph& g) {
    auto comps = edge_components(g);
    if (comps.size() > 1) return product(comps, "component");

    std::vector<Rule> rules = applicable_rules(g, opts_.seed.has_value());
    if (rules.empty()) {
      trace.push_back("irreducible");
      if (!residue) residue = g;
      return std::nullopt;
    }
    Rule r = rules.front();
    if (opts_.seed) r = rules[std::uniform_int_distribution<std::size_t>(0, rules.size() - 1)(rng_)];

    switch (r.kind) {
      case RuleKind::Loop:
        trace.push_back("loop");
        return times(kT, delete_edge(g, r.a).graph);
      case RuleKind::Bridge:
        trace.push_back("bridge");
        return times(kL, delete_edge(g, r.a).graph);
      case RuleKind::CutVertex:
        return product(blocks(g), "cut-vertex");
      case RuleKind::Series:
        trace.push_back("series");
        return times(kL, suppress_vertex(g, r.a));
      case RuleKind::Parallel: {
        // G is (G - e')_{2e} for the pair {e, e'}.
        trace.push_back("parallel");
        const EdgeRemap base = delete_edge(g, r.b);
        const std::size_t e = *base.edge_map[r.a];
        // {e, e'} is a 2-edge cut: a doubled bridge.
        if (classify_edge(base.graph, e) == EdgeKind::Bridge) return times(kT * kL, delete_edge(base.graph, e).graph);
        auto whole = reduce(base.graph);
        if (!whole) return std::nullopt;
        auto del = reduce(delete_edge(base.graph, e).graph);
        if (!del) return std::nullopt;
        auto con = reduce(contract_edge(base.graph, e).graph);
        if (!con) return std::nullopt;
        return (kT - IntPoly(1)) * *whole + kT * *del + kL * *con;
      }
    }
    throw std::logic_error("unhandled rule");
  }

  EngineOptions opts_;
  std::mt19937_64 rng_;
};

IntPoly minus_one_pow(std::size_t m) { return IntPoly(m % 2 == 0 ? 1 : -1); }

using S = SeriesTrunc<IntPoly>;

// 1 / ((1 + s)(1 - T s)) as an ordinary series.
S algrecur_denominator_inverse(std::size_t order) {
  std::vector<IntPoly> d(order + 1, IntPoly(0));
  d[0] = IntPoly(1);
  if (order >= 1) d[1] = IntPoly(1) - kT;
  if (order >= 2) d[2] = -kT;
  return S(SeriesKind::Ordinary, d).inverse();
}

}  // namespace

void clear_motivic_memo() { memo().clear(); }

MotivicClass motivic_class(const MultiGraph& g, const EngineOptions& opts) {
  Engine engine(opts);
  MotivicClass c;
  auto v = engine.reduce(g);
  c.rule_trace = std::move(engine.trace);
  if (v) {
    c.value = *v;
    c.provenance = Provenance::RuleDerived;
  } else {
    c.provenance = Provenance::Unknown;
    c.residue = std::move(engine.residue);
  }
  return c;
}

EdgeBases edge_bases(const MultiGraph& g, std::size_t e) {
  g.check_edge(e);
  auto get = [](const MultiGraph& h, const char* what) {
    MotivicClass c = motivic_class(h);
    if (c.provenance != Provenance::RuleDerived) {
      throw InputError(std::string("class of ") + what + " is not rule-derived");
    }
    return c.value;
  };
  return {get(g, "the graph"), get(delete_edge(g, e).graph, "the deletion"),
          get(contract_edge(g, e).graph, "the contraction")};
}

FGH multiplied_edge_coefficients(std::size_t m) {
  const unsigned mu = static_cast<unsigned>(m);
  FGH c;
  c.f = divexact(kT.pow(mu) - minus_one_pow(m), kL);
  c.g = divexact(kT.pow(mu) + minus_one_pow(m) * kT, kL);
  c.h = (m == 0 ? IntPoly(0) : IntPoly(static_cast<long>(m)) * kT.pow(mu - 1)) - c.f;
  return c;
}

IntPoly multiplied_edge_class(const EdgeBases& b, std::size_t m) {
  const FGH c = multiplied_edge_coefficients(m);
  return c.f * b.whole + c.g * b.deleted + c.h * b.contracted;
}

MotivicClass multiplied_edge_class(const MultiGraph& g, std::size_t e, std::size_t m) {
  MotivicClass c;
  c.provenance = Provenance::RuleDerived;
  switch (classify_edge(g, e)) {
    case EdgeKind::Regular:
      c.value = multiplied_edge_class(edge_bases(g, e), m);
      c.rule_trace = {"multiplied-edge"};
      return c;
    case EdgeKind::Loop:
    case EdgeKind::Bridge:
      break;
  }
  const MotivicClass del = motivic_class(delete_edge(g, e).graph);
  if (del.provenance != Provenance::RuleDerived) throw InputError("class of the deletion is not rule-derived");
  c.value = (classify_edge(g, e) == EdgeKind::Loop ? kT.pow(static_cast<unsigned>(m)) : banana_class(m)) * del.value;
  c.rule_trace = {"multiplied-edge"};
  return c;
}

SeriesTrunc<IntPoly> multiplied_edge_series(const EdgeBases& b, EdgeKind edge, SeriesKind kind,
                                            std::size_t order) {
  const IntPoly one(1);
  const S s = S::s_series(kind, order);
  if (kind == SeriesKind::Exponential) {
    const S eT = S::exp_of(kT, order), em = S::exp_of(IntPoly(-1), order);
    switch (edge) {
      case EdgeKind::Loop:
        return eT.scaled(b.deleted);
      case EdgeKind::Bridge:
        return ((eT - em).scaled(kT).divided_by(kL) + s * eT + S::constant(kind, one, order)).scaled(b.deleted);
      case EdgeKind::Regular: {
        const S F = (eT - em).divided_by(kL);
        const S G = (eT + em.scaled(kT)).divided_by(kL);
        const S H = s * eT - F;
        return F.scaled(b.whole) + G.scaled(b.deleted) + H.scaled(b.contracted);
      }
    }
  }
  const S geoT = S::geometric(kT, order);  // 1/(1 - T s)
  const S inv = algrecur_denominator_inverse(order);
  switch (edge) {
    case EdgeKind::Loop:
      return geoT.scaled(b.deleted);
    case EdgeKind::Bridge:
      return ((s * inv).scaled(kT) + s * geoT * geoT + S::constant(kind, one, order)).scaled(b.deleted);
    case EdgeKind::Regular:
      break;
  }
  const S F = s * inv;
  const S G = (s * F).scaled(kT) + S::constant(kind, one, order);
  const S H = (s * F * geoT).scaled(kL);
  return F.scaled(b.whole) + G.scaled(b.deleted) + H.scaled(b.contracted);
}

SeriesTrunc<IntPoly> multiplied_edge_series(const MultiGraph& g, std::size_t e, SeriesKind kind,
                                            std::size_t order) {
  const EdgeKind k = classify_edge(g, e);
  EdgeBases b;
  if (k == EdgeKind::Regular) {
    b = edge_bases(g, e);
  } else {
    const MotivicClass del = motivic_class(delete_edge(g, e).graph);
    if (del.provenance != Provenance::RuleDerived) throw InputError("class of the deletion is not rule-derived");
    b.deleted = del.value;
  }
  return multiplied_edge_series(b, k, kind, order);
}

IntPoly banana_class(std::size_t m) {
  if (m == 0) return 1;
  const unsigned mu = static_cast<unsigned>(m);
  return kT * divexact(kT.pow(mu) - minus_one_pow(m), kL) + IntPoly(static_cast<long>(m)) * kT.pow(mu - 1);
}

IntPoly banana_class_derivative_form(std::size_t m) {
  if (m == 0) throw InputError("derivative form needs m >= 1");
  const FGH c = multiplied_edge_coefficients(m);
  return kL * (c.f + c.g.derivative());
}

IntPoly lemon_class(std::size_t m) {
  IntPoly prev = kL;                  // Lambda_0
  if (m == 0) return prev;
  IntPoly cur = kT * kL * kL;         // Lambda_1
  const IntPoly a = kT * kL, b = kT * kL * kL;
  for (std::size_t k = 1; k < m; ++k) {
    IntPoly next = a * cur + b * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly lemon_class_closed(std::size_t m) {
  IntPoly k;
  for (std::size_t i = 0; 2 * i <= m; ++i) {
    k += IntPoly::monomial(binomial(static_cast<unsigned>(m - i), static_cast<unsigned>(i)), m - i);
  }
  return kL.pow(static_cast<unsigned>(m + 1)) * k;
}

IntPoly polygon_chain_class(const std::vector<std::size_t>& sides) {
  std::size_t total = 0;
  for (auto r : sides) {
    if (r < 3) throw InputError("polygons need at least 3 sides");
    total += r;
  }
  return kL.pow(static_cast<unsigned>(total - 3 * sides.size())) * lemon_class(sides.size());
}

SeriesTrunc<IntPoly> lemonade_series(const EdgeBases& b, std::size_t order) {
  const IntPoly f2 = kT * kL, g2 = kT * kL * kL;
  const std::size_t n = std::max<std::size_t>(order, 1);
  const S F = series_solve_order2(f2, g2, IntPoly(1), kT * kT - IntPoly(1), n);
  const S G = series_solve_order2(f2, g2, IntPoly(0), kT * kL, n);
  const S H = series_solve_order2(f2, g2, IntPoly(0), kL * kL, n);
  std::vector<IntPoly> terms;
  for (std::size_t m = 0; m <= order; ++m) terms.push_back(F[m] * b.whole + G[m] * b.deleted + H[m] * b.contracted);
  return S(SeriesKind::Ordinary, std::move(terms));
}

MultiGraph lemon_graph(std::size_t m) {
  if (m == 0) return single_edge();
  MultiGraph g(m + 2);  // vertex 0 is the hub, 1..m+1 the rim
  for (std::size_t i = 1; i <= m + 1; ++i) {
    g.add_edge(0, i);
    if (i <= m) g.add_edge(i, i + 1);
  }
  return g;
}

MultiGraph polygon_chain_graph(const std::vector<std::size_t>& sides) {
  if (sides.empty()) throw InputError("chain needs at least one polygon");
  MultiGraph g(2);
  const std::size_t hub = 0;
  std::size_t a = 1;
  g.add_edge(hub, a);
  for (auto r : sides) {
    if (r < 3) throw InputError("polygons need at least 3 sides");
    std::size_t cur = a;
    for (std::size_t k = 0; k + 2 < r; ++k) {
      const std::size_t next = g.add_vertex();
      g.add_edge(cur, next);
      cur = next;
    }
    g.add_edge(cur, hub);
    a = cur;
  }
  return g;
}

MultiGraph lemonade_graph(const MultiGraph& g, std::size_t e, std::size_t m) {
  g.check_edge(e);
  if (g.edges()[e].is_loop()) throw InputError("lemonade needs a non-loop edge");
  MultiGraph r = g;
  const auto [u, v] = g.edges()[e];
  std::size_t prev = u;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t w = r.add_vertex("w" + std::to_string(i + 1));
    r.add_edge(prev, w);
    r.add_edge(v, w);
    prev = w;
  }
  return r;
}

Integer euler_char(const IntPoly& value, bool forest) {
  if (forest) throw InputError("Euler characteristic is only defined here for graphs with loops");
  if (value.coeff(0) != 0) throw ExactDivisionError("class is not divisible by T");
  return value.coeff(1);
}

Integer euler_char(const MultiGraph& g) {
  const MotivicClass c = motivic_class(g);
  if (c.provenance != Provenance::RuleDerived) throw InputError("class is not rule-derived");
  return euler_char(c.value, is_forest(g));
}

EulerBases euler_bases(const MultiGraph& g, std::size_t e) {
  if (classify_edge(g, e) != EdgeKind::Regular) throw InputError("Euler series needs a regular edge");
  const MultiGraph del = delete_edge(g, e).graph;
  if (is_forest(del)) throw InputError("Euler series needs G - e not to be a forest");
  return {euler_char(g), euler_char(del), euler_char(contract_edge(g, e).graph)};
}

SeriesTrunc<Integer> euler_multiedge_series(const EulerBases& b, std::size_t order) {
  using SI = SeriesTrunc<Integer>;
  const SI one = SI::constant(SeriesKind::Exponential, 1, order);
  const SI em = SI::exp_of(-1, order);
  const SI s = SI::s_series(SeriesKind::Exponential, order);
  return (one - em).scaled(b.whole) + one.scaled(b.deleted) + (s - one + em).scaled(b.contracted);
}

SeriesTrunc<Integer> euler_multiedge_series(const MultiGraph& g, std::size_t e, std::size_t order) {
  return euler_multiedge_series(euler_bases(g, e), order);
}

SeriesTrunc<Integer> lemonade_euler_series(const EulerBases& b, std::size_t order) {
  using SI = SeriesTrunc<Integer>;
  const SI one = SI::constant(SeriesKind::Ordinary, 1, order);
  const SI s = SI::s_series(SeriesKind::Ordinary, order);
  return (one - s).scaled(b.whole) + s.scaled(b.contracted);
}

}  // namespace graphmotive
