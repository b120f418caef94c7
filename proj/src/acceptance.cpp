#include "graphmotive/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "graphmotive/corpus.hpp"
#include "graphmotive/hopf.hpp"
#include "graphmotive/kirchhoff.hpp"
#include "graphmotive/motivic.hpp"
#include "graphmotive/pointcount.hpp"
#include "graphmotive/tutte.hpp"
#include "graphmotive/universal.hpp"

namespace graphmotive {

namespace {

const IntPoly kT = IntPoly::variable();
const IntPoly kL = kT + IntPoly(1);

struct Checker {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
  bool ok() const { return failures.empty(); }
  std::string summary(const std::string& extra = {}) const {
    std::string s = std::to_string(checks) + " checks";
    if (!extra.empty()) s += ", " + extra;
    for (const auto& f : failures) s += "; FAIL " + f;
    return s;
  }
};

std::string seq_str(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// ---------------------------------------------------------------------------

std::string lemon_family(Checker& c) {
  for (std::size_t m = 0; m <= 12; ++m) {
    c.expect(lemon_class(m) == lemon_class_closed(m), "recursion vs closed form at m=" + std::to_string(m));
  }
  const IntPoly expected = kT.pow(4) * kL.pow(10) * parse_intpoly("T^3 + 6*T^2 + 9*T + 1");
  c.expect(lemon_class(8) == expected, "lemon(8) = " + lemon_class(8).str());
  for (std::size_t m = 0; m <= 8; ++m) {
    const MotivicClass mc = motivic_class(lemon_graph(m));
    c.expect(mc.provenance == Provenance::RuleDerived && mc.value == lemon_class(m),
             "rule engine on lemon graph m=" + std::to_string(m));
  }
  return "lemon(8) = " + factored_str(lemon_class(8));
}

std::string polygon_chain(Checker& c) {
  const IntPoly expected = kT.pow(4) * kL.pow(17) * parse_intpoly("T^3 + 6*T^2 + 9*T + 1");
  const std::vector<std::vector<std::size_t>> comps = {
      {3, 3, 3, 3, 3, 3, 3, 10}, {4, 4, 4, 4, 4, 4, 4, 3}, {3, 4, 5, 3, 4, 5, 3, 4}};
  for (const auto& sides : comps) {
    std::size_t total = 0;
    for (auto r : sides) total += r;
    c.expect(sides.size() == 8 && total == 31, "composition " + seq_str(sides) + " is not 8 polygons with 31 sides");
    c.expect(polygon_chain_class(sides) == expected, "chain formula on " + seq_str(sides));
    const MultiGraph g = polygon_chain_graph(sides);
    c.expect(g.edge_count() == 24, "chain graph " + seq_str(sides) + " has " + std::to_string(g.edge_count()) + " edges");
    const MotivicClass mc = motivic_class(g);
    c.expect(mc.provenance == Provenance::RuleDerived && mc.value == expected, "rule engine on chain " + seq_str(sides));
  }
  const std::vector<std::size_t> triangles(8, 3);
  const MotivicClass mc = motivic_class(polygon_chain_graph(triangles));
  c.expect(mc.provenance == Provenance::RuleDerived && mc.value == polygon_chain_class(triangles),
           "all-triangle chain vs rule engine");
  c.expect(canonical_key(polygon_chain_graph({3, 3})) == canonical_key(lemon_graph(2)), "chain(3,3) is lemon(2)");
  return "class " + factored_str(expected);
}

std::string banana_family(Checker& c) {
  const auto rep = motivic_rep();
  const auto table = coefficient_table(rep, 6);
  const EdgeBases b2{banana_class(2), banana_class(1), kT};  // banana(2), edge, loop
  const EdgeBases bridge{kL, IntPoly(1), IntPoly(0)};
  const auto exp_series = multiplied_edge_series(bridge, EdgeKind::Bridge, SeriesKind::Exponential, 6);
  const auto ord_series = multiplied_edge_series(bridge, EdgeKind::Bridge, SeriesKind::Ordinary, 6);
  for (std::size_t m = 0; m <= 6; ++m) {
    const IntPoly v = banana_class(m);
    const std::string ms = std::to_string(m);
    if (m >= 1) {
      c.expect(banana_class_derivative_form(m) == v, "derivative form at m=" + ms);
      const auto& k = table[m - 1];
      c.expect(k.f * b2.whole + k.g * b2.deleted + k.h * b2.contracted == v, "universal motivic rep at m=" + ms);
    }
    c.expect(exp_series[m] == v, "exponential bridge series term " + ms);
    c.expect(ord_series[m] == v, "ordinary bridge series term " + ms);
    const MotivicClass mc = motivic_class(banana_graph(m));
    c.expect(mc.provenance == Provenance::RuleDerived && mc.value == v, "rule engine at m=" + ms);
  }
  const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13};
  for (std::size_t m = 1; m <= 5; ++m) {
    c.expect(verify_class(banana_class(m), banana_graph(m), primes).ok,
             "point count of banana(" + std::to_string(m) + ")");
  }
  return "banana(6) = " + banana_class(6).str();
}

std::vector<CorpusEntry> delcon_corpus() {
  std::vector<CorpusEntry> out;
  const std::set<std::string> names = {"triangle",  "square",   "banana(2)", "banana(3)", "banana(4)",       "banana(5)",
                                       "lemon(1)",  "lemon(2)", "lemon(3)",  "k4",        "doubled-triangle"};
  for (auto& e : corpus()) {
    if (names.count(e.name)) out.push_back(e);
  }
  return out;
}

std::string deletion_contraction(Checker& c) {
  std::size_t edges = 0;
  for (const auto& entry : delcon_corpus()) {
    if (entry.graph.edge_count() > 7) continue;
    for (std::size_t e = 0; e < entry.graph.edge_count(); ++e) {
      if (classify_edge(entry.graph, e) != EdgeKind::Regular) continue;
      const DelconReport r = verify_delcon(entry.graph, e, {2, 3, 5});
      c.expect(r.ok, entry.name + " edge " + std::to_string(e + 1));
      ++edges;
    }
  }
  return std::to_string(edges) + " regular edges";
}

std::string master_consistency(Checker& c) {
  std::size_t derived = 0, unknown = 0;
  for (const auto& entry : corpus()) {
    const MotivicClass mc = motivic_class(entry.graph);
    if (mc.provenance != Provenance::RuleDerived) {
      ++unknown;
      continue;
    }
    ++derived;
    c.expect(verify_class(mc.value, entry.graph, {2, 3, 5, 7}).ok, entry.name);
  }
  c.expect(derived > 0, "no rule-derived classes");
  return std::to_string(derived) + " rule-derived classes, " + std::to_string(unknown) + " unknown";
}

std::string tutte_checks(Checker& c, std::mt19937_64& rng) {
  std::vector<MultiGraph> graphs;
  for (const auto& e : corpus()) graphs.push_back(e.graph);
  for (int i = 0; i < 200; ++i) graphs.push_back(random_multigraph(rng, 5, 6));
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    c.expect(tutte(graphs[i]) == tutte_states(graphs[i]), "recursion vs state sum on graph " + std::to_string(i));
  }
  c.expect(tutte(complete_graph(3)).str() == "x^2 + x + y", "triangle Tutte polynomial");
  for (const auto& entry : corpus()) {
    for (std::size_t e = 0; e < entry.graph.edge_count(); ++e) {
      const auto ord = tutte_multiedge_series(entry.graph, e, SeriesKind::Ordinary, 5);
      const auto ex = tutte_multiedge_series(entry.graph, e, SeriesKind::Exponential, 5);
      for (std::size_t m = 0; m <= 5; ++m) {
        const BiPoly direct = tutte(multiply_edge(entry.graph, e, m));
        const std::string where = entry.name + " edge " + std::to_string(e + 1) + " m=" + std::to_string(m);
        c.expect(tutte_multiedge(entry.graph, e, m) == direct, "closed form on " + where);
        c.expect(ord[m] == direct && ex[m] == direct, "series on " + where);
      }
    }
  }
  std::size_t colored = 0;
  for (const auto& g : graphs) {
    if (g.vertex_count() > 6) continue;
    const IntPoly p = chromatic(g);
    for (unsigned lambda = 0; lambda <= 5; ++lambda) {
      c.expect(p(Integer(lambda)) == count_colorings(g, lambda), "chromatic at lambda=" + std::to_string(lambda));
    }
    ++colored;
  }
  return std::to_string(graphs.size()) + " graphs, " + std::to_string(colored) + " colored";
}

std::string euler_checks(Checker& c) {
  std::size_t series = 0, lemonades = 0;
  for (const auto& entry : corpus()) {
    const MultiGraph& g = entry.graph;
    if (is_forest(g) || motivic_class(g).provenance != Provenance::RuleDerived) continue;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (classify_edge(g, e) != EdgeKind::Regular) continue;
      const std::string where = entry.name + " edge " + std::to_string(e + 1);
      const Integer chi = euler_char(g);
      const Integer chi_con = euler_char(contract_edge(g, e).graph);
      const bool del_forest = is_forest(delete_edge(g, e).graph);
      if (!del_forest) {
        const auto s = euler_multiedge_series(g, e, 5);
        for (std::size_t m = 0; m <= 5; ++m) {
          const Integer from_class = euler_char(multiplied_edge_class(g, e, m).value, false);
          c.expect(s[m] == from_class, "Euler series term " + std::to_string(m) + " on " + where);
        }
        ++series;
      }
      const EdgeBases bases = edge_bases(g, e);
      const auto classes = lemonade_series(bases, 5);
      const auto chis = lemonade_euler_series(EulerBases{chi, 0, chi_con}, 5);
      for (std::size_t m = 0; m <= 5; ++m) {
        const MotivicClass direct = motivic_class(lemonade_graph(g, e, m));
        const std::string tag = " m=" + std::to_string(m) + " on " + where;
        c.expect(direct.provenance == Provenance::RuleDerived && direct.value == classes[m], "lemonade class" + tag);
        if (del_forest) continue;
        c.expect(chis[m] == euler_char(direct.value, false), "lemonade Euler term" + tag);
        if (m > 1) c.expect(chis[m] == 0, "lemonade Euler term nonzero" + tag);
      }
      ++lemonades;
    }
  }
  return std::to_string(series) + " multiplied-edge series, " + std::to_string(lemonades) + " lemonade series";
}

template <class R>
void check_rep(Checker& c, const Rep3<R>& rep, const std::string& name) {
  for (std::size_t m = 0; m <= 6; ++m) {
    for (std::size_t n = 0; n <= 6; ++n) {
      c.expect(rep_matrix(rep, m + n) == rep_matrix(rep, m) * rep_matrix(rep, n),
               name + " monoid law at " + std::to_string(m) + "+" + std::to_string(n));
    }
  }
  c.expect(rep_matrix(rep, 0) == mat_identity<R>(), name + " A_0 is the identity");
  const auto t = coefficient_table(rep, 11);
  c.expect(t[0].f == R(0) && t[1].f == R(1) && t[0].g == R(1) && t[1].g == R(0) && t[0].h == R(0) &&
               t[1].h == R(0),
           name + " seed conditions");
  for (std::size_t m = 0; m <= 10; ++m) {
    const auto a = rep_matrix(rep, m);
    c.expect(a[0][1] == t[m + 1].g && a[1][1] == t[m + 1].f && a[2][1] == t[m + 1].h,
             name + " column extraction at m=" + std::to_string(m));
    if (m <= 8) c.expect(a == matrix_from_coefficients(rep, m), name + " matrix shape at m=" + std::to_string(m));
  }
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t r = 1; r <= 4; ++r) {
      const auto cert = divisibility_check(rep, m, r);
      c.expect(cert.ok, name + " f_" + std::to_string(m) + " | f_" + std::to_string(r * m) + ": " + cert.detail);
    }
  }
}

std::string universal_checks(Checker& c) {
  check_rep(c, motivic_rep(), "motivic");
  check_rep(c, tutte_rep(), "tutte");
  check_rep(c, csm_rep(), "csm");
  const auto t = coefficient_table(motivic_rep(), 10);
  for (std::size_t m = 0; m <= 10; ++m) {
    const IntPoly sign(m % 2 == 0 ? 1 : -1);
    const std::string ms = std::to_string(m);
    c.expect(t[m].f == t[m].g - sign, "f_m = g_m - (-1)^m at m=" + ms);
    c.expect(t[m].h == kL * t[m].g.derivative(), "h_m = (T+1) g_m' at m=" + ms);
    const FGH closed = multiplied_edge_coefficients(m);
    c.expect(closed.f == t[m].f && closed.g == t[m].g && closed.h == t[m].h, "closed forms at m=" + ms);
  }
  const auto tt = coefficient_table(tutte_rep(), 8);
  BiPoly geo;
  for (std::size_t m = 0; m <= 8; ++m) {
    c.expect(tt[m].f + tt[m].g == BiPoly(1) && tt[m].f + tt[m].h == geo, "Tutte rep vs closed form at m=" + std::to_string(m));
    geo += BiPoly::monomial(1, 0, static_cast<unsigned>(m));
  }
  // Closed forms in the roots of l^2 = f2 l + g2 at sample points.
  for (long v = -3; v <= 4; ++v) {
    const Rational tv(v);
    for (std::size_t m = 0; m <= 10; ++m) {
      for (const auto& rep : {motivic_rep(), csm_rep()}) {
        c.expect(lambda_roots_check(rep.f2.eval(tv), rep.g2.eval(tv), m).ok, "lambda closed form at T=" + std::to_string(v));
      }
    }
  }
  c.expect(lambda_roots_check(2, -1, 5).degenerate, "degenerate discriminant path");
  return "three instantiations";
}

std::string csm_checks(Checker& c, const std::string& fixture_path) {
  std::ifstream in(fixture_path);
  if (!in) {
    c.expect(false, "cannot open fixture " + fixture_path);
    return {};
  }
  const auto fixture = nlohmann::json::parse(in);
  const auto values = evaluate_csm_fixture(fixture);
  const IntPoly got = values.at(fixture.at("target").get<std::string>());
  const IntPoly expected = parse_intpoly(fixture.at("expected").get<std::string>());
  c.expect(got == expected, "doubled-edge triangle prediction " + got.str());
  c.expect(expected == parse_intpoly("T^6 + 2*T^5 + 8*T^4 + 2*T^3 + T^2 - T"), "fixture target value");
  const SeriesTriple s = csm_series(10);
  c.expect(satisfies_diffeq(csm_rep(), s), "differential recurrences through order 10");
  const auto t = coefficient_table(csm_rep(), 10);
  for (std::size_t m = 0; m <= 10; ++m) {
    c.expect(s.F[m] == t[m].f && s.G[m] == t[m].g && s.H[m] == t[m].h, "closed series vs recursion at m=" + std::to_string(m));
  }
  return "prediction " + got.str();
}

LaurentPoly random_laurent(std::mt19937_64& rng) {
  LaurentPoly p;
  const int terms = static_cast<int>(rng() % 5);
  for (int i = 0; i < terms; ++i) {
    const int e = static_cast<int>(rng() % 9) - 4;
    const long num = static_cast<long>(rng() % 21) - 10;
    const long den = static_cast<long>(rng() % 4) + 1;
    p += LaurentPoly::monomial(Rational(num, den), e);
  }
  return p;
}

std::string hopf_checks(Checker& c, std::mt19937_64& rng) {
  std::size_t graphs = 0;
  for (const auto& entry : corpus()) {
    const MultiGraph& g = entry.graph;
    if (g.edge_count() > 5 || g.edge_count() == 0 || !is_1pi(g)) continue;
    ++graphs;
    const BirkhoffResult b = birkhoff(toy_character, g);
    c.expect(b.u_plus.polar_part().is_zero(), "U+ has a pole on " + entry.name);
    c.expect(b.u_minus.regular_part().is_zero(), "U- has a regular part on " + entry.name);
    LaurentPoly rhs = b.u_minus + toy_character(g);
    for (const auto& t : divergent_subgraphs(g)) {
      LaurentPoly um(1);
      for (const auto& comp : t.components) um = um * birkhoff(toy_character, comp).u_minus;
      rhs += um * toy_character(t.quotient);
    }
    c.expect(b.u_plus == rhs, "factorization identity on " + entry.name);
    c.expect(antipode_right_convolution(g).is_zero(), "m(id x S) Delta on " + entry.name);
    c.expect(antipode_left_convolution(g).is_zero(), "m(S x id) Delta on " + entry.name);
  }
  std::vector<MultiGraph> coassoc = {banana_graph(2), banana_graph(3), banana_graph(4),
                                     multiply_edge(complete_graph(3), 0, 2)};
  for (const auto& g : coassoc) {
    c.expect(coassociativity_left(g).terms == coassociativity_right(g).terms, "coassociativity on " + describe(g));
  }
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly x = random_laurent(rng), y = random_laurent(rng);
    const auto R = rota_baxter_polar;
    c.expect(R(x) * R(y) == R(x * R(y)) + R(R(x) * y) - R(x * y), "Rota-Baxter identity on pair " + std::to_string(i));
  }
  return std::to_string(graphs) + " 1PI graphs";
}

std::string interpolation_check(Checker& c) {
  const MultiGraph k4 = complete_graph(4);
  c.expect(motivic_class(k4).provenance == Provenance::Unknown, "K4 should be outside the rule engine");
  const ClassCandidate cand = interpolate_class(k4, {2, 3, 5, 7, 11, 13, 17}, 19);
  c.expect(cand.exact_fit, "K4 interpolation: " + cand.reason);
  c.expect(cand.poly.degree() <= 6, "degree bound");
  c.expect(cand.poly.coeff(0) == 0, "divisible by T");
  return "K4 candidate " + cand.poly.str();
}

}  // namespace

Integer count_colorings(const MultiGraph& g, unsigned lambda) {
  const std::size_t n = g.vertex_count();
  if (lambda == 0) return n == 0 ? 1 : 0;
  std::vector<unsigned> color(n, 0);
  Integer count = 0;
  while (true) {
    bool proper = true;
    for (const auto& e : g.edges()) {
      if (color[e.u] == color[e.v]) {
        proper = false;
        break;
      }
    }
    if (proper) count += 1;
    std::size_t i = 0;
    while (i < n && ++color[i] == lambda) color[i++] = 0;
    if (i == n) break;
  }
  return count;
}

std::map<std::string, IntPoly> evaluate_csm_fixture(const nlohmann::json& fixture) {
  std::map<std::string, IntPoly> values;
  for (const auto& [name, text] : fixture.at("external_inputs").items()) {
    values[name] = parse_intpoly(text.get<std::string>());
  }
  auto get = [&](const nlohmann::json& key) -> const IntPoly& {
    auto it = values.find(key.get<std::string>());
    if (it == values.end()) throw InputError("fixture refers to unknown value " + key.get<std::string>());
    return it->second;
  };
  for (const auto& step : fixture.at("steps")) {
    const std::string name = step.at("name").get<std::string>();
    if (step.contains("product")) {
      IntPoly p(1);
      for (const auto& f : step.at("product")) p *= get(f);
      values[name] = p;
    } else {
      values[name] = csm_predict(get(step.at("whole")), get(step.at("deleted")), get(step.at("contracted")),
                                 step.at("m").get<std::size_t>());
    }
  }
  return values;
}

std::string format_result(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs/%.0fs", r.seconds, r.limit_seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + " (" + buf +
         "): " + r.detail;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  struct Spec {
    int id;
    const char* name;
    double limit;
    std::function<std::string(Checker&)> body;
  };
  const std::vector<Spec> specs = {
      {1, "lemon family", 1, lemon_family},
      {2, "polygon chains", 5, polygon_chain},
      {3, "banana family", 60, banana_family},
      {4, "deletion-contraction by point counts", 120, deletion_contraction},
      {5, "rule-derived classes vs point counts", 120, master_consistency},
      {6, "Tutte polynomial", 60, [&](Checker& c) { return tutte_checks(c, rng); }},
      {7, "Euler characteristics", 10, euler_checks},
      {8, "universal recursion", 10, universal_checks},
      {9, "CSM prediction engine", 1, [&](Checker& c) { return csm_checks(c, opts.csm_fixture); }},
      {10, "Hopf algebra and Birkhoff factorization", 10, [&](Checker& c) { return hopf_checks(c, rng); }},
      {11, "interpolation fallback on K4", 300, interpolation_check},
  };
  std::vector<CriterionResult> out;
  for (const auto& s : specs) {
    if (!opts.only.empty() && !opts.only.count(s.id)) continue;
    CriterionResult r;
    r.id = s.id;
    r.name = s.name;
    r.limit_seconds = s.limit;
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    std::string extra;
    try {
      extra = s.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.passed = c.ok() && r.seconds < r.limit_seconds;
    r.detail = c.summary(extra);
    if (r.seconds >= r.limit_seconds) r.detail += "; over time limit";
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace graphmotive
