#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphmotive/acceptance.hpp"
#include "graphmotive/corpus.hpp"
#include "graphmotive/hopf.hpp"
#include "graphmotive/kirchhoff.hpp"
#include "graphmotive/motivic.hpp"
#include "graphmotive/pointcount.hpp"
#include "graphmotive/tutte.hpp"
#include "graphmotive/universal.hpp"

using namespace graphmotive;
using nlohmann::json;

namespace {

struct CheckFailed {};

struct Context {
  bool as_json = false;
  std::uint64_t seed = 20090701;
  std::size_t threads = 0;
};

Context ctx;

std::string read_all(std::istream& in) {
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A file path, "-" for stdin, or an inline family spec.
MultiGraph load_graph(const std::string& source) {
  std::string text;
  if (source == "-") {
    text = read_all(std::cin);
  } else if (std::ifstream f(source); f) {
    text = read_all(f);
  } else if (auto g = family_graph(source)) {
    return *g;
  } else {
    throw InputError("no such file or family: " + source);
  }
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return graph_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw InputError(std::string("bad graph JSON: ") + e.what());
    }
  }
  return parse_text_graph(text);
}

json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::size_t edge_index(const MultiGraph& g, std::size_t one_based) {
  if (one_based == 0 || one_based > g.edge_count()) {
    throw InputError("edge id " + std::to_string(one_based) + " out of range 1.." + std::to_string(g.edge_count()));
  }
  return one_based - 1;
}

json coeff_list(const IntPoly& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.get_str());
  return a;
}

json poly_json(const IntPoly& p) { return {{"text", p.str()}, {"coefficients", coeff_list(p)}}; }

json poly_json(const BiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"x", e.first}, {"y", e.second}, {"c", c.get_str()}});
  return {{"text", p.str()}, {"terms", terms}};
}

json poly_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"z", e}, {"c", c.get_str()}});
  return {{"text", p.str()}, {"terms", terms}};
}

void emit(const json& j, const std::string& text) {
  if (ctx.as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  }
}

std::vector<std::uint64_t> parse_primes(const std::string& list) {
  std::vector<std::uint64_t> out;
  std::stringstream s(list);
  for (std::string tok; std::getline(s, tok, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("bad prime list entry: " + tok);
    }
  }
  if (out.empty()) throw InputError("empty prime list");
  return out;
}

SeriesKind series_kind(const std::string& s) {
  if (s == "exp") return SeriesKind::Exponential;
  if (s == "ord") return SeriesKind::Ordinary;
  throw InputError("series kind must be exp or ord");
}

template <class R>
std::string series_text(const SeriesTrunc<R>& s, const std::function<std::string(const R&)>& show) {
  std::string out;
  for (std::size_t m = 0; m <= s.order(); ++m) out += "m=" + std::to_string(m) + ": " + show(s[m]) + "\n";
  return out;
}

void require(bool ok) {
  if (!ok) throw CheckFailed{};
}

// Character file: {"[1-2 1-2]": {"lowest": -1, "coefficients": ["1", "0", "1/2"]}, ...}
Character character_from_file(const std::string& path) {
  const json j = load_json_file(path);
  if (!j.is_object()) throw InputError("character file must be a JSON object");
  std::map<CanonicalKey, LaurentPoly> table;
  for (const auto& [desc, val] : j.items()) {
    std::string edges = desc;
    if (edges.size() >= 2 && edges.front() == '[' && edges.back() == ']') edges = edges.substr(1, edges.size() - 2);
    std::string text;
    std::stringstream s(edges);
    for (std::string tok; s >> tok;) {
      const auto dash = tok.find('-');
      if (dash == std::string::npos) throw InputError("bad edge in character key: " + tok);
      text += tok.substr(0, dash) + " " + tok.substr(dash + 1) + "\n";
    }
    LaurentPoly p;
    int e = val.at("lowest").get<int>();
    for (const auto& c : val.at("coefficients")) {
      Rational r(c.is_string() ? c.get<std::string>() : std::to_string(c.get<long long>()));
      r.canonicalize();
      p += LaurentPoly::monomial(r, e++);
    }
    table[canonical_key(parse_text_graph(text))] = p;
  }
  return [table](const MultiGraph& g) {
    auto it = table.find(canonical_key(without_isolated_vertices(g)));
    if (it == table.end()) throw InputError("character undefined on " + describe(g));
    return it->second;
  };
}

std::string class_text(const MotivicClass& c) {
  if (c.provenance == Provenance::RuleDerived) return factored_str(c.value);
  return std::string("unknown: not reducible by the rules") +
         (c.residue ? " (irreducible piece " + describe(*c.residue) + ")" : "");
}

json class_json(const MotivicClass& c) {
  json j = {{"provenance", to_string(c.provenance)}, {"trace", c.trace_counts()}};
  if (c.provenance == Provenance::RuleDerived) {
    j["value"] = poly_json(c.value);
    j["factored"] = factored_str(c.value);
  }
  if (c.residue) j["residue"] = describe(*c.residue);
  return j;
}

void print_class(const MotivicClass& c) {
  emit(class_json(c), class_text(c));
  require(c.provenance == Provenance::RuleDerived);
}

std::string tensor_text(const GraphTensorSum& d) {
  std::string out;
  for (const auto& [lr, c] : d.terms) {
    out += c.get_str() + " " + describe(lr.first, d.graphs) + " (x) " + describe(lr.second, d.graphs) + "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph hypersurface invariants: Kirchhoff, Tutte and motivic classes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", ctx.as_json, "JSON output");
  app.add_option("--seed", ctx.seed, "seed for randomized checks");
  app.add_option("--threads", ctx.threads, "cap on counting threads");
  std::uint64_t budget = 0;
  app.add_option("--budget", budget, "maximum F_q evaluations per count");

  std::string source = "-";
  std::size_t edge = 0, mult = 0, order = 5;
  std::string series, primes = "2,3,5,7", kind = "motivic", base_file, character = "toy", sides, cls;
  std::uint64_t q = 2, holdout = 11;
  long alpha = 1, beta = 1, gamma = 1;
  std::vector<int> only;
  bool lemonade = false;
  std::string family;

  auto graph_cmd = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("graph", source, "file, - for stdin, or family spec such as banana(3)");
    return c;
  };
  auto edge_opt = [&](CLI::App* c) { c->add_option("-e,--edge", edge, "edge id (1-based)")->required(); };

  auto* c_psi = graph_cmd("psi", "Kirchhoff polynomial");
  auto* c_tutte = graph_cmd("tutte", "Tutte polynomial by deletion-contraction");
  auto* c_states = graph_cmd("tutte-states", "Tutte polynomial by the state sum");
  auto* c_chrom = graph_cmd("chromatic", "chromatic polynomial");
  auto* c_tg = graph_cmd("tg", "Tutte-Grothendieck invariant with integer alpha, beta, gamma");
  c_tg->add_option("--alpha", alpha);
  c_tg->add_option("--beta", beta);
  c_tg->add_option("--gamma", gamma);
  auto* c_tmedge = graph_cmd("tutte-medge", "Tutte polynomial with an edge multiplied");
  edge_opt(c_tmedge);
  c_tmedge->add_option("-m", mult);
  c_tmedge->add_option("--series", series, "exp or ord");
  c_tmedge->add_option("--order", order);
  auto* c_class = graph_cmd("class", "motivic class U(G) in Z[T]");
  auto* c_cmedge = graph_cmd("class-medge", "class with an edge multiplied");
  edge_opt(c_cmedge);
  c_cmedge->add_option("-m", mult);
  c_cmedge->add_option("--series", series, "exp or ord");
  c_cmedge->add_option("--order", order);
  auto* c_gen = app.add_subcommand("gen", "emit a family graph in text form");
  c_gen->add_option("family", family, "banana, lemon, chain or lemonade")->required();
  c_gen->add_option("-m", mult);
  c_gen->add_option("--sides", sides, "polygon sizes for chain, e.g. 3,4,5");
  c_gen->add_option("--base", source, "base graph for lemonade");
  c_gen->add_option("-e,--edge", edge, "base edge for lemonade (1-based)");
  auto* c_euler = graph_cmd("euler", "Euler characteristic of the complement");
  auto* c_eseries = graph_cmd("euler-series", "Euler characteristics of multiplied-edge or lemonade graphs");
  edge_opt(c_eseries);
  c_eseries->add_option("--order", order);
  c_eseries->add_flag("--lemonade", lemonade);
  auto* c_count = graph_cmd("count", "points of the complement over F_q");
  c_count->add_option("-q", q)->required();
  auto* c_interp = graph_cmd("interpolate", "class candidate from point counts");
  c_interp->add_option("--primes", primes);
  c_interp->add_option("--holdout", holdout);
  auto* c_vdelcon = graph_cmd("verify-delcon", "deletion-contraction identity by point counts");
  edge_opt(c_vdelcon);
  c_vdelcon->add_option("--primes", primes);
  auto* c_vclass = graph_cmd("verify-class", "compare a class with point counts");
  c_vclass->add_option("--primes", primes);
  c_vclass->add_option("--class", cls, "polynomial in T (default: the rule engine's class)");
  auto* c_univ = app.add_subcommand("universal", "coefficients and matrix of the universal recursion");
  c_univ->add_option("--kind", kind, "motivic, tutte or csm");
  c_univ->add_option("-m", mult);
  auto* c_csm = app.add_subcommand("csm-predict", "CSM class prediction for multiplied edges");
  c_csm->add_option("--base-file", base_file)->required();
  c_csm->add_option("-m", mult);
  auto* c_coprod = graph_cmd("coproduct", "Connes-Kreimer coproduct");
  auto* c_antip = graph_cmd("antipode", "antipode");
  auto* c_renorm = graph_cmd("renorm", "Birkhoff factorization of a character");
  c_renorm->add_option("--character", character, "toy or a JSON file");
  auto* c_corpus = app.add_subcommand("corpus", "run the acceptance suite");
  c_corpus->add_option("--only", only, "criterion ids");
  std::string fixture = std::string(GRAPHMOTIVE_DATA_DIR) + "/fixtures/csm_doubled_triangle.json";
  c_corpus->add_option("--fixture", fixture);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (budget) limits().count_budget = budget;
  if (ctx.threads) limits().threads = ctx.threads;

  try {
    if (c_psi->parsed()) {
      const MultiGraph g = load_graph(source);
      const KirchhoffResult r = psi(g);
      json mons = json::array();
      for (const auto& [mask, c] : r.psi.terms()) {
        json vars = json::array();
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
          if (mask >> i & 1) vars.push_back(i + 1);
        }
        mons.push_back(vars);
      }
      emit({{"psi", r.psi.str()}, {"monomials", mons}, {"loop_number", r.loop_number}}, r.psi.str());
    } else if (c_tutte->parsed() || c_states->parsed()) {
      const MultiGraph g = load_graph(source);
      const BiPoly t = c_tutte->parsed() ? tutte(g) : tutte_states(g);
      emit({{"tutte", poly_json(t)}}, t.str());
    } else if (c_chrom->parsed()) {
      const IntPoly p = chromatic(load_graph(source));
      emit({{"chromatic", poly_json(p)}}, p.str("L"));
    } else if (c_tg->parsed()) {
      const MultiGraph g = load_graph(source);
      const BiPoly v = tg_invariant<BiPoly>(g, BiPoly(alpha), BiPoly(beta), BiPoly(gamma), BiPoly::x(), BiPoly::y());
      emit({{"tg", poly_json(v)}}, v.str());
    } else if (c_tmedge->parsed()) {
      const MultiGraph g = load_graph(source);
      const std::size_t e = edge_index(g, edge);
      if (!series.empty()) {
        const auto s = tutte_multiedge_series(g, e, series_kind(series), order);
        json terms = json::array();
        for (const auto& t : s.terms()) terms.push_back(poly_json(t));
        emit({{"kind", to_string(s.kind())}, {"terms", terms}},
             series_text<BiPoly>(s, [](const BiPoly& p) { return p.str(); }));
      } else {
        const BiPoly t = tutte_multiedge(g, e, mult);
        emit({{"tutte", poly_json(t)}}, t.str());
      }
    } else if (c_class->parsed()) {
      print_class(motivic_class(load_graph(source)));
    } else if (c_cmedge->parsed()) {
      const MultiGraph g = load_graph(source);
      const std::size_t e = edge_index(g, edge);
      if (!series.empty()) {
        const auto s = multiplied_edge_series(g, e, series_kind(series), order);
        json terms = json::array();
        for (const auto& t : s.terms()) terms.push_back(poly_json(t));
        emit({{"kind", to_string(s.kind())}, {"terms", terms}},
             series_text<IntPoly>(s, [](const IntPoly& p) { return factored_str(p); }));
      } else {
        print_class(multiplied_edge_class(g, e, mult));
      }
    } else if (c_gen->parsed()) {
      MultiGraph g;
      if (family == "banana") {
        g = banana_graph(mult);
      } else if (family == "lemon") {
        g = lemon_graph(mult);
      } else if (family == "chain") {
        std::vector<std::size_t> r;
        for (auto p : parse_primes(sides)) r.push_back(p);
        g = polygon_chain_graph(r);
      } else if (family == "lemonade") {
        const MultiGraph base = source == "-" ? complete_graph(3) : load_graph(source);
        g = lemonade_graph(base, edge ? edge_index(base, edge) : 0, mult);
      } else {
        throw InputError("unknown family " + family);
      }
      emit(to_json(g), to_text(g));
    } else if (c_euler->parsed()) {
      const Integer chi = euler_char(load_graph(source));
      emit({{"euler", chi.get_str()}}, chi.get_str());
    } else if (c_eseries->parsed()) {
      const MultiGraph g = load_graph(source);
      const std::size_t e = edge_index(g, edge);
      SeriesTrunc<Integer> s(SeriesKind::Ordinary, order);
      if (lemonade) {
        if (classify_edge(g, e) != EdgeKind::Regular) throw InputError("lemonade needs a regular edge");
        if (is_forest(delete_edge(g, e).graph)) throw InputError("Euler series needs G - e not to be a forest");
        s = lemonade_euler_series(EulerBases{euler_char(g), 0, euler_char(contract_edge(g, e).graph)}, order);
      } else {
        s = euler_multiedge_series(g, e, order);
      }
      json terms = json::array();
      for (const auto& t : s.terms()) terms.push_back(t.get_str());
      emit({{"terms", terms}}, series_text<Integer>(s, [](const Integer& v) { return v.get_str(); }));
    } else if (c_count->parsed()) {
      const MultiGraph g = load_graph(source);
      const CountResult r = count_complement(psi(g).psi, q, CountOptions{std::nullopt, ctx.threads});
      emit({{"q", r.q}, {"variables", r.n}, {"complement", r.complement_count.get_str()}, {"zeros", r.zero_count.get_str()}},
           r.complement_count.get_str());
    } else if (c_interp->parsed()) {
      const ClassCandidate c = interpolate_class(load_graph(source), parse_primes(primes), holdout);
      json counts = json::array();
      for (const auto& v : c.counts) counts.push_back(v.get_str());
      emit({{"candidate", poly_json(c.poly)},
            {"primes", c.sample_primes},
            {"holdout", c.holdout},
            {"counts", counts},
            {"exact_fit", c.exact_fit},
            {"reason", c.reason},
            {"provenance", "interpolated"}},
           c.exact_fit ? c.poly.str() + " (interpolated)" : "no exact fit: " + c.reason);
      require(c.exact_fit);
    } else if (c_vdelcon->parsed()) {
      const MultiGraph g = load_graph(source);
      const DelconReport r = verify_delcon(g, edge_index(g, edge), parse_primes(primes));
      json rows = json::array();
      std::string text;
      for (const auto& row : r.rows) {
        rows.push_back({{"q", row.q},
                        {"complement", row.complement.get_str()},
                        {"predicted", row.predicted.get_str()},
                        {"psi_f_zero", row.psi_f_zero.get_str()},
                        {"q_times_f_g_zero", row.q_times_f_g_zero.get_str()},
                        {"ok", row.ok}});
        text += "q=" + std::to_string(row.q) + " complement " + row.complement.get_str() + " predicted " +
                row.predicted.get_str() + " psi=F=0 " + row.psi_f_zero.get_str() + " q*#(F=G=0) " +
                row.q_times_f_g_zero.get_str() + (row.ok ? " ok" : " MISMATCH") + "\n";
      }
      emit({{"rows", rows}, {"ok", r.ok}}, text);
      require(r.ok);
    } else if (c_vclass->parsed()) {
      const MultiGraph g = load_graph(source);
      IntPoly value;
      if (cls.empty()) {
        const MotivicClass c = motivic_class(g);
        if (c.provenance != Provenance::RuleDerived) throw InputError("no rule-derived class; pass --class");
        value = c.value;
      } else {
        value = parse_intpoly(cls);
      }
      const ClassCheck r = verify_class(value, g, parse_primes(primes));
      json rows = json::array();
      std::string text;
      for (const auto& row : r.rows) {
        rows.push_back({{"q", row.q}, {"predicted", row.predicted.get_str()}, {"counted", row.counted.get_str()}});
        text += "q=" + std::to_string(row.q) + " predicted " + row.predicted.get_str() + " counted " +
                row.counted.get_str() + (row.predicted == row.counted ? " ok" : " MISMATCH") + "\n";
      }
      emit({{"class", poly_json(value)}, {"rows", rows}, {"ok", r.ok}}, text);
      require(r.ok);
    } else if (c_univ->parsed()) {
      auto show = [&](const auto& rep) {
        const auto c = coefficients(rep, mult);
        const auto a = rep_matrix(rep, mult);
        json mat = json::array();
        std::string text = "f = " + c.f.str() + "\ng = " + c.g.str() + "\nh = " + c.h.str() + "\nA =\n";
        for (const auto& row : a) {
          json jr = json::array();
          for (std::size_t k = 0; k < 3; ++k) {
            jr.push_back(row[k].str());
            text += (k ? " | " : "  ") + row[k].str();
          }
          text += "\n";
          mat.push_back(jr);
        }
        emit({{"kind", kind}, {"m", mult}, {"f", c.f.str()}, {"g", c.g.str()}, {"h", c.h.str()}, {"matrix", mat}}, text);
      };
      if (kind == "motivic") {
        show(motivic_rep());
      } else if (kind == "tutte") {
        show(tutte_rep());
      } else if (kind == "csm") {
        show(csm_rep());
      } else {
        throw InputError("kind must be motivic, tutte or csm");
      }
    } else if (c_csm->parsed()) {
      const json j = load_json_file(base_file);
      if (j.contains("steps")) {
        const auto values = evaluate_csm_fixture(j);
        json out = json::object();
        std::string text;
        for (const auto& [name, v] : values) {
          out[name] = v.str();
          text += name + ": " + v.str() + "\n";
        }
        bool ok = true;
        if (j.contains("target") && j.contains("expected")) {
          const IntPoly got = values.at(j["target"].get<std::string>());
          ok = got == parse_intpoly(j["expected"].get<std::string>());
          text += "target " + j["target"].get<std::string>() + (ok ? " matches" : " DIFFERS FROM") + " expected " +
                  j["expected"].get<std::string>() + "\n";
        }
        emit({{"values", out}, {"ok", ok}}, text);
        require(ok);
      } else {
        auto get = [&](const char* k) {
          if (!j.contains(k)) throw InputError(std::string("base file needs \"") + k + "\"");
          return parse_intpoly(j[k].get<std::string>());
        };
        const IntPoly p = csm_predict(get("whole"), get("deleted"), get("contracted"), mult);
        emit({{"prediction", poly_json(p)}}, p.str());
      }
    } else if (c_coprod->parsed()) {
      const GraphTensorSum d = coproduct(load_graph(source));
      json terms = json::array();
      for (const auto& [lr, c] : d.terms) {
        terms.push_back({{"coefficient", c.get_str()},
                         {"left", describe(lr.first, d.graphs)},
                         {"right", describe(lr.second, d.graphs)}});
      }
      emit({{"terms", terms}}, tensor_text(d));
    } else if (c_antip->parsed()) {
      const GraphLinearComb s = antipode(load_graph(source));
      json terms = json::array();
      std::string text;
      for (const auto& [m, c] : s.terms) {
        terms.push_back({{"coefficient", c.get_str()}, {"monomial", describe(m, s.graphs)}});
        text += c.get_str() + " " + describe(m, s.graphs) + "\n";
      }
      emit({{"terms", terms}}, text);
    } else if (c_renorm->parsed()) {
      const MultiGraph g = load_graph(source);
      const Character u = character == "toy" ? Character(toy_character) : character_from_file(character);
      const BirkhoffResult b = birkhoff(u, g);
      emit({{"u_minus", poly_json(b.u_minus)}, {"u_plus", poly_json(b.u_plus)}, {"bar", poly_json(b.bar)}},
           "U- = " + b.u_minus.str() + "\nU+ = " + b.u_plus.str() + "\n");
    } else if (c_corpus->parsed()) {
      AcceptanceOptions opts;
      opts.seed = ctx.seed;
      opts.csm_fixture = fixture;
      opts.only.insert(only.begin(), only.end());
      bool all = true;
      json rows = json::array();
      std::string text;
      for (const auto& r : run_acceptance(opts)) {
        all = all && r.passed;
        rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"seconds", r.seconds}, {"detail", r.detail}});
        text += format_result(r) + "\n";
      }
      emit({{"criteria", rows}, {"ok", all}}, text);
      require(all);
    }
  } catch (const CheckFailed&) {
    return 1;
  } catch (const GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
