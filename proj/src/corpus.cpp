#include "graphmotive/corpus.hpp"

#include <cctype>
#include <sstream>

#include "graphmotive/motivic.hpp"

namespace graphmotive {

namespace {

MultiGraph star_graph(std::size_t n) {
  MultiGraph g(n + 1);
  for (std::size_t i = 1; i <= n; ++i) g.add_edge(0, i);
  return g;
}

std::vector<std::size_t> parse_args(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos == item.size()) throw InputError("empty family parameter");
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item.substr(pos), &used);
    } catch (const std::exception&) {
      throw InputError("bad family parameter '" + item + "'");
    }
    for (std::size_t i = pos + used; i < item.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(item[i]))) throw InputError("bad family parameter '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<CorpusEntry> corpus() {
  const MultiGraph tri = complete_graph(3);
  return {
      {"edge", single_edge()},
      {"loop", single_loop()},
      {"path(2)", path_graph(2)},
      {"star(3)", star_graph(3)},
      {"triangle", tri},
      {"square", cycle_graph(4)},
      {"cycle(5)", cycle_graph(5)},
      {"banana(2)", banana_graph(2)},
      {"banana(3)", banana_graph(3)},
      {"banana(4)", banana_graph(4)},
      {"banana(5)", banana_graph(5)},
      {"lemon(1)", lemon_graph(1)},
      {"lemon(2)", lemon_graph(2)},
      {"lemon(3)", lemon_graph(3)},
      {"doubled-triangle", multiply_edge(tri, 0, 2)},
      {"k4", complete_graph(4)},
      {"triangle+loop", [&] {
         MultiGraph g = tri;
         g.add_edge(0, 0);
         return g;
       }()},
      {"bowtie", one_point_join(tri, 0, tri, 0)},
      {"triangle-bridge-triangle", [&] {
         MultiGraph g = disjoint_union(tri, tri);
         g.add_edge(2, 3);
         return g;
       }()},
      {"two-triangles", disjoint_union(tri, tri)},
      {"theta(1,2,2)", [] {
         MultiGraph g(4);
         g.add_edge(0, 1);
         g.add_edge(0, 2);
         g.add_edge(2, 1);
         g.add_edge(0, 3);
         g.add_edge(3, 1);
         return g;
       }()},
      {"chain(3,4)", polygon_chain_graph({3, 4})},
      {"lemonade(2)", lemonade_graph(tri, 0, 2)},
  };
}

std::optional<MultiGraph> family_graph(const std::string& raw) {
  std::string spec;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) spec += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  const MultiGraph tri = complete_graph(3);
  if (spec == "edge") return single_edge();
  if (spec == "loop") return single_loop();
  if (spec == "triangle") return tri;
  if (spec == "square") return cycle_graph(4);
  if (spec == "k4") return complete_graph(4);
  if (spec == "doubled-triangle") return multiply_edge(tri, 0, 2);

  const auto open = spec.find('(');
  if (open == std::string::npos || spec.back() != ')') return std::nullopt;
  const std::string name = spec.substr(0, open);
  const auto args = parse_args(spec.substr(open + 1, spec.size() - open - 2));
  auto one = [&]() {
    if (args.size() != 1) throw InputError(name + " takes one parameter");
    return args[0];
  };
  if (name == "banana") return banana_graph(one());
  if (name == "lemon") return lemon_graph(one());
  if (name == "cycle") return cycle_graph(one());
  if (name == "path") return path_graph(one());
  if (name == "complete") return complete_graph(one());
  if (name == "star") return star_graph(one());
  if (name == "chain") return polygon_chain_graph(args);
  if (name == "lemonade") return lemonade_graph(tri, 0, one());
  return std::nullopt;
}

}  // namespace graphmotive
