#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "json.hpp"

#include "graphmotive/corpus.hpp"
#include "graphmotive/motivic.hpp"

using namespace graphmotive;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GRAPHMOTIVE_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("pipelines") {
    const Run r = run("gen lemon -m 8 | " + std::string(GRAPHMOTIVE_CLI) + " class");
    CHECK(r.code == 0);
    CHECK(trim(r.out) == factored_str(lemon_class(8)));
    const std::string tri = std::string(GRAPHMOTIVE_DATA_DIR) + "/graphs/triangle.g";
    CHECK(run("verify-delcon " + tri + " -e 3 --primes 2,3").code == 0);
    CHECK(trim(run("tutte " + tri).out) == "x^2 + x + y");
  }

  TEST_CASE("generated graphs re-parse to isomorphic graphs") {
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"gen banana -m 4", "banana(4)"}, {"gen lemon -m 3", "lemon(3)"},
        {"gen chain --sides 3,4,5", "chain(3,4,5)"}, {"gen lemonade -m 2", "lemonade(2)"}};
    for (const auto& [cmd, spec] : cases) {
      const Run r = run(cmd);
      CHECK(r.code == 0);
      CHECK(canonical_key(parse_text_graph(r.out)) == canonical_key(*family_graph(spec)));
    }
  }

  TEST_CASE("JSON and text outputs agree") {
    for (const std::string spec : {"triangle", "banana(4)", "lemon(3)", "doubled-triangle"}) {
      const std::string arg = "'" + spec + "'";
      const auto jc = nlohmann::json::parse(run("class " + arg + " --json").out);
      CHECK(parse_intpoly(jc["value"]["text"].get<std::string>()) == motivic_class(*family_graph(spec)).value);
      const auto jt = nlohmann::json::parse(run("tutte " + arg + " --json").out);
      CHECK(parse_bipoly(jt["tutte"]["text"].get<std::string>()) == parse_bipoly(trim(run("tutte " + arg).out)));
      const auto jp = nlohmann::json::parse(run("psi " + arg + " --json").out);
      CHECK(jp["psi"].get<std::string>() == trim(run("psi " + arg).out));
      const auto jm = nlohmann::json::parse(run("class-medge " + arg + " -e 1 --series ord --order 3 --json").out);
      const std::string text = run("class-medge " + arg + " -e 1 --series ord --order 3").out;
      for (std::size_t m = 0; m <= 3; ++m) {
        const IntPoly v = parse_intpoly(jm["terms"][m]["text"].get<std::string>());
        CHECK(text.find("m=" + std::to_string(m) + ": " + factored_str(v) + "\n") != std::string::npos);
      }
    }
  }

  TEST_CASE("exit codes") {
    CHECK(run("psi no-such-graph").code == 2);
    CHECK(run("bogus-subcommand").code == 2);
    CHECK(run("tutte 'complete(7)'").code == 3);
    CHECK(run("class k4").code == 1);
    CHECK(run("verify-class triangle --class \"T^3\" --primes 2,3").code == 1);
    CHECK(run("verify-class triangle --primes 2,3").code == 0);
    CHECK(run("tutte-medge triangle -e 9 -m 2").code == 2);
  }
}
