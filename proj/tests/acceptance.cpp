#include <cstdlib>
#include <iostream>
#include <string>

#include "graphmotive/acceptance.hpp"

int main(int argc, char** argv) {
  graphmotive::AcceptanceOptions opts;
  opts.csm_fixture = std::string(GRAPHMOTIVE_DATA_DIR) + "/fixtures/csm_doubled_triangle.json";
  for (int i = 1; i < argc; ++i) opts.only.insert(std::atoi(argv[i]));
  bool all = true;
  for (const auto& r : graphmotive::run_acceptance(opts)) {
    std::cout << graphmotive::format_result(r) << std::endl;
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
