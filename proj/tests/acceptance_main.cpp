#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "duha/acceptance.hpp"

// Usage: acceptance [--evidence FILE] [--jobs N]
int main(int argc, char** argv) {
  duha::AcceptanceOptions options;
  std::string evidence_path;
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    if (arg == "--evidence" && a + 1 < argc) {
      evidence_path = argv[++a];
    } else if (arg == "--jobs" && a + 1 < argc) {
      options.jobs = std::atoi(argv[++a]);
    } else {
      std::cerr << "usage: acceptance [--evidence FILE] [--jobs N]\n";
      return 2;
    }
  }

  int failed = 0;
  nlohmann::json evidence = nlohmann::json::array();
  for (int id = 1; id <= duha::kCriterionCount; ++id) {
    const duha::CriterionResult r = duha::run_criterion(id, options);
    std::cout << duha::summary_line(r) << std::endl;
    if (!r.passed) ++failed;
    evidence.push_back(duha::to_json(r));
  }
  std::cout << (duha::kCriterionCount - failed) << "/" << duha::kCriterionCount
            << " criteria passed" << std::endl;
  if (!evidence_path.empty()) std::ofstream(evidence_path) << evidence.dump(2) << '\n';
  return failed == 0 ? 0 : 1;
}
