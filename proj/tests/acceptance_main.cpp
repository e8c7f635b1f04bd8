// Acceptance gate: one PASS/FAIL line per criterion, details indented below.
//   acceptance            run every criterion
//   acceptance <suite>    run one (name or number, see --list)

#include <cstring>
#include <iostream>

#include "robineig/acceptance.hpp"
#include "robineig/errors.hpp"

int main(int argc, char** argv) {
  namespace acc = robineig::acceptance;
  std::string suite = "all";
  if (argc > 1) {
    if (std::strcmp(argv[1], "--list") == 0) {
      for (const auto& n : acc::suite_names()) std::cout << n << '\n';
      return 0;
    }
    suite = argv[1];
  }
  try {
    bool all_passed = true;
    for (const auto& r : acc::run(suite)) {
      std::cout << acc::format(r) << std::flush;
      all_passed = all_passed && r.passed;
    }
    return all_passed ? 0 : 1;
  } catch (const robineig::Error& e) {
    std::cerr << e.name() << ": " << e.what() << '\n';
    return 2;
  }
}
