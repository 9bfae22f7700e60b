// Runs the acceptance criteria and prints one pass/fail line per criterion.
// With --criterion K only that criterion runs.  Exit code 0 when everything
// passed, 1 when a criterion failed, 2 on bad usage.

#include <cstdlib>
#include <cstring>
#include <iostream>

#include "qprop/suites.hpp"

int main(int argc, char** argv) {
  using namespace qprop;
  try {
    if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
      const CriterionResult r = run_criterion(std::atoi(argv[2]));
      std::cout << criterion_report_line(r) << '\n';
      return r.pass() ? 0 : 1;
    }
    if (argc != 1) {
      std::cerr << "usage: " << argv[0] << " [--criterion K]\n";
      return 2;
    }
    bool all = true;
    for (int k = 1; k <= criterion_count(); ++k) {
      const CriterionResult r = run_criterion(k);
      std::cout << criterion_report_line(r) << '\n';
      all = all && r.pass();
    }
    return all ? 0 : 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
}
