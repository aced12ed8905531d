// Acceptance gate: one pass/fail line per criterion.  Run with
// --criterion N for a single criterion (that is how ctest registers them),
// or with no arguments for the whole suite.
#include <cstring>
#include <iostream>

#include "ampkit/verify.hpp"

int main(int argc, char** argv) {
  ampkit::set_working_digits(ampkit::kDefaultDigits);
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
      only = std::atoi(argv[i + 1]);

  bool all_pass = true;
  for (int id : ampkit::verify::criteria()) {
    if (only && id != only) continue;
    auto r = ampkit::verify::run_criterion(id);
    bool pass = r.pass();
    all_pass = all_pass && pass;
    std::cout << "criterion " << r.id << " (" << r.name << "): "
              << (pass ? "PASS" : "FAIL") << "\n";
    for (const auto& c : r.checks)
      if (!c.pass) std::cout << "  FAIL " << c.name << ": " << c.detail
                             << "\n";
  }
  return all_pass ? 0 : 1;
}
