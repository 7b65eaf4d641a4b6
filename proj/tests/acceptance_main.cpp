#include "hecke/acceptance.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
  hecke::AcceptanceOptions opt;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--seedless") == 0) opt.seedless = true;
  bool ok = true;
  for (int id = 1; id <= hecke::kCriterionCount; ++id) {
    auto r = hecke::run_criterion(id, opt);
    std::cout << hecke::ledger_line(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
