#pragma once

#include <string>
#include <vector>

namespace rskop {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Named invariant suites run by the verify command.
std::vector<std::string> suite_names();
// Throws invalid_argument for an unknown name.
std::vector<CheckResult> run_suite(const std::string& name);

}  // namespace rskop
