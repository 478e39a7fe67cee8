#pragma once

#include <functional>
#include <string>
#include <vector>

namespace typewriter {

struct SuiteResult {
  bool pass = true;
  std::vector<std::string> details;

  void expect(bool ok, const std::string& message);
};

struct Suite {
  std::string module;
  std::string name;
  std::string description;
  std::function<SuiteResult()> run;
};

// Property suites covering the invariants of every module, in a fixed order.
const std::vector<Suite>& suite_registry();

// Runs one suite by name; throws std::out_of_range for unknown names.
SuiteResult run_suite(const std::string& name);

}  // namespace typewriter
