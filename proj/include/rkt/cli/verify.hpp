#pragma once

#include "rkt/cli/json_io.hpp"

#include <string>
#include <vector>

namespace rkt::cli {

struct Assertion {
  std::string name;
  std::string citation;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<Assertion> assertions;
  bool passed() const;
  Json to_json() const;
};

const std::vector<std::string>& suite_names();
// Throws Input for an unknown name.
SuiteResult run_suite(const std::string& name, std::size_t identify_horizon = 64);

}  // namespace rkt::cli
