#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ribbonlab/core.hpp"

namespace ribbon {

struct UnknownSuite : std::invalid_argument {
  explicit UnknownSuite(const std::string& name)
      : std::invalid_argument("unknown suite: " + name) {}
};

struct Failure {
  std::optional<Ribbon> ribbon;  // absent for corpus-level clauses
  std::string clause;
};

struct SuiteReport {
  std::string name;
  int n_max = 0;
  std::uint64_t seed = 0;
  std::uint64_t cases = 0;
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;   // lex order, first is minimal; capped
  std::vector<std::string> notes;  // reported statistics, never asserted
  double seconds = 0;
  bool passed() const { return failure_count == 0; }
};

const std::vector<std::string>& suite_names();
int default_n_max(const std::string& name);
SuiteReport run_suite(const std::string& name, int n_max, std::uint64_t seed = 1,
                      int jobs = 1);
std::string report_json(const SuiteReport& r);
std::string report_text(const SuiteReport& r);

}  // namespace ribbon
