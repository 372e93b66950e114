#pragma once

// Named groupings of the acceptance checks, for running related claims
// together from the command line.

#include <optional>
#include <string>
#include <vector>

#include "maw/acceptance.hpp"

namespace maw {

struct SuiteSpec {
  std::string name;
  std::vector<int> criteria;
};

inline const std::vector<SuiteSpec>& suite_registry() {
  static const std::vector<SuiteSpec> suites = {
      {"norris", {1, 2, 3}},   {"rdv", {4}},
      {"gather", {5}},         {"token", {6}},
      {"omega", {7}},          {"reduction", {8, 9}},
      {"separations", {10, 11, 13}}, {"closure", {12, 14}},
  };
  return suites;
}

inline std::optional<SuiteSpec> find_suite(const std::string& name) {
  for (const SuiteSpec& s : suite_registry())
    if (s.name == name) return s;
  return std::nullopt;
}

inline CriterionResult run_criterion(int id) {
  switch (id) {
    case 1: return criterion_1();
    case 2: return criterion_2();
    case 3: return criterion_3();
    case 4: return criterion_4();
    case 5: return criterion_5();
    case 6: return criterion_6();
    case 7: return criterion_7();
    case 8: return criterion_8();
    case 9: return criterion_9();
    case 10: return criterion_10();
    case 11: return criterion_11();
    case 12: return criterion_12();
    case 13: return criterion_13();
    case 14: return criterion_14();
    default: return {id, "unknown criterion", false, 0, "no such check"};
  }
}

}  // namespace maw
