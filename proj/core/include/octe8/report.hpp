#pragma once

#include <string>
#include <vector>

namespace octe8 {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::string pair;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string id, bool pass, std::string detail = "") {
    checks.push_back({std::move(id), pass, std::move(detail)});
  }
  void merge(const Report& other) {
    for (const auto& c : other.checks) checks.push_back(c);
  }
};

}  // namespace octe8
