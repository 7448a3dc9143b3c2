#pragma once

#include <string>
#include <vector>

#include "zappa/group.hpp"

namespace zappa {

enum class WitnessMode { kFirst, kAll };

/// Outcome of one named condition. A witness is a tuple of element indices
/// whose meaning is given by `roles` (e.g. {"k", "k'", "h"}).
struct ConditionResult {
  std::string name;
  std::vector<std::string> roles;
  bool passed = true;
  std::vector<std::vector<Elem>> witnesses;
};

struct ConditionReport {
  std::vector<ConditionResult> conditions;

  bool all_passed() const {
    for (const auto& c : conditions)
      if (!c.passed) return false;
    return true;
  }

  const ConditionResult* find(const std::string& name) const {
    for (const auto& c : conditions)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Small helper used by the checkers: records a failure and reports whether
/// the scan for this condition may stop.
inline bool record_failure(ConditionResult& r, std::vector<Elem> witness, WitnessMode mode) {
  r.passed = false;
  r.witnesses.push_back(std::move(witness));
  return mode == WitnessMode::kFirst;
}

}  // namespace zappa
