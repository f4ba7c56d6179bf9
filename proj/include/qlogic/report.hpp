#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"

namespace qlogic {

enum class WitnessMode { FirstPerRule, All };

struct CheckOptions {
  WitnessMode witnesses = WitnessMode::FirstPerRule;
  /// Keep evaluating later rules after an earlier one failed.
  bool full_scan = false;
};

/// Where a derived structure came from: the source's name, the conversion
/// applied, and a hash of the source tables.
struct Provenance {
  std::string source;
  std::string operation;
  std::uint64_t source_hash = 0;

  bool empty() const { return operation.empty(); }
};

/// FNV-1a over a sequence of table entries.
template <class Range>
std::uint64_t table_hash(const Range& values, std::uint64_t h = 1469598103934665603ULL) {
  for (auto v : values) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ULL;
  }
  return h;
}

struct Violation {
  std::string rule;
  std::vector<Element> witness;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of one validation pass. passed() iff no violations were recorded.
struct CheckReport {
  std::string subject;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
  bool degenerate = false;

  bool passed() const { return violations.empty(); }

  bool failed(const std::string& rule) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.rule == rule; });
  }

  const Violation* first(const std::string& rule) const {
    for (const auto& v : violations)
      if (v.rule == rule) return &v;
    return nullptr;
  }

  void merge(const CheckReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    degenerate = degenerate || other.degenerate;
  }
};

/// Records violations for one rule at a time, honouring the witness mode.
/// add() returns false once the caller should stop scanning the rule.
class RuleRecorder {
 public:
  RuleRecorder(CheckReport& report, const CheckOptions& opts, std::string rule)
      : report_(report), opts_(opts), rule_(std::move(rule)) {}

  bool add(std::vector<Element> witness, std::string detail = {}) {
    report_.violations.push_back({rule_, std::move(witness), std::move(detail)});
    ++count_;
    return opts_.witnesses == WitnessMode::All;
  }

  bool any() const { return count_ > 0; }

 private:
  CheckReport& report_;
  const CheckOptions& opts_;
  std::string rule_;
  int count_ = 0;
};

}  // namespace qlogic
