#pragma once

#include <string>
#include <utility>
#include <vector>

namespace absconv {

enum class HypothesisStatus { holds, fails, not_checked };
enum class ConclusionStatus { equal, strict_inclusion, violated };

inline const char* to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::holds: return "holds";
    case HypothesisStatus::fails: return "fails";
    default: return "not-checked";
  }
}
inline const char* to_string(ConclusionStatus s) {
  switch (s) {
    case ConclusionStatus::equal: return "equal";
    case ConclusionStatus::strict_inclusion: return "strict-inclusion";
    default: return "violated";
  }
}

/// Outcome of one calculus-rule verification.  Witnesses are exact
/// key/value strings (members as expressions, points as rationals) chosen so
/// a failure can be re-checked independently.
struct RuleReport {
  std::string rule;
  HypothesisStatus hypothesis = HypothesisStatus::not_checked;
  ConclusionStatus conclusion = ConclusionStatus::equal;
  std::vector<std::pair<std::string, std::string>> witnesses;
  std::vector<std::string> notes;

  void witness(std::string key, std::string value) {
    witnesses.emplace_back(std::move(key), std::move(value));
  }
  void note(std::string text) { notes.push_back(std::move(text)); }

  /// A violated conclusion under a holding (or absent) hypothesis is a
  /// failure; everything else passes.
  bool ok() const {
    return conclusion != ConclusionStatus::violated || hypothesis == HypothesisStatus::fails;
  }
};

}  // namespace absconv
