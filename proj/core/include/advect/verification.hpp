#pragma once

#include "advect/two_moment.hpp"

#include <functional>
#include <string>
#include <vector>

namespace advect {

using RuleProvider = std::function<TwoMomentRule(const SchemeId&)>;

/// One measured check inside a criterion.
struct CheckItem {
  std::string name;
  bool pass = false;
  double value = 0.0;
  std::string expected;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<CheckItem> items;
  double seconds = 0.0;
};

struct VerificationReport {
  std::vector<CriterionResult> criteria;
  bool all_pass = false;

  std::vector<int> failing_ids() const;
};

struct VerificationOptions {
  /// Defaults to build_rule.
  RuleProvider rules;
  /// Criteria to run (1..8); empty runs all.
  std::vector<int> only;
};

/// Tolerances used by the criteria, pinned here so every front end agrees.
namespace acceptance {
inline constexpr double kCflTol = 1e-6;
inline constexpr double kCflUnitTol = 1e-3;
inline constexpr double kCflThirdTol = 5e-3;
inline constexpr double kCflG2Tol = 5e-3;
inline constexpr double kS2O4Target = 0.56;
inline constexpr double kS2O4Tol = 0.01;
inline constexpr double kClosedFormTol = 1e-12;
inline constexpr double kGrpTol = 1e-14;
inline constexpr double kBoundTol = 1e-6;
inline constexpr double kLadderStableL1 = 1e-4;
inline constexpr double kLadderDgStableL1 = 1e-3;
inline constexpr double kLadderGrowth = 10.0;
inline constexpr double kOrderLow = 1.8;
inline constexpr double kOrderHigh = 2.2;
inline constexpr double kOrderS2O4 = 3.5;
inline constexpr double kConservationTol = 1e-12;
inline constexpr double kShiftTol = 1e-13;
inline constexpr double kSymmetryTol = 1e-13;
}  // namespace acceptance

/// Runs the acceptance criteria. Exceptions inside a check fail that check.
VerificationReport run_verification(const VerificationOptions& options = {});

/// A rule provider that returns build_rule except for `target`, whose a_0 gains 1e-3 nu.
RuleProvider seeded_fault_provider(const SchemeId& target);

/// JSON document matching schemas/verify_report.schema.json.
std::string report_to_json(const VerificationReport& report, int indent = 2);

/// "criterion N: PASS|FAIL  title" lines, one per criterion.
std::string report_summary(const VerificationReport& report);

}  // namespace advect
