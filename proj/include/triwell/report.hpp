#pragma once

#include <array>
#include <string>
#include <vector>

#include "triwell/execution.hpp"
#include "triwell/model.hpp"
#include "triwell/table1.hpp"

namespace triwell {

/// Energies from one method, or the reason it failed.
struct SourceValues {
  std::vector<double> energies;
  std::string error;
  bool ok() const { return error.empty(); }
};

inline constexpr double kDeviationFlag = 0.01;     // relative
inline constexpr double kInternalAgreement = 1e-6;  // solver vs oracle, absolute

struct RowReport {
  Table1Row paper;
  std::array<SourceValues, 2> solver;  // indexed by Convention
  std::array<SourceValues, 2> oracle;
  std::array<double, 2> oracle_gap{};  // max |solver - oracle|; +inf on a count mismatch
  std::array<bool, 2> consistent{};    // oracle_gap <= kInternalAgreement
  SourceValues eq26;                   // roots of the published condition, eq1 geometry
  std::vector<std::string> flags;

  /// solver - published value for state n under convention c, if both exist.
  std::optional<double> abs_dev(Convention c, int n) const;
  std::optional<double> rel_dev(Convention c, int n) const;
  std::optional<double> eq26_rel_dev(int n) const;
};

struct ConventionSummary {
  Convention convention = Convention::eq1;
  double rms_rel = 0.0;  // over published cells with a matching solver state
  int compared = 0;
  int count_mismatches = 0;  // rows whose state count differs from the published one
  double max_oracle_gap = 0.0;
  bool all_consistent = true;
  std::array<double, 2> onset{};  // critical depths of the first two excited states
};

struct ComparisonReport {
  std::vector<RowReport> rows;
  std::array<ConventionSummary, 2> conventions;
  Convention selected = Convention::eq1;  // lower rms_rel
  double eq26_rms_rel = 0.0;
  int eq26_compared = 0;
  double tol = 1e-10;
};

/// Recomputes every row under both geometries with the matching solver and
/// the finite-difference oracle, plus the roots of the published closed-form
/// condition. Rows run concurrently under Execution::parallel; the result
/// does not depend on the execution mode. Per-row failures are recorded, not
/// thrown.
ComparisonReport build_comparison_report(const std::vector<Table1Row>& rows, double tol,
                                         Execution exec = Execution::parallel);

std::string report_csv(const ComparisonReport& report);
std::string report_json(const ComparisonReport& report);
/// Human-readable summary naming the selected geometry.
std::string report_summary(const ComparisonReport& report);

}  // namespace triwell
