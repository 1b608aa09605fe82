#include "triwell/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "triwell/eigen.hpp"
#include "triwell/format.hpp"
#include "triwell/oracle.hpp"

namespace triwell {
namespace {

constexpr std::array<Convention, 2> kConventions{Convention::eq1, Convention::halfwidth2};

std::size_t idx(Convention c) { return c == Convention::eq1 ? 0 : 1; }

std::string short_name(Convention c) { return c == Convention::eq1 ? "eq1" : "hw2"; }

std::optional<double> at(const SourceValues& s, int n) {
  if (!s.ok() || n < 0 || n >= static_cast<int>(s.energies.size())) return std::nullopt;
  return s.energies[static_cast<std::size_t>(n)];
}

std::optional<double> relative(std::optional<double> value, std::optional<double> paper) {
  if (!value || !paper) return std::nullopt;
  return std::fabs(*value - *paper) / std::fabs(*paper);
}

void compute_row(RowReport& row, double tol, Execution exec) {
  const double v = row.paper.vbar0;
  for (Convention c : kConventions) {
    const DimensionlessWell well(v, c);
    const std::size_t i = idx(c);
    try {
      for (const auto& s : solve_spectrum(well, tol, exec).states) {
        row.solver[i].energies.push_back(s.ebar);
      }
    } catch (const std::exception& e) {
      row.solver[i].error = e.what();
    }
    try {
      row.oracle[i].energies = oracle_spectrum(well, exec).eigenvalues;
    } catch (const std::exception& e) {
      row.oracle[i].error = e.what();
    }
    double gap = std::numeric_limits<double>::infinity();
    if (row.solver[i].ok() && row.oracle[i].ok() &&
        row.solver[i].energies.size() == row.oracle[i].energies.size()) {
      gap = 0.0;
      for (std::size_t k = 0; k < row.solver[i].energies.size(); ++k) {
        gap = std::max(gap, std::fabs(row.solver[i].energies[k] - row.oracle[i].energies[k]));
      }
    }
    row.oracle_gap[i] = gap;
    row.consistent[i] = gap <= kInternalAgreement;
  }
  try {
    row.eq26.energies = eq26_roots(DimensionlessWell(v, Convention::eq1));
  } catch (const std::exception& e) {
    row.eq26.error = e.what();
  }
}

void flag_row(RowReport& row, const RowReport* previous, Convention selected) {
  const std::size_t s = idx(selected);
  for (int n = 0; n < 3; ++n) {
    const auto paper = row.paper.energy(n);
    const auto solver = at(row.solver[s], n);
    const std::string tag = "e" + std::to_string(n);
    if (paper && !solver) row.flags.push_back("missing_state:" + tag);
    if (!paper && solver) row.flags.push_back("extra_state:" + tag);
    if (const auto rel = row.rel_dev(selected, n); rel && *rel > kDeviationFlag) {
      row.flags.push_back("deviation:" + tag);
    }
    if (n > 0 && paper) {
      const auto below = row.paper.energy(n - 1);
      if (below && !(*paper > *below)) row.flags.push_back("ordering:" + tag);
    }
    // dE/dV0 = -<1 - |y|/edge> lies in [-1, 0] for either geometry.
    if (previous && paper) {
      if (const auto before = previous->paper.energy(n)) {
        const double slope = (*paper - *before) / (row.paper.vbar0 - previous->paper.vbar0);
        if (slope < -1.0 || slope > 0.0) row.flags.push_back("slope:" + tag);
      }
    }
  }
  for (Convention c : kConventions) {
    const std::size_t i = idx(c);
    if (!row.solver[i].ok()) row.flags.push_back("solver_failed:" + short_name(c));
    if (!row.oracle[i].ok()) row.flags.push_back("oracle_failed:" + short_name(c));
    if (!row.consistent[i]) row.flags.push_back("inconsistent:" + short_name(c));
  }
}

}  // namespace

std::optional<double> RowReport::abs_dev(Convention c, int n) const {
  const auto solver_value = at(solver[idx(c)], n);
  const auto paper_value = paper.energy(n);
  if (!solver_value || !paper_value) return std::nullopt;
  return *solver_value - *paper_value;
}

std::optional<double> RowReport::rel_dev(Convention c, int n) const {
  return relative(at(solver[idx(c)], n), paper.energy(n));
}

std::optional<double> RowReport::eq26_rel_dev(int n) const {
  return relative(at(eq26, n), paper.energy(n));
}

ComparisonReport build_comparison_report(const std::vector<Table1Row>& rows, double tol,
                                         Execution exec) {
  ComparisonReport report;
  report.tol = tol;
  report.rows.resize(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) report.rows[i].paper = rows[i];

  // Rows fan out; inner kernels then run serially within each row.
  const Execution inner = (exec == Execution::parallel) ? Execution::serial : exec;
  for_each_index(exec, rows.size(), [&](std::size_t i) { compute_row(report.rows[i], tol, inner); });

  for (Convention c : kConventions) {
    ConventionSummary& sum = report.conventions[idx(c)];
    sum.convention = c;
    double sq = 0.0;
    for (const RowReport& row : report.rows) {
      for (int n = 0; n < 3; ++n) {
        if (const auto rel = row.rel_dev(c, n)) {
          sq += *rel * *rel;
          ++sum.compared;
        }
      }
      const SourceValues& s = row.solver[idx(c)];
      if (!s.ok() || static_cast<int>(s.energies.size()) != row.paper.count()) {
        ++sum.count_mismatches;
      }
      sum.max_oracle_gap = std::max(sum.max_oracle_gap, row.oracle_gap[idx(c)]);
      sum.all_consistent = sum.all_consistent && row.consistent[idx(c)];
    }
    sum.rms_rel = sum.compared ? std::sqrt(sq / sum.compared)
                               : std::numeric_limits<double>::infinity();
    for (int n = 1; n <= 2; ++n) {
      try {
        sum.onset[static_cast<std::size_t>(n - 1)] = critical_depth(n, c, tol);
      } catch (const std::exception&) {
        sum.onset[static_cast<std::size_t>(n - 1)] = std::numeric_limits<double>::quiet_NaN();
      }
    }
  }
  report.selected = report.conventions[0].rms_rel <= report.conventions[1].rms_rel
                        ? Convention::eq1
                        : Convention::halfwidth2;

  double sq = 0.0;
  for (const RowReport& row : report.rows) {
    for (int n = 0; n < 3; ++n) {
      if (const auto rel = row.eq26_rel_dev(n)) {
        sq += *rel * *rel;
        ++report.eq26_compared;
      }
    }
  }
  report.eq26_rms_rel = report.eq26_compared ? std::sqrt(sq / report.eq26_compared)
                                             : std::numeric_limits<double>::infinity();

  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    flag_row(report.rows[i], i ? &report.rows[i - 1] : nullptr, report.selected);
  }
  return report;
}

std::string report_csv(const ComparisonReport& report) {
  std::vector<std::string> header{"vbar0", "published_e0", "published_e1", "published_e2"};
  for (Convention c : kConventions) {
    const std::string p = short_name(c);
    for (const char* what : {"", "_oracle", "_absdev", "_reldev"}) {
      for (int n = 0; n < 3; ++n) header.push_back(p + what + "_e" + std::to_string(n));
    }
    header.push_back(p + "_oracle_gap");
  }
  for (int n = 0; n < 3; ++n) header.push_back("eq26_e" + std::to_string(n));
  header.push_back("flags");

  std::string out = csv_row(header);
  for (const RowReport& row : report.rows) {
    // Paper cells exactly as shipped.
    std::vector<std::string> f(row.paper.cells.begin(), row.paper.cells.end());
    for (Convention c : kConventions) {
      const std::size_t i = idx(c);
      for (int n = 0; n < 3; ++n) f.push_back(format_optional(at(row.solver[i], n)));
      for (int n = 0; n < 3; ++n) f.push_back(format_optional(at(row.oracle[i], n)));
      for (int n = 0; n < 3; ++n) f.push_back(format_optional(row.abs_dev(c, n)));
      for (int n = 0; n < 3; ++n) f.push_back(format_optional(row.rel_dev(c, n)));
      f.push_back(std::isfinite(row.oracle_gap[i]) ? format_shortest(row.oracle_gap[i]) : "inf");
    }
    for (int n = 0; n < 3; ++n) f.push_back(format_optional(at(row.eq26, n)));
    std::string flags;
    for (const auto& fl : row.flags) flags += (flags.empty() ? "" : ";") + fl;
    f.push_back(flags);
    out += csv_row(f);
  }
  return out;
}

std::string report_json(const ComparisonReport& report) {
  using nlohmann::ordered_json;
  auto opt = [](std::optional<double> v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
  auto source = [](const SourceValues& s) {
    ordered_json j;
    j["energies"] = s.energies;
    if (!s.ok()) j["error"] = s.error;
    return j;
  };
  ordered_json doc;
  doc["tol"] = report.tol;
  doc["selected"] = std::string(to_string(report.selected));
  for (const ConventionSummary& sum : report.conventions) {
    ordered_json c;
    c["rms_rel"] = sum.rms_rel;
    c["compared"] = sum.compared;
    c["count_mismatches"] = sum.count_mismatches;
    c["max_oracle_gap"] = std::isfinite(sum.max_oracle_gap) ? ordered_json(sum.max_oracle_gap)
                                                            : ordered_json("inf");
    c["all_consistent"] = sum.all_consistent;
    c["onset"] = {sum.onset[0], sum.onset[1]};
    doc["conventions"][std::string(to_string(sum.convention))] = c;
  }
  doc["eq26"] = {{"rms_rel", report.eq26_rms_rel}, {"compared", report.eq26_compared}};
  doc["published_onset"] = {kPaperOnset1, kPaperOnset2};
  ordered_json rows = ordered_json::array();
  for (const RowReport& row : report.rows) {
    ordered_json r;
    r["vbar0"] = row.paper.vbar0;
    r["published"] = {opt(row.paper.e0), opt(row.paper.e1), opt(row.paper.e2)};
    for (Convention c : kConventions) {
      const std::size_t i = idx(c);
      ordered_json cj;
      cj["solver"] = source(row.solver[i]);
      cj["oracle"] = source(row.oracle[i]);
      cj["reldev"] = {opt(row.rel_dev(c, 0)), opt(row.rel_dev(c, 1)), opt(row.rel_dev(c, 2))};
      cj["oracle_gap"] = std::isfinite(row.oracle_gap[i]) ? ordered_json(row.oracle_gap[i])
                                                          : ordered_json("inf");
      r[std::string(to_string(c))] = cj;
    }
    r["eq26"] = source(row.eq26);
    r["flags"] = row.flags;
    rows.push_back(r);
  }
  doc["rows"] = rows;
  return doc.dump(2) + "\n";
}

std::string report_summary(const ComparisonReport& report) {
  std::ostringstream os;
  os << "reference table comparison, " << report.rows.size() << " rows\n";
  for (const ConventionSummary& sum : report.conventions) {
    os << "  " << to_string(sum.convention) << ": rms relative deviation "
       << format_diag(sum.rms_rel) << " over " << sum.compared << " values, "
       << sum.count_mismatches << " rows with a different state count, max |solver-oracle| "
       << format_diag(sum.max_oracle_gap) << (sum.all_consistent ? "" : " (INCONSISTENT)")
       << "\n      onsets " << format_diag(sum.onset[0]) << " and " << format_diag(sum.onset[1])
       << " (published " << format_shortest(kPaperOnset1) << " and "
       << format_shortest(kPaperOnset2) << ")\n";
  }
  os << "  published closed-form condition (eq1 geometry): rms relative deviation "
     << format_diag(report.eq26_rms_rel) << " over " << report.eq26_compared << " values\n";
  os << "selected convention: " << to_string(report.selected) << " (lower rms deviation)\n";
  int flagged = 0;
  for (const RowReport& row : report.rows) {
    if (row.flags.empty()) continue;
    ++flagged;
    os << "  V0=" << format_shortest(row.paper.vbar0) << ":";
    for (const auto& f : row.flags) os << ' ' << f;
    os << '\n';
  }
  os << flagged << " of " << report.rows.size() << " rows flagged\n";
  return os.str();
}

}  // namespace triwell
