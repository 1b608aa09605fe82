// One PASS/FAIL line per acceptance criterion, with measured numbers and runtime.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "triwell/airy.hpp"
#include "triwell/eigen.hpp"
#include "triwell/oracle.hpp"
#include "triwell/report.hpp"
#include "triwell/roots.hpp"
#include "triwell/table1.hpp"
#include "triwell/wavefn.hpp"

using namespace triwell;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = dt < limit_s;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("%s criterion %d (%s): %s [%.2f s, limit %.0f s%s]\n", pass ? "PASS" : "FAIL", id, name,
              o.detail.c_str(), dt, limit_s, in_time ? "" : ", exceeded");
  std::fflush(stdout);
}

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome airy_correctness() {
  const double g13 = std::tgamma(1.0 / 3.0);
  const double g23 = std::tgamma(2.0 / 3.0);
  const AiryQuad z = airy_eval(0.0);
  const double worst_anchor = std::max({rel(z.ai, 1.0 / (std::cbrt(9.0) * g23)),
                                        rel(z.ai_prime, -1.0 / (std::cbrt(3.0) * g13)),
                                        rel(z.bi, 1.0 / (std::pow(3.0, 1.0 / 6.0) * g23)),
                                        rel(z.bi_prime, std::pow(3.0, 1.0 / 6.0) / g13)});

  double worst_w = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double x = -30.0 + 38.0 * i / 9999.0;
    const AiryQuad q = airy_eval(x);
    worst_w = std::max(worst_w, rel(q.ai * q.bi_prime - q.ai_prime * q.bi, std::numbers::inv_pi));
  }

  auto ai = [](double x) { return airy_eval(x).ai; };
  const RootResult r = refine_bracket(ai, -2.4, -2.3, ai(-2.4), ai(-2.3), 1e-15);
  const double zero_err = std::fabs(r.root - (-2.338107410459767));

  return {worst_anchor <= 1e-14 && worst_w <= 1e-10 && zero_err <= 1e-10,
          fmt("anchors rel %.2e", worst_anchor) + fmt(", Wronskian rel %.2e", worst_w) +
              fmt(", first Ai zero err %.2e", zero_err)};
}

Outcome dual_method() {
  bool ok = true;
  double worst = 0.0;
  std::string counts;
  for (double v0 : {0.5, 1.0, 5.0, 10.0, 25.0, 40.0}) {
    const DimensionlessWell w(v0);
    const Spectrum s = solve_spectrum(w);
    const OracleSpectrum o = oracle_spectrum(w);
    counts += (counts.empty() ? "" : "/") + std::to_string(s.states.size());
    if (s.states.size() != o.eigenvalues.size()) {
      ok = false;
      continue;
    }
    for (std::size_t i = 0; i < s.states.size(); ++i) {
      worst = std::max(worst, std::fabs(s.states[i].ebar - o.eigenvalues[i]));
    }
  }
  ok = ok && worst <= 1e-6;
  return {ok, "counts " + counts + " agree, max |solver - oracle| " + fmt("%.2e", worst)};
}

Outcome shallow_law() {
  const double v0 = 1e-3;
  const double e0 = solve_spectrum(DimensionlessWell(v0)).states.at(0).ebar;
  const double ratio = e0 / (-v0 * v0 / 4.0);
  const OracleSpectrum o = oracle_spectrum(DimensionlessWell(v0));
  const double oracle_ratio = o.eigenvalues.at(0) / (-v0 * v0 / 4.0);
  return {std::fabs(ratio - 1.0) <= 0.02 && std::fabs(oracle_ratio - 1.0) <= 0.02,
          fmt("E0/(-V0^2/4) = %.5f", ratio) + fmt(" (oracle %.5f", oracle_ratio) +
              fmt(", L = %.0f)", o.final_config.half_domain)};
}

Outcome state_counts(const ComparisonReport& report) {
  const auto sel = static_cast<std::size_t>(report.selected);
  const Convention c = report.selected;
  auto count = [&](double v) { return solve_spectrum(DimensionlessWell(v, c)).states.size(); };
  const bool reproduced = count(kPaperOnset1 - 0.05) == 1 && count(kPaperOnset1 + 0.05) == 2 &&
                          count(kPaperOnset2 - 0.05) == 2 && count(kPaperOnset2 + 0.05) == 3;
  if (reproduced) {
    return {true, "count transitions within 0.05 of the published onsets under " +
                      std::string(to_string(c))};
  }

  // Documentation branch: measured onsets under both geometries, each verified
  // by counting states just below and above it.
  bool documented = true;
  std::ostringstream d;
  d << "published counts NOT reproduced under " << to_string(c) << "; measured onsets";
  for (const auto& sum : report.conventions) {
    const Convention cc = sum.convention;
    d << " " << to_string(cc) << " {";
    for (int n = 1; n <= 2; ++n) {
      const double vc = sum.onset[static_cast<std::size_t>(n - 1)];
      const double paper = n == 1 ? kPaperOnset1 : kPaperOnset2;
      if (!std::isfinite(vc)) {
        documented = false;
        continue;
      }
      const auto below = solve_spectrum(DimensionlessWell(vc * (1 - 1e-6), cc)).states.size();
      const auto above = solve_spectrum(DimensionlessWell(vc * (1 + 1e-6), cc)).states.size();
      documented = documented && below == static_cast<std::size_t>(n) &&
                   above == static_cast<std::size_t>(n + 1);
      d << (n == 1 ? "" : ", ") << fmt("%.4f", vc) << fmt(" (%+.4f vs published)", vc - paper);
    }
    d << "}";
  }
  d << "; " << report.conventions[sel].count_mismatches << "/" << report.rows.size()
    << " rows differ in count under the selected geometry";
  return {documented, d.str()};
}

Outcome table_comparison(const ComparisonReport& report, const std::vector<Table1Row>& rows) {
  const ComparisonReport again = build_comparison_report(rows, report.tol, Execution::serial);
  const bool deterministic =
      report_csv(again) == report_csv(report) && report_json(again) == report_json(report);
  const std::string csv = report_csv(report);
  bool both = csv.find(",eq1_e0,") != std::string::npos && csv.find(",hw2_e0,") != std::string::npos;
  for (const auto& row : report.rows) both = both && row.solver[0].ok() && row.solver[1].ok();

  bool flags_ok = true;
  int flagged = 0;
  for (const auto& row : report.rows) {
    bool any = false;
    for (int n = 0; n < 3; ++n) {
      const auto r = row.rel_dev(report.selected, n);
      const bool missing = row.paper.energy(n) && !r;
      const bool need = (r && *r > kDeviationFlag) || missing;
      const bool has = std::any_of(row.flags.begin(), row.flags.end(), [&](const std::string& f) {
        return f == "deviation:e" + std::to_string(n) || f == "missing_state:e" + std::to_string(n);
      });
      if (need && !has) flags_ok = false;
      any = any || need;
    }
    flagged += any ? 1 : 0;
  }
  bool consistent = true;
  double gap = 0.0;
  for (const auto& sum : report.conventions) {
    consistent = consistent && sum.all_consistent;
    gap = std::max(gap, sum.max_oracle_gap);
  }
  std::ostringstream d;
  d << "deterministic=" << (deterministic ? "yes" : "no") << ", both geometries=" << (both ? "yes" : "no")
    << ", selected " << to_string(report.selected) << " (rms rel "
    << fmt("%.4f", report.conventions[static_cast<std::size_t>(report.selected)].rms_rel) << "), "
    << flagged << "/" << report.rows.size() << " rows flagged, max solver-oracle gap "
    << fmt("%.2e", gap) << "; published closed form rms rel " << fmt("%.1e", report.eq26_rms_rel);
  return {deterministic && both && flags_ok && consistent && gap <= kInternalAgreement, d.str()};
}

Outcome eigenfunctions() {
  bool ok = true;
  int states = 0;
  double cont = 0.0, norm = 0.0, orth = 0.0, schr = 0.0;
  std::mt19937_64 rng(7);
  for (double v0 : {1.0, 5.0, 25.0}) {
    const DimensionlessWell w(v0);
    std::vector<PiecewiseState> built;
    for (const auto& st : solve_spectrum(w).states) built.push_back(build_state(w, st));
    for (const auto& s : built) {
      ++states;
      cont = std::max(cont, continuity(s).worst());
      norm = std::max(norm, std::fabs(norm_integral(s) - 1.0));
      ok = ok && count_nodes(s) == s.n;
      const double h = 1e-4;
      std::uniform_real_distribution<double> u(-w.edge() - 3.0, w.edge() + 3.0);
      for (int i = 0; i < 400;) {
        const double y = u(rng);
        if (std::min(std::fabs(y), std::fabs(std::fabs(y) - w.edge())) < 3 * h) continue;
        ++i;
        const double d2 = (evaluate(s, y + h) - 2 * evaluate(s, y) + evaluate(s, y - h)) / (h * h);
        schr = std::max(schr, std::fabs(-d2 + (potential_value(w, y) - s.ebar) * evaluate(s, y)));
      }
    }
    for (std::size_t i = 0; i < built.size(); ++i) {
      for (std::size_t j = i + 1; j < built.size(); ++j) {
        orth = std::max(orth, std::fabs(overlap(built[i], built[j])));
      }
    }
  }
  ok = ok && cont <= 1e-9 && norm <= 1e-8 && orth <= 1e-6 && schr <= 1e-4;
  return {ok, std::to_string(states) + " states, continuity " + fmt("%.1e", cont) + ", |norm-1| " +
                  fmt("%.1e", norm) + ", overlap " + fmt("%.1e", orth) + ", residual " +
                  fmt("%.1e", schr) + ", node counts " + (ok ? "ok" : "checked")};
}

Outcome eq26_log(const std::vector<Table1Row>& rows) {
  int roots = 0, consistent = 0, discrepancies = 0, poles = 0;
  std::string sample;
  for (const auto& row : rows) {
    for (Convention c : {Convention::eq1, Convention::halfwidth2}) {
      for (const auto& chk : eq26_diagnostic(solve_spectrum(DimensionlessWell(row.vbar0, c)))) {
        ++roots;
        if (chk.consistent) {
          ++consistent;
          continue;
        }
        ++discrepancies;
        if (chk.eq26.status == Eq26Status::pole) ++poles;
        if (sample.empty()) {
          sample = "{vbar0=" + fmt("%g", row.vbar0) + ", convention=" + std::string(to_string(c)) +
                   ", n=" + std::to_string(chk.n) + fmt(", ebar=%.10f", chk.ebar) +
                   fmt(", residual=%.3e}", chk.eq26.value);
        }
      }
    }
  }
  return {roots == consistent + discrepancies,
          std::to_string(roots) + " accepted roots: " + std::to_string(consistent) + " satisfy it, " +
              std::to_string(discrepancies) + " logged as discrepancies (" + std::to_string(poles) +
              " at poles); first " + sample};
}

Outcome parity_union() {
  bool ok = true;
  double closest = std::numeric_limits<double>::infinity();
  std::string counts;
  for (double v0 : {5.0, 25.0, 40.0}) {
    const DimensionlessWell w(v0);
    // Roots of each parity residual on its own, from a fine sign scan in beta.
    std::array<std::vector<double>, 2> roots;
    const double top = std::sqrt(v0);
    const int grid = 20000;
    for (Parity p : {Parity::even, Parity::odd}) {
      auto f = [&](double b) { return parity_residual(w, p, b); };
      double prev = f(0.0);
      for (int i = 1; i < grid; ++i) {
        const double lo = top * (i - 1) / (grid - 1), hi = top * i / (grid - 1);
        const double cur = f(hi);
        if ((cur < 0) != (prev < 0)) {
          const double beta = refine_bracket(f, lo, hi, prev, cur, 1e-15).root;
          roots[static_cast<std::size_t>(p)].push_back(-beta * beta);
        }
        prev = cur;
      }
    }
    for (double a : roots[0]) {
      for (double b : roots[1]) closest = std::min(closest, std::fabs(a - b));
    }
    std::vector<double> merged = roots[0];
    merged.insert(merged.end(), roots[1].begin(), roots[1].end());
    std::sort(merged.begin(), merged.end());
    const Spectrum s = solve_spectrum(w);
    ok = ok && merged.size() == s.states.size();
    for (std::size_t i = 0; ok && i < merged.size(); ++i) {
      ok = std::fabs(merged[i] - s.states[i].ebar) <= 1e-8;
    }
    counts += (counts.empty() ? "" : "/") + std::to_string(roots[0].size()) + "+" +
              std::to_string(roots[1].size());
  }
  ok = ok && closest > 1e-8;
  return {ok, "even+odd roots " + counts + " equal the spectra, closest cross-parity pair " +
                  fmt("%.3f", closest)};
}

}  // namespace

int main() {
  criterion(1, "Airy correctness", 1.0, airy_correctness);
  criterion(2, "dual-method agreement", 30.0, dual_method);
  criterion(3, "shallow-well law", 5.0, shallow_law);

  const auto rows = load_table1(default_data_dir() / "table1.csv");
  ComparisonReport report;
  const auto t0 = std::chrono::steady_clock::now();
  report = build_comparison_report(rows, 1e-10, Execution::parallel);
  const double build_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  criterion(4, "reference table state counts", 60.0, [&] { return state_counts(report); });
  criterion(5, "reference table value comparison", 300.0 - build_s, [&] { return table_comparison(report, rows); });
  criterion(6, "eigenfunction suite", 10.0, eigenfunctions);
  criterion(7, "published closed-form diagnostic", 5.0, [&] { return eq26_log(rows); });
  criterion(8, "parity factorization", 5.0, parity_union);

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
