#include "triwell/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "triwell/airy.hpp"
#include "triwell/eigen.hpp"
#include "triwell/errors.hpp"
#include "triwell/format.hpp"
#include "triwell/oracle.hpp"
#include "triwell/report.hpp"
#include "triwell/table1.hpp"
#include "triwell/wavefn.hpp"

namespace triwell::cli {
namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string convention = "eq1";
  double tol = 1e-10;
  std::string format = "csv";
  std::string output;

  Convention conv() const { return parse_convention(convention); }
  bool json() const { return format == "json-like"; }
};

DimensionlessWell make_well(double vbar0, Convention c) {
  if (!(vbar0 > 0.0) || !std::isfinite(vbar0)) {
    throw UsageError("--vbar0 must be positive and finite");
  }
  return DimensionlessWell(vbar0, c);
}

std::string kv(const std::string& key, const std::string& value) { return key + "=" + value + "\n"; }

std::string cmd_solve(const Globals& g, double vbar0) {
  const Spectrum spec = solve_spectrum(make_well(vbar0, g.conv()), g.tol);
  if (g.json()) {
    ordered_json doc;
    doc["vbar0"] = vbar0;
    doc["convention"] = g.convention;
    doc["tol"] = g.tol;
    doc["bracket_grid_size"] = spec.bracket_grid_size;
    doc["states"] = ordered_json::array();
    for (const auto& s : spec.states) {
      doc["states"].push_back({{"n", s.n},
                               {"parity", std::string(to_string(s.parity))},
                               {"ebar", s.ebar},
                               {"residual", s.residual_abs}});
    }
    return doc.dump(2) + "\n";
  }
  std::string out = csv_row({"n", "parity", "ebar", "residual"});
  for (const auto& s : spec.states) {
    out += csv_row({std::to_string(s.n), std::string(to_string(s.parity)), format_shortest(s.ebar),
                    format_shortest(s.residual_abs)});
  }
  return out;
}

std::string cmd_table1(const Globals& g, const std::string& table, bool compare,
                       std::ostream& err) {
  const std::filesystem::path path =
      table.empty() ? default_data_dir() / "table1.csv" : std::filesystem::path(table);
  const std::vector<Table1Row> rows = load_table1(path, true);
  if (!compare) {
    std::string out = csv_row({"vbar0", "e0", "e1", "e2"});
    for (const auto& r : rows) out += r.text + "\n";
    return out;
  }
  const ComparisonReport report = build_comparison_report(rows, g.tol);
  err << report_summary(report);
  for (const auto& row : report.rows) {
    for (const auto& f : row.flags) {
      if (f.rfind("oracle_failed", 0) == 0) {
        err << "warning: oracle did not converge for V0=" << format_shortest(row.paper.vbar0)
            << "\n";
      }
    }
  }
  return g.json() ? report_json(report) : report_csv(report);
}

std::string cmd_wavefunction(const Globals& g, double vbar0, int index, int grid) {
  if (grid < 2) throw UsageError("--grid must be at least 2");
  if (index < 0) throw UsageError("--state must be non-negative");
  const DimensionlessWell well = make_well(vbar0, g.conv());
  const Spectrum spec = solve_spectrum(well, g.tol);
  const int count = static_cast<int>(spec.states.size());
  if (index >= count) {
    throw SolverError("state " + std::to_string(index) + " does not exist at V0=" +
                      format_shortest(vbar0) + ": " + std::to_string(count) +
                      (count == 1 ? " state available" : " states available"));
  }
  const PiecewiseState state = build_state(well, spec.states[static_cast<std::size_t>(index)]);
  const auto [lo, hi] = sample_range(state);
  std::vector<std::pair<double, double>> samples;
  samples.reserve(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) {
    // Symmetric placement so mirrored rows share |y| exactly.
    const double t = (2.0 * i - (grid - 1)) / (grid - 1);
    const double y = (2 * i == grid - 1) ? 0.0 : t * hi;
    samples.emplace_back(y, evaluate(state, y));
  }
  (void)lo;
  if (g.json()) {
    ordered_json doc;
    doc["vbar0"] = vbar0;
    doc["convention"] = g.convention;
    doc["n"] = index;
    doc["ebar"] = state.ebar;
    doc["y"] = ordered_json::array();
    doc["psi"] = ordered_json::array();
    for (const auto& [y, psi] : samples) {
      doc["y"].push_back(y);
      doc["psi"].push_back(psi);
    }
    return doc.dump(2) + "\n";
  }
  std::string out = csv_row({"y", "psi"});
  for (const auto& [y, psi] : samples) out += csv_row({format_shortest(y), format_shortest(psi)});
  return out;
}

int state_count(double vbar0, Convention c, double tol) {
  return static_cast<int>(solve_spectrum(DimensionlessWell(vbar0, c), tol).states.size());
}

std::string cmd_critical(const Globals& g, int max_n) {
  if (max_n < 1 || max_n > 8) throw UsageError("--max-n must lie in [1, 8]");
  const std::array<Convention, 2> convs{Convention::eq1, Convention::halfwidth2};
  struct Row {
    int n;
    std::array<double, 2> depth;
    std::array<bool, 2> flips;
    std::optional<double> paper;
  };
  std::vector<Row> rows;
  for (int n = 1; n <= max_n; ++n) {
    Row r{n, {}, {}, std::nullopt};
    if (n == 1) r.paper = kPaperOnset1;
    if (n == 2) r.paper = kPaperOnset2;
    for (std::size_t i = 0; i < 2; ++i) {
      const double d = critical_depth(n, convs[i], g.tol);
      r.depth[i] = d;
      const double delta = std::max(10.0 * g.tol, 1e-12 * d);
      r.flips[i] = state_count(d - delta, convs[i], g.tol) == n &&
                   state_count(d + delta, convs[i], g.tol) == n + 1;
    }
    rows.push_back(r);
  }
  if (g.json()) {
    ordered_json doc = ordered_json::array();
    for (const auto& r : rows) {
      doc.push_back({{"n", r.n},
                     {"vbar0_critical_eq1", r.depth[0]},
                     {"vbar0_critical_halfwidth2", r.depth[1]},
                     {"published", r.paper ? ordered_json(*r.paper) : ordered_json(nullptr)},
                     {"count_flips_eq1", r.flips[0]},
                     {"count_flips_halfwidth2", r.flips[1]}});
    }
    return doc.dump(2) + "\n";
  }
  std::string out = csv_row({"n", "vbar0_critical_eq1", "vbar0_critical_halfwidth2", "published",
                             "count_flips_eq1", "count_flips_halfwidth2"});
  for (const auto& r : rows) {
    out += csv_row({std::to_string(r.n), format_shortest(r.depth[0]), format_shortest(r.depth[1]),
                    format_optional(r.paper), r.flips[0] ? "1" : "0", r.flips[1] ? "1" : "0"});
  }
  return out;
}

std::string cmd_oracle(const Globals& g, double vbar0, std::optional<double> half_domain,
                       std::optional<long long> grid_points, std::optional<int> levels) {
  const DimensionlessWell well = make_well(vbar0, g.conv());
  OracleConfig config = default_oracle_config(well);
  if (half_domain) config.half_domain = *half_domain;
  if (grid_points) config.grid_points = *grid_points;
  if (levels) config.refine_levels = *levels;
  try {
    validate_config(config, well);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const OracleSpectrum spec = oracle_spectrum(well, config);
  if (g.json()) {
    ordered_json doc;
    doc["vbar0"] = vbar0;
    doc["convention"] = g.convention;
    doc["count"] = spec.eigenvalues.size();
    doc["eigenvalues"] = spec.eigenvalues;
    doc["achieved_error_estimate"] = spec.achieved_error_estimate;
    doc["half_domain"] = spec.final_config.half_domain;
    doc["grid_points"] = spec.final_config.grid_points;
    doc["refine_levels"] = spec.final_config.refine_levels;
    doc["domain_doublings"] = spec.domain_doublings;
    return doc.dump(2) + "\n";
  }
  std::string out = kv("vbar0", format_diag(vbar0)) + kv("convention", g.convention) +
                    kv("count", std::to_string(spec.eigenvalues.size()));
  for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
    out += kv("e" + std::to_string(i), format_diag(spec.eigenvalues[i]));
  }
  out += kv("achieved_error_estimate", format_diag(spec.achieved_error_estimate));
  out += kv("half_domain", format_diag(spec.final_config.half_domain));
  out += kv("grid_points", std::to_string(spec.final_config.grid_points));
  out += kv("refine_levels", std::to_string(spec.final_config.refine_levels));
  out += kv("domain_doublings", std::to_string(spec.domain_doublings));
  return out;
}

std::string cmd_airy(const Globals& g, double x, bool scaled) {
  double v[4];
  if (scaled) {
    const ScaledAiryQuad q = airy_eval_scaled(x);
    v[0] = q.ai_s, v[1] = q.bi_s, v[2] = q.ai_prime_s, v[3] = q.bi_prime_s;
  } else {
    const AiryQuad q = airy_eval(x);
    v[0] = q.ai, v[1] = q.bi, v[2] = q.ai_prime, v[3] = q.bi_prime;
  }
  const std::string suffix = scaled ? "_s" : "";
  const char* names[4] = {"ai", "bi", "ai_prime", "bi_prime"};
  if (g.json()) {
    ordered_json doc;
    doc["x"] = x;
    for (int i = 0; i < 4; ++i) doc[names[i] + suffix] = v[i];
    return doc.dump(2) + "\n";
  }
  std::string out = kv("x", format_diag(x));
  for (int i = 0; i < 4; ++i) out += kv(names[i] + suffix, format_diag(v[i]));
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bound states of a finite triangular well"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--convention", g.convention, "Well geometry")
      ->check(CLI::IsMember({"eq1", "halfwidth2"}));
  app.add_option("--tol", g.tol, "Root tolerance on the dimensionless energy");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json-like"}));
  app.add_option("--output", g.output, "Output path (default: standard output)");

  double vbar0 = 0.0;
  auto* solve = app.add_subcommand("solve", "Bound-state spectrum of one well");
  solve->add_option("--vbar0", vbar0, "Dimensionless depth")->required();

  std::string table;
  bool compare = false;
  auto* table1 = app.add_subcommand("table1", "Published table, optionally recomputed and compared");
  table1->add_flag("--compare", compare, "Recompute every row and emit the comparison report");
  table1->add_option("--table", table, "Path to table1.csv");

  int state_index = 0;
  int grid = 1001;
  auto* wave = app.add_subcommand("wavefunction", "Sample a normalized eigenfunction");
  wave->add_option("--vbar0", vbar0, "Dimensionless depth")->required();
  wave->add_option("--state", state_index, "State index n");
  wave->add_option("--grid", grid, "Number of samples");

  int max_n = 2;
  auto* critical = app.add_subcommand("critical", "Depths at which excited states appear");
  critical->add_option("--max-n", max_n, "Highest excited state");

  std::optional<double> half_domain;
  std::optional<long long> grid_points;
  std::optional<int> levels;
  auto* oracle = app.add_subcommand("oracle", "Finite-difference eigenvalues");
  oracle->add_option("--vbar0", vbar0, "Dimensionless depth")->required();
  oracle->add_option("--half-domain", half_domain, "Wall position L");
  oracle->add_option("--grid-points", grid_points, "Odd number of grid nodes");
  oracle->add_option("--levels", levels, "Richardson levels");

  double x = 0.0;
  bool scaled = false;
  auto* airy = app.add_subcommand("airy", "Airy functions at one argument");
  airy->add_option("--x", x, "Argument")->required();
  airy->add_flag("--scaled", scaled, "Exponent-scaled values");

  for (auto* sub : {solve, table1, wave, critical, oracle, airy}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (!(g.tol >= 1e-14 && g.tol <= 1e-6)) throw UsageError("--tol must lie in [1e-14, 1e-6]");
    std::string doc;
    if (solve->parsed()) {
      doc = cmd_solve(g, vbar0);
    } else if (table1->parsed()) {
      doc = cmd_table1(g, table, compare, err);
    } else if (wave->parsed()) {
      doc = cmd_wavefunction(g, vbar0, state_index, grid);
    } else if (critical->parsed()) {
      doc = cmd_critical(g, max_n);
    } else if (oracle->parsed()) {
      doc = cmd_oracle(g, vbar0, half_domain, grid_points, levels);
    } else {
      doc = cmd_airy(g, x, scaled);
    }
    if (g.output.empty()) {
      out << doc;
    } else {
      write_file_atomic(g.output, doc);
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AiryRangeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << " (bracket [" << format_diag(e.lo()) << ", "
        << format_diag(e.hi()) << "])\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace triwell::cli
