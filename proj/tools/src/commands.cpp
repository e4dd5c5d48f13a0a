#include <cmath>
#include <exception>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "koiter/ansatz.hpp"
#include "koiter/critical_load.hpp"
#include "koiter/errors.hpp"
#include "koiter/korn.hpp"
#include "koiter/modes.hpp"
#include "koiter/oracle.hpp"
#include "koiter/statistics.hpp"
#include "koiter/tools/acceptance.hpp"
#include "koiter/tools/cli.hpp"
#include "koiter/tools/output.hpp"
#include "koiter/tools/run_config.hpp"

namespace koiter::tools {

namespace {

using nlohmann::ordered_json;

/// \brief Flag storage of one subcommand; values are applied only when the flag was given.
struct CommonFlags {
  std::string config_path;
  double nu = 0.0, E = 0.0, L = 0.0, margin = 0.0, alpha = 0.0, tolerance = 0.0, sharpness = 0.0;
  std::vector<double> h;
  int degree = 0;
  std::string out, format;
  unsigned jobs = 0;
  std::map<std::string, CLI::Option*> options;

  void attach(CLI::App& app) {
    options["config"] = app.add_option("--config", config_path, "JSON config file (flags override it)");
    options["nu"] = app.add_option("--nu", nu, "Poisson ratio");
    options["E"] = app.add_option("--E", E, "Young's modulus");
    options["h"] = app.add_option("--h", h, "slenderness list, strictly decreasing (comma separated)")->delimiter(',');
    options["L"] = app.add_option("--L", L, "shell length");
    options["margin"] = app.add_option("--margin", margin, "sweep-window margin factor");
    options["degree"] = app.add_option("--degree", degree, "radial polynomial degree of the oracle");
    options["out"] = app.add_option("--out", out, "output directory");
    options["jobs"] = app.add_option("--jobs", jobs, "worker threads (0: all logical processors)");
    options["alpha"] = app.add_option("--alpha", alpha, "mode exponent alpha");
    options["format"] = app.add_option("--format", format, "mode field format: vtk or csv");
    options["tol"] = app.add_option("--tol", tolerance, "relative Koiter-circle tolerance");
    options["sharpness"] = app.add_option("--sharpness", sharpness, "ansatz bump sharpness");
  }

  [[nodiscard]] bool given(const std::string& name) const { return options.at(name)->count() > 0; }

  [[nodiscard]] RunConfig resolve(const std::vector<double>& default_h) const {
    RunConfig config;
    if (given("config")) merge_file(config, config_path);
    ConfigOverrides o;
    if (given("nu")) o.nu = nu;
    if (given("E")) o.E = E;
    if (given("h")) o.h = h;
    if (given("L")) o.L = L;
    if (given("margin")) o.margin = margin;
    if (given("degree")) o.degree = degree;
    if (given("out")) o.out = out;
    if (given("jobs")) o.jobs = jobs;
    if (given("alpha")) o.alpha = alpha;
    if (given("format")) o.format = format;
    if (given("tol")) o.tolerance = tolerance;
    if (given("sharpness")) o.sharpness = sharpness;
    apply_overrides(config, o);
    finalize(config, default_h);
    return config;
  }
};

struct Context {
  RunConfig config;
  std::ostream& out;
  std::ostream& err;
};

CriticalLoadProblem problem_for(const RunConfig& c, double h) {
  return CriticalLoadProblem(ShellGeometry(h, c.L), IsotropicElasticity(c.E, c.nu), c.margin);
}

RadialDiscretization discretization(const RunConfig& c) { return RadialDiscretization{c.degree, 0}; }

ordered_json config_json(const RunConfig& c) {
  return ordered_json{{"nu", c.nu}, {"E", c.E},           {"h", c.h},           {"L", c.L},
                      {"margin", c.margin}, {"degree", c.degree}};
}

ordered_json result_json(double h, const BucklingResult& r) {
  return ordered_json{{"h", h},
                      {"m", r.m},
                      {"n", r.n},
                      {"m_hat", r.m_hat},
                      {"lambda3_tilde", r.lambda},
                      {"lambda3_full", r.lambda_full},
                      {"lambda_star", r.lambda_star},
                      {"ratio", r.lambda / r.lambda_star},
                      {"a_theta", r.a_theta},
                      {"a_z", r.a_z},
                      {"koiter_residual", r.koiter_residual}};
}

void emit(Context& ctx, const ordered_json& document) { ctx.out << document.dump(2) << '\n'; }

/// Fitted log-log slope, or NaN with fewer than two thicknesses.
double slope_or_nan(const std::vector<double>& hs, const std::vector<double>& values) {
  return hs.size() >= 2 ? loglog_slope(hs, values) : std::numeric_limits<double>::quiet_NaN();
}

ordered_json number_or_null(double value) { return std::isfinite(value) ? ordered_json(value) : ordered_json(); }

int critical_load(Context& ctx) {
  ordered_json results = ordered_json::array();
  for (double h : ctx.config.h) results.push_back(result_json(h, sweep(problem_for(ctx.config, h), ctx.config.jobs)));
  emit(ctx, {{"command", "critical-load"}, {"config", config_json(ctx.config)}, {"results", results}});
  return kExitSuccess;
}

int sweep_command(Context& ctx) {
  std::ostringstream csv;
  CsvWriter writer(csv, {"h", "m", "n", "m_hat", "lambda3_tilde", "lambda3_full", "lambda_star", "ratio", "a_theta",
                         "a_z"});
  ordered_json results = ordered_json::array();
  for (double h : ctx.config.h) {
    const auto r = sweep(problem_for(ctx.config, h), ctx.config.jobs);
    writer.field(h).field(r.m).field(r.n).field(r.m_hat).field(r.lambda).field(r.lambda_full).field(r.lambda_star);
    writer.field(r.lambda / r.lambda_star).field(r.a_theta).field(r.a_z).end_row();
    results.push_back(result_json(h, r));
  }
  const auto path = ctx.config.out / "sweep.csv";
  write_file(path, csv.str());
  emit(ctx, {{"command", "sweep"}, {"config", config_json(ctx.config)}, {"csv", path.string()}, {"results", results}});
  return kExitSuccess;
}

int koiter_command(Context& ctx) {
  ordered_json results = ordered_json::array();
  for (double h : ctx.config.h) {
    const auto problem = problem_for(ctx.config, h);
    ordered_json points = ordered_json::array();
    for (const auto& p : koiter_circle(problem, ctx.config.tolerance)) {
      points.push_back({{"m", p.wn.m()},
                        {"n", p.wn.n()},
                        {"m_hat", p.wn.m_hat()},
                        {"residual", p.residual},
                        {"lambda3_tilde", lambda3_tilde(problem, p.wn).value}});
    }
    results.push_back({{"h", h}, {"radius", problem.koiter_radius()}, {"points", points}});
  }
  emit(ctx, {{"command", "koiter"},
             {"config", config_json(ctx.config)},
             {"tolerance", ctx.config.tolerance},
             {"results", results}});
  return kExitSuccess;
}

/// Writes rows (h, kind, value, fitted_slope) and returns the JSON estimates.
ordered_json ratio_table(Context& ctx, const std::string& file, const std::vector<std::string>& kinds,
                         const std::vector<std::vector<double>>& values, const ordered_json& per_h_extra) {
  const auto& hs = ctx.config.h;
  std::vector<double> slopes;
  for (const auto& series : values) slopes.push_back(slope_or_nan(hs, series));

  std::ostringstream csv;
  CsvWriter writer(csv, {"h", "kind", "value", "fitted_slope"});
  ordered_json estimates = ordered_json::array();
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      writer.field(hs[i]).field(kinds[k]).field(values[k][i]).field(slopes[k]).end_row();
      ordered_json item{{"h", hs[i]}, {"kind", kinds[k]}, {"value", values[k][i]}};
      if (!per_h_extra.is_null()) item.update(per_h_extra[i][k]);
      estimates.push_back(item);
    }
  }
  const auto path = ctx.config.out / file;
  write_file(path, csv.str());
  ordered_json fitted = ordered_json::object();
  for (std::size_t k = 0; k < kinds.size(); ++k) fitted[kinds[k]] = number_or_null(slopes[k]);
  return {{"csv", path.string()}, {"estimates", estimates}, {"fitted_slopes", fitted}};
}

int korn_command(Context& ctx) {
  std::vector<std::string> kinds;
  std::vector<std::vector<double>> values(4);
  ordered_json extra = ordered_json::array();
  for (double h : ctx.config.h) {
    const auto problem = problem_for(ctx.config, h);
    const auto estimates =
        korn_mode_scan(problem.geometry(), discretization(ctx.config), problem.window(), ctx.config.jobs);
    ordered_json row = ordered_json::array();
    for (std::size_t k = 0; k < estimates.size(); ++k) {
      if (kinds.size() < estimates.size()) kinds.emplace_back(to_string(estimates[k].kind));
      values[k].push_back(estimates[k].value);
      row.push_back({{"m", estimates[k].m}, {"n", estimates[k].n}});
    }
    extra.push_back(row);
  }
  ordered_json document{{"command", "korn"}, {"config", config_json(ctx.config)}};
  document.update(ratio_table(ctx, "korn.csv", kinds, values, extra));
  emit(ctx, document);
  return kExitSuccess;
}

int ansatz_command(Context& ctx) {
  const SmoothBump bump(ctx.config.sharpness);
  std::vector<std::vector<double>> values(3);
  for (double h : ctx.config.h) {
    const auto r = ansatz_ratios(ShellGeometry(h, ctx.config.L), BumpProfile{1.0, bump, bump});
    values[0].push_back(r.korn);
    values[1].push_back(r.angular_shear);
    values[2].push_back(r.radial_shear);
  }
  ordered_json document{{"command", "ansatz"}, {"config", config_json(ctx.config)}, {"sharpness", ctx.config.sharpness}};
  document.update(ratio_table(ctx, "ansatz.csv", {"korn", "theta_z", "r_z"}, values, ordered_json()));
  emit(ctx, document);
  return kExitSuccess;
}

int equivalence_command(Context& ctx) {
  std::ostringstream csv;
  CsvWriter writer(csv, {"h", "lambda_star", "compression_gap", "compression_gap_min", "midsurface_gap",
                         "midsurface_constant", "scaled_compression_gap"});
  std::vector<double> scaled;
  ordered_json results = ordered_json::array();
  for (double h : ctx.config.h) {
    const auto problem = problem_for(ctx.config, h);
    const auto gap = equivalence_window_gap(problem.geometry(), problem.elasticity(), problem.window(),
                                            discretization(ctx.config), ctx.config.jobs);
    const double star = lambda_star(problem);
    scaled.push_back(star * gap.compression_gap);
    writer.field(h).field(star).field(gap.compression_gap).field(gap.compression_gap_min).field(gap.midsurface_gap);
    writer.field(gap.midsurface_constant).field(scaled.back()).end_row();
    results.push_back({{"h", h},
                       {"lambda_star", star},
                       {"compression_gap", gap.compression_gap},
                       {"compression_gap_min", gap.compression_gap_min},
                       {"midsurface_gap", gap.midsurface_gap},
                       {"midsurface_constant", gap.midsurface_constant},
                       {"scaled_compression_gap", scaled.back()}});
  }
  const auto path = ctx.config.out / "equivalence.csv";
  write_file(path, csv.str());
  emit(ctx, {{"command", "equivalence"},
             {"config", config_json(ctx.config)},
             {"csv", path.string()},
             {"results", results},
             {"scaled_gap_slope", number_or_null(slope_or_nan(ctx.config.h, scaled))}});
  return kExitSuccess;
}

int mode_command(Context& ctx) {
  ordered_json results = ordered_json::array();
  const auto& hs = ctx.config.h;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const BucklingModeSpec spec{ShellGeometry(hs[i], ctx.config.L), IsotropicElasticity(ctx.config.E, ctx.config.nu),
                                ctx.config.alpha, ctx.config.margin};
    const BucklingMode mode(spec);
    const auto field = synthesize(mode, {}, ctx.config.jobs);
    std::ostringstream data;
    if (ctx.config.format == "vtk") {
      write_vtk(data, field, "buckling mode h=" + format_double(hs[i]) + " alpha=" + format_double(ctx.config.alpha));
    } else {
      write_field_csv(data, field);
    }
    const std::string stem = hs.size() == 1 ? "mode" : "mode_" + std::to_string(i);
    const auto path = ctx.config.out / (stem + "." + ctx.config.format);
    write_file(path, data.str());

    const auto q = quotient_ratio(mode);
    results.push_back({{"h", hs[i]},
                       {"file", path.string()},
                       {"m", mode.m()},
                       {"n", mode.n()},
                       {"target_m_hat", mode.target_m_hat()},
                       {"a_theta", mode.a_theta()},
                       {"ratio", q.ratio},
                       {"quotient", q.quotient},
                       {"lambda_star", q.lambda_star},
                       {"stiffness", q.stiffness},
                       {"denominator", q.denominator},
                       {"harmonic_ratio", q.harmonic_ratio},
                       {"boundary_trace", boundary_traces(field).relative()}});
  }
  emit(ctx, {{"command", "mode"},
             {"config", config_json(ctx.config)},
             {"alpha", ctx.config.alpha},
             {"format", ctx.config.format},
             {"results", results}});
  return kExitSuccess;
}

int verify_command(Context& ctx, int criterion) {
  AcceptanceOptions options;
  options.nu = ctx.config.nu;
  options.jobs = ctx.config.jobs;
  options.seed = seed_from_environment();
  bool passed = true;
  if (criterion > 0) {
    const auto result = run_criterion(criterion, options);
    ctx.out << format_result(result) << std::endl;
    passed = result.passed;
  } else {
    for (const auto& result : run_acceptance(options, ctx.out)) passed = passed && result.passed;
  }
  return passed ? kExitSuccess : kExitNumerical;
}

struct Subcommand {
  const char* name;
  const char* description;
  std::vector<double> default_h;
};

const std::vector<Subcommand>& subcommands() {
  static const std::vector<Subcommand> list{
      {"critical-load", "critical strain and winning mode from the integer sweep", {0.01}},
      {"sweep", "integer sweep over an h-list, written to sweep.csv", {0.1, 0.03, 0.01, 0.003, 0.001}},
      {"koiter", "integer pairs near the Koiter circle", {0.01}},
      {"korn", "Korn constants of the discretized modes, written to korn.csv", {0.1, 0.05, 0.02, 0.01, 0.005}},
      {"ansatz", "Korn ratios of the localized ansatz field, written to ansatz.csv", {1e-4, 5e-5, 2e-5, 1e-5}},
      {"equivalence", "buckling-equivalence gaps, written to equivalence.csv", {0.05, 0.02, 0.01, 0.005}},
      {"mode", "two-term buckling mode field and its Rayleigh quotient", {0.01}},
      {"verify", "acceptance suite with one PASS/FAIL line per criterion", {0.01}},
  };
  return list;
}

int dispatch(const std::string& name, Context& ctx, int criterion) {
  if (name == "critical-load") return critical_load(ctx);
  if (name == "sweep") return sweep_command(ctx);
  if (name == "koiter") return koiter_command(ctx);
  if (name == "korn") return korn_command(ctx);
  if (name == "ansatz") return ansatz_command(ctx);
  if (name == "equivalence") return equivalence_command(ctx);
  if (name == "mode") return mode_command(ctx);
  return verify_command(ctx, criterion);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Critical buckling load of axially compressed cylindrical shells", "koiter"};
  // "--h" is the slenderness flag, so help is reachable only through "--help".
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  std::map<std::string, CommonFlags> flags;
  std::map<std::string, CLI::App*> apps;
  int criterion = 0;
  for (const auto& sub : subcommands()) {
    CLI::App* command = app.add_subcommand(sub.name, sub.description);
    flags[sub.name].attach(*command);
    apps[sub.name] = command;
  }
  apps["verify"]->add_option("--criterion", criterion, "run a single criterion (1..9)")
      ->check(CLI::Range(1, criterion_count()));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  for (const auto& sub : subcommands()) {
    if (!apps[sub.name]->parsed()) continue;
    try {
      Context ctx{flags[sub.name].resolve(sub.default_h), out, err};
      return dispatch(sub.name, ctx, criterion);
    } catch (const Error& e) {
      err << e.what() << '\n';
      if (e.kind() == ErrorKind::InvalidArgument) {
        err << apps[sub.name]->help();
        return kExitUsage;
      }
      return kExitNumerical;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  err << app.help();
  return kExitUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace koiter::tools
