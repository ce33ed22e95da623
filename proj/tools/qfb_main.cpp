#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qfb/csv.hpp"
#include "qfb/ensemble.hpp"
#include "qfb/presets.hpp"
#include "qfb/scenario.hpp"
#include "qfb/trajectory.hpp"
#include "qfb/validate.hpp"

namespace {

struct CommonOpts {
  std::string scenario;
  std::uint64_t seed = 0;
  int runs = 1;
  int threads = 0;
  std::string out;
  bool no_feedback = false;
  bool no_measurement = false;
  std::vector<std::string> overrides;
};

void add_scenario_options(CLI::App* cmd, CommonOpts& opts, bool needs_out) {
  cmd->add_option("--scenario", opts.scenario,
                  "preset name or path to a config file")
      ->required();
  cmd->add_option("--seed", opts.seed, "master seed (default 0)");
  cmd->add_option("--set", opts.overrides,
                  "override a config scalar, section.key=value (repeatable)");
  cmd->add_flag("--no-feedback", opts.no_feedback,
                "measure but skip the correction unitary");
  cmd->add_flag("--no-measurement", opts.no_measurement,
                "bare noisy evolution, no measurement or feedback");
  auto* out =
      cmd->add_option("--out", opts.out, "output CSV path");
  if (needs_out) out->required();
}

qfb::Config load_with_overrides(const CommonOpts& opts) {
  qfb::Config cfg = qfb::load_config(opts.scenario);
  for (const std::string& kv : opts.overrides) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw qfb::ConfigError("--set expects section.key=value, got '" + kv + "'");
    cfg.set_dotted(kv.substr(0, eq), kv.substr(eq + 1));
  }
  return cfg;
}

qfb::Scenario build(const CommonOpts& opts, const qfb::Config& cfg) {
  qfb::Scenario s = qfb::build_scenario(cfg);
  s.name = opts.scenario;
  if (opts.no_feedback) s.schedule.feedback = false;
  if (opts.no_measurement) {
    s.schedule.measurement = false;
    s.schedule.feedback = false;
  }
  return s;
}

void reject_dilation_kind(const qfb::Scenario& s, const std::string& command) {
  if (s.kind == qfb::SystemKind::ramsey_dilation)
    throw qfb::ConfigError("scenario kind ramsey-dilation describes a "
                           "measurement probe; it supports 'validate' only, not '" +
                           command + "'");
}

int cmd_run(const CommonOpts& opts) {
  const qfb::Config cfg = load_with_overrides(opts);
  qfb::Scenario s = build(opts, cfg);
  reject_dilation_kind(s, "run");
  const qfb::ReferenceTrajectory ref =
      qfb::run_reference(s.spec, s.psi0, s.schedule);
  if (s.output.content == qfb::OutputOptions::Content::feedback_fields) {
    qfb::write_feedback_fields_csv(qfb::feedback_field_schedule(ref, s.family),
                                   opts.out);
  } else {
    const qfb::TrajectoryRecord rec = qfb::run_trajectory(
        s.spec, s.psi0, s.schedule, s.family, ref, opts.seed, 0, s.target);
    qfb::write_trajectory_csv(rec, s.output.final_only, opts.out);
  }
  return 0;
}

int cmd_reference(const CommonOpts& opts) {
  const qfb::Config cfg = load_with_overrides(opts);
  qfb::Scenario s = build(opts, cfg);
  reject_dilation_kind(s, "reference");
  s.spec.noise = qfb::NoiseProcess{};
  s.schedule.measurement = false;
  s.schedule.feedback = false;
  const qfb::ReferenceTrajectory ref =
      qfb::run_reference(s.spec, s.psi0, s.schedule);
  const qfb::TrajectoryRecord rec = qfb::run_trajectory(
      s.spec, s.psi0, s.schedule, s.family, ref, opts.seed, 0, s.target);
  qfb::write_trajectory_csv(rec, s.output.final_only, opts.out);
  return 0;
}

int cmd_ensemble(const CommonOpts& opts) {
  const qfb::Config cfg = load_with_overrides(opts);
  const std::vector<qfb::SweepAxis> axes = qfb::sweep_axes(cfg);
  std::vector<std::string> axis_names;
  for (const qfb::SweepAxis& axis : axes) axis_names.push_back(axis.name());

  // Odometer over the grid, first axis slowest; empty grid -> no rows.
  std::vector<qfb::SweepPoint> points;
  std::vector<std::size_t> index(axes.size(), 0);
  bool exhausted = false;
  for (const qfb::SweepAxis& axis : axes)
    if (axis.values.empty()) exhausted = true;
  bool final_only = false;
  while (!exhausted) {
    qfb::Config combo = cfg;
    qfb::SweepPoint point;
    for (std::size_t a = 0; a < axes.size(); ++a) {
      combo.set(axes[a].section, axes[a].key, axes[a].values[index[a]]);
      point.values.push_back(axes[a].values[index[a]]);
    }
    qfb::Scenario s = build(opts, combo);
    reject_dilation_kind(s, "ensemble");
    final_only = s.output.final_only;
    const qfb::ReferenceTrajectory ref =
        qfb::run_reference(s.spec, s.psi0, s.schedule);
    point.summary = qfb::run_ensemble(s.spec, s.psi0, s.schedule, s.family, ref,
                                      opts.seed, opts.runs, opts.threads);
    points.push_back(std::move(point));
    if (axes.empty()) break;
    std::size_t a = axes.size();
    while (a > 0) {
      --a;
      if (++index[a] < axes[a].values.size()) break;
      index[a] = 0;
      if (a == 0) exhausted = true;
    }
  }
  qfb::write_summary_csv(axis_names, points,
                         points.empty() ? false : final_only, opts.out);
  return 0;
}

int cmd_validate(const CommonOpts& opts, const std::string& suite) {
  const qfb::DilationParams* dilation = nullptr;
  const qfb::RydbergParams* rydberg = nullptr;
  qfb::Scenario s;
  if (!opts.scenario.empty()) {
    const qfb::Config cfg = load_with_overrides(opts);
    s = build(opts, cfg);
    if (s.kind == qfb::SystemKind::ramsey_dilation) dilation = &s.dilation;
    if (s.kind == qfb::SystemKind::rydberg) rydberg = &s.rydberg_params;
  }
  std::vector<qfb::SuiteResult> results;
  if (suite == "all") {
    results = qfb::validate_all(dilation, rydberg);
  } else if (suite == "povm") {
    results = {qfb::validate_povm()};
  } else if (suite == "feedback") {
    results = {qfb::validate_feedback()};
  } else if (suite == "dilation") {
    results = {qfb::validate_dilation(dilation)};
  } else if (suite == "effective-model") {
    results = {qfb::validate_effective(rydberg)};
  } else {
    throw qfb::ConfigError("unknown suite '" + suite +
                           "' (povm, feedback, dilation, effective-model, all)");
  }
  bool all_passed = true;
  for (const qfb::SuiteResult& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": "
              << r.detail << "\n";
    all_passed = all_passed && r.passed;
  }
  return all_passed ? 0 : 3;
}

int cmd_scenario_list() {
  for (const std::string& name : qfb::preset_names())
    std::cout << name << "  -  " << qfb::preset_description(name) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"state-vector simulator for measurement-feedback control of "
               "noisy quantum dynamics"};
  app.require_subcommand(1);

  CommonOpts run_opts, ref_opts, ens_opts, val_opts;
  std::string suite = "all";

  CLI::App* run_cmd = app.add_subcommand("run", "single stochastic trajectory");
  add_scenario_options(run_cmd, run_opts, true);

  CLI::App* ref_cmd =
      app.add_subcommand("reference", "noiseless trajectory only");
  add_scenario_options(ref_cmd, ref_opts, true);

  CLI::App* ens_cmd = app.add_subcommand(
      "ensemble", "averaged runs, optionally over a sweep grid");
  add_scenario_options(ens_cmd, ens_opts, true);
  ens_cmd->add_option("--runs", ens_opts.runs, "number of runs (default 1)")
      ->check(CLI::PositiveNumber);
  ens_cmd->add_option("--threads", ens_opts.threads,
                      "worker threads, 0 = auto (output is thread-count "
                      "independent)");

  CLI::App* val_cmd =
      app.add_subcommand("validate", "property suites; exit 3 on failure");
  val_cmd->add_option("--scenario", val_opts.scenario,
                      "optional preset/config whose parameters join the suites");
  val_cmd->add_option("--set", val_opts.overrides,
                      "override a config scalar, section.key=value");
  val_cmd->add_option("--suite", suite,
                      "povm | feedback | dilation | effective-model | all");

  CLI::App* scn_cmd = app.add_subcommand("scenario", "scenario utilities");
  scn_cmd->require_subcommand(1);
  CLI::App* list_cmd = scn_cmd->add_subcommand("list", "list bundled presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(run_opts);
    if (ref_cmd->parsed()) return cmd_reference(ref_opts);
    if (ens_cmd->parsed()) return cmd_ensemble(ens_opts);
    if (val_cmd->parsed()) return cmd_validate(val_opts, suite);
    if (scn_cmd->parsed() && list_cmd->parsed()) return cmd_scenario_list();
  } catch (const qfb::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
