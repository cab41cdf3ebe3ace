// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "proxshift/errors.hpp"
#include "proxshift/experiment.hpp"
#include "proxshift/problem.hpp"
#include "proxshift/quadratic.hpp"
#include "proxshift/rates.hpp"
#include "proxshift/shift.hpp"

namespace {

using namespace proxshift;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buf.str();
}

struct CommonFlags {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_iters;
  std::optional<std::string> out_dir;
  bool no_plots = false;
  bool quiet = false;
};

// Output directory precedence: --out-dir flag, then PROXSHIFT_OUT_DIR, then
// the config value (whose own default is "out").
void apply_flags(ExperimentConfig& config, const CommonFlags& flags) {
  if (flags.seed.has_value()) {
    std::uint64_t seed = *flags.seed;
    for (InstanceSpec& spec : config.instances) spec.params.seed = seed++;
  }
  if (flags.max_iters.has_value()) config.max_iters = *flags.max_iters;
  if (flags.out_dir.has_value()) {
    config.out_dir = *flags.out_dir;
  } else if (const char* env = std::getenv("PROXSHIFT_OUT_DIR")) {
    config.out_dir = env;
  }
  if (flags.no_plots) config.plots = false;
  if (flags.quiet) config.quiet = true;
}

void report(const ExperimentConfig& config, const ExperimentResult& result) {
  if (config.quiet) return;
  std::size_t row = 0;
  for (const InstanceResult& inst : result.instances) {
    std::cout << "instance " << inst.label << ": n=" << inst.params.cols
              << " seed=" << inst.params.seed << " mu=" << fmt(inst.mu)
              << " L=" << fmt(inst.lipschitz)
              << " rho=" << fmt(inst.params.rho) << "\n";
    for (std::size_t ai = 0; ai < inst.runs.size(); ++ai, ++row) {
      const RunSummary& s = result.summaries[row];
      std::cout << "  " << s.label << ": rate=" << fmt(s.certificate_rate);
      if (s.empirical.has_value()) {
        std::cout << " empirical=" << fmt(*s.empirical);
      }
      if (s.final_value_gap.has_value()) {
        std::cout << " final_gap=" << fmt(*s.final_value_gap);
      }
      std::cout << " iters=" << s.iterations << " wall="
                << fmt(s.wall_seconds) << "s\n";
    }
  }
  if (result.region.has_value()) {
    std::cout << "region grid: " << result.region->mu_grid.size() << " x "
              << result.region->rho_grid.size() << " cells\n";
  }
  if (!result.written.empty()) {
    std::cout << "wrote " << result.written.size() << " files:\n";
    for (const std::string& path : result.written) {
      std::cout << "  " << path << "\n";
    }
  }
  std::cout << "total wall time " << fmt(result.total_wall_seconds)
            << "s\n";
}

void print_rates(double mu, double rho, double lipschitz, double delta) {
  const RateCertificate cert =
      fista_delta_certificate(mu, rho, lipschitz, delta);
  std::cout << "constants: mu=" << fmt(mu) << " rho=" << fmt(rho)
            << " L=" << fmt(lipschitz) << " delta=" << fmt(delta) << "\n";
  std::cout << "inertial: contraction=" << fmt(cert.contraction)
            << " inertia=" << fmt(cert.inertia)
            << " coupling=" << fmt(cert.coupling)
            << " weight=" << fmt(cert.weight)
            << " step=" << fmt(cert.step);
  if (cert.degenerate) std::cout << " (degenerate: no certificate)";
  std::cout << "\n";
  const double step = optimal_fbs_step(mu, lipschitz, delta);
  std::cout << "forward-backward: contraction="
            << fmt(contraction_factor(mu, rho, lipschitz, delta, step))
            << " step=" << fmt(step) << "\n";
  if (lipschitz == 1.0) {
    std::cout << "normalized comparison: plain_fb_rate="
              << fmt(fbs_rate_remark(mu, rho))
              << " zeta=" << fmt(zeta(mu, rho))
              << " winner=" << region_name(classify_region(mu, rho)) << "\n";
  }
}

int run_validate(const std::string& path, int samples, std::uint64_t seed,
                 bool quiet) {
  const ExperimentConfig config = parse_config(read_file(path));
  if (config.instances.empty()) {
    throw ConfigError("validate needs a config with instances");
  }
  bool ok = true;
  for (const InstanceSpec& spec : config.instances) {
    const auto inst =
        std::make_shared<const QuadraticInstance>(make_instance(spec.params));
    const CompositeProblem problem = as_problem(inst);
    const ValidationReport report = validate_problem(problem, samples, seed);
    if (!quiet) {
      std::cout << "instance " << spec.label << ": mu=" << fmt(inst->mu)
                << " L=" << fmt(inst->lipschitz)
                << " rho=" << fmt(inst->rho) << "\n";
    }
    for (const CheckResult& check : report.checks) {
      if (!quiet || !check.passed) {
        std::cout << "  " << check.name << ": "
                  << (check.passed ? "pass" : "FAIL")
                  << " (worst " << fmt(check.worst_violation) << " over "
                  << check.samples << " samples)\n";
      }
    }
    ok = ok && report.all_passed();
  }
  if (!ok) {
    std::cout << "validation failed\n";
    return 1;
  }
  if (!quiet) std::cout << "all checks passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"composite minimization with strong convexity shifting"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string config_path;
  std::string preset_name;

  const auto add_common = [&flags](CLI::App* cmd) {
    cmd->add_option("--seed", flags.seed,
                    "replace instance seeds with SEED, SEED+1, ...");
    cmd->add_option("--max-iters", flags.max_iters,
                    "override the iteration budget");
    cmd->add_option("--out-dir", flags.out_dir,
                    "output root (overrides PROXSHIFT_OUT_DIR and config)");
    cmd->add_flag("--no-plots", flags.no_plots, "skip SVG output");
    cmd->add_flag("--quiet", flags.quiet, "suppress progress output");
  };

  CLI::App* run_cmd =
      app.add_subcommand("run", "run an experiment from a JSON config");
  run_cmd->add_option("config", config_path, "JSON experiment description")
      ->required();
  add_common(run_cmd);

  CLI::App* preset_cmd =
      app.add_subcommand("preset", "run a bundled study (fig1..fig4)");
  preset_cmd->add_option("name", preset_name, "preset name")->required();
  add_common(preset_cmd);

  double mu = 0.0, rho = 0.0, lipschitz = 1.0, delta = 0.0;
  CLI::App* rates_cmd = app.add_subcommand(
      "rates", "print certified parameters for given constants");
  rates_cmd->add_option("--mu", mu, "strong convexity of the smooth part")
      ->required();
  rates_cmd->add_option("--rho", rho, "strong convexity of the nonsmooth part")
      ->required();
  rates_cmd->add_option("--L", lipschitz, "gradient Lipschitz constant");
  rates_cmd->add_option("--delta", delta, "strong convexity shift");

  RegionSpec region_spec;
  std::size_t region_steps = 0;
  CLI::App* region_cmd = app.add_subcommand(
      "region", "print the rate-comparison grid as CSV");
  region_cmd->add_option("--steps", region_steps,
                         "points per axis (default 101)");
  region_cmd->add_option("--mu-max", region_spec.mu_max,
                         "upper end of the mu axis (exclusive)");
  region_cmd->add_option("--rho-max", region_spec.rho_max,
                         "upper end of the rho axis (inclusive)");

  std::string validate_path;
  int validate_samples = 25;
  std::uint64_t probe_seed = 123;
  bool validate_quiet = false;
  CLI::App* validate_cmd = app.add_subcommand(
      "validate", "check the oracle contract of a config's instances");
  validate_cmd->add_option("config", validate_path, "JSON config")
      ->required();
  validate_cmd->add_option("--samples", validate_samples,
                           "sample points per check");
  validate_cmd->add_option("--probe-seed", probe_seed,
                           "seed for the validation sampler");
  validate_cmd->add_flag("--quiet", validate_quiet,
                         "print failures only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run_cmd->parsed()) {
      ExperimentConfig config = parse_config(read_file(config_path));
      apply_flags(config, flags);
      const ExperimentResult result = run_experiment(config);
      report(config, result);
      return 0;
    }
    if (preset_cmd->parsed()) {
      ExperimentConfig config = preset_config(preset_name);
      apply_flags(config, flags);
      const ExperimentResult result = run_experiment(config);
      report(config, result);
      return 0;
    }
    if (rates_cmd->parsed()) {
      print_rates(mu, rho, lipschitz, delta);
      return 0;
    }
    if (region_cmd->parsed()) {
      if (region_steps > 0) {
        region_spec.mu_points = region_steps;
        region_spec.rho_points = region_steps;
      }
      emit_region_csv(std::cout, region_spec);
      return 0;
    }
    if (validate_cmd->parsed()) {
      return run_validate(validate_path, validate_samples, probe_seed,
                          validate_quiet);
    }
    return 1;
  } catch (const DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
