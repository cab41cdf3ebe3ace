// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "proxshift/quadratic.hpp"
#include "proxshift/rates.hpp"
#include "proxshift/solvers.hpp"

namespace proxshift {

/// One algorithm entry of an experiment. `algorithm` is "fbs", "fista" or
/// "fista_zform"; `delta` moves strong convexity from the nonsmooth into
/// the smooth part before the parameters are derived. The optional fields
/// override the derived defaults.
struct AlgorithmSpec {
  std::string algorithm = "fista";
  std::string label;
  double delta = 0.0;
  std::optional<double> step;
  std::optional<double> inertia;
  std::optional<double> coupling;
};

/// One random least-squares instance of an experiment.
struct InstanceSpec {
  std::string label = "instance";
  InstanceParams params;
};

/// Rate-comparison grid: mu_i = i * mu_max / mu_points (i < mu_points, so
/// mu stays strictly below mu_max) and rho_j = j * rho_max / (rho_points-1)
/// (inclusive). The smooth modulus is normalized to L = 1.
struct RegionSpec {
  std::size_t mu_points = 101;
  std::size_t rho_points = 101;
  double mu_max = 1.0;
  double rho_max = 5.0;
};

/// Full experiment description; parse_config reads the same shape from
/// JSON and preset_config builds the bundled desk-scale studies.
struct ExperimentConfig {
  std::string name = "experiment";
  std::vector<InstanceSpec> instances;
  std::vector<AlgorithmSpec> algorithms;
  std::size_t max_iters = 2000;
  std::size_t snapshot_stride = 0;
  double tol = 0.0;
  bool plots = true;
  std::optional<RegionSpec> region;
  /// Output root; files land in out_dir/name. Empty disables all writes.
  std::string out_dir = "out";
  bool quiet = false;
};

/// Parses a JSON experiment description. Unknown keys, wrong types and
/// out-of-range values raise ConfigError.
ExperimentConfig parse_config(const std::string& json_text);

/// Bundled studies "fig1" through "fig4". Throws ConfigError for other
/// names.
ExperimentConfig preset_config(const std::string& name);

/// Per-run digest used for the summary table.
struct RunSummary {
  std::string instance_label;
  std::string label;
  std::string algorithm;
  double delta = 0.0;
  double step = 0.0;
  double inertia = 0.0;
  double coupling = 0.0;
  double certificate_rate = 1.0;
  /// Average observed decay of the certificate energy near the end of its
  /// above-floor prefix (of the normalized value trace when no energy is
  /// recorded); absent when the trace is too short.
  std::optional<double> empirical;
  std::optional<double> final_value_gap;
  std::optional<double> final_e;
  std::optional<double> final_ell;
  /// First index at or below the numerical floor of the digest trace, or
  /// its length when it stays above.
  std::size_t floor_iteration = 0;
  std::size_t iterations = 0;
  bool stopped_early = false;
  double wall_seconds = 0.0;
  std::string csv_path;
};

/// Everything produced for one instance: realized constants plus the runs
/// in configuration order.
struct InstanceResult {
  std::string label;
  InstanceParams params;
  double mu = 0.0;
  double lipschitz = 0.0;
  std::vector<SolverRun> runs;
};

struct ExperimentResult {
  std::vector<InstanceResult> instances;
  std::vector<RunSummary> summaries;  // instance-major, config order
  std::optional<RegionMap> region;
  std::vector<std::string> written;
  double total_wall_seconds = 0.0;
};

/// Runs the experiment: builds every instance, executes the algorithm list
/// on each (independent runs in parallel), then writes per-run CSV traces,
/// per-instance SVG charts, a summary table, and the region map if one is
/// requested. Throws ConfigError for an empty experiment and IoError when
/// an output path cannot be created or written.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Writes one run as CSV: `# key value` metadata lines (caller extras
/// first), a `k,e_k,v_k,ell_k,F_xk,phi_k` header, then one row per
/// iteration with 17 significant digits. The normalized and certificate
/// columns stay empty when the run carries no reference diagnostics.
void emit_csv(std::ostream& out, const SolverRun& run,
              const std::vector<std::pair<std::string, std::string>>&
                  metadata);

/// Grid coordinates of a region spec. Throw DomainError when the point
/// counts or bounds make the grid degenerate.
std::vector<double> region_mu_grid(const RegionSpec& spec);
std::vector<double> region_rho_grid(const RegionSpec& spec);

/// Winner map over the spec's grid.
RegionMap build_region_map(const RegionSpec& spec);

/// Writes `mu,rho,r_fbs,r_fista0,winner` rows over the spec's grid in
/// mu-major order.
void emit_region_csv(std::ostream& out, const RegionSpec& spec);

}  // namespace proxshift
