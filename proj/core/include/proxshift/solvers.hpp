// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "proxshift/problem.hpp"
#include "proxshift/rates.hpp"

namespace proxshift {

/// Knobs shared by all solver drivers. Fields that do not apply to an
/// algorithm are ignored (e.g. inertia for plain forward-backward).
struct SolverConfig {
  std::size_t max_iters = 1000;
  /// Relative step-change stopping tolerance; 0 disables early stopping.
  double tol = 0.0;
  /// Shift moved from the nonsmooth into the smooth part; the inertial
  /// drivers derive their default parameters from the shifted constants.
  double delta = 0.0;
  /// Overrides for the derived defaults. The certificate always describes
  /// the defaults; overriding voids it but the run still executes.
  std::optional<double> step;
  std::optional<double> inertia;
  std::optional<double> coupling;
  /// Record full iterate vectors every `snapshot_stride` iterations
  /// (0 keeps none). Scalar traces are always dense.
  std::size_t snapshot_stride = 1;
};

/// Dense scalar traces plus optional vector snapshots of one solver run.
/// All scalar traces are indexed by iteration, entry 0 describing the
/// initial point, and have length iterations + 1 when present.
struct SolverRun {
  std::string algorithm;
  RateCertificate certificate;
  /// Effective parameters used (after applying overrides).
  double step = 0.0;
  double inertia = 0.0;
  double coupling = 0.0;
  double delta = 0.0;

  std::size_t iterations = 0;
  bool stopped_early = false;
  /// True when the diagnostic z trace was recorded: the coupling is
  /// positive (it is zero when mu + delta = 0) and a reference is known.
  bool z_available = false;
  /// Objective at the reference solution, when the problem carries one.
  std::optional<double> f_star;

  std::vector<double> values;    // F(x_k)
  std::vector<double> lyapunov;  // certificate energy; empty if unavailable
  std::vector<double> dist_x;    // |x_k - x*|; empty without reference
  std::vector<double> dist_z;    // |z_k - x*|; empty without reference or z

  std::vector<Vec> xs, ys, zs;   // snapshots, stride-spaced
  std::vector<std::size_t> snapshot_iters;
};

/// True when |next - prev| <= tol * (1 + |next|) and tol > 0.
bool stop_check(const Vec& prev, const Vec& next, double tol);

/// Forward-backward splitting x+ = prox_{gamma h}(x - gamma grad f(x)),
/// optionally on the delta-shifted oracles. Default step is the contraction
/// optimum 2/(L + mu + 2 delta). The `lyapunov` trace records the energy
/// F(x) - F* + ((mu + rho)/2)|x - x*|^2, which at the default step with
/// delta = 0 contracts by (L - mu)/(L + mu + 2 rho) per iteration.
SolverRun fbs_run(const CompositeProblem& problem, const SolverConfig& config,
                  const Vec& x0);

/// Inertial scheme with fixed momentum:
///   x_{k+1} = prox_{gamma h}(y_k - gamma grad f(y_k)),
///   y_{k+1} = x_{k+1} + alpha (x_{k+1} - x_k).
/// Defaults: gamma = 1/L, alpha = fista_inertia(mu, rho, L). The `lyapunov`
/// trace records F(x_k) - F* + w |z_k - x*|^2 with the certificate weight w
/// and the diagnostic sequence z_k = x_k + (1/c)(y_k - x_k).
SolverRun fista_run(const CompositeProblem& problem, const SolverConfig& config,
                    const Vec& x0, const Vec& y0);

/// Same trajectory as fista_run written as a two-point recursion:
///   y_k = x_k + c (z_k - x_k),
///   x_{k+1} = prox_{gamma h}(y_k - gamma grad f(y_k)),
///   z_{k+1} = (alpha/(1-c)) z_k - (alpha/(c(1-c))) y_k + ((c+alpha)/c) x_{k+1}.
/// With matched initialization y_0 = x_0 + c (z_0 - x_0) the x and y
/// sequences coincide with fista_run for ANY inertia alpha and c in ]0, 1[.
SolverRun fista_zform_run(const CompositeProblem& problem,
                          const SolverConfig& config, const Vec& x0,
                          const Vec& z0);

/// Inertial scheme for the delta-shifted problem, run through the BASE
/// oracles: the shifted forward-backward map at step 1/(L + delta) equals the
/// base map at step 1/L, so only the momentum changes. Defaults: gamma = 1/L,
/// alpha = fista_inertia(mu + delta, rho - delta, L + delta); config.delta
/// selects the shift. Contracts at fista_rate of the shifted constants.
SolverRun fista_delta_run(const CompositeProblem& problem,
                          const SolverConfig& config, const Vec& x0,
                          const Vec& y0);

}  // namespace proxshift
