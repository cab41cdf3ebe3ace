// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstddef>
#include <vector>

#include "proxshift/rates.hpp"
#include "proxshift/solvers.hpp"

namespace proxshift {

/// Parameters of the certificate energy Phi(x, z) = F(x) - F* + w |z - x*|^2.
struct LyapunovSpec {
  double mu = 0.0;
  double rho = 0.0;
  double lipschitz = 1.0;
  double weight = 0.0;
  /// True when mu = 0, where the weight vanishes and the energy degenerates
  /// to the bare value gap; phi() refuses to evaluate in that case.
  bool degenerate = false;
};

/// Derives the energy parameters for the inertial certificate,
/// w = mu (L + rho)^2 / (2 (L^2 + mu rho)). Throws DomainError on
/// inadmissible constants.
LyapunovSpec make_lyapunov_spec(double mu, double rho, double lipschitz);

/// Evaluates Phi = value_gap + weight * z_dist_sq. Values in [-1e-12, 0) are
/// clamped to 0 (rounding in the value gap); anything more negative throws
/// DomainError. Throws UnavailableError when the spec is degenerate.
double phi(const LyapunovSpec& spec, double value_gap, double z_dist_sq);

/// Forward-backward energy E = value_gap + ((mu + rho)/2) * x_dist_sq with
/// the same clamping rule as phi().
double fbs_energy(double mu, double rho, double value_gap, double x_dist_sq);

/// Unit-initial diagnostic traces of one run:
///   error[k]    = |x_k - x*| / |x_0 - x*|,
///   value[k]    = (F(x_k) - F*) / (F(x_0) - F*),
///   lyapunov[k] = Phi_k / Phi_0 (empty when the run has no energy trace).
struct NormalizedTraces {
  std::vector<double> error;
  std::vector<double> value;
  std::vector<double> lyapunov;
};

/// Builds the normalized traces. Throws UnavailableError when the run lacks
/// a reference solution and DomainError when an initial denominator is zero
/// or not finite.
NormalizedTraces normalized_traces(const SolverRun& run);

/// Average per-iteration decay over the trailing `window` steps of the
/// above-floor prefix of a nonnegative trace:
///   rate = (trace[end] / trace[end - span])^(1 / span),
/// where `end` is the last index before the trace first dips below its
/// numerical floor 1e2 * eps * trace[0] and span = min(window, end). The
/// window shrinks when the trace bottoms out early, so fast runs still get
/// a rate from whatever sits above the floor. Throws DomainError when
/// trace[0] is not positive, window < 2, or window + 1 exceeds the trace
/// length, and UnavailableError when fewer than two entries sit above the
/// floor (no ratio can be formed).
double empirical_rate(const std::vector<double>& trace, std::size_t window);

/// Index of the first entry at or below the floor 1e2 * eps * trace[0], or
/// trace.size() when the whole trace stays above it.
std::size_t floor_index(const std::vector<double>& trace);

}  // namespace proxshift
