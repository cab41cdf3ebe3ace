// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#include "proxshift/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "proxshift/errors.hpp"

namespace proxshift {

namespace {

constexpr double kNegativeClamp = 1e-12;
constexpr double kFloorScale = 1e2;

double clamp_energy(double value, const char* what) {
  if (value >= 0.0) return value;
  if (value >= -kNegativeClamp) return 0.0;
  throw DomainError(std::string(what) +
                    " is negative beyond rounding tolerance");
}

}  // namespace

LyapunovSpec make_lyapunov_spec(double mu, double rho, double lipschitz) {
  LyapunovSpec spec;
  spec.mu = mu;
  spec.rho = rho;
  spec.lipschitz = lipschitz;
  spec.weight = certificate_weight(mu, rho, lipschitz);
  spec.degenerate = (mu == 0.0);
  return spec;
}

double phi(const LyapunovSpec& spec, double value_gap, double z_dist_sq) {
  if (spec.degenerate) {
    throw UnavailableError(
        "certificate energy is undefined when the smooth part has no "
        "strong convexity");
  }
  if (!std::isfinite(value_gap) || !std::isfinite(z_dist_sq)) {
    throw DomainError("energy inputs must be finite");
  }
  if (z_dist_sq < 0.0) throw DomainError("squared distance must be >= 0");
  const double gap = clamp_energy(value_gap, "value gap");
  return gap + spec.weight * z_dist_sq;
}

double fbs_energy(double mu, double rho, double value_gap, double x_dist_sq) {
  if (mu < 0.0 || rho < 0.0 || mu + rho <= 0.0) {
    throw DomainError("energy needs mu >= 0, rho >= 0 and mu + rho > 0");
  }
  if (!std::isfinite(value_gap) || !std::isfinite(x_dist_sq)) {
    throw DomainError("energy inputs must be finite");
  }
  if (x_dist_sq < 0.0) throw DomainError("squared distance must be >= 0");
  const double gap = clamp_energy(value_gap, "value gap");
  return gap + 0.5 * (mu + rho) * x_dist_sq;
}

NormalizedTraces normalized_traces(const SolverRun& run) {
  if (!run.f_star.has_value() || run.dist_x.empty()) {
    throw UnavailableError(
        "normalized traces need a run against a known solution");
  }
  NormalizedTraces out;

  const double e0 = run.dist_x.front();
  if (!(e0 > 0.0) || !std::isfinite(e0)) {
    throw DomainError("initial distance must be positive and finite");
  }
  out.error.reserve(run.dist_x.size());
  for (double d : run.dist_x) out.error.push_back(d / e0);

  const double v0 = run.values.front() - *run.f_star;
  if (!(v0 > 0.0) || !std::isfinite(v0)) {
    throw DomainError("initial value gap must be positive and finite");
  }
  out.value.reserve(run.values.size());
  for (double v : run.values) out.value.push_back((v - *run.f_star) / v0);

  if (!run.lyapunov.empty()) {
    const double l0 = run.lyapunov.front();
    if (!(l0 > 0.0) || !std::isfinite(l0)) {
      throw DomainError("initial energy must be positive and finite");
    }
    out.lyapunov.reserve(run.lyapunov.size());
    for (double l : run.lyapunov) out.lyapunov.push_back(l / l0);
  }
  return out;
}

std::size_t floor_index(const std::vector<double>& trace) {
  if (trace.empty()) return 0;
  const double floor =
      kFloorScale * std::numeric_limits<double>::epsilon() * trace.front();
  for (std::size_t k = 0; k < trace.size(); ++k) {
    if (trace[k] <= floor) return k;
  }
  return trace.size();
}

double empirical_rate(const std::vector<double>& trace, std::size_t window) {
  if (window < 2) throw DomainError("window must be at least 2");
  if (trace.size() < window + 1) {
    throw DomainError("trace shorter than requested window");
  }
  if (!(trace.front() > 0.0) || !std::isfinite(trace.front())) {
    throw DomainError("trace must start at a positive finite value");
  }
  const std::size_t above = floor_index(trace);
  if (above < 2) {
    throw UnavailableError(
        "trace bottoms out immediately, no ratio can be formed");
  }
  const std::size_t end = above - 1;
  const std::size_t span = std::min(window, end);
  const double head = trace[end - span];
  const double tail = trace[end];
  if (!(head > 0.0) || !(tail > 0.0)) {
    throw UnavailableError("averaging window touches nonpositive entries");
  }
  return std::pow(tail / head, 1.0 / static_cast<double>(span));
}

}  // namespace proxshift
