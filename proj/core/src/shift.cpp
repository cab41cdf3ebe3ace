// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#include "proxshift/shift.hpp"

#include <cmath>
#include <string>

#include "proxshift/errors.hpp"

namespace proxshift {
namespace {

void check_shift_domain(double mu, double rho, double delta) {
  if (!(delta >= -mu && delta <= rho)) {
    throw DomainError("shift delta " + std::to_string(delta) +
                      " outside [-mu, rho] = [" + std::to_string(-mu) + ", " +
                      std::to_string(rho) + "]");
  }
}

void check_step(double delta, double gamma) {
  if (!(gamma > 0)) {
    throw DomainError("step gamma must be positive");
  }
  if (!(gamma * delta < 1.0)) {
    throw DomainError("step gamma violates gamma * delta < 1");
  }
}

}  // namespace

ShiftedProblem make_shifted(const CompositeProblem& base, double delta) {
  check_shift_domain(base.f.mu, base.h.rho, delta);
  ShiftedProblem shifted;
  shifted.delta = delta;
  CompositeProblem& p = shifted.problem;
  p.dim = base.dim;
  p.reference_solution = base.reference_solution;

  const SmoothOracle f = base.f;
  const ProxOracle h = base.h;
  p.f.value = [f, delta](const Vec& x) {
    return f.value(x) + 0.5 * delta * x.squaredNorm();
  };
  p.f.gradient = [f, delta](const Vec& x) -> Vec {
    return f.gradient(x) + delta * x;
  };
  p.f.lipschitz = base.f.lipschitz + delta;
  p.f.mu = base.f.mu + delta;

  p.h.value = [h, delta](const Vec& x) {
    return h.value(x) - 0.5 * delta * x.squaredNorm();
  };
  p.h.prox = [h, delta](double gamma, const Vec& x) -> Vec {
    check_step(delta, gamma);
    const double scale = 1.0 - gamma * delta;
    return h.prox(gamma / scale, x / scale);
  };
  p.h.rho = base.h.rho - delta;
  return shifted;
}

Vec shifted_smooth_grad(const CompositeProblem& base, double delta,
                        const Vec& x) {
  return base.f.gradient(x) + delta * x;
}

Vec shifted_prox(const CompositeProblem& base, double delta, double gamma,
                 const Vec& x) {
  check_step(delta, gamma);
  const double scale = 1.0 - gamma * delta;
  return base.h.prox(gamma / scale, x / scale);
}

Vec forward_backward_map(const CompositeProblem& base, double delta,
                         double gamma, const Vec& x) {
  check_step(delta, gamma);
  return shifted_prox(base, delta, gamma,
                      x - gamma * shifted_smooth_grad(base, delta, x));
}

double contraction_factor(double mu, double rho, double L, double delta,
                          double gamma) {
  if (!(L > 0) || !(mu >= 0) || !(mu < L) || !(rho >= 0)) {
    throw DomainError("contraction_factor: constants require 0 <= mu < L, rho >= 0");
  }
  check_shift_domain(mu, rho, delta);
  // The right endpoint is included: the optimal step 2/(L + mu + 2 delta)
  // lands exactly there when mu + delta = 0, and the quotient is still
  // below one as long as rho > delta.
  if (!(gamma > 0 && gamma <= 2.0 / (L + delta))) {
    throw DomainError("contraction_factor: gamma outside ]0, 2/(L + delta)]");
  }
  const double lo = std::abs(1.0 - gamma * (mu + delta));
  const double hi = std::abs(1.0 - gamma * (L + delta));
  return std::max(lo, hi) / (1.0 + gamma * (rho - delta));
}

double optimal_fbs_step(double mu, double L, double delta) {
  if (!(L > 0) || !(mu >= 0) || !(mu < L)) {
    throw DomainError("optimal_fbs_step: constants require 0 <= mu < L");
  }
  if (!(delta >= -mu)) {
    throw DomainError("optimal_fbs_step: delta must be >= -mu");
  }
  return 2.0 / (L + mu + 2.0 * delta);
}

}  // namespace proxshift
