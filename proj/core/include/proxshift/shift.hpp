// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#pragma once

#include "proxshift/problem.hpp"

namespace proxshift {

/// Strong convexity can be moved between the two parts of a composite
/// objective without changing it: for a shift delta in [-mu, rho],
///   f_delta(x) = f(x) + (delta/2)|x|^2,   h_delta(x) = h(x) - (delta/2)|x|^2
/// keeps F = f_delta + h_delta, while the constants become
/// (mu + delta, rho - delta, L + delta). This module implements that calculus
/// on oracles, the shifted forward-backward map, and its contraction factor.

/// A composite problem together with the shift that produced it.
/// `problem` carries wrapped oracles and adjusted constants; the minimizer
/// and objective values are unchanged from the base problem.
struct ShiftedProblem {
  CompositeProblem problem;
  double delta = 0.0;
};

/// Builds the shifted problem. Throws DomainError unless
/// -mu <= delta <= rho (both parts must stay convex).
ShiftedProblem make_shifted(const CompositeProblem& base, double delta);

/// Gradient of the shifted smooth part: grad f(x) + delta * x.
Vec shifted_smooth_grad(const CompositeProblem& base, double delta,
                        const Vec& x);

/// Proximal map of h - (delta/2)|.|^2 at step gamma, computed through the
/// base prox:
///   prox_{gamma h_delta}(x) = prox_{gamma' h}(x / (1 - gamma delta)),
///   gamma' = gamma / (1 - gamma delta).
/// Requires gamma > 0 and gamma * delta < 1 (DomainError otherwise).
Vec shifted_prox(const CompositeProblem& base, double delta, double gamma,
                 const Vec& x);

/// One step of the shifted forward-backward map,
///   T_delta(gamma)(x) = prox_{gamma h_delta}(x - gamma grad f_delta(x)).
/// Requires gamma > 0 and gamma * delta < 1.
Vec forward_backward_map(const CompositeProblem& base, double delta,
                         double gamma, const Vec& x);

/// Lipschitz modulus of T_delta(gamma) on a problem with constants
/// (mu, rho, L):
///   max(|1 - gamma(mu + delta)|, |1 - gamma(L + delta)|) / (1 + gamma(rho - delta)).
/// Domain: 0 <= mu < L, rho >= 0, -mu <= delta <= rho,
/// 0 < gamma <= 2 / (L + delta). Strictly below 1 when mu + delta > 0, and
/// at the right endpoint still below 1 whenever rho > delta.
double contraction_factor(double mu, double rho, double L, double delta,
                          double gamma);

/// Step size minimizing the contraction factor: 2 / (L + mu + 2 delta).
/// At this step the minimum equals (L - mu) / (L + mu + 2 rho) for every
/// admissible delta.
double optimal_fbs_step(double mu, double L, double delta);

}  // namespace proxshift
