// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace proxshift {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// First-order oracle for the smooth part f of a composite objective.
/// f must be convex with an L-Lipschitz gradient; `mu` is a strong convexity
/// modulus of f (0 is always admissible). Both closures must be pure
/// functions of their argument and safe to call from multiple threads.
struct SmoothOracle {
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> gradient;
  double lipschitz = 0.0;
  double mu = 0.0;
};

/// Proximal oracle for the nonsmooth part h. `prox(gamma, x)` must return
/// argmin_p { h(p) + |p - x|^2 / (2 gamma) } for gamma > 0; `rho` is a strong
/// convexity modulus of h (0 for merely convex h).
struct ProxOracle {
  std::function<double(const Vec&)> value;
  std::function<Vec(double, const Vec&)> prox;
  double rho = 0.0;
};

/// Composite problem: minimize F = f + h over R^dim. A unique minimizer
/// exists whenever mu + rho > 0. `reference_solution` optionally carries a
/// known minimizer; solvers use it to produce error and certificate
/// diagnostics and leave those traces empty without it.
struct CompositeProblem {
  SmoothOracle f;
  ProxOracle h;
  Eigen::Index dim = 0;
  std::optional<Vec> reference_solution;
};

/// F(x) = f(x) + h(x). Throws DimensionError if x does not match the
/// problem dimension.
double objective_value(const CompositeProblem& problem, const Vec& x);

/// Outcome of one randomized consistency check.
struct CheckResult {
  std::string name;
  bool passed = false;
  /// Largest observed violation of the check's defining inequality,
  /// normalized by its right-hand side scale; <= 0 means no violation.
  double worst_violation = 0.0;
  int samples = 0;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Randomized validation of the oracle contract: declared constants
/// (lipschitz, mu, rho) against sampled behavior, prox optimality, convexity
/// of F along segments, and optimality of any reference solution.
///
/// Sampling is deterministic in `seed`. Beyond uniform pairs, the gradient
/// checks probe curvature-extreme directions found by power iteration on
/// finite-difference gradient differences, so an understated lipschitz or an
/// overstated mu is caught reliably rather than by luck.
ValidationReport validate_problem(const CompositeProblem& problem, int samples,
                                  std::uint64_t seed);

}  // namespace proxshift
