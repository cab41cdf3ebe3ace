// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#pragma once

#include <functional>

#include "proxshift/quadratic.hpp"

namespace proxshift::testing {

/// Extremal eigenvalues by full dense eigendecomposition. Slow and exact,
/// the reference the iterative estimator is measured against.
SpectralBounds dense_spectral(const Mat& sym);

/// Central finite-difference gradient of a scalar function.
Vec finite_diff_grad(const std::function<double(const Vec&)>& f, const Vec& x,
                     double h = 1e-6);

/// Derivative-free minimizer of a scalar function over [lo, hi]: scans a
/// uniform grid, then shrinks the bracket around the best point and repeats.
double scalar_grid_min(const std::function<double(double)>& g, double lo,
                       double hi, int points = 101, int rounds = 6);

/// Prox of the instance's separable nonsmooth part by per-coordinate grid
/// search, no closed form used anywhere.
Vec search_prox(const QuadraticInstance& inst, double gamma, const Vec& x);

/// Closed-form prox of h - (delta/2)|.|^2 for the instance's quadratic h:
/// (x - gamma rho v) / (1 + gamma (rho - delta)).
Vec shifted_prox_closed_form(const QuadraticInstance& inst, double delta,
                             double gamma, const Vec& x);

}  // namespace proxshift::testing
