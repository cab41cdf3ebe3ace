// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#pragma once

#include <vector>

namespace proxshift {

/// Closed-form linear convergence certificates for composite problems with
/// constants (mu, rho, L): mu and rho are the strong convexity moduli of the
/// smooth and nonsmooth parts, L the gradient Lipschitz constant, and
/// 0 <= mu < L, rho >= 0.

/// Contraction factor of the inertial certificate:
///   r = 1 - sqrt(mu (L + rho) / (L^2 + mu rho)).
/// Returns 1 when mu = 0 (no linear certificate; degenerate). Throws
/// DomainError for mu >= L, mu < 0, rho < 0 or L <= 0.
double fista_rate(double mu, double rho, double L);

/// Fixed inertia paired with step 1/L:
///   alpha = (sqrt(L^2 + mu rho) - sqrt(mu (L + rho)))
///         / (sqrt(L^2 + mu rho) + sqrt(mu (L + rho))).
/// Equals 1 when mu = 0.
double fista_inertia(double mu, double rho, double L);

/// Coupling coefficient c in ]0, 1[ of the equivalent two-point recursion;
/// alpha = 1 - 2c. Equals 0 when mu = 0 (recursion degenerate there).
double fista_coupling(double mu, double rho, double L);

/// Weight w of the certificate energy E(x, z) = F(x) - F* + w |z - x*|^2:
///   w = mu (L + rho)^2 / (2 (L^2 + mu rho)).
double certificate_weight(double mu, double rho, double L);

/// Energy contraction factor of forward-backward splitting at its optimal
/// step 2/(L + mu): (L - mu) / (L + mu + 2 rho).
double fbs_rate(double mu, double rho, double L);

/// Forward-backward comparison rate used by the closed-form dominance
/// analysis, stated with L normalized to 1: (1 - mu) / (1 + mu + rho).
double fbs_rate_remark(double mu, double rho);

/// Dominance margin certificate (L normalized to 1):
///   zeta(mu, rho) = (mu + rho)(1 + mu + rho)^2 - (1 + rho)(2 mu + rho)^2.
/// zeta >= 0 on [0, 1] x [0, inf[ and is equivalent to
/// fbs_rate_remark >= fista_rate(mu + rho shifted fully into the smooth part).
double zeta(double mu, double rho);

/// Everything a solver needs to run and certify one inertial configuration,
/// derived from the shifted constants (mu + delta, rho - delta, L + delta).
/// `step` is expressed in the base parameterization (1/L): running the base
/// iteration at step 1/L with `inertia` below realizes the shifted scheme
/// exactly.
struct RateCertificate {
  double mu = 0.0;
  double rho = 0.0;
  double lipschitz = 0.0;
  double delta = 0.0;
  double step = 0.0;
  double inertia = 0.0;
  double coupling = 0.0;
  double contraction = 1.0;
  double weight = 0.0;
  /// True when mu + delta = 0: contraction is 1, inertia 1, and the
  /// two-point diagnostic sequence is unavailable.
  bool degenerate = true;
};

/// Certificate for the shift-by-delta scheme. Throws DomainError unless
/// -mu <= delta <= rho. The contraction is strictly decreasing in delta and
/// minimal at delta = rho, where it equals 1 - sqrt((mu + rho) / (L + rho)).
RateCertificate fista_delta_certificate(double mu, double rho, double L,
                                        double delta);

enum class Region {
  kFbsBetter,
  kFista0Better,
  kTie,
};

/// Compares fbs_rate(mu, rho, 1) against fista_rate(mu, rho, 1); smaller is
/// better. Ties are declared within an absolute tolerance of 1e-12.
Region classify_region(double mu, double rho);

/// classify_region over a grid; cell (i, j) of the result corresponds to
/// (mu_grid[i], rho_grid[j]). Grid values must satisfy 0 <= mu < 1, rho >= 0.
struct RegionMap {
  std::vector<double> mu_grid;
  std::vector<double> rho_grid;
  std::vector<Region> cells;  // row-major, mu index outer

  Region at(std::size_t i, std::size_t j) const {
    return cells[i * rho_grid.size() + j];
  }
};
RegionMap region_map(const std::vector<double>& mu_grid,
                     const std::vector<double>& rho_grid);

/// Spelling used in region map CSV output.
const char* region_name(Region r);

}  // namespace proxshift
