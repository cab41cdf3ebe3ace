// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#include "proxshift/rates.hpp"

#include <cmath>
#include <string>

#include "proxshift/errors.hpp"

namespace proxshift {
namespace {

void check_constants(double mu, double rho, double L) {
  if (!(L > 0)) {
    throw DomainError("rates: L must be positive");
  }
  if (!(mu >= 0)) {
    throw DomainError("rates: mu must be nonnegative");
  }
  if (!(mu < L)) {
    throw DomainError("rates: mu must be strictly below L, got mu = " +
                      std::to_string(mu) + ", L = " + std::to_string(L));
  }
  if (!(rho >= 0)) {
    throw DomainError("rates: rho must be nonnegative");
  }
}

// The two radicals every inertial quantity is built from.
struct Radicals {
  double a;  // sqrt(L^2 + mu rho)
  double b;  // sqrt(mu (L + rho))
};

Radicals radicals(double mu, double rho, double L) {
  return {std::sqrt(L * L + mu * rho), std::sqrt(mu * (L + rho))};
}

}  // namespace

double fista_rate(double mu, double rho, double L) {
  check_constants(mu, rho, L);
  if (mu == 0.0) {
    return 1.0;
  }
  return 1.0 - std::sqrt(mu * (L + rho) / (L * L + mu * rho));
}

double fista_inertia(double mu, double rho, double L) {
  check_constants(mu, rho, L);
  const auto [a, b] = radicals(mu, rho, L);
  return (a - b) / (a + b);
}

double fista_coupling(double mu, double rho, double L) {
  check_constants(mu, rho, L);
  const auto [a, b] = radicals(mu, rho, L);
  return b / (a + b);
}

double certificate_weight(double mu, double rho, double L) {
  check_constants(mu, rho, L);
  const double lr = L + rho;
  return mu * lr * lr / (2.0 * (L * L + mu * rho));
}

double fbs_rate(double mu, double rho, double L) {
  check_constants(mu, rho, L);
  return (L - mu) / (L + mu + 2.0 * rho);
}

double fbs_rate_remark(double mu, double rho) {
  if (!(mu >= 0 && mu <= 1 && rho >= 0)) {
    throw DomainError("fbs_rate_remark: requires mu in [0, 1], rho >= 0");
  }
  return (1.0 - mu) / (1.0 + mu + rho);
}

double zeta(double mu, double rho) {
  if (!(mu >= 0 && mu <= 1 && rho >= 0)) {
    throw DomainError("zeta: requires mu in [0, 1], rho >= 0");
  }
  const double s = 1.0 + mu + rho;
  const double t = 2.0 * mu + rho;
  return (mu + rho) * s * s - (1.0 + rho) * t * t;
}

RateCertificate fista_delta_certificate(double mu, double rho, double L,
                                        double delta) {
  check_constants(mu, rho, L);
  if (!(delta >= -mu && delta <= rho)) {
    throw DomainError("fista_delta_certificate: delta outside [-mu, rho]");
  }
  const double ms = mu + delta;
  const double rs = rho - delta;
  const double Ls = L + delta;

  RateCertificate cert;
  cert.mu = mu;
  cert.rho = rho;
  cert.lipschitz = L;
  cert.delta = delta;
  cert.step = 1.0 / L;
  cert.degenerate = (ms == 0.0);
  if (cert.degenerate) {
    cert.inertia = 1.0;
    cert.coupling = 0.0;
    cert.contraction = 1.0;
    cert.weight = 0.0;
    return cert;
  }
  const auto [a, b] = radicals(ms, rs, Ls);
  cert.inertia = (a - b) / (a + b);
  cert.coupling = b / (a + b);
  cert.contraction = fista_rate(ms, rs, Ls);
  cert.weight = certificate_weight(ms, rs, Ls);
  return cert;
}

Region classify_region(double mu, double rho) {
  constexpr double kTieTol = 1e-12;
  const double r_fbs = fbs_rate(mu, rho, 1.0);
  const double r_fista = fista_rate(mu, rho, 1.0);
  if (r_fbs < r_fista - kTieTol) {
    return Region::kFbsBetter;
  }
  if (r_fista < r_fbs - kTieTol) {
    return Region::kFista0Better;
  }
  return Region::kTie;
}

RegionMap region_map(const std::vector<double>& mu_grid,
                     const std::vector<double>& rho_grid) {
  if (mu_grid.empty() || rho_grid.empty()) {
    throw DomainError("region_map: grids must be nonempty");
  }
  RegionMap map;
  map.mu_grid = mu_grid;
  map.rho_grid = rho_grid;
  map.cells.reserve(mu_grid.size() * rho_grid.size());
  for (const double mu : mu_grid) {
    for (const double rho : rho_grid) {
      map.cells.push_back(classify_region(mu, rho));
    }
  }
  return map;
}

const char* region_name(Region r) {
  switch (r) {
    case Region::kFbsBetter:
      return "FBS_BETTER";
    case Region::kFista0Better:
      return "FISTA0_BETTER";
    case Region::kTie:
      return "TIE";
  }
  return "TIE";
}

}  // namespace proxshift
