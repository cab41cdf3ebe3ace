// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "proxshift/errors.hpp"
#include "proxshift/rates.hpp"

using Catch::Approx;
using namespace proxshift;

// Reference values below were computed with an independent high-precision
// evaluation of the closed forms and frozen before the implementation ran.

TEST_CASE("inertial certificate at a representative point", "[rates]") {
  const double mu = 0.0105, rho = 0.1, L = 1.0;
  REQUIRE(fista_rate(mu, rho, L) == Approx(0.892585451542).epsilon(1e-10));
  REQUIRE(fista_inertia(mu, rho, L) == Approx(0.806008420951).epsilon(1e-10));
  REQUIRE(fista_coupling(mu, rho, L) ==
          Approx(0.0969957895243).epsilon(1e-10));
  REQUIRE(certificate_weight(mu, rho, L) ==
          Approx(0.00634583687129).epsilon(1e-10));
}

TEST_CASE("inertia and coupling satisfy alpha = 1 - 2c", "[rates]") {
  const double mus[] = {1e-6, 0.0105, 0.1, 0.5, 0.9};
  const double rhos[] = {0.0, 0.02, 0.1, 1.0, 5.0};
  const double ls[] = {0.5, 1.0, 3.0};
  for (double L : ls) {
    for (double mu : mus) {
      if (!(mu < L)) continue;
      for (double rho : rhos) {
        const double alpha = fista_inertia(mu, rho, L);
        const double c = fista_coupling(mu, rho, L);
        REQUIRE(alpha == Approx(1.0 - 2.0 * c).margin(1e-14));
        REQUIRE(c > 0.0);
        REQUIRE(c < 1.0);
        REQUIRE(fista_rate(mu, rho, L) > 0.0);
        REQUIRE(fista_rate(mu, rho, L) < 1.0);
      }
    }
  }
}

TEST_CASE("certificate degenerates cleanly at mu = 0", "[rates]") {
  REQUIRE(fista_rate(0.0, 0.3, 1.0) == 1.0);
  REQUIRE(fista_inertia(0.0, 0.3, 1.0) == 1.0);
  REQUIRE(fista_coupling(0.0, 0.3, 1.0) == 0.0);
  REQUIRE(certificate_weight(0.0, 0.3, 1.0) == 0.0);
}

TEST_CASE("rate functions reject inadmissible constants", "[rates]") {
  REQUIRE_THROWS_AS(fista_rate(1.0, 0.1, 1.0), DomainError);
  REQUIRE_THROWS_AS(fista_rate(2.0, 0.1, 1.0), DomainError);
  REQUIRE_THROWS_AS(fista_rate(-0.1, 0.1, 1.0), DomainError);
  REQUIRE_THROWS_AS(fista_rate(0.1, -0.1, 1.0), DomainError);
  REQUIRE_THROWS_AS(fista_rate(0.1, 0.1, 0.0), DomainError);
  REQUIRE_THROWS_AS(fbs_rate(1.0, 0.1, 1.0), DomainError);
  REQUIRE_THROWS_AS(certificate_weight(0.5, 0.1, 0.5), DomainError);
}

TEST_CASE("forward-backward rates at representative points", "[rates]") {
  REQUIRE(fbs_rate(0.0105, 0.1, 1.0) == Approx(0.817430813713).epsilon(1e-10));
  REQUIRE(fbs_rate_remark(0.0105, 0.1) ==
          Approx(0.89104007204).epsilon(1e-10));
  // The comparison rate counts rho once where the energy rate counts it
  // twice, so at L = 1 they are related by doubling rho.
  const double mus[] = {0.001, 0.0105, 0.2, 0.7};
  for (double mu : mus) {
    REQUIRE(fbs_rate(mu, 0.3, 1.0) ==
            Approx(fbs_rate_remark(mu, 0.6)).epsilon(1e-14));
    REQUIRE(fbs_rate(mu, 0.0, 1.0) ==
            Approx(fbs_rate_remark(mu, 0.0)).epsilon(1e-14));
  }
}

TEST_CASE("dominance margin closed forms", "[rates]") {
  REQUIRE(zeta(0.0105, 0.1) == Approx(0.120164632625).epsilon(1e-10));
  REQUIRE(zeta(0.5, 1.0) == Approx(1.375).epsilon(1e-14));
  for (int i = 0; i < 100; ++i) {
    const double rho = 5.0 * i / 99.0;
    REQUIRE(zeta(0.0, rho) == Approx(rho * (1.0 + rho)).margin(1e-12));
    REQUIRE(zeta(1.0, rho) == Approx(0.0).margin(1e-12));
    const double mu = i / 99.0;
    REQUIRE(zeta(mu, 0.0) ==
            Approx(mu * (1.0 - mu) * (1.0 - mu)).margin(1e-12));
  }
}

TEST_CASE("shifted certificate at a representative point", "[rates]") {
  const RateCertificate cert = fista_delta_certificate(0.0105, 0.1, 1.0, 0.05);
  REQUIRE_FALSE(cert.degenerate);
  REQUIRE(cert.mu == 0.0105);
  REQUIRE(cert.rho == 0.1);
  REQUIRE(cert.lipschitz == 1.0);
  REQUIRE(cert.delta == 0.05);
  REQUIRE(cert.step == 1.0);
  REQUIRE(cert.contraction == Approx(0.754647918995).epsilon(1e-10));
  REQUIRE(cert.inertia == Approx(0.605971540503).epsilon(1e-10));
  REQUIRE(cert.coupling == Approx(0.197014229749).epsilon(1e-10));
  REQUIRE(cert.weight == Approx(0.0331087040094).epsilon(1e-10));
}

TEST_CASE("shifted certificate equals base certificate of shifted constants",
          "[rates]") {
  const double mu = 0.02, rho = 0.3, L = 1.5, delta = 0.1;
  const RateCertificate cert = fista_delta_certificate(mu, rho, L, delta);
  REQUIRE(cert.contraction ==
          Approx(fista_rate(mu + delta, rho - delta, L + delta))
              .epsilon(1e-14));
  REQUIRE(cert.inertia ==
          Approx(fista_inertia(mu + delta, rho - delta, L + delta))
              .epsilon(1e-14));
  REQUIRE(cert.coupling ==
          Approx(fista_coupling(mu + delta, rho - delta, L + delta))
              .epsilon(1e-14));
  REQUIRE(cert.weight ==
          Approx(certificate_weight(mu + delta, rho - delta, L + delta))
              .epsilon(1e-14));
  REQUIRE(cert.step == Approx(1.0 / L).epsilon(1e-15));
}

TEST_CASE("contraction is strictly decreasing in the shift", "[rates]") {
  const double mu = 0.0105, rho = 0.1, L = 1.0;
  double prev = 2.0;
  for (int i = 0; i <= 20; ++i) {
    const double delta = -mu + (rho + mu) * i / 20.0;
    const double r = fista_delta_certificate(mu, rho, L, delta).contraction;
    REQUIRE(r < prev);
    prev = r;
  }
  // Full shift attains the best certificate.
  const double full = fista_delta_certificate(mu, rho, L, rho).contraction;
  REQUIRE(full ==
          Approx(1.0 - std::sqrt((mu + rho) / (L + rho))).margin(1e-14));
}

TEST_CASE("shifted certificate rejects shifts outside [-mu, rho]", "[rates]") {
  REQUIRE_THROWS_AS(fista_delta_certificate(0.01, 0.1, 1.0, 0.11),
                    DomainError);
  REQUIRE_THROWS_AS(fista_delta_certificate(0.01, 0.1, 1.0, -0.02),
                    DomainError);
  REQUIRE_NOTHROW(fista_delta_certificate(0.01, 0.1, 1.0, -0.01));
  REQUIRE_NOTHROW(fista_delta_certificate(0.01, 0.1, 1.0, 0.1));
}

TEST_CASE("fully degenerate shifted certificate", "[rates]") {
  const RateCertificate cert = fista_delta_certificate(0.0, 0.1, 1.0, 0.0);
  REQUIRE(cert.degenerate);
  REQUIRE(cert.contraction == 1.0);
  REQUIRE(cert.inertia == 1.0);
  REQUIRE(cert.coupling == 0.0);
  REQUIRE(cert.weight == 0.0);
}

TEST_CASE("region classification at known points", "[rates]") {
  REQUIRE(classify_region(0.0105, 0.1) == Region::kFbsBetter);
  REQUIRE(classify_region(1e-4, 5.0) == Region::kFbsBetter);
  REQUIRE(classify_region(0.5, 0.1) == Region::kFista0Better);
  // mu = 0 leaves the inertial scheme without a linear rate.
  REQUIRE(classify_region(0.0, 1.0) == Region::kFbsBetter);
}

TEST_CASE("region map indexes mu-major", "[rates]") {
  const std::vector<double> mu_grid = {0.0, 0.0105, 0.5};
  const std::vector<double> rho_grid = {0.1, 5.0};
  const RegionMap map = region_map(mu_grid, rho_grid);
  REQUIRE(map.cells.size() == 6);
  REQUIRE(map.at(1, 0) == classify_region(0.0105, 0.1));
  REQUIRE(map.at(2, 0) == classify_region(0.5, 0.1));
  REQUIRE(map.at(1, 1) == classify_region(0.0105, 5.0));
  REQUIRE(map.at(2, 0) == Region::kFista0Better);
  REQUIRE(map.at(0, 1) == Region::kFbsBetter);
}

TEST_CASE("region names are stable spellings", "[rates]") {
  REQUIRE(std::string(region_name(Region::kFbsBetter)) == "FBS_BETTER");
  REQUIRE(std::string(region_name(Region::kFista0Better)) == "FISTA0_BETTER");
  REQUIRE(std::string(region_name(Region::kTie)) == "TIE");
}
