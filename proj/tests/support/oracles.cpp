// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#include "support/oracles.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace proxshift::testing {

SpectralBounds dense_spectral(const Mat& sym) {
  Eigen::SelfAdjointEigenSolver<Mat> es(sym);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("dense eigendecomposition failed");
  }
  SpectralBounds out;
  out.largest = es.eigenvalues().maxCoeff();
  out.smallest = es.eigenvalues().minCoeff();
  return out;
}

Vec finite_diff_grad(const std::function<double(const Vec&)>& f, const Vec& x,
                     double h) {
  Vec g(x.size());
  Vec p = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    p[i] = xi + h;
    const double up = f(p);
    p[i] = xi - h;
    const double dn = f(p);
    p[i] = xi;
    g[i] = (up - dn) / (2.0 * h);
  }
  return g;
}

double scalar_grid_min(const std::function<double(double)>& g, double lo,
                       double hi, int points, int rounds) {
  double best = lo;
  for (int round = 0; round < rounds; ++round) {
    double best_val = g(lo);
    best = lo;
    const double width = (hi - lo) / (points - 1);
    for (int i = 1; i < points; ++i) {
      const double t = lo + width * i;
      const double v = g(t);
      if (v < best_val) {
        best_val = v;
        best = t;
      }
    }
    lo = best - width;
    hi = best + width;
  }
  return best;
}

Vec search_prox(const QuadraticInstance& inst, double gamma, const Vec& x) {
  Vec p(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double vi = inst.shift_point[i];
    const double xi = x[i];
    const auto objective = [&](double t) {
      return 0.5 * inst.rho * (t + vi) * (t + vi) +
             (t - xi) * (t - xi) / (2.0 * gamma);
    };
    const double radius = 1.0 + std::abs(xi) + std::abs(vi);
    p[i] = scalar_grid_min(objective, xi - radius, xi + radius, 201, 10);
  }
  return p;
}

Vec shifted_prox_closed_form(const QuadraticInstance& inst, double delta,
                             double gamma, const Vec& x) {
  return (x - gamma * inst.rho * inst.shift_point) /
         (1.0 + gamma * (inst.rho - delta));
}

}  // namespace proxshift::testing
