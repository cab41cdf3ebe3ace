// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#include "proxshift/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "proxshift/errors.hpp"
#include "proxshift/prng.hpp"

namespace proxshift {
namespace {

constexpr double kRelSlack = 1e-9;
constexpr double kAbsSlack = 1e-12;

// lhs <= rhs up to the library-wide floating point slack.
bool leq_slack(double lhs, double rhs) {
  return lhs <= rhs + kRelSlack * std::abs(rhs) + kAbsSlack;
}

// Signed violation of lhs <= rhs, normalized so values are comparable
// across checks; <= 0 means the inequality held within slack.
double violation(double lhs, double rhs) {
  return (lhs - rhs - kRelSlack * std::abs(rhs) - kAbsSlack) /
         std::max(1.0, std::abs(rhs));
}

Vec sample_point(SeededGenerator& gen, Eigen::Index dim) {
  Vec x(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    x(i) = 2.0 * gen.uniform01() - 1.0;
  }
  return x;
}

Vec sample_direction(SeededGenerator& gen, Eigen::Index dim) {
  Vec d = sample_point(gen, dim);
  const double n = d.norm();
  return n > 0 ? Vec(d / n) : Vec(Vec::Unit(dim, 0));
}

// Curvature-extreme direction of the gradient map, probed through the oracle
// with finite differences. With top = true this approaches the direction of
// largest curvature; otherwise the smallest, using `shift` as an upper bound
// on the largest curvature. Exact for quadratics, a useful heuristic
// otherwise. Returns the direction and its curvature (Rayleigh) estimate.
std::pair<Vec, double> curvature_probe(const CompositeProblem& problem,
                                       SeededGenerator& gen, bool top,
                                       double shift) {
  const Eigen::Index dim = problem.dim;
  const double eps = 1e-5;
  const Vec x0 = sample_point(gen, dim);
  const Vec g0 = problem.f.gradient(x0);
  Vec d = sample_direction(gen, dim);
  double rayleigh = 0.0;
  for (int it = 0; it < 60; ++it) {
    Vec w = (problem.f.gradient(x0 + eps * d) - g0) / eps;
    rayleigh = d.dot(w);
    if (!top) {
      w = shift * d - w;
    }
    const double n = w.norm();
    if (n <= 0) {
      break;
    }
    d = w / n;
  }
  if (!top) {
    const Vec w = (problem.f.gradient(x0 + eps * d) - g0) / eps;
    rayleigh = d.dot(w);
  }
  return {d, rayleigh};
}

}  // namespace

double objective_value(const CompositeProblem& problem, const Vec& x) {
  if (x.size() != problem.dim) {
    throw DimensionError("objective_value: point has size " +
                         std::to_string(x.size()) + ", problem dimension is " +
                         std::to_string(problem.dim));
  }
  return problem.f.value(x) + problem.h.value(x);
}

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

ValidationReport validate_problem(const CompositeProblem& problem, int samples,
                                  std::uint64_t seed) {
  if (samples < 1) {
    throw DomainError("validate_problem: samples must be >= 1");
  }
  if (problem.dim < 1) {
    throw DimensionError("validate_problem: problem dimension must be >= 1");
  }
  const double L = problem.f.lipschitz;
  const double mu = problem.f.mu;
  const double rho = problem.h.rho;
  const Eigen::Index dim = problem.dim;
  SeededGenerator gen(seed);
  ValidationReport report;

  {
    CheckResult c{"constants_admissible", true, 0.0, 1};
    c.passed = std::isfinite(L) && std::isfinite(mu) && std::isfinite(rho) &&
               L > 0 && mu >= 0 && mu < L && rho >= 0 && mu + rho > 0;
    c.worst_violation = c.passed ? 0.0 : 1.0;
    report.checks.push_back(c);
    if (!c.passed) {
      return report;  // remaining checks assume admissible constants
    }
  }

  // Pairs for the gradient checks: uniform draws plus pairs separated along
  // curvature-extreme directions, which are the worst cases for a quadratic.
  SeededGenerator probe_gen = gen.child(1);
  const auto [d_top, curv_top] = curvature_probe(problem, probe_gen, true, 0);
  const auto [d_bot, curv_bot] =
      curvature_probe(problem, probe_gen, false, 1.25 * std::max(curv_top, L));
  std::vector<std::pair<Vec, Vec>> pairs;
  pairs.reserve(static_cast<std::size_t>(samples) + 6);
  for (int i = 0; i < samples; ++i) {
    pairs.emplace_back(sample_point(gen, dim), sample_point(gen, dim));
  }
  for (const double t : {1e-3, 0.1, 1.0}) {
    const Vec base = sample_point(gen, dim);
    pairs.emplace_back(base, base + t * d_top);
    pairs.emplace_back(base, base + t * d_bot);
  }

  {
    CheckResult c{"gradient_lipschitz", true, 0.0,
                  static_cast<int>(pairs.size())};
    for (const auto& [x, y] : pairs) {
      const double lhs = (problem.f.gradient(x) - problem.f.gradient(y)).norm();
      const double rhs = L * (x - y).norm();
      c.worst_violation = std::max(c.worst_violation, violation(lhs, rhs));
      c.passed = c.passed && leq_slack(lhs, rhs);
    }
    report.checks.push_back(c);
  }

  {
    CheckResult c{"smooth_strong_convexity", true, 0.0,
                  static_cast<int>(pairs.size())};
    for (const auto& [x, y] : pairs) {
      const double fy = problem.f.value(y);
      const double model = problem.f.value(x) +
                           problem.f.gradient(x).dot(y - x) +
                           0.5 * mu * (y - x).squaredNorm();
      c.worst_violation = std::max(c.worst_violation, violation(model, fy));
      c.passed = c.passed && leq_slack(model, fy);
    }
    report.checks.push_back(c);
  }

  {
    CheckResult c{"smooth_upper_model", true, 0.0,
                  static_cast<int>(pairs.size())};
    for (const auto& [x, y] : pairs) {
      const double fy = problem.f.value(y);
      const double model = problem.f.value(x) +
                           problem.f.gradient(x).dot(y - x) +
                           0.5 * L * (y - x).squaredNorm();
      c.worst_violation = std::max(c.worst_violation, violation(fy, model));
      c.passed = c.passed && leq_slack(fy, model);
    }
    report.checks.push_back(c);
  }

  const double gamma_scale = 1.0 / std::max(L, 1.0);
  {
    CheckResult c{"prox_contraction", true, 0.0, samples};
    for (int i = 0; i < samples; ++i) {
      const double gamma =
          gamma_scale * std::pow(10.0, -2.0 + 3.0 * gen.uniform01());
      const Vec x = sample_point(gen, dim);
      const Vec y = sample_point(gen, dim);
      const double lhs =
          (problem.h.prox(gamma, x) - problem.h.prox(gamma, y)).norm() *
          (1.0 + gamma * rho);
      const double rhs = (x - y).norm();
      c.worst_violation = std::max(c.worst_violation, violation(lhs, rhs));
      c.passed = c.passed && leq_slack(lhs, rhs);
    }
    report.checks.push_back(c);
  }

  {
    CheckResult c{"prox_optimality", true, 0.0, samples};
    for (int i = 0; i < samples; ++i) {
      const double gamma =
          gamma_scale * std::pow(10.0, -2.0 + 3.0 * gen.uniform01());
      const Vec x = sample_point(gen, dim);
      const Vec p = problem.h.prox(gamma, x);
      const double at_p =
          problem.h.value(p) + (p - x).squaredNorm() / (2.0 * gamma);
      for (const double t : {1e-3, 0.1, 1.0}) {
        const Vec q = p + t * sample_direction(gen, dim);
        const double at_q =
            problem.h.value(q) + (q - x).squaredNorm() / (2.0 * gamma);
        c.worst_violation = std::max(c.worst_violation, violation(at_p, at_q));
        c.passed = c.passed && leq_slack(at_p, at_q);
      }
    }
    report.checks.push_back(c);
  }

  {
    CheckResult c{"objective_segment_convexity", true, 0.0, samples};
    for (int i = 0; i < samples; ++i) {
      const Vec x = sample_point(gen, dim);
      const Vec y = sample_point(gen, dim);
      const double fx = objective_value(problem, x);
      const double fy = objective_value(problem, y);
      for (const double t : {0.25, 0.5, 0.75}) {
        const double lhs = objective_value(problem, t * x + (1.0 - t) * y);
        const double rhs = t * fx + (1.0 - t) * fy;
        c.worst_violation = std::max(c.worst_violation, violation(lhs, rhs));
        c.passed = c.passed && leq_slack(lhs, rhs);
      }
    }
    report.checks.push_back(c);
  }

  if (problem.reference_solution.has_value()) {
    const Vec& xstar = *problem.reference_solution;
    if (xstar.size() != dim) {
      throw DimensionError("validate_problem: reference solution size");
    }
    const double fstar = objective_value(problem, xstar);
    {
      CheckResult c{"reference_optimality", true, 0.0, samples};
      for (int i = 0; i < samples; ++i) {
        const Vec y = sample_point(gen, dim);
        const double lhs =
            fstar + 0.5 * (mu + rho) * (y - xstar).squaredNorm();
        const double rhs = objective_value(problem, y);
        c.worst_violation = std::max(c.worst_violation, violation(lhs, rhs));
        c.passed = c.passed && leq_slack(lhs, rhs);
      }
      report.checks.push_back(c);
    }
    {
      // A minimizer is a fixed point of the forward-backward map at any step.
      CheckResult c{"reference_fixed_point", true, 0.0, 1};
      const double gamma = 1.0 / L;
      const Vec mapped =
          problem.h.prox(gamma, xstar - gamma * problem.f.gradient(xstar));
      const double lhs = (mapped - xstar).norm();
      const double rhs = 1e-9 * (1.0 + xstar.norm());
      c.worst_violation = violation(lhs, rhs);
      c.passed = lhs <= rhs;
      report.checks.push_back(c);
    }
  }

  return report;
}

}  // namespace proxshift
