// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#include "proxshift/solvers.hpp"

#include <cmath>
#include <utility>

#include "proxshift/errors.hpp"
#include "proxshift/shift.hpp"

namespace proxshift {

namespace {

void check_dim(const CompositeProblem& problem, const Vec& v,
               const char* name) {
  if (v.size() != problem.dim) {
    throw DimensionError(std::string(name) +
                         " does not match the problem dimension");
  }
}

double checked_initial_value(const CompositeProblem& problem, const Vec& x0) {
  const double v = objective_value(problem, x0);
  if (!std::isfinite(v)) {
    throw DomainError("objective is not finite at the starting point");
  }
  return v;
}

// Which energy the `lyapunov` trace records.
enum class Energy {
  kNone,         // no energy trace
  kDistance,     // gap + weight |x - x*|^2 (forward-backward)
  kCertificate,  // gap + weight |z - x*|^2 (inertial certificate)
};

// Shared per-iteration bookkeeping: scalar traces, optional energy, and
// stride-spaced snapshots. Distance and energy traces silently stay empty
// when the problem carries no reference solution.
class Recorder {
 public:
  Recorder(const CompositeProblem& problem, SolverRun& run, double weight,
           Energy kind, std::size_t stride)
      : problem_(problem), run_(run), weight_(weight), kind_(kind),
        stride_(stride) {
    if (problem.reference_solution.has_value()) {
      run_.f_star = objective_value(problem, *problem.reference_solution);
    }
  }

  // `y` and `z` may be null when the run has no such sequence; a non-null
  // `z` is snapshotted even without a reference solution.
  void record(std::size_t k, double value, const Vec& x, const Vec* y,
              const Vec* z) {
    run_.values.push_back(value);
    if (run_.f_star.has_value()) {
      const Vec& xstar = *problem_.reference_solution;
      const double dx = (x - xstar).norm();
      run_.dist_x.push_back(dx);
      const double gap = clamp_gap(value - *run_.f_star);
      if (kind_ == Energy::kDistance) {
        run_.lyapunov.push_back(gap + weight_ * dx * dx);
      }
      if (z != nullptr) {
        const double dz = (*z - xstar).norm();
        run_.dist_z.push_back(dz);
        if (kind_ == Energy::kCertificate) {
          run_.lyapunov.push_back(gap + weight_ * dz * dz);
        }
      }
    }
    if (stride_ > 0 && k % stride_ == 0) snapshot(k, x, y, z);
  }

  // Final iterate is always kept when snapshots are on.
  void finish(std::size_t k, const Vec& x, const Vec* y, const Vec* z) {
    if (stride_ > 0 &&
        (run_.snapshot_iters.empty() || run_.snapshot_iters.back() != k)) {
      snapshot(k, x, y, z);
    }
  }

 private:
  static double clamp_gap(double gap) {
    // Tiny negative gaps are rounding in F(x) - F*; real violations are a
    // solver or problem bug and surface as an exception.
    if (gap >= 0.0) return gap;
    if (gap >= -1e-12) return 0.0;
    throw DomainError("objective fell below the reference optimum");
  }

  void snapshot(std::size_t k, const Vec& x, const Vec* y, const Vec* z) {
    run_.snapshot_iters.push_back(k);
    run_.xs.push_back(x);
    if (y != nullptr) run_.ys.push_back(*y);
    if (z != nullptr) run_.zs.push_back(*z);
  }

  const CompositeProblem& problem_;
  SolverRun& run_;
  double weight_;
  Energy kind_;
  std::size_t stride_;
};

void check_step(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError("step size must be positive and finite");
  }
}

void check_diverged(const SolverRun& run, std::size_t k, double value,
                    const Vec& x) {
  if (!std::isfinite(value) || !x.allFinite()) {
    throw DivergenceError(run.algorithm, k);
  }
}

}  // namespace

bool stop_check(const Vec& prev, const Vec& next, double tol) {
  if (!(tol > 0.0)) return false;
  return (next - prev).norm() <= tol * (1.0 + next.norm());
}

SolverRun fbs_run(const CompositeProblem& problem, const SolverConfig& config,
                  const Vec& x0) {
  check_dim(problem, x0, "x0");
  const double mu = problem.f.mu;
  const double rho = problem.h.rho;
  const double L = problem.f.lipschitz;
  const double delta = config.delta;
  if (!(delta >= -mu && delta <= rho)) {
    throw DomainError("shift must lie in [-mu, rho]");
  }

  SolverRun run;
  run.algorithm = "fbs";
  run.delta = delta;
  run.step = config.step.value_or(optimal_fbs_step(mu, L, delta));
  check_step(run.step);

  // The certificate always describes the default (optimal) step; an
  // overridden run.step simply voids it.
  run.certificate.mu = mu;
  run.certificate.rho = rho;
  run.certificate.lipschitz = L;
  run.certificate.delta = delta;
  run.certificate.step = optimal_fbs_step(mu, L, delta);
  run.certificate.inertia = 0.0;
  run.certificate.coupling = 0.0;
  run.certificate.contraction =
      contraction_factor(mu, rho, L, delta, run.certificate.step);
  run.certificate.weight = 0.5 * (mu + rho);
  run.certificate.degenerate = (mu + rho <= 0.0);

  const Energy kind =
      run.certificate.degenerate ? Energy::kNone : Energy::kDistance;
  Recorder rec(problem, run, run.certificate.weight, kind,
               config.snapshot_stride);

  Vec x = x0;
  rec.record(0, checked_initial_value(problem, x), x, nullptr, nullptr);
  for (std::size_t k = 0; k < config.max_iters; ++k) {
    Vec xn = forward_backward_map(problem, delta, run.step, x);
    const double value = objective_value(problem, xn);
    check_diverged(run, k + 1, value, xn);
    rec.record(k + 1, value, xn, nullptr, nullptr);
    run.iterations = k + 1;
    const bool done = stop_check(x, xn, config.tol);
    x = std::move(xn);
    if (done) {
      run.stopped_early = true;
      break;
    }
  }
  rec.finish(run.iterations, x, nullptr, nullptr);
  return run;
}

namespace {

// Shared driver for the two inertial front ends: the iteration is the base
// forward-backward map at `run.step` followed by fixed momentum, and the
// caller supplies the certificate the defaults are drawn from.
SolverRun inertial_run(const CompositeProblem& problem,
                       const SolverConfig& config, const Vec& x0,
                       const Vec& y0, std::string algorithm,
                       const RateCertificate& certificate) {
  check_dim(problem, x0, "x0");
  check_dim(problem, y0, "y0");

  SolverRun run;
  run.algorithm = std::move(algorithm);
  run.certificate = certificate;
  run.delta = config.delta;
  run.step = config.step.value_or(1.0 / problem.f.lipschitz);
  check_step(run.step);
  run.inertia = config.inertia.value_or(certificate.inertia);
  if (!(run.inertia >= 0.0) || !std::isfinite(run.inertia)) {
    throw DomainError("inertia must be nonnegative and finite");
  }
  run.coupling = config.coupling.value_or(certificate.coupling);
  if (!(run.coupling >= 0.0 && run.coupling < 1.0)) {
    throw DomainError("coupling must lie in [0, 1)");
  }

  const bool track_z = run.coupling > 0.0;
  run.z_available = track_z && problem.reference_solution.has_value();
  const Energy kind = (track_z && !certificate.degenerate)
                          ? Energy::kCertificate
                          : Energy::kNone;
  Recorder rec(problem, run, certificate.weight, kind,
               config.snapshot_stride);

  Vec x = x0;
  Vec y = y0;
  Vec z;
  auto update_z = [&]() {
    if (track_z) z = x + (1.0 / run.coupling) * (y - x);
  };
  update_z();
  const Vec* zp = track_z ? &z : nullptr;

  rec.record(0, checked_initial_value(problem, x), x, &y, zp);
  for (std::size_t k = 0; k < config.max_iters; ++k) {
    Vec xn = forward_backward_map(problem, 0.0, run.step, y);
    const double value = objective_value(problem, xn);
    check_diverged(run, k + 1, value, xn);
    Vec yn = xn + run.inertia * (xn - x);
    const bool done = stop_check(x, xn, config.tol);
    x = std::move(xn);
    y = std::move(yn);
    update_z();
    rec.record(k + 1, value, x, &y, zp);
    run.iterations = k + 1;
    if (done) {
      run.stopped_early = true;
      break;
    }
  }
  rec.finish(run.iterations, x, &y, zp);
  return run;
}

}  // namespace

SolverRun fista_run(const CompositeProblem& problem,
                    const SolverConfig& config, const Vec& x0, const Vec& y0) {
  if (config.delta != 0.0) {
    throw DomainError("fista_run takes no shift; use fista_delta_run");
  }
  const RateCertificate cert = fista_delta_certificate(
      problem.f.mu, problem.h.rho, problem.f.lipschitz, 0.0);
  return inertial_run(problem, config, x0, y0, "fista", cert);
}

SolverRun fista_delta_run(const CompositeProblem& problem,
                          const SolverConfig& config, const Vec& x0,
                          const Vec& y0) {
  const RateCertificate cert = fista_delta_certificate(
      problem.f.mu, problem.h.rho, problem.f.lipschitz, config.delta);
  return inertial_run(problem, config, x0, y0, "fista_delta", cert);
}

SolverRun fista_zform_run(const CompositeProblem& problem,
                          const SolverConfig& config, const Vec& x0,
                          const Vec& z0) {
  check_dim(problem, x0, "x0");
  check_dim(problem, z0, "z0");
  if (config.delta != 0.0) {
    throw DomainError("fista_zform_run takes no shift");
  }

  const RateCertificate cert = fista_delta_certificate(
      problem.f.mu, problem.h.rho, problem.f.lipschitz, 0.0);

  SolverRun run;
  run.algorithm = "fista_zform";
  run.certificate = cert;
  run.step = config.step.value_or(1.0 / problem.f.lipschitz);
  check_step(run.step);
  run.inertia = config.inertia.value_or(cert.inertia);
  if (!(run.inertia >= 0.0) || !std::isfinite(run.inertia)) {
    throw DomainError("inertia must be nonnegative and finite");
  }
  run.coupling = config.coupling.value_or(cert.coupling);
  if (!(run.coupling > 0.0 && run.coupling < 1.0)) {
    throw DomainError("two-point form needs coupling in (0, 1)");
  }
  run.z_available = problem.reference_solution.has_value();

  const Energy kind =
      cert.degenerate ? Energy::kNone : Energy::kCertificate;
  Recorder rec(problem, run, cert.weight, kind, config.snapshot_stride);

  const double c = run.coupling;
  const double alpha = run.inertia;
  Vec x = x0;
  Vec z = z0;
  Vec y = x + c * (z - x);

  rec.record(0, checked_initial_value(problem, x), x, &y, &z);
  for (std::size_t k = 0; k < config.max_iters; ++k) {
    Vec xn = forward_backward_map(problem, 0.0, run.step, y);
    const double value = objective_value(problem, xn);
    check_diverged(run, k + 1, value, xn);
    Vec zn = (alpha / (1.0 - c)) * z - (alpha / (c * (1.0 - c))) * y +
             ((c + alpha) / c) * xn;
    const bool done = stop_check(x, xn, config.tol);
    x = std::move(xn);
    z = std::move(zn);
    y = x + c * (z - x);
    rec.record(k + 1, value, x, &y, &z);
    run.iterations = k + 1;
    if (done) {
      run.stopped_early = true;
      break;
    }
  }
  rec.finish(run.iterations, x, &y, &z);
  return run;
}

}  // namespace proxshift
