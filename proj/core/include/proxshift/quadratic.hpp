// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>

#include "proxshift/problem.hpp"

namespace proxshift {

/// Random least-squares test instance
///   F(x) = 0.5 |A x - z|^2 + (rho/2) |x + v|^2,
/// built from a seeded generator so every constant is reproducible. The
/// design matrix is A = A0 / s with A0 = a I + b R, R uniform in [0, 1),
/// and s the largest singular value of A0, so |A| = 1 up to rounding.
struct QuadraticInstance {
  Mat design;       // A, rows x cols
  Mat gram;         // A^T A, formed once and reused by the oracles
  Vec rhs;          // A^T z
  Vec shift_point;  // v
  Vec data;         // z
  Vec xstar;        // unique minimizer, (rho I + gram)^{-1} (rhs - rho v)

  double rho = 0.0;
  double lipschitz = 0.0;  // largest eigenvalue of gram
  double mu = 0.0;         // smallest eigenvalue of gram
  double value_offset = 0.0;  // 0.5 |z|^2

  std::uint64_t seed = 0;
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  double gen_a = 0.0;
  double gen_b = 0.0;
};

/// Generation parameters. The draws come from a single SeededGenerator in
/// the fixed order R (row-major), then v, then z; changing that order
/// changes the instance, so it is part of the contract.
struct InstanceParams {
  Eigen::Index rows = 50;  // m
  Eigen::Index cols = 50;  // n
  double a = 0.0;
  double b = 0.2;
  double rho = 0.1;
  std::uint64_t seed = 1;
};

/// Builds the instance: draws R, v, z, normalizes A, forms the Gram matrix,
/// estimates (mu, L) iteratively, and solves for the minimizer. Throws
/// DimensionError for nonpositive sizes, DomainError when a = b = 0, when
/// rho < 0, or when the curvature bounds collapse (mu = L, e.g. b = 0).
QuadraticInstance make_instance(const InstanceParams& params);

/// grad f(x) = gram x - rhs, using one symmetric matrix-vector product.
Vec instance_grad(const QuadraticInstance& inst, const Vec& x);

/// f(x) = 0.5 x' gram x - x' rhs + 0.5 |z|^2.
double instance_smooth_value(const QuadraticInstance& inst, const Vec& x);

/// prox_{gamma h}(x) = (x - gamma rho v) / (1 + gamma rho) for
/// h = (rho/2) |. + v|^2. Throws DomainError unless gamma > 0.
Vec instance_prox(const QuadraticInstance& inst, double gamma, const Vec& x);

/// Recomputes the minimizer from the stored matrices by a fresh factorize
/// and solve (independent of the cached xstar member).
Vec exact_solution(const QuadraticInstance& inst);

/// Extremal eigenvalues of a symmetric positive semidefinite matrix (only
/// the lower triangle is referenced).
struct SpectralBounds {
  double largest = 0.0;
  double smallest = 0.0;
};

/// Estimates the extremal eigenvalues: power iteration for the largest,
/// factorize-and-iterate for the smallest. Both stop when the Rayleigh
/// quotient moves by less than `tol` relatively, or after `max_iters`
/// rounds. The probe vector comes from a fixed-seed generator, so results
/// are deterministic. When eigenvalues cluster at an end of the spectrum
/// the estimate may stall inside the cluster; the error is then bounded by
/// the cluster width. Throws DomainError for an empty or non-square matrix
/// or when the factorization fails.
SpectralBounds spectral_constants(const Mat& sym, double tol = 1e-12,
                                  std::size_t max_iters = 50000);

/// Wraps the instance as a CompositeProblem whose oracle closures share
/// ownership of the instance. The reference solution is the cached xstar.
CompositeProblem as_problem(std::shared_ptr<const QuadraticInstance> inst);

/// Writes the instance as a line-oriented text block ("quadratic_instance
/// v1") holding the primary data (A, v, z), the generation parameters, and
/// the cached constants, each number with 17 significant digits so a
/// round trip reproduces the doubles bit for bit.
void serialize_instance(std::ostream& out, const QuadraticInstance& inst);

/// Reads the block back and recomputes the derived members (gram, rhs,
/// value offset) from the primary data. Throws ConfigError on malformed or
/// inconsistent input.
QuadraticInstance parse_instance(std::istream& in);

}  // namespace proxshift
