// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#include "proxshift/quadratic.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <utility>

#include "proxshift/errors.hpp"
#include "proxshift/prng.hpp"

namespace proxshift {

namespace {

// Fixed probe seed so the iterative spectral estimates are deterministic.
constexpr std::uint64_t kProbeSeed = 0x6A09E667F3BCC908ULL;

constexpr double kNormTol = 1e-13;
constexpr std::size_t kNormIters = 50000;

Vec centered_probe(Eigen::Index n) {
  SeededGenerator gen(kProbeSeed);
  Vec u = fill_vector(gen, n);
  u.array() -= 0.5;
  const double norm = u.norm();
  if (norm == 0.0) u.setOnes();
  u.normalize();
  return u;
}

// Rayleigh-quotient power iteration for the largest eigenvalue of a
// positive semidefinite operator given as a matvec.
template <class Op>
double power_largest(const Op& op, Eigen::Index n, double tol,
                     std::size_t max_iters) {
  Vec u = centered_probe(n);
  double lam = 0.0;
  bool have = false;
  for (std::size_t it = 0; it < max_iters; ++it) {
    Vec w = op(u);
    const double next = u.dot(w);
    const double nw = w.norm();
    if (nw == 0.0) return 0.0;
    u = w / nw;
    if (have &&
        std::abs(next - lam) <= tol * std::max(std::abs(next), 1e-300)) {
      return next;
    }
    lam = next;
    have = true;
  }
  return lam;
}

// Factorize once and iterate on the inverse; the Rayleigh quotient of the
// iterate converges to the smallest eigenvalue from within the spectrum.
double inverse_smallest(const Mat& sym, double tol, std::size_t max_iters) {
  const auto ldlt = sym.selfadjointView<Eigen::Lower>().ldlt();
  if (ldlt.info() != Eigen::Success) {
    throw DomainError("spectral_constants: factorization failed");
  }
  Vec u = centered_probe(sym.rows());
  double lam = 0.0;
  bool have = false;
  for (std::size_t it = 0; it < max_iters; ++it) {
    Vec w = ldlt.solve(u);
    if (!w.allFinite()) return 0.0;  // numerically singular matrix
    const double wn2 = w.squaredNorm();
    if (wn2 == 0.0) return 0.0;
    // w' sym w = w' u up to the solve's backward error.
    const double next = u.dot(w) / wn2;
    u = w / std::sqrt(wn2);
    if (have &&
        std::abs(next - lam) <= tol * std::max(std::abs(next), 1e-300)) {
      return std::max(next, 0.0);
    }
    lam = next;
    have = true;
  }
  return std::max(lam, 0.0);
}

// Recomputes gram, rhs and the constant term from the primary data. Both
// make_instance and parse_instance go through here, so a serialized round
// trip reproduces the derived members bit for bit.
void finalize_derived(QuadraticInstance& inst) {
  const Eigen::Index n = inst.design.cols();
  Mat g = Mat::Zero(n, n);
  g.selfadjointView<Eigen::Lower>().rankUpdate(inst.design.transpose());
  inst.gram = g.selfadjointView<Eigen::Lower>();
  inst.rhs = inst.design.transpose() * inst.data;
  inst.value_offset = 0.5 * inst.data.squaredNorm();
}

Vec solve_normal(const QuadraticInstance& inst) {
  Mat m = inst.gram;
  m.diagonal().array() += inst.rho;
  const auto ldlt = m.selfadjointView<Eigen::Lower>().ldlt();
  if (ldlt.info() != Eigen::Success) {
    throw DomainError("normal equations factorization failed");
  }
  Vec x = ldlt.solve(inst.rhs - inst.rho * inst.shift_point);
  if (!x.allFinite()) {
    throw DomainError("normal equations solve produced non-finite values");
  }
  return x;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_point_dim(const QuadraticInstance& inst, const Vec& x) {
  if (x.size() != inst.cols) {
    throw DimensionError("point does not match the instance dimension");
  }
}

}  // namespace

QuadraticInstance make_instance(const InstanceParams& params) {
  if (params.rows <= 0 || params.cols <= 0) {
    throw DimensionError("instance sizes must be positive");
  }
  if (!(params.rho >= 0.0) || !std::isfinite(params.rho)) {
    throw DomainError("rho must be nonnegative and finite");
  }
  if (!std::isfinite(params.a) || !std::isfinite(params.b)) {
    throw DomainError("generator coefficients must be finite");
  }
  if (params.a == 0.0 && params.b == 0.0) {
    throw DomainError("generator matrix would be zero");
  }

  QuadraticInstance inst;
  inst.seed = params.seed;
  inst.rows = params.rows;
  inst.cols = params.cols;
  inst.gen_a = params.a;
  inst.gen_b = params.b;
  inst.rho = params.rho;

  SeededGenerator gen(params.seed);
  const Mat r = fill_matrix(gen, params.rows, params.cols);
  inst.shift_point = fill_vector(gen, params.cols);
  inst.data = fill_vector(gen, params.rows);

  Mat a0 = params.b * r;
  a0.diagonal().array() += params.a;

  const double s2 = power_largest(
      [&](const Vec& u) -> Vec { return a0.transpose() * (a0 * u); },
      params.cols, kNormTol, kNormIters);
  if (!(s2 > 0.0) || !std::isfinite(s2)) {
    throw DomainError("generator matrix is numerically zero");
  }
  inst.design = a0 / std::sqrt(s2);

  finalize_derived(inst);

  const SpectralBounds bounds = spectral_constants(inst.gram);
  inst.lipschitz = bounds.largest;
  inst.mu = std::max(bounds.smallest, 0.0);
  if (!(inst.mu < inst.lipschitz)) {
    throw DomainError(
        "curvature bounds collapsed; the smooth part needs mu < L");
  }

  inst.xstar = solve_normal(inst);
  return inst;
}

Vec instance_grad(const QuadraticInstance& inst, const Vec& x) {
  check_point_dim(inst, x);
  return inst.gram.selfadjointView<Eigen::Lower>() * x - inst.rhs;
}

double instance_smooth_value(const QuadraticInstance& inst, const Vec& x) {
  check_point_dim(inst, x);
  const Vec gx = inst.gram.selfadjointView<Eigen::Lower>() * x;
  return 0.5 * x.dot(gx) - x.dot(inst.rhs) + inst.value_offset;
}

Vec instance_prox(const QuadraticInstance& inst, double gamma, const Vec& x) {
  check_point_dim(inst, x);
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError("prox step must be positive and finite");
  }
  const double t = gamma * inst.rho;
  return (x - t * inst.shift_point) / (1.0 + t);
}

Vec exact_solution(const QuadraticInstance& inst) {
  return solve_normal(inst);
}

SpectralBounds spectral_constants(const Mat& sym, double tol,
                                  std::size_t max_iters) {
  if (sym.rows() == 0 || sym.rows() != sym.cols()) {
    throw DomainError("spectral_constants needs a nonempty square matrix");
  }
  if (!(tol > 0.0) || max_iters == 0) {
    throw DomainError("spectral_constants needs tol > 0 and max_iters > 0");
  }
  SpectralBounds out;
  out.largest = power_largest(
      [&](const Vec& u) -> Vec {
        return sym.selfadjointView<Eigen::Lower>() * u;
      },
      sym.rows(), tol, max_iters);
  out.smallest = inverse_smallest(sym, tol, max_iters);
  return out;
}

CompositeProblem as_problem(std::shared_ptr<const QuadraticInstance> inst) {
  if (!inst) throw ConfigError("as_problem needs a non-null instance");
  CompositeProblem p;
  p.dim = inst->cols;
  p.f.lipschitz = inst->lipschitz;
  p.f.mu = inst->mu;
  p.f.value = [inst](const Vec& x) {
    return instance_smooth_value(*inst, x);
  };
  p.f.gradient = [inst](const Vec& x) { return instance_grad(*inst, x); };
  p.h.rho = inst->rho;
  p.h.value = [inst](const Vec& x) {
    check_point_dim(*inst, x);
    return 0.5 * inst->rho * (x + inst->shift_point).squaredNorm();
  };
  p.h.prox = [inst](double gamma, const Vec& x) {
    return instance_prox(*inst, gamma, x);
  };
  p.reference_solution = inst->xstar;
  return p;
}

void serialize_instance(std::ostream& out, const QuadraticInstance& inst) {
  out << "quadratic_instance v1\n";
  out << "seed " << inst.seed << "\n";
  out << "rows " << inst.rows << "\n";
  out << "cols " << inst.cols << "\n";
  out << "gen_a " << fmt(inst.gen_a) << "\n";
  out << "gen_b " << fmt(inst.gen_b) << "\n";
  out << "rho " << fmt(inst.rho) << "\n";
  out << "lipschitz " << fmt(inst.lipschitz) << "\n";
  out << "mu " << fmt(inst.mu) << "\n";
  out << "A\n";
  for (Eigen::Index i = 0; i < inst.rows; ++i) {
    for (Eigen::Index j = 0; j < inst.cols; ++j) {
      if (j > 0) out << ' ';
      out << fmt(inst.design(i, j));
    }
    out << '\n';
  }
  auto write_vec = [&out](const char* name, const Vec& v) {
    out << name << '\n';
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (i > 0) out << ' ';
      out << fmt(v[i]);
    }
    out << '\n';
  };
  write_vec("v", inst.shift_point);
  write_vec("z", inst.data);
  write_vec("xstar", inst.xstar);
  out << "end\n";
  if (!out) throw IoError("failed writing instance");
}

QuadraticInstance parse_instance(std::istream& in) {
  auto fail = [](const std::string& what) {
    throw ConfigError("instance parse: " + what);
  };
  auto expect = [&](const char* key) {
    std::string tok;
    in >> tok;
    if (!in || tok != key) fail(std::string("expected '") + key + "'");
  };
  auto read_double = [&](const char* what) {
    double v = 0.0;
    in >> v;
    if (!in || !std::isfinite(v)) {
      fail(std::string("bad value for ") + what);
    }
    return v;
  };

  expect("quadratic_instance");
  expect("v1");

  QuadraticInstance inst;
  expect("seed");
  in >> inst.seed;
  if (!in) fail("bad seed");

  long long rows = 0, cols = 0;
  expect("rows");
  in >> rows;
  expect("cols");
  in >> cols;
  if (!in || rows <= 0 || cols <= 0 || rows * cols > 100000000LL) {
    fail("bad dimensions");
  }
  inst.rows = static_cast<Eigen::Index>(rows);
  inst.cols = static_cast<Eigen::Index>(cols);

  expect("gen_a");
  inst.gen_a = read_double("gen_a");
  expect("gen_b");
  inst.gen_b = read_double("gen_b");
  expect("rho");
  inst.rho = read_double("rho");
  expect("lipschitz");
  inst.lipschitz = read_double("lipschitz");
  expect("mu");
  inst.mu = read_double("mu");
  if (inst.rho < 0.0 || inst.mu < 0.0 || !(inst.mu < inst.lipschitz)) {
    fail("inconsistent constants");
  }

  expect("A");
  inst.design.resize(inst.rows, inst.cols);
  for (Eigen::Index i = 0; i < inst.rows; ++i) {
    for (Eigen::Index j = 0; j < inst.cols; ++j) {
      inst.design(i, j) = read_double("design entry");
    }
  }
  auto read_vec = [&](const char* name, Eigen::Index size) {
    expect(name);
    Vec v(size);
    for (Eigen::Index i = 0; i < size; ++i) {
      v[i] = read_double(name);
    }
    return v;
  };
  inst.shift_point = read_vec("v", inst.cols);
  inst.data = read_vec("z", inst.rows);
  inst.xstar = read_vec("xstar", inst.cols);
  expect("end");

  finalize_derived(inst);
  return inst;
}

}  // namespace proxshift
