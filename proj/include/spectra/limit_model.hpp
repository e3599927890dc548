#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "spectra/numeric.hpp"

namespace spectra {

/// A tangent/denominator singularity was hit while evaluating a gluing
/// function; reported separately from ordinary sign information.
struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// The spectral parameter left the branch on which the piecewise solution
/// decays (lambda >= A or lambda >= B).
struct branch_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Piecewise comparison problem for large k: constant plateaus A, alpha^2(1-eps),
/// 0, B on (-inf,t0], (t0,t1], (t1,t2], (t2,inf) with t0,t1,t2 = -1-eps, 1-eps, 1+eps.
struct GlueSystem {
  int k = 2;
  double alpha = 0.0;
  double eps = 0.1;
  double A = 0.0;
  double B = 0.0;
  double t0 = 0.0, t1 = 0.0, t2 = 0.0;

  static GlueSystem make(int k, double alpha, double eps) {
    if (k < 1) throw std::invalid_argument("GlueSystem: k must be >= 1");
    if (!(alpha >= 0.0)) throw std::invalid_argument("GlueSystem: alpha must be >= 0");
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("GlueSystem: eps must be in (0,1)");
    GlueSystem g;
    g.k = k;
    g.alpha = alpha;
    g.eps = eps;
    const double wall = std::pow(1.0 + eps, k + 1.0) / (k + 1);
    g.A = (wall + alpha) * (wall + alpha);
    g.B = (wall - alpha) * (wall - alpha);
    g.t0 = -1.0 - eps;
    g.t1 = 1.0 - eps;
    g.t2 = 1.0 + eps;
    return g;
  }

  double potential_at(double t) const {
    if (t <= t0) return A;
    if (t <= t1) return alpha * alpha * (1.0 - eps);
    if (t <= t2) return 0.0;
    return B;
  }
};

struct LimitEigenvalue {
  int j = 1;
  double alpha = 0.0;
  double value = 0.0;
};

/// lim_{k->inf} lambda_j = alpha^2 + (j pi / 2)^2.
inline double limit_eigenvalue(int j, double alpha) {
  if (j < 1) throw std::invalid_argument("limit_eigenvalue: j must be >= 1");
  const double w = j * std::numbers::pi / 2.0;
  return alpha * alpha + w * w;
}

namespace detail {

inline void guard_tan_pole(double arg, const char* where) {
  const double r = std::remainder(arg, std::numbers::pi);  // in (-pi/2, pi/2]
  if (std::numbers::pi / 2.0 - std::abs(r) < 1e-12 * std::max(1.0, std::abs(arg)))
    throw pole_error(std::string(where) + ": tan pole");
}

}  // namespace detail

/// Left matching function of the reduced gluing equation:
/// tanh branch below alpha^2(1-eps), the value 2 at the seam, tan branch above.
inline double f1(double lambda, double alpha, double eps) {
  if (!(lambda > 0.0)) throw std::invalid_argument("f1: lambda must be > 0");
  const double x = lambda - alpha * alpha * (1.0 - eps);
  if (x == 0.0) return 2.0;
  if (x > 0.0) {
    const double s = std::sqrt(x);
    detail::guard_tan_pole(2.0 * s, "f1");
    return std::tan(2.0 * s) / s;
  }
  const double s = std::sqrt(-x);
  return std::tanh(2.0 * s) / s;
}

/// Right matching function: -tan(2 eps sqrt(lambda))/sqrt(lambda); negative on
/// (0, (pi/(4 eps))^2).
inline double f2(double lambda, double eps) {
  if (!(lambda > 0.0)) throw std::invalid_argument("f2: lambda must be > 0");
  const double s = std::sqrt(lambda);
  detail::guard_tan_pole(2.0 * eps * s, "f2");
  return -std::tan(2.0 * eps * s) / s;
}

/// Residual of the full transfer-matrix gluing condition for the piecewise
/// potential. Zero exactly at the eigenvalues of the glue system. The
/// right-hand side carries the prefactor -1/sqrt(lambda); the matrix
/// log-derivative propagation fixes that scaling, and the roots are verified
/// against direct discretization of the same potential.
inline double glue_residual(double lambda, const GlueSystem& sys) {
  if (!(lambda > 0.0)) throw std::invalid_argument("glue_residual: lambda must be > 0");
  if (!(sys.A > lambda && sys.B > lambda))
    throw branch_error("glue_residual: requires A > lambda and B > lambda");
  const double sa = std::sqrt(sys.A - lambda);
  const double sb = std::sqrt(sys.B - lambda);
  const double d1 = sys.t1 - sys.t0;  // = 2
  const double d2 = sys.t2 - sys.t1;  // = 2 eps
  const double x = lambda - sys.alpha * sys.alpha * (1.0 - sys.eps);

  double lhs;  // u/u' at t1, propagated from the decaying left solution
  if (x > 0.0) {
    const double c = std::sqrt(x);
    detail::guard_tan_pole(c * d1, "glue_residual lhs");
    const double t = std::tan(c * d1);
    const double den = c * (sa - c * t);
    if (den == 0.0) throw pole_error("glue_residual: lhs denominator vanished");
    lhs = (sa * t + c) / den;
  } else if (x == 0.0) {
    lhs = (sa * d1 + 1.0) / sa;
  } else {
    const double kk = std::sqrt(-x);
    const double th = std::tanh(kk * d1);
    lhs = (kk + sa * th) / (kk * (sa + kk * th));
  }

  const double s = std::sqrt(lambda);
  detail::guard_tan_pole(s * d2, "glue_residual rhs");
  const double t2v = std::tan(s * d2);
  const double den = s * (sb - s * t2v);
  if (den == 0.0) throw pole_error("glue_residual: rhs denominator vanished");
  const double rhs_neg = (sb * t2v + s) / den;  // = -(u/u' matched from the right)
  return lhs + rhs_neg;
}

/// j-th root of the reduced equation f1(lambda) = f2(lambda), bisected inside
/// the branch interval (((j-1/2) pi/2)^2 + alpha^2(1-eps),
/// ((j+1/2) pi/2)^2 + alpha^2(1-eps)) where f1 is monotone. The correction
/// term of order (k+1)(1+eps)^{-(k+1)} is neglected; k is carried only for
/// interface symmetry with the full system.
inline double solve_reduced(int j, double alpha, double eps, int k) {
  if (j < 1) throw std::invalid_argument("solve_reduced: j must be >= 1");
  if (k < 1) throw std::invalid_argument("solve_reduced: k must be >= 1");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("solve_reduced: eps must be in (0,1)");
  const double pi = std::numbers::pi;
  const double shift = alpha * alpha * (1.0 - eps);
  const double hi_wall = (j + 0.5) * pi / 2.0;
  const double pole_f2 = pi / (4.0 * eps);
  if (!(pole_f2 * pole_f2 > hi_wall * hi_wall + shift))
    throw std::invalid_argument("solve_reduced: eps too large for this j (f2 pole inside interval)");
  const double lo_wall = (j - 0.5) * pi / 2.0;
  double lo = lo_wall * lo_wall + shift;
  double hi = hi_wall * hi_wall + shift;
  const double pad = 1e-9 * std::max(1.0, hi);
  lo += pad;
  hi -= pad;
  const auto g = [&](double lam) { return f1(lam, alpha, eps) - f2(lam, eps); };
  return num::bisect_root(g, lo, hi, 1e-13);
}

}  // namespace spectra
