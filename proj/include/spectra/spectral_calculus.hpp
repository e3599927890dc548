#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "spectra/bounds.hpp"
#include "spectra/eigensolver.hpp"
#include "spectra/operator_model.hpp"

namespace spectra {

/// Band-function data at one (k, alpha): the three lowest eigenvalues, the
/// alpha-derivative of the first one, and the ground-state moments feeding
/// the derivative and virial identities.
struct BandPoint {
  int k = 1;
  double alpha = 0.0;
  double lambda1 = 0.0, lambda2 = 0.0, lambda3 = 0.0;
  double d_lambda1 = 0.0;          // Hellmann-Feynman derivative of lambda1
  double potential_norm_sq = 0.0;  // ||(t^{k+1}/(k+1) - alpha) u||^2
  double kinetic_norm_sq = 0.0;    // ||u'||^2
  double moment = 0.0;             // int t^{k+1}/(k+1) u^2 dt
};

struct NondegeneracyCertificate {
  int k = 1;
  double alpha_c = 0.0;
  enum class Branch { A, B } branch = Branch::A;
  double gap_value = 0.0;                // (k+2) lambda_{2|3} - (k+6) lambda_1
  double second_derivative_lower = 0.0;  // 2 gap / ((k+2)(lambda_m - lambda_1))
  double second_derivative_fd = 0.0;
};

namespace detail {

/// A-priori cap on the eigenvalues of interest, grown until the truncated
/// domain built from it keeps Dirichlet-truncation effects below 1e-8 even
/// for the third eigenvalue: the WKB tail integral int sqrt(V - lambda) past
/// the turning point must reach ~12 on both sides. Growing the cap is cheap,
/// the domain length only scales like cap^(1/(2k+2)).
inline double eigen_cap(int k, double alpha, int jmax = 3) {
  const double a = std::abs(alpha);
  const double semiclassical = std::pow((k + 1) * a, k / (k + 1.0));
  const double top = std::max({alpha * alpha, bounds::upper_bound(k, a), semiclassical});
  const double lambda_max = top + 8.0 * jmax;  // overestimate of lambda_jmax
  double cap = 1.5 * (top + 5.0) + 8.0 * jmax;
  const OperatorSpec spec{k, alpha, Boundary::WholeLine};
  const auto side_decay = [&](int side, double edge) {
    double well = 0.0;
    if (alpha > 0.0 && (k % 2 == 1 || side > 0)) well = well_center(spec);
    if (alpha < 0.0 && k % 2 == 0 && side < 0)
      well = std::pow(-(k + 1) * alpha, 1.0 / (k + 1));
    double sum = 0.0;
    const int steps = 256;
    double prev = 0.0;
    for (int i = 0; i <= steps; ++i) {
      const double t = well + (edge - well) * i / steps;
      const double f = std::sqrt(std::max(potential(spec, side * t) - lambda_max, 0.0));
      if (i > 0) sum += 0.5 * (prev + f) * (edge - well) / steps;
      prev = f;
    }
    return sum;
  };
  for (int iter = 0; iter < 60; ++iter) {
    const double reach_r = potential_reach(spec, +1, cap + 25.0);
    const double reach_l = potential_reach(spec, -1, cap + 25.0);
    const double edge = 1.2 * std::max(reach_r, reach_l);
    if (std::min(side_decay(+1, edge), side_decay(-1, edge)) >= 12.0) break;
    cap *= 1.6;
  }
  return cap;
}

inline double band_h_max(int k) { return k >= 20 ? 5e-4 : 1e-3; }

/// Sum of (t^{k+1}/(k+1) - alpha) u^2 h and friends over a grid eigenpair.
struct Moments {
  double moment = 0.0;
  double potential_norm_sq = 0.0;
  double kinetic_norm_sq = 0.0;
};

inline Moments eigenpair_moments(const DiscretizedProblem& p, const Eigenpair& pair) {
  const double h = pair.norm_weight;
  Moments m;
  const std::size_t n = pair.u.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double w = well_term(p.spec.k, p.nodes[i]);
    const double u2 = pair.u[i] * pair.u[i];
    m.moment += w * u2;
    const double shifted = w - p.spec.alpha;
    m.potential_norm_sq += shifted * shifted * u2;
  }
  m.moment *= h;
  m.potential_norm_sq *= h;
  // discrete Dirichlet energy: boundary cells carry the implicit zero values
  double kin = pair.u[0] * pair.u[0] + pair.u[n - 1] * pair.u[n - 1];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = pair.u[i + 1] - pair.u[i];
    kin += d * d;
  }
  m.kinetic_norm_sq = kin / h;
  return m;
}

}  // namespace detail

/// Band data at (k, alpha) on the whole line. An explicit grid may be passed
/// to share one discretization across several alpha values (finite-difference
/// stencils cancel the systematic grid bias that way).
inline BandPoint band_point(int k, double alpha, std::optional<Grid> grid = std::nullopt,
                            int jmax = 3) {
  OperatorSpec spec{k, alpha, Boundary::WholeLine};
  validate(spec);
  const Grid g = grid ? *grid
                      : choose_domain(spec, detail::eigen_cap(k, alpha, jmax),
                                      detail::band_h_max(k));
  const DiscretizedProblem coarse = discretize(spec, g);
  const DiscretizedProblem fine = refine(coarse);
  const std::vector<double> lam_h = tridiag::lowest(coarse.diag, coarse.offdiag, jmax);
  const std::vector<double> lam_h2 = tridiag::lowest(fine.diag, fine.offdiag, jmax);
  BandPoint bp;
  bp.k = k;
  bp.alpha = alpha;
  bp.lambda1 = (4.0 * lam_h2[0] - lam_h[0]) / 3.0;
  if (jmax >= 2) bp.lambda2 = (4.0 * lam_h2[1] - lam_h[1]) / 3.0;
  if (jmax >= 3) bp.lambda3 = (4.0 * lam_h2[2] - lam_h[2]) / 3.0;
  const Eigenpair gs = ground_state(fine);
  const detail::Moments m = detail::eigenpair_moments(fine, gs);
  bp.moment = m.moment;
  bp.potential_norm_sq = m.potential_norm_sq;
  bp.kinetic_norm_sq = m.kinetic_norm_sq;
  bp.d_lambda1 = 2.0 * (alpha - m.moment);  // = -2 int (t^{k+1}/(k+1) - alpha) u^2
  return bp;
}

/// Residual of the virial identity ||(t^{k+1}/(k+1) - alpha_c) u||^2 =
/// lambda_1/(k+2) at a critical point. Also cross-checks the scaling
/// identity (k+1) * potential part = kinetic part.
inline double virial_check(int k, double alpha_c) {
  const BandPoint bp = band_point(k, alpha_c);
  if (std::abs(bp.d_lambda1) > 1e-6)
    throw std::invalid_argument("virial_check: alpha_c is not a critical point");
  const double scaling = (k + 1) * bp.potential_norm_sq - bp.kinetic_norm_sq;
  if (std::abs(scaling) > 1e-3 * std::max(1.0, bp.kinetic_norm_sq))
    throw solver_error("virial_check: scaling identity violated (quadrature bug?)");
  return bp.potential_norm_sq - bp.lambda1 / (k + 2);
}

/// Centered second difference of the band function. All three eigenvalues
/// are computed on one shared grid.
inline double second_derivative_fd(int k, double alpha, double step = 1e-3) {
  if (!(step > 0.0)) throw std::invalid_argument("second_derivative_fd: step must be > 0");
  const double worst = std::abs(alpha) + step;
  OperatorSpec widest{k, worst, Boundary::WholeLine};
  const Grid g = choose_domain(widest, detail::eigen_cap(k, worst, 1), detail::band_h_max(k));
  const auto lam1 = [&](double a) {
    OperatorSpec s{k, a, Boundary::WholeLine};
    const DiscretizedProblem coarse = discretize(s, g);
    const DiscretizedProblem fine = refine(coarse);
    const double lh = tridiag::lowest(coarse.diag, coarse.offdiag, 1)[0];
    const double lh2 = tridiag::lowest(fine.diag, fine.offdiag, 1)[0];
    return (4.0 * lh2 - lh) / 3.0;
  };
  return num::central_second_diff(lam1, alpha, step);
}

/// Evaluates the spectral-gap criterion for a non-degenerate minimum at a
/// critical point. Branch B (third eigenvalue) applies when k is odd or
/// alpha_c = 0; even k away from zero only offers branch A.
inline NondegeneracyCertificate nondegeneracy_certificate(int k, double alpha_c) {
  const BandPoint bp = band_point(k, alpha_c);
  if (std::abs(bp.d_lambda1) > 1e-6)
    throw std::invalid_argument("nondegeneracy_certificate: alpha_c is not a critical point");
  NondegeneracyCertificate cert;
  cert.k = k;
  cert.alpha_c = alpha_c;
  const bool use_b = (k % 2 == 1);  // even k certifies at alpha_c = 0 via branch A
  cert.branch = use_b ? NondegeneracyCertificate::Branch::B : NondegeneracyCertificate::Branch::A;
  const double lam_m = use_b ? bp.lambda3 : bp.lambda2;
  cert.gap_value = (k + 2) * lam_m - (k + 6) * bp.lambda1;
  cert.second_derivative_lower = 2.0 * cert.gap_value / ((k + 2) * (lam_m - bp.lambda1));
  cert.second_derivative_fd = second_derivative_fd(k, alpha_c);
  return cert;
}

/// True iff alpha_c^2 < lambda_1(alpha_c); holds at every critical point for
/// odd k.
inline bool abound_check(int k, double alpha_c) {
  if (k % 2 == 0) throw std::invalid_argument("abound_check: k must be odd");
  const BandPoint bp = band_point(k, alpha_c);
  if (std::abs(bp.d_lambda1) > 1e-6)
    throw std::invalid_argument("abound_check: alpha_c is not a critical point");
  return alpha_c * alpha_c < bp.lambda1;
}

}  // namespace spectra
