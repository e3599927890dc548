#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "spectra/bounds.hpp"
#include "spectra/eigensolver.hpp"
#include "spectra/spectral_calculus.hpp"

namespace spectra {

/// Location and certification of the band-function minimum for one k.
struct CriticalPointReport {
  int k = 1;
  double alpha_min = 0.0;
  double lambda_star = 0.0;
  std::pair<double, double> bracket{0.0, 0.0};
  int derivative_sign_changes = 0;
  NondegeneracyCertificate certificate;
  std::pair<double, double> scan_interval{0.0, 0.0};
  int scan_resolution = 0;
};

namespace detail {

/// Band evaluations pinned to one grid, so values at nearby alpha share the
/// same discretization bias.
struct FrozenBand {
  int k;
  Grid grid;

  FrozenBand(int k_, double alpha_extent, int jmax = 1)
      : k(k_),
        grid(choose_domain(OperatorSpec{k_, std::abs(alpha_extent), Boundary::WholeLine},
                           eigen_cap(k_, std::abs(alpha_extent), jmax), band_h_max(k_))) {}

  double lambda1(double alpha) const {
    OperatorSpec s{k, alpha, Boundary::WholeLine};
    const DiscretizedProblem coarse = discretize(s, grid);
    const DiscretizedProblem fine = refine(coarse);
    const double lh = tridiag::lowest(coarse.diag, coarse.offdiag, 1)[0];
    const double lh2 = tridiag::lowest(fine.diag, fine.offdiag, 1)[0];
    return (4.0 * lh2 - lh) / 3.0;
  }

  /// Hellmann-Feynman derivative of lambda1 at alpha.
  double slope(double alpha) const {
    OperatorSpec s{k, alpha, Boundary::WholeLine};
    const DiscretizedProblem fine = refine(discretize(s, grid));
    const Eigenpair gs = ground_state(fine);
    const Moments m = eigenpair_moments(fine, gs);
    return 2.0 * (alpha - m.moment);
  }
};

inline int count_sign_changes(const FrozenBand& band, double lo, double hi, int n_samples) {
  int changes = 0;
  int last = 0;
  for (int i = 0; i < n_samples; ++i) {
    const double a = lo + (hi - lo) * i / (n_samples - 1);
    const int s = num::sign(band.slope(a));
    if (s != 0 && last != 0 && s != last) ++changes;
    if (s != 0) last = s;
  }
  return changes;
}

}  // namespace detail

/// Number of sign changes of the band derivative over n_samples uniformly
/// spaced points on the interval. Exactly 1 for odd k on
/// [-0.25, alpha_star + 0.25].
inline int uniqueness_scan(int k, std::pair<double, double> interval, int n_samples) {
  if (n_samples < 100) throw std::invalid_argument("uniqueness_scan: need n_samples >= 100");
  if (!(interval.first < interval.second))
    throw std::invalid_argument("uniqueness_scan: empty interval");
  const double extent = std::max(std::abs(interval.first), std::abs(interval.second));
  detail::FrozenBand band(k, extent);
  return detail::count_sign_changes(band, interval.first, interval.second, n_samples);
}

/// Locates alpha_min. Odd k: golden-section search of lambda1 on
/// [0, alpha_star] to width 1e-6, then secant refinement of the derivative to
/// |d lambda1| <= 1e-8. Even k: alpha_min = 0 by symmetry, with the critical
/// point and non-degeneracy verified numerically.
inline CriticalPointReport find_minimum(int k) {
  if (k < 1) throw std::invalid_argument("find_minimum: k must be >= 1");
  CriticalPointReport report;
  report.k = k;

  if (k % 2 == 0) {
    report.alpha_min = 0.0;
    report.scan_interval = {-1.0, 1.0};
    report.scan_resolution = 128;
    detail::FrozenBand band(k, 1.0);
    report.derivative_sign_changes =
        detail::count_sign_changes(band, -1.0, 1.0, report.scan_resolution);
    const double d0 = band.slope(0.0);
    if (std::abs(d0) > 1e-6)
      throw solver_error("find_minimum: derivative at 0 not zero for even k");
    report.bracket = {-1e-3, 1e-3};
    const double l0 = band.lambda1(0.0);
    if (!(band.lambda1(-1e-3) > l0 && band.lambda1(1e-3) > l0))
      throw solver_error("find_minimum: 0 is not a strict minimum for even k");
    const BandPoint bp = band_point(k, 0.0);
    report.lambda_star = bp.lambda1;
    report.certificate = nondegeneracy_certificate(k, 0.0);
    if (!(report.certificate.second_derivative_fd > 0.0))
      throw solver_error("find_minimum: second derivative at 0 not positive for even k");
    return report;
  }

  const double a_star = bounds::alpha_star(k);
  report.scan_interval = {-0.25, a_star + 0.25};
  report.scan_resolution = 128;
  detail::FrozenBand band(k, a_star + 0.25);
  report.derivative_sign_changes = detail::count_sign_changes(
      band, report.scan_interval.first, report.scan_interval.second, report.scan_resolution);

  const auto lam1 = [&band](double a) { return band.lambda1(a); };
  report.bracket = num::golden_min(lam1, 0.0, a_star, 1e-6);

  // secant refinement on the derivative
  double a0 = report.bracket.first;
  double a1 = report.bracket.second;
  double d0 = band.slope(a0);
  double d1 = band.slope(a1);
  double best = a0, dbest = d0;
  if (std::abs(d1) < std::abs(d0)) {
    best = a1;
    dbest = d1;
  }
  for (int it = 0; it < 60 && std::abs(dbest) > 1e-8 && d1 != d0; ++it) {
    double next = a1 - d1 * (a1 - a0) / (d1 - d0);
    next = std::clamp(next, -0.05, a_star + 0.05);
    a0 = a1;
    d0 = d1;
    a1 = next;
    d1 = band.slope(a1);
    if (std::abs(d1) < std::abs(dbest)) {
      best = a1;
      dbest = d1;
    }
  }
  report.alpha_min = best;
  if (std::abs(dbest) > 1e-8)
    throw solver_error("find_minimum: derivative refinement did not converge");
  // the derivative zero can sit a few 1e-5 outside the value-based bracket
  // (their discretization biases differ); keep the bracket containing it
  report.bracket.first = std::min(report.bracket.first, report.alpha_min);
  report.bracket.second = std::max(report.bracket.second, report.alpha_min);

  const BandPoint bp = band_point(k, report.alpha_min);
  report.lambda_star = bp.lambda1;
  if (!(band.lambda1(0.0) > bp.lambda1 && band.lambda1(a_star) > bp.lambda1))
    throw solver_error("find_minimum: bracket endpoints do not dominate the minimum");
  report.certificate = nondegeneracy_certificate(k, report.alpha_min);
  return report;
}

/// lambda_1(alpha) over its leading large-alpha growth ((k+1) alpha)^{k/(k+1)}
/// (the harmonic scale of the well). Tends to 1 as alpha grows.
inline double large_alpha_asymptote_check(int k, double alpha) {
  if (!(alpha >= 10.0))
    throw std::invalid_argument("large_alpha_asymptote_check: alpha must be >= 10");
  OperatorSpec spec{k, alpha, Boundary::WholeLine};
  const Grid g = choose_domain(spec, detail::eigen_cap(k, alpha, 1), detail::band_h_max(k));
  const DiscretizedProblem coarse = discretize(spec, g);
  const Spectrum s = lowest_eigenvalues(coarse, 1);
  return s.eigenvalues[0] / std::pow((k + 1) * alpha, k / (k + 1.0));
}

}  // namespace spectra
