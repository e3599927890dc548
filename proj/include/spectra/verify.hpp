#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "spectra/bounds.hpp"
#include "spectra/eigensolver.hpp"
#include "spectra/limit_model.hpp"
#include "spectra/minimizer.hpp"
#include "spectra/operator_model.hpp"
#include "spectra/spectral_calculus.hpp"

namespace spectra::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;   // the margin or deviation actually observed
  double threshold = 0.0;  // the contract it is compared against
  std::string detail;
};

enum class Level { Fast, Full };

/// Reference band minima for k = 1..10 (accurate to 1e-2): alpha_min and the
/// three lowest eigenvalues at the minimum.
struct ReferenceRow {
  int k;
  double alpha_min, lambda1, lambda2, lambda3;
};

inline const std::array<ReferenceRow, 10>& reference_table() {
  static const std::array<ReferenceRow, 10> table{{
      {1, 0.35, 0.57, 1.98, 4.11},
      {2, 0.00, 0.66, 2.50, 5.24},
      {3, 0.16, 0.68, 2.61, 5.68},
      {4, 0.00, 0.76, 2.98, 6.52},
      {5, 0.10, 0.81, 3.18, 7.03},
      {6, 0.00, 0.87, 3.47, 7.69},
      {7, 0.07, 0.92, 3.66, 8.16},
      {8, 0.00, 0.98, 3.90, 8.70},
      {9, 0.05, 1.02, 4.07, 9.12},
      {10, 0.00, 1.07, 4.27, 9.57},
  }};
  return table;
}

/// All eigenvalues of a small symmetric tridiagonal matrix through the sign
/// changes of the characteristic polynomial evaluated by its three-term
/// recurrence. Independent of the Sturm-count path: only the final
/// determinant's sign is used, on a dense scan followed by bisection.
inline std::vector<double> charpoly_eigenvalues(const std::vector<double>& d,
                                                const std::vector<double>& e) {
  const auto det = [&](double x) {
    double pm2 = 0.0, pm1 = 1.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const double p = (d[i] - x) * pm1 - (i ? e[i - 1] * e[i - 1] : 0.0) * pm2;
      pm2 = pm1;
      pm1 = p;
    }
    return pm1;
  };
  double lo = d[0], hi = d[0];
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double r =
        (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i + 1 < d.size() ? std::abs(e[i]) : 0.0);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  const int scan = 20000;
  std::vector<double> roots;
  double prev_x = lo, prev_f = det(lo);
  for (int i = 1; i <= scan; ++i) {
    const double x = lo + (hi - lo) * i / scan;
    const double f = det(x);
    if ((prev_f < 0.0 && f > 0.0) || (prev_f > 0.0 && f < 0.0))
      roots.push_back(num::bisect_root(det, prev_x, x, 1e-14));
    prev_x = x;
    prev_f = f;
  }
  return roots;
}

namespace detail {

inline CheckResult bounded(std::string name, double measured, double threshold,
                           std::string detail = {}) {
  return CheckResult{std::move(name), measured <= threshold, measured, threshold,
                     std::move(detail)};
}

inline CheckResult exceeds(std::string name, double measured, double threshold,
                           std::string detail = {}) {
  return CheckResult{std::move(name), measured > threshold, measured, threshold,
                     std::move(detail)};
}

inline std::vector<double> custom_eigs(Boundary b, double left, double right, int n,
                                       const std::function<double(double)>& V, int m) {
  OperatorSpec tag{1, 0.0, b};
  const Grid g = make_grid(left, right, n);
  const DiscretizedProblem p = assemble(tag, g, V);
  return lowest_eigenvalues(p, m).eigenvalues;
}

}  // namespace detail

inline std::vector<CheckResult> operator_model_suite(Level) {
  using detail::bounded;
  std::vector<CheckResult> out;
  {
    double worst = 0.0;
    for (int k : {2, 4})
      for (double a : {0.3, 1.1})
        for (int i = 0; i <= 200; ++i) {
          const double t = -3.0 + 6.0 * i / 200;
          worst = std::max(worst, std::abs(potential({k, a}, t) - potential({k, -a}, -t)));
        }
    out.push_back(bounded("even k: V(k,a,t) = V(k,-a,-t) (exact)", worst, 0.0));
  }
  {
    double worst = 0.0;
    for (int k : {1, 3, 7})
      for (double a : {0.0, 0.7, -0.4})
        for (int i = 0; i <= 200; ++i) {
          const double t = -3.0 + 6.0 * i / 200;
          worst = std::max(worst, std::abs(potential({k, a}, -t) - potential({k, a}, t)));
        }
    out.push_back(bounded("odd k: V even in t (exact)", worst, 0.0));
  }
  {
    double best = 1e300;  // min of V - alpha^2; must stay >= 0
    for (int k : {1, 3, 5})
      for (int i = 0; i <= 400; ++i) {
        const double a = -0.8;
        const double t = -4.0 + 8.0 * i / 400;
        best = std::min(best, potential({k, a}, t) - a * a);
      }
    out.push_back(CheckResult{"odd k, a<0: V >= a^2 pointwise", best >= 0.0, best, 0.0});
  }
  {
    double worst = 0.0;
    for (int k : {1, 2, 5})
      for (double a : {0.0, 0.35, 2.0})
        for (int i = 0; i <= 100; ++i) {
          const double t = -2.0 + 4.0 * i / 100;
          worst = std::max(worst,
                           std::abs(scaled_potential({k, a}, {1.0}, t) - potential({k, a}, t)));
        }
    out.push_back(bounded("scaled_potential at rho=1 matches exactly", worst, 0.0));
  }
  {
    const double diff = std::abs(potential({2, 1.0}, -1.0) - potential({2, 1.0}, 1.0));
    out.push_back(detail::exceeds("even k, a!=0: V not even in t", diff, 0.1));
  }
  return out;
}

inline std::vector<CheckResult> eigensolver_suite(Level level) {
  using detail::bounded;
  std::vector<CheckResult> out;
  {  // whole-line harmonic oscillator
    auto eigs = detail::custom_eigs(Boundary::WholeLine, -8.0, 8.0, 15999,
                                    [](double t) { return t * t; }, 3);
    double worst = 0.0;
    for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(eigs[j] - (2 * j + 1)));
    out.push_back(bounded("harmonic oscillator (whole line) 1,3,5", worst, 1e-8));
  }
  {  // half-line Neumann harmonic oscillator
    auto eigs = detail::custom_eigs(Boundary::HalfLineNeumann, 0.0, 8.0, 7999,
                                    [](double t) { return t * t; }, 3);
    double worst = 0.0;
    for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(eigs[j] - (4 * (j + 1) - 3)));
    out.push_back(bounded("harmonic oscillator (half line, Neumann) 1,5,9", worst, 1e-8));
  }
  {  // free Dirichlet box on (0,1): (j pi)^2
    auto eigs =
        detail::custom_eigs(Boundary::WholeLine, 0.0, 1.0, 1999, [](double) { return 0.0; }, 3);
    double worst = 0.0;
    for (int j = 1; j <= 3; ++j)
      worst = std::max(worst, std::abs(eigs[j - 1] - j * j * std::numbers::pi * std::numbers::pi));
    out.push_back(bounded("free Dirichlet box eigenvalues (j pi)^2", worst, 1e-6));
  }
  {  // free Neumann-Dirichlet box on (0,1): ((2j-1) pi/2)^2, raw eigenvalues
     // on a wall-matched staggered grid (right = 1 + h/2)
    const int n = 20000;
    OperatorSpec tag{1, 0.0, Boundary::HalfLineNeumann};
    const DiscretizedProblem p = assemble(tag, make_grid(0.0, 1.0 + 1.0 / (2 * n + 1), n),
                                          [](double) { return 0.0; });
    const auto lam = tridiag::lowest(p.diag, p.offdiag, 3);
    double worst = 0.0;
    for (int j = 1; j <= 3; ++j) {
      const double w = (2 * j - 1) * std::numbers::pi / 2.0;
      worst = std::max(worst, std::abs(lam[j - 1] - w * w));
    }
    out.push_back(bounded("free Neumann-Dirichlet box ((2j-1) pi/2)^2", worst, 1e-6));
  }
  {  // free Neumann-Neumann box on (0, t_hat): ((j-1) pi / t_hat)^2, kernel-level
    const double t_hat = 1.37;
    const int n = 4000;
    const double h = t_hat / n;
    std::vector<double> d(n, 2.0 / (h * h)), e(n - 1, -1.0 / (h * h));
    d.front() = d.back() = 1.0 / (h * h);
    auto lam = tridiag::lowest(d, e, 3);
    double worst = std::abs(lam[0]);
    for (int j = 2; j <= 3; ++j) {
      const double w = (j - 1) * std::numbers::pi / t_hat;
      worst = std::max(worst, std::abs(lam[j - 1] - w * w) / (w * w));
    }
    out.push_back(bounded("free Neumann-Neumann box ((j-1) pi/t)^2 (rel)", worst, 1e-6));
  }
  {  // Richardson consistency: |extrapolated - lambda_{h/4}| <= 10 * error_estimate
    double worst_ratio = 0.0;
    const std::vector<int> ks = level == Level::Full ? std::vector<int>{1, 2, 3} : std::vector<int>{1};
    for (int k : ks)
      for (double a : {0.0, 0.35}) {
        OperatorSpec s{k, a, Boundary::WholeLine};
        const Grid g = choose_domain(s, 15.0, 4e-3);
        const DiscretizedProblem p = discretize(s, g);
        const Spectrum sp = lowest_eigenvalues(p, 3);
        const DiscretizedProblem p4 = refine(refine(p));
        const auto lam4 = tridiag::lowest(p4.diag, p4.offdiag, 3);
        for (int j = 0; j < 3; ++j)
          worst_ratio = std::max(
              worst_ratio, std::abs(sp.eigenvalues[j] - lam4[j]) / std::max(sp.error_estimate, 1e-300));
        }
    out.push_back(bounded("Richardson: |extrap - lambda(h/4)| / error_estimate", worst_ratio, 10.0));
  }
  {  // domain doubling
    double worst = 0.0;
    for (const auto& row : reference_table()) {
      if (level == Level::Fast && row.k > 3) break;
      OperatorSpec s{row.k, row.alpha_min, Boundary::WholeLine};
      const Grid g = choose_domain(s, spectra::detail::eigen_cap(row.k, row.alpha_min));
      const Grid g2 = make_grid(2.0 * g.left, 2.0 * g.right, 2 * g.n + 1);
      const auto e1 = lowest_eigenvalues(discretize(s, g), 3).eigenvalues;
      const auto e2 = lowest_eigenvalues(discretize(s, g2), 3).eigenvalues;
      for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(e1[j] - e2[j]));
    }
    out.push_back(bounded("domain doubling changes lambda_(1..3) by", worst, 1e-8));
  }
  {  // V -> V + c shifts the spectrum by c
    OperatorSpec s{1, 0.35, Boundary::WholeLine};
    const Grid g = choose_domain(s, 12.0);
    const double c = 7.0;
    const DiscretizedProblem p1 = discretize(s, g);
    const DiscretizedProblem p2 = assemble(s, g, [s, c](double t) { return potential(s, t) + c; });
    double worst_row = 0.0;
    for (int i = 0; i < g.n; ++i)
      worst_row = std::max(worst_row, std::abs(p2.diag[i] - (p1.diag[i] + c)));
    const auto e1 = tridiag::lowest(p1.diag, p1.offdiag, 3);
    const auto e2 = tridiag::lowest(p2.diag, p2.offdiag, 3);
    double worst = 0.0;
    for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(e2[j] - e1[j] - c));
    out.push_back(bounded("potential shift V+c: assembly rows", worst_row, 1e-12));
    out.push_back(bounded("potential shift V+c: eigenvalue shift = c", worst, 1e-10));
  }
  {  // strict ordering across the reference panel
    double min_gap = 1e300;
    for (const auto& row : reference_table()) {
      if (level == Level::Fast && row.k > 3) break;
      OperatorSpec s{row.k, row.alpha_min, Boundary::WholeLine};
      const Grid g = choose_domain(s, spectra::detail::eigen_cap(row.k, row.alpha_min));
      const auto e = lowest_eigenvalues(discretize(s, g), 4).eigenvalues;
      for (int j = 0; j + 1 < 4; ++j) min_gap = std::min(min_gap, e[j + 1] - e[j]);
    }
    out.push_back(detail::exceeds("eigenvalue gaps lambda_(j+1)-lambda_j", min_gap, 0.0));
  }
  {  // tiny-grid Sturm vs characteristic polynomial
    OperatorSpec s{1, 0.0, Boundary::WholeLine};
    const Grid g = make_grid(-3.0, 3.0, 12);
    const DiscretizedProblem p = discretize(s, g);
    const auto sturm = tridiag::lowest(p.diag, p.offdiag, 12);
    const auto charp = charpoly_eigenvalues(p.diag, p.offdiag);
    double worst = charp.size() == 12 ? 0.0 : 1e300;
    for (std::size_t j = 0; j < charp.size() && j < sturm.size(); ++j)
      worst = std::max(worst, std::abs(sturm[j] - charp[j]));
    out.push_back(bounded("n=12 Sturm vs characteristic polynomial", worst, 1e-10));
  }
  {  // ground state: normalization, positivity, symmetry at alpha=0 odd k
    OperatorSpec s{3, 0.0, Boundary::WholeLine};
    const Grid g = choose_domain(s, 12.0);
    const DiscretizedProblem p = discretize(s, g);
    const Eigenpair gs = ground_state(p);
    const double norm_dev = std::abs(grid_norm_sq(gs) - 1.0);
    double min_u = 1e300, sym = 0.0;
    const int n = g.n;
    for (int i = 0; i < n; ++i) {
      min_u = std::min(min_u, gs.u[i]);
      sym = std::max(sym, std::abs(gs.u[i] - gs.u[n - 1 - i]));
    }
    out.push_back(bounded("ground state normalization |sum u^2 h - 1|", norm_dev, 1e-12));
    out.push_back(detail::exceeds("ground state positivity min u", min_u, 0.0));
    out.push_back(bounded("ground state symmetry at alpha=0 (odd k)", sym, 1e-8));
  }
  return out;
}

inline std::vector<CheckResult> spectral_calculus_suite(Level level) {
  using detail::bounded;
  std::vector<CheckResult> out;
  {  // Hellmann-Feynman vs central differences
    const std::vector<int> ks =
        level == Level::Full ? std::vector<int>{1, 2, 3, 4, 5, 6} : std::vector<int>{1, 3};
    const std::vector<double> alphas = level == Level::Full
                                           ? std::vector<double>{0.0, 0.1, 0.35, 1.0}
                                           : std::vector<double>{0.1, 0.35};
    const double delta = 1e-4;
    double worst = 0.0;
    for (int k : ks) {
      spectra::detail::FrozenBand band(k, 1.0 + delta);
      for (double a : alphas) {
        const double hf = band.slope(a);
        const double fd = (band.lambda1(a + delta) - band.lambda1(a - delta)) / (2.0 * delta);
        worst = std::max(worst, std::abs(hf - fd));
      }
    }
    out.push_back(bounded("Hellmann-Feynman vs central difference", worst, 1e-4));
  }
  {  // energy partition everywhere
    double worst = 0.0;
    for (int k : {1, 2, 4})
      for (double a : {0.0, 0.3, 0.9}) {
        const BandPoint bp = band_point(k, a);
        worst = std::max(worst,
                         std::abs(bp.kinetic_norm_sq + bp.potential_norm_sq - bp.lambda1));
      }
    out.push_back(bounded("energy partition kin+pot = lambda1", worst, 1e-6));
  }
  {  // identities at critical points
    const std::vector<int> ks =
        level == Level::Full ? std::vector<int>{1, 3, 5, 7, 9} : std::vector<int>{1, 3};
    double worst_crit = 0.0, worst_virial = 0.0, worst_ratio = 0.0, worst_bound = -1e300;
    bool sound = true;
    for (int k : ks) {
      const CriticalPointReport rep = find_minimum(k);
      const BandPoint bp = band_point(k, rep.alpha_min);
      worst_crit = std::max(worst_crit, std::abs(rep.alpha_min - bp.moment));
      worst_virial = std::max(worst_virial, std::abs(virial_check(k, rep.alpha_min)));
      worst_ratio = std::max(
          worst_ratio, std::abs(bp.kinetic_norm_sq / bp.potential_norm_sq - (k + 1)));
      const auto& cert = rep.certificate;
      if (cert.gap_value > 0.0 && !(cert.second_derivative_fd > 0.0)) sound = false;
      worst_bound =
          std::max(worst_bound, cert.second_derivative_lower - cert.second_derivative_fd);
    }
    out.push_back(bounded("critical identity |alpha_c - moment|", worst_crit, 1e-6));
    out.push_back(bounded("virial residual |pot - lambda1/(k+2)|", worst_virial, 1e-5));
    out.push_back(bounded("kinetic/potential ratio vs k+1", worst_ratio, 1e-4));
    out.push_back(CheckResult{"certificate soundness (gap>0 => fd2>0)", sound, sound ? 1.0 : 0.0,
                              1.0});
    out.push_back(bounded("second derivative >= certificate lower bound - 1e-3", worst_bound,
                          1e-3));
  }
  {  // quadratic oracle for the FD stencil
    const double fd = num::central_second_diff([](double a) { return a * a; }, 0.3, 1e-3);
    out.push_back(bounded("FD stencil on alpha^2 returns 2", std::abs(fd - 2.0), 1e-9));
  }
  return out;
}

inline std::vector<CheckResult> minimizer_suite(Level level) {
  using detail::bounded;
  std::vector<CheckResult> out;
  const std::vector<int> odd =
      level == Level::Full ? std::vector<int>{1, 3, 5, 7, 9} : std::vector<int>{1, 3};
  const std::vector<int> even =
      level == Level::Full ? std::vector<int>{2, 4, 6, 8, 10} : std::vector<int>{2};
  const int scan_n = level == Level::Full ? 400 : 100;

  double prev_alpha = 1e300;
  bool odd_ok = true, trend_ok = true, bracket_ok = true, minimality_ok = true;
  double alpha9 = 0.0;
  for (int k : odd) {
    const CriticalPointReport rep = find_minimum(k);
    const double a_star = bounds::alpha_star(k);
    const int changes = uniqueness_scan(k, {-0.25, a_star + 0.25}, scan_n);
    if (!(rep.alpha_min > 0.0) || changes != 1 || !(rep.certificate.gap_value > 0.0) ||
        !(rep.certificate.second_derivative_fd > 0.0))
      odd_ok = false;
    if (!(rep.alpha_min < prev_alpha)) trend_ok = false;
    prev_alpha = rep.alpha_min;
    if (!(rep.alpha_min <= a_star)) bracket_ok = false;
    spectra::detail::FrozenBand band(k, rep.alpha_min + 2e-3);
    const double l0 = band.lambda1(rep.alpha_min);
    if (!(band.lambda1(rep.alpha_min + 1e-3) > l0 && band.lambda1(rep.alpha_min - 1e-3) > l0))
      minimality_ok = false;
    if (k == 9) alpha9 = rep.alpha_min;
  }
  out.push_back(CheckResult{"odd k: alpha_min>0, one sign change, gap>0, fd2>0", odd_ok,
                            odd_ok ? 1.0 : 0.0, 1.0});
  out.push_back(CheckResult{"odd k: alpha_min strictly decreasing", trend_ok, trend_ok ? 1.0 : 0.0,
                            1.0});
  if (level == Level::Full)
    out.push_back(bounded("alpha_min(9) below 0.06", alpha9, 0.06));
  out.push_back(CheckResult{"odd k: alpha_min <= alpha_star", bracket_ok, bracket_ok ? 1.0 : 0.0,
                            1.0});
  out.push_back(CheckResult{"minimality: lambda1(alpha_min +- 1e-3) larger", minimality_ok,
                            minimality_ok ? 1.0 : 0.0, 1.0});

  bool even_ok = true;
  for (int k : even) {
    spectra::detail::FrozenBand band(k, 0.1);
    const double d0 = std::abs(band.slope(0.0));
    const double fd2 = second_derivative_fd(k, 0.0);
    if (d0 > 1e-6 || !(fd2 > 0.0)) even_ok = false;
  }
  out.push_back(CheckResult{"even k: derivative(0)=0 and second derivative>0", even_ok,
                            even_ok ? 1.0 : 0.0, 1.0});

  {  // large-alpha growth
    double worst_dev = 0.0;
    bool closer = true;
    for (int k : {1, 2, 3}) {
      const double r50 = large_alpha_asymptote_check(k, 50.0);
      worst_dev = std::max(worst_dev, std::abs(r50 - 1.0));
      if (level == Level::Full) {
        const double r200 = large_alpha_asymptote_check(k, 200.0);
        if (!(std::abs(r200 - 1.0) < std::abs(r50 - 1.0))) closer = false;
      }
    }
    out.push_back(bounded("large-alpha ratio at alpha=50 within (0.8,1.2)", worst_dev, 0.2));
    if (level == Level::Full)
      out.push_back(
          CheckResult{"large-alpha ratio closer to 1 at alpha=200", closer, closer ? 1.0 : 0.0, 1.0});
  }
  {  // negative-alpha barrier for odd k
    OperatorSpec s{1, -3.0, Boundary::WholeLine};
    const Grid g = choose_domain(s, spectra::detail::eigen_cap(1, -3.0, 1));
    const double l1 = lowest_eigenvalues(discretize(s, g), 1).eigenvalues[0];
    out.push_back(detail::exceeds("odd k, alpha=-3: lambda1 >= alpha^2", l1, 9.0));
  }
  return out;
}

inline std::vector<CheckResult> bounds_suite(Level level) {
  using detail::bounded;
  using detail::exceeds;
  using bounds::kPi;
  std::vector<CheckResult> out;
  {  // trig moment two-sided bound
    double worst = -1e300;
    for (double m : {1.0, 2.0, 5.5, 50.0}) {
      const double v = bounds::trig_moment(m);
      const double lo = -1.0 / (2.0 * m + 1.0);
      const double hi = lo + kPi * kPi / ((2 * m + 1) * (2 * m + 2) * (2 * m + 3));
      worst = std::max({worst, lo - v, v - hi, v});  // require lo<=v<=hi<=0-ish and v<=0
    }
    out.push_back(bounded("I(m) within its two-sided bound and <= 0", worst, 0.0));
  }
  {  // variational upper bound on a 5x5 panel
    double worst = -1e300;
    for (int k : {1, 2, 3, 4, 5})
      for (double a : {0.05, 0.35, 0.8, 1.2, 1.76}) {
        const BandPoint bp = band_point(k, a, std::nullopt, 1);
        const double trial = bounds::trial_energy(k, a, bounds::rho_star(k));
        const double ub = bounds::upper_bound(k, a);
        worst = std::max({worst, bp.lambda1 - trial, bp.lambda1 - ub});
      }
    out.push_back(bounded("lambda1 <= trial_energy and <= upper_bound (5x5 panel)", worst, 0.0));
  }
  {  // trial at rho_star below the simplified bound; rho_star minimizes it
    double worst = -1e300;
    bool minimal = true;
    for (int k : {1, 2, 3, 6, 9}) {
      const double rs = bounds::rho_star(k);
      const auto simplified = [k](double rho) {
        const double r2k2 = std::pow(rho, 2.0 * k + 2.0);
        return kPi * kPi * r2k2 /
                   ((k + 1.0) * (k + 1.0) * (2 * k + 3) * (2 * k + 4) * (2 * k + 5)) +
               kPi * kPi / (4.0 * rho * rho);
      };
      for (double a : {0.0, 0.4})
        worst = std::max(worst, bounds::trial_energy(k, a, rs) - (a * a + simplified(rs)));
      if (!(simplified(rs) <= simplified(0.9 * rs) && simplified(rs) <= simplified(1.1 * rs)))
        minimal = false;
    }
    out.push_back(bounded("trial_energy(rho*) <= simplified closed bound", worst, 0.0));
    out.push_back(CheckResult{"rho* minimizes the simplified bound", minimal, minimal ? 1.0 : 0.0,
                              1.0});
  }
  {  // alpha_star identities and caps
    double worst_id = 0.0;
    for (int k = 1; k <= 40; ++k)
      worst_id = std::max(worst_id, std::abs(bounds::alpha_star(k) * bounds::alpha_star(k) -
                                             bounds::upper_bound(k, 0.0)));
    out.push_back(bounded("alpha_star^2 = upper_bound(k,0)", worst_id, 1e-13));
    double worst_cap = 0.0;
    for (int k = 3; k <= 50; ++k)
      worst_cap = std::max(worst_cap, bounds::alpha_star(k) - 0.5 * kPi * std::sqrt(1.25));
    out.push_back(bounded("alpha_star(k) <= (pi/2) sqrt(5/4) for k>=3", worst_cap, 0.0));
    out.push_back(bounded("rho_star(200) in (1, 1.1)",
                          std::abs(bounds::rho_star(200) - 1.05), 0.05));
    out.push_back(bounded("upper_bound(k,0) -> pi^2/4",
                          std::abs(bounds::upper_bound(10000, 0.0) - kPi * kPi / 4.0), 0.01));
  }
  {  // split parameters: defining relation and matching conditions
    double worst = 0.0;
    for (int k : {3, 5, 9, 21, 41}) {
      const auto p = bounds::split_params_odd(k);
      worst = std::max(worst, std::abs(p.t_hat - std::pow((k + 1) * p.alpha_hat, 1.0 / (k + 1))));
      const auto [h1a, h2a] = bounds::h_split_spectra(k, bounds::SplitVariant::OddNeumann, 2);
      const auto [h1b, h2b] = bounds::h_split_spectra(k, bounds::SplitVariant::OddNeumann, 1);
      worst = std::max(worst, std::abs(h1a - h2b) / h1a);
    }
    for (int k : {2, 4, 6, 12}) {
      const auto p = bounds::split_params_even(k);
      worst = std::max(worst, std::abs(p.t_hat - std::pow((k + 1) * p.alpha_hat, 1.0 / (k + 1))));
      const auto [h1, h2] = bounds::h_split_spectra(k, bounds::SplitVariant::EvenDirichlet, 1);
      worst = std::max(worst, std::abs(h1 - h2) / h1);
    }
    out.push_back(bounded("split params: t_hat relation and eigenvalue matching", worst, 1e-12));
    double worst_mono = -1e300;
    double prev = 0.0;
    for (int k = 3; k <= 41; k += 2) {
      const auto p = bounds::split_params_odd(k);
      const double v = p.eps * p.alpha_hat;
      if (k > 3) worst_mono = std::max(worst_mono, prev - v);
      prev = v;
    }
    out.push_back(bounded("eps*alpha_hat increasing over odd k in [3,41]", worst_mono, 0.0));
  }
  {  // inequality chain from the splitting
    double worst_inone = -1e300, worst_intwo = -1e300, worst_even = -1e300;
    for (int k = 3; k <= 49; k += 2) {
      const auto p = bounds::split_params_odd(k);
      worst_inone = std::max(worst_inone, bounds::alpha_star(k) - p.eps * p.alpha_hat);
      const double lhs = (k + 2.0) / (k + 6.0) * bounds::split_lambda2_lower(k);
      worst_intwo = std::max(worst_intwo,
                             2.0 * bounds::alpha_star(k) * bounds::alpha_star(k) - lhs);
    }
    for (int k = 2; k <= 12; k += 2) {
      const double lhs = (k + 2.0) / (k + 6.0) * bounds::split_lambda2_lower(k);
      const double rhs = bounds::alpha_star(k) * bounds::alpha_star(k);
      worst_even = std::max(worst_even, rhs - lhs);
    }
    out.push_back(bounded("eps*alpha_hat >= alpha_star (odd k>=3)", worst_inone, 0.0));
    out.push_back(bounded("splitting bound >= 2 alpha_star^2 (odd k, = A1>=1)", worst_intwo, 0.0));
    out.push_back(bounded("even splitting bound >= alpha_star^2 (= A2>1)", worst_even, 0.0));
  }
  {  // A1 / A2 / B panels
    double worst_a1 = 1e300;
    for (int k = 3; k <= 49; k += 2) worst_a1 = std::min(worst_a1, bounds::a1(k));
    out.push_back(exceeds("A1(k) > 1 for odd k in [3,49]", worst_a1, 1.0));
    double worst_a1_est = -1e300;
    for (int k = 3; k <= 49; k += 2) {
      const double est = 2.0 * (k + 1) / (k + 6.0) *
                         std::pow(8.0 * (k + 1) * (k + 1) / (kPi * kPi * kPi * kPi),
                                  1.0 / (k + 2.0));
      worst_a1_est = std::max(worst_a1_est, est - bounds::a1(k));
    }
    out.push_back(bounded("A1(k) dominates its cubic-product estimate", worst_a1_est, 0.0));
    double worst_ab = -1e300;
    for (int k = 2; k <= 40; k += 2)
      worst_ab = std::max(worst_ab, bounds::b_lower(k) - bounds::a2(k));
    out.push_back(bounded("A2(k) > B(k) for even k in [2,40]", worst_ab, 0.0));
  }
  {  // m_k family
    double prev = 1e300;
    double worst_mono = -1e300;
    for (int k = 2; k <= 40; k += 2) {
      const double v = bounds::m_k(k);
      worst_mono = std::max(worst_mono, v - prev);
      prev = v;
    }
    out.push_back(bounded("m_k decreasing over even k in [2,40]", worst_mono, 0.0));
    out.push_back(bounded("m_2 = 3/4", std::abs(bounds::m_k(2) - 0.75), 1e-12));
    out.push_back(bounded("m_40 in (0.5, 0.55)", std::abs(bounds::m_k(40) - 0.525), 0.025));
  }
  {  // even-k harmonic lower bound vs the solver
    double worst = -1e300;
    for (int j = 1; j <= 3; ++j) {
      OperatorSpec s{2, 1.0, Boundary::WholeLine};
      const Grid g = choose_domain(s, spectra::detail::eigen_cap(2, 1.0));
      const auto eigs = lowest_eigenvalues(discretize(s, g), 3).eigenvalues;
      worst = std::max(worst, bounds::even_lower_eig(2, 1.0, j) - eigs[j - 1]);
    }
    out.push_back(bounded("even_lower_eig <= lambda_j (k=2, alpha=1)", worst, 0.0));
    out.push_back(bounded("alpha_star_star(40) bounded", bounds::alpha_star_star(40), 6.0));
    out.push_back(
        exceeds("alpha_star_star(2) positive", bounds::alpha_star_star(2), 0.0));
  }
  {  // comparison potential domination
    double worst = -1e300;
    for (int k : {3, 5}) {
      const auto p = bounds::split_params_odd(k);
      const double a = (k == 3 ? 0.5 : 0.9) * p.eps * p.alpha_hat;
      for (int i = 0; i <= 10000; ++i) {
        const double t = 3.0 * p.t_hat * i / 10000;
        const double diff = potential({k, a}, t) -
                            bounds::comparison_potential(k, a, p.eps, p.t_hat, t);
        worst = std::max(worst, -diff);
      }
    }
    out.push_back(bounded("comparison potential dominated pointwise", worst, 0.0));
  }
  {  // split harmonic wall vs the eigensolver (k=3)
    const auto p = bounds::split_params_odd(3);
    const double c = 2.0 * 3 * (1.0 - p.eps) / 4.0 * num::int_pow(p.t_hat, 6);
    auto eigs = detail::custom_eigs(Boundary::HalfLineNeumann, 0.0, 14.0, 13999,
                                    [c](double t) { return c * t * t; }, 3);
    double worst = 0.0;
    for (int j = 1; j <= 3; ++j) {
      const auto [h1, h2] = bounds::h_split_spectra(3, bounds::SplitVariant::OddNeumann, j);
      worst = std::max(worst, std::abs(eigs[j - 1] - h2) / h2);
    }
    out.push_back(bounded("discretized harmonic wall matches closed form (rel)", worst, 1e-6));
  }
  {  // half-line identities against the whole line
    double worst = 0.0;
    const std::vector<std::pair<int, double>> pts =
        level == Level::Full
            ? std::vector<std::pair<int, double>>{{1, 0.0}, {1, 0.35}, {3, 0.16}, {5, 0.1}}
            : std::vector<std::pair<int, double>>{{1, 0.35}};
    for (auto [k, a] : pts) {
      OperatorSpec w{k, a, Boundary::WholeLine};
      OperatorSpec nm{k, a, Boundary::HalfLineNeumann};
      const double cap = spectra::detail::eigen_cap(k, a);
      const auto we = lowest_eigenvalues(discretize(w, choose_domain(w, cap)), 3).eigenvalues;
      const auto ne = lowest_eigenvalues(discretize(nm, choose_domain(nm, cap)), 2).eigenvalues;
      worst = std::max(worst, std::abs(we[2] - ne[1]));
    }
    out.push_back(bounded("whole-line lambda3 = half-line Neumann lambda2 (odd k)", worst, 1e-6));
    // Dirichlet identity for even k with the symmetrized potential
    const int k = 2;
    const double a = 0.5;
    OperatorSpec tag{k, a, Boundary::WholeLine};
    const double cap = spectra::detail::eigen_cap(k, a);
    const Grid gw = choose_domain(OperatorSpec{1, a + 1.0, Boundary::WholeLine}, cap);
    const auto sym = assemble(tag, gw, [k, a](double t) {
      const double w = well_term(k, std::abs(t)) - a;
      return w * w;
    });
    const auto sym_eigs = lowest_eigenvalues(sym, 2).eigenvalues;
    OperatorSpec d{k, a, Boundary::HalfLineDirichlet};
    const auto de = lowest_eigenvalues(discretize(d, choose_domain(d, cap)), 1).eigenvalues;
    out.push_back(bounded("symmetrized whole-line lambda2 = Dirichlet half-line lambda1",
                          std::abs(sym_eigs[1] - de[0]), 1e-6));
  }
  {  // bound sandwich and Neumann lambda2 lower bound over [0, alpha_star]
    const std::vector<int> ks = level == Level::Full ? std::vector<int>{3, 5, 7, 9, 11, 13, 15}
                                                     : std::vector<int>{3, 7};
    double worst_gap = -1e300, worst_l2 = -1e300;
    for (int k : ks) {
      const double a_star = bounds::alpha_star(k);
      const double l2_bound = bounds::split_lambda2_lower(k);
      for (int i = 0; i < 9; ++i) {
        const double a = a_star * i / 8.0;
        const BandPoint bp = band_point(k, a);
        worst_gap = std::max(worst_gap, (k + 6.0) * bp.lambda1 - (k + 2.0) * bp.lambda3);
        OperatorSpec nm{k, a, Boundary::HalfLineNeumann};
        const auto ne =
            lowest_eigenvalues(discretize(nm, choose_domain(nm, spectra::detail::eigen_cap(k, a))), 2)
                .eigenvalues;
        worst_l2 = std::max(worst_l2, l2_bound - ne[1]);
      }
    }
    out.push_back(bounded("(k+2) lambda3 > (k+6) lambda1 on [0, alpha_star]", worst_gap, 0.0));
    out.push_back(bounded("half-line Neumann lambda2 >= splitting bound", worst_l2, 0.0));
  }
  return out;
}

inline std::vector<CheckResult> limit_model_suite(Level level) {
  using detail::bounded;
  std::vector<CheckResult> out;
  {  // f1 crosses zero exactly once between consecutive poles
    const double alpha = 0.7, eps = 0.1;
    const double shift = alpha * alpha * (1.0 - eps);
    bool ok = true;
    for (int m = 1; m <= 4; ++m) {
      const double lo = shift + std::pow((2 * m - 1) * bounds::kPi / 4.0, 2) + 1e-6;
      const double hi = shift + std::pow((2 * m + 1) * bounds::kPi / 4.0, 2) - 1e-6;
      int changes = 0;
      double prev = f1(lo, alpha, eps);
      for (int i = 1; i <= 400; ++i) {
        const double lam = lo + (hi - lo) * i / 400;
        const double v = f1(lam, alpha, eps);
        if ((prev < 0) != (v < 0)) ++changes;
        prev = v;
      }
      if (changes != 1) ok = false;
    }
    out.push_back(CheckResult{"f1 crosses zero once per pole interval", ok, ok ? 1.0 : 0.0, 1.0});
  }
  {  // f2 negative up to its pole
    const double eps = 0.1;
    double worst = -1e300;
    for (int i = 1; i <= 300; ++i) {
      const double lam = std::pow(bounds::kPi / (4.0 * eps), 2) * i / 301.0;
      worst = std::max(worst, f2(lam, eps));
    }
    out.push_back(bounded("f2 negative below its pole", worst, 0.0));
  }
  {  // reduced vs full residual roots at large k
    const int k = 150;
    const double eps = 0.1, alpha = 0.5;
    const GlueSystem sys = GlueSystem::make(k, alpha, eps);
    const double budget = (k + 1) * std::pow(1.0 + eps, -(k + 1.0)) * 100.0;
    double worst = 0.0;
    for (int j = 1; j <= 2; ++j) {
      const double red = solve_reduced(j, alpha, eps, k);
      const double full = num::bisect_root(
          [&](double lam) { return glue_residual(lam, sys); }, red - 0.02, red + 0.02, 1e-14);
      worst = std::max(worst, std::abs(red - full));
    }
    out.push_back(bounded("reduced vs full gluing roots (k=150)", worst, budget));
  }
  {  // piecewise domination: smallest even k at fixed eps
    const double eps = 0.1, alpha = 0.5;
    int found = -1;
    for (int k = 2; k <= 60 && found < 0; k += 2) {
      const GlueSystem sys = GlueSystem::make(k, alpha, eps);
      bool dominated = true;
      for (int i = 0; i <= 4000 && dominated; ++i) {
        const double t = -3.0 + 6.0 * i / 4000;
        if (potential({k, alpha}, t) < sys.potential_at(t) - 1e-12) dominated = false;
      }
      if (dominated) found = k;
    }
    out.push_back(CheckResult{"piecewise potential dominated for some even k <= 40",
                              found > 0 && found <= 40, static_cast<double>(found), 40.0});
  }
  {  // monotone approach of lambda1 to alpha^2 + (pi/2)^2
    const auto lam1 = [](int k, double a) {
      OperatorSpec s{k, a, Boundary::WholeLine};
      const Grid g = choose_domain(s, spectra::detail::eigen_cap(k, a, 1),
                                   spectra::detail::band_h_max(k));
      return lowest_eigenvalues(discretize(s, g), 1).eigenvalues[0];
    };
    const std::vector<double> alphas =
        level == Level::Full ? std::vector<double>{0.0, 0.5, 1.0} : std::vector<double>{0.0, 0.5};
    bool ok = true;
    for (bool odd : {false, true}) {
      const int klo = odd ? 21 : 20, khi = odd ? 41 : 40;
      double devlo = 0.0, devhi = 0.0;
      for (double a : alphas) {
        devlo = std::max(devlo, std::abs(lam1(klo, a) - limit_eigenvalue(1, a)));
        devhi = std::max(devhi, std::abs(lam1(khi, a) - limit_eigenvalue(1, a)));
      }
      if (!(devhi < devlo)) ok = false;
    }
    out.push_back(CheckResult{"lambda1 closer to the limit at k=40/41 than k=20/21", ok,
                              ok ? 1.0 : 0.0, 1.0});
  }
  {  // reduced roots: 5 eps bound and ordering
    double worst = -1e300;
    for (double eps : {0.1, 0.05, 0.025}) {
      const double r = solve_reduced(1, 0.0, eps, 100);
      worst = std::max(worst, std::abs(r - limit_eigenvalue(1, 0.0)) - 5.0 * eps);
    }
    out.push_back(bounded("solve_reduced(1,0,eps) within 5 eps of pi^2/4", worst, 0.0));
  }
  return out;
}

inline std::vector<CheckResult> run_all(Level level) {
  std::vector<CheckResult> all;
  for (auto* suite : {&operator_model_suite, &eigensolver_suite, &spectral_calculus_suite,
                      &minimizer_suite, &bounds_suite, &limit_model_suite}) {
    auto part = (*suite)(level);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

}  // namespace spectra::verify
