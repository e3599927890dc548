#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "spectra/numeric.hpp"
#include "spectra/operator_model.hpp"

namespace spectra::bounds {

inline constexpr double kPi = std::numbers::pi;

/// I(m) = int_0^1 s^{2m} cos(pi s) ds, by adaptive quadrature. Always <= 0,
/// with -1/(2m+1) <= I(m) <= -1/(2m+1) + pi^2/((2m+1)(2m+2)(2m+3)).
inline double trig_moment(double m) {
  if (m < 0.0) throw std::invalid_argument("trig_moment: m must be >= 0");
  return num::integrate([m](double s) { return std::pow(s, 2.0 * m) * std::cos(kPi * s); }, 0.0,
                        1.0, 1e-14);
}

/// Rayleigh quotient of the scaled cosine trial function. For even k the
/// alpha-linear term vanishes by parity.
inline double trial_energy(int k, double alpha, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("trial_energy: rho must be > 0");
  const double kp1 = k + 1;
  const double rho_k1 = std::pow(rho, kp1);
  double value = alpha * alpha;
  if (k % 2 == 1)
    value -= 2.0 * alpha * rho_k1 / kp1 * (1.0 / (k + 2) + trig_moment(0.5 * kp1));
  value += rho_k1 * rho_k1 / (kp1 * kp1) * (1.0 / (2 * k + 3) + trig_moment(kp1));
  value += kPi * kPi / (4.0 * rho * rho);
  return value;
}

/// log of (1/4)(k+1)(2k+3)(2k+4)(2k+5); the fractional powers of this product
/// are taken in the log domain to avoid overflow at large k.
inline double log_quartic_product(int k) {
  return std::log(0.25) + std::log(k + 1.0) + std::log(2.0 * k + 3.0) + std::log(2.0 * k + 4.0) +
         std::log(2.0 * k + 5.0);
}

/// rho minimizing the simplified trial bound:
/// [(1/4)(k+1)(2k+3)(2k+4)(2k+5)]^{1/(2k+4)}.
inline double rho_star(int k) {
  if (k < 1) throw std::invalid_argument("rho_star: k must be >= 1");
  return std::exp(log_quartic_product(k) / (2.0 * k + 4.0));
}

/// Closed-form upper bound for the lowest eigenvalue:
/// alpha^2 + (pi^2/4)((k+2)/(k+1)) [(1/4)(k+1)(2k+3)(2k+4)(2k+5)]^{-1/(k+2)}.
inline double upper_bound(int k, double alpha) {
  if (k < 1) throw std::invalid_argument("upper_bound: k must be >= 1");
  const double tail = std::exp(-log_quartic_product(k) / (k + 2.0));
  return alpha * alpha + 0.25 * kPi * kPi * (k + 2.0) / (k + 1.0) * tail;
}

/// alpha_star, the square root of the alpha-independent part of upper_bound;
/// for odd k the band minimum lies in [0, alpha_star].
inline double alpha_star(int k) {
  if (k < 1) throw std::invalid_argument("alpha_star: k must be >= 1");
  return 0.5 * kPi * std::sqrt((k + 2.0) / (k + 1.0)) *
         std::exp(-log_quartic_product(k) / (2.0 * k + 4.0));
}

struct SplitParams {
  double eps = 0.0;
  double t_hat = 0.0;
  double alpha_hat = 0.0;
};

/// Splitting constants for odd k >= 3:
/// eps = 1 - 2/(k(k+1)), t_hat = [pi^2 (k+1)/2]^{1/(k+2)},
/// alpha_hat = (pi^2/2) [2/(pi^2 (k+1))]^{1/(k+2)}.
inline SplitParams split_params_odd(int k) {
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("split_params_odd: k must be odd >= 3");
  SplitParams p;
  p.eps = 1.0 - 2.0 / (static_cast<double>(k) * (k + 1));
  const double base = 0.5 * kPi * kPi * (k + 1);
  p.t_hat = std::pow(base, 1.0 / (k + 2));
  p.alpha_hat = 0.5 * kPi * kPi * std::pow(1.0 / base, 1.0 / (k + 2));
  return p;
}

/// Splitting constants for even k >= 2: eps = 1/(2k),
/// t_hat = [pi^4 (k+1)/(32 k (1-eps))]^{1/(2(k+2))},
/// alpha_hat = t_hat^{k+1}/(k+1).
inline SplitParams split_params_even(int k) {
  if (k < 2 || k % 2 == 1) throw std::invalid_argument("split_params_even: k must be even >= 2");
  SplitParams p;
  p.eps = 1.0 / (2.0 * k);
  const double base = kPi * kPi * kPi * kPi * (k + 1) / (32.0 * k * (1.0 - p.eps));
  p.t_hat = std::pow(base, 0.5 / (k + 2));
  p.alpha_hat = std::pow(base, 0.5 * (k + 1) / (k + 2)) / (k + 1);
  return p;
}

/// The comparison potential dominated by (t^{k+1}/(k+1) - alpha)^2 on the
/// half line when 0 < alpha < eps * alpha_hat: zero up to t_hat, then a
/// harmonic wall (2k(1-eps)/(k+1)) t_hat^{2k} (t - t_hat)^2.
inline double comparison_potential(int k, double alpha, double eps, double t_hat, double t) {
  const double alpha_hat = num::int_pow(t_hat, static_cast<unsigned>(k + 1)) / (k + 1);
  if (!(alpha > 0.0) || !(alpha < eps * alpha_hat))
    throw std::invalid_argument("comparison_potential: need 0 < alpha < eps*alpha_hat");
  if (t <= t_hat) return 0.0;
  const double c = 2.0 * k * (1.0 - eps) / (k + 1) * num::int_pow(t_hat, static_cast<unsigned>(2 * k));
  return c * (t - t_hat) * (t - t_hat);
}

enum class SplitVariant { OddNeumann, EvenDirichlet };

/// Closed-form j-th eigenvalues of the two split operators: the free part on
/// (0, t_hat) and the half-line harmonic wall beyond it.
inline std::pair<double, double> h_split_spectra(int k, SplitVariant variant, int j) {
  if (j < 1) throw std::invalid_argument("h_split_spectra: j must be >= 1");
  const SplitParams p =
      (variant == SplitVariant::OddNeumann) ? split_params_odd(k) : split_params_even(k);
  double h1;
  if (variant == SplitVariant::OddNeumann) {
    const double w = (j - 1) * kPi / p.t_hat;  // Neumann-Neumann box
    h1 = w * w;
  } else {
    const double w = (2 * j - 1) * kPi / (2.0 * p.t_hat);  // Dirichlet-Neumann box
    h1 = w * w;
  }
  const double c = 2.0 * k * (1.0 - p.eps) / (k + 1);
  const double h2 = std::sqrt(c) * std::pow(p.t_hat, static_cast<double>(k)) * (4 * j - 3);
  return {h1, h2};
}

/// A1(k) = (2(k+1)/(k+6)) [(2k+3)(2k+4)(2k+5)/(pi^4 (k+1))]^{1/(k+2)}.
inline double a1(int k) {
  if (k < 1) throw std::invalid_argument("a1: k must be >= 1");
  const double lg = std::log(2.0 * k + 3.0) + std::log(2.0 * k + 4.0) + std::log(2.0 * k + 5.0) -
                    4.0 * std::log(kPi) - std::log(k + 1.0);
  return 2.0 * (k + 1.0) / (k + 6.0) * std::exp(lg / (k + 2.0));
}

/// A2(k) = ((k+1)/(k+6)) [(8/pi^4)(k-1/2)(2k+3)(2k+4)(2k+5)]^{1/(k+2)}.
inline double a2(int k) {
  if (k < 2 || k % 2 == 1) throw std::invalid_argument("a2: k must be even >= 2");
  const double lg = std::log(8.0) - 4.0 * std::log(kPi) + std::log(k - 0.5) +
                    std::log(2.0 * k + 3.0) + std::log(2.0 * k + 4.0) + std::log(2.0 * k + 5.0);
  return (k + 1.0) / (k + 6.0) * std::exp(lg / (k + 2.0));
}

/// B(k) = ((k+1)/(k+6)) [(128/pi^4)(k+1)^3]^{1/(k+2)}, a lower bound for A2.
inline double b_lower(int k) {
  if (k < 2) throw std::invalid_argument("b_lower: k must be >= 2");
  const double lg = std::log(128.0) - 4.0 * std::log(kPi) + 3.0 * std::log(k + 1.0);
  return (k + 1.0) / (k + 6.0) * std::exp(lg / (k + 2.0));
}

/// m_k = inf_t (t^{k+1} - 1)/(t - 1) = inf_t sum_{j=0..k} t^j for even k,
/// located through the unique stationary point of the sum in (-1, 0).
inline double m_k(int k) {
  if (k < 2 || k % 2 == 1) throw std::invalid_argument("m_k: k must be even >= 2");
  const auto geom_sum = [k](double t) {
    double s = 1.0, p = 1.0;
    for (int j = 1; j <= k; ++j) {
      p *= t;
      s += p;
    }
    return s;
  };
  const auto dsum = [k](double t) {
    double s = 0.0, p = 1.0;
    for (int j = 1; j <= k; ++j) {
      s += j * p;
      p *= t;
    }
    return s;
  };
  const double root = num::bisect_root(dsum, -1.0 + 1e-9, -1e-9, 1e-14);
  return geom_sum(root);
}

/// Harmonic-oscillator lower bound for even k:
/// m_k alpha^{k/(k+1)} (k+1)^{-1/(k+1)} (2j-1) <= lambda_j.
inline double even_lower_eig(int k, double alpha, int j) {
  if (k < 2 || k % 2 == 1) throw std::invalid_argument("even_lower_eig: k must be even >= 2");
  if (!(alpha > 0.0)) throw std::invalid_argument("even_lower_eig: alpha must be > 0");
  if (j < 1) throw std::invalid_argument("even_lower_eig: j must be >= 1");
  return m_k(k) * std::pow(alpha, k / (k + 1.0)) * std::pow(k + 1.0, -1.0 / (k + 1.0)) *
         (2 * j - 1);
}

/// alpha_star_star(k) = [ (k+1)^{1/(k+1)} / m_k * upper_bound(k, 0) ]^{(k+1)/k};
/// outside [-alpha_star_star, alpha_star_star] the even-k lower bound exceeds
/// the minimum of the band function.
inline double alpha_star_star(int k) {
  if (k < 2 || k % 2 == 1) throw std::invalid_argument("alpha_star_star: k must be even >= 2");
  const double inner = std::pow(k + 1.0, 1.0 / (k + 1.0)) / m_k(k) * upper_bound(k, 0.0);
  return std::pow(inner, (k + 1.0) / k);
}

/// Lower bound for the second Neumann (odd k) / Dirichlet-split (even k)
/// eigenvalue coming from the operator splitting.
inline double split_lambda2_lower(int k) {
  if (k % 2 == 1) {
    if (k < 3) throw std::invalid_argument("split_lambda2_lower: odd k must be >= 3");
    const double inner = 2.0 / (kPi * kPi * (k + 1));
    return kPi * kPi * std::pow(inner, 2.0 / (k + 2.0));
  }
  const double inner = 32.0 * (k - 0.5) / (kPi * kPi * kPi * kPi * (k + 1));
  return 0.25 * kPi * kPi * std::pow(inner, 1.0 / (k + 2.0));
}

/// Every closed-form quantity for one k. Fields that only exist for one
/// parity are left empty for the other.
struct BoundsReport {
  int k = 1;
  double upper_const = 0.0;  // upper_at(alpha) = alpha^2 + upper_const
  double alpha_star = 0.0;
  double rho_star = 0.0;
  std::optional<double> eps, t_hat, alpha_hat;
  std::optional<double> a1;
  std::optional<double> a2, b_lower, m_k, alpha_star_star;
  std::optional<double> lambda2_split_lower;
};

inline BoundsReport make_bounds_report(int k) {
  BoundsReport r;
  r.k = k;
  r.upper_const = upper_bound(k, 0.0);
  r.alpha_star = alpha_star(k);
  r.rho_star = rho_star(k);
  if (k % 2 == 1) {
    if (k >= 3) {
      const SplitParams p = split_params_odd(k);
      r.eps = p.eps;
      r.t_hat = p.t_hat;
      r.alpha_hat = p.alpha_hat;
      r.a1 = a1(k);
      r.lambda2_split_lower = split_lambda2_lower(k);
    }
  } else {
    const SplitParams p = split_params_even(k);
    r.eps = p.eps;
    r.t_hat = p.t_hat;
    r.alpha_hat = p.alpha_hat;
    r.a2 = a2(k);
    r.b_lower = b_lower(k);
    r.m_k = m_k(k);
    r.alpha_star_star = alpha_star_star(k);
    r.lambda2_split_lower = split_lambda2_lower(k);
  }
  return r;
}

}  // namespace spectra::bounds
