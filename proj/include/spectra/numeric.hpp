#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace spectra::num {

/// t^n for integer n >= 0 by repeated squaring. Keeps the sign of negative
/// bases exact, unlike std::pow, so parity checks hold bitwise.
inline double int_pow(double t, unsigned n) {
  double result = 1.0;
  double base = t;
  while (n != 0u) {
    if (n & 1u) result *= base;
    base *= base;
    n >>= 1u;
  }
  return result;
}

inline int sign(double x) { return (x > 0.0) - (x < 0.0); }

/// Bisection for a root of f inside [lo, hi]. f(lo) and f(hi) must have
/// opposite signs. Converges to |hi-lo| <= tol*max(1,|lo|,|hi|).
template <class F>
double bisect_root(F&& f, double lo, double hi, double rel_tol = 1e-12, int max_iter = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw std::invalid_argument("bisect_root: endpoints do not bracket a sign change");
  for (int it = 0; it < max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double tol = rel_tol * std::max({1.0, std::abs(lo), std::abs(hi)});
    if (hi - lo <= tol || mid == lo || mid == hi) return mid;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Golden-section minimization of a unimodal f on [a, b]. Returns the final
/// bracket (width <= tol).
template <class F>
std::pair<double, double> golden_min(F&& f, double a, double b, double tol) {
  constexpr double inv_phi = 0.6180339887498949;   // 1/phi
  constexpr double inv_phi2 = 0.3819660112501051;  // 1/phi^2
  double x1 = a + inv_phi2 * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = a + inv_phi2 * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  return {a, b};
}

namespace detail {
template <class F>
double adaptive_simpson_rec(F& f, double a, double b, double fa, double fm, double fb, double whole,
                            double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
template <class F>
double integrate(F&& f, double a, double b, double tol = 1e-12) {
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

/// Centered second difference (f(x+h) - 2 f(x) + f(x-h)) / h^2.
template <class F>
double central_second_diff(F&& f, double x, double step) {
  return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step);
}

}  // namespace spectra::num
