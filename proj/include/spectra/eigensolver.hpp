#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "spectra/numeric.hpp"
#include "spectra/operator_model.hpp"

namespace spectra {

struct solver_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Uniform grid on (left, right) with n interior points, h = (right-left)/(n+1).
struct Grid {
  double left = 0.0;
  double right = 1.0;
  int n = 3;
  double h = 0.25;
};

inline Grid make_grid(double left, double right, int n) {
  if (!(left < right)) throw std::invalid_argument("Grid: left must be < right");
  if (n < 3) throw std::invalid_argument("Grid: n must be >= 3");
  return Grid{left, right, n, (right - left) / (n + 1)};
}

/// Symmetric tridiagonal discretization of -d^2/dt^2 + V(t) on a grid.
/// The potential callable is retained so the problem can be re-assembled on
/// refined grids for Richardson extrapolation.
struct DiscretizedProblem {
  OperatorSpec spec;
  Grid grid;
  std::vector<double> nodes;
  std::vector<double> diag;
  std::vector<double> offdiag;  // n-1 entries, all -1/h^2
  std::function<double(double)> potential_fn;
};

struct Eigenpair {
  double lambda = 0.0;
  std::vector<double> u;
  double norm_weight = 0.0;  // quadrature weight, = h
};

struct Spectrum {
  std::vector<double> eigenvalues;
  double error_estimate = 0.0;
  Grid grid_used;
};

namespace tridiag {

/// Number of eigenvalues of the symmetric tridiagonal matrix strictly below x,
/// by the Sturm sequence of LDL^T pivots.
inline int count_below(const std::vector<double>& d, const std::vector<double>& e, double x) {
  const std::size_t n = d.size();
  double max_e2 = 1.0;
  for (double v : e) max_e2 = std::max(max_e2, v * v);
  const double pivmin = std::numeric_limits<double>::min() * max_e2;
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e2 = (i == 0) ? 0.0 : e[i - 1] * e[i - 1];
    q = d[i] - x - e2 / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

/// The m lowest eigenvalues by bisection on the Sturm count, each to relative
/// tolerance rel_tol.
inline std::vector<double> lowest(const std::vector<double>& d, const std::vector<double>& e, int m,
                                  double rel_tol = 1e-12) {
  const int n = static_cast<int>(d.size());
  if (m < 1 || m > n) throw std::invalid_argument("tridiag::lowest: need 1 <= m <= n");
  // Gerschgorin bounds
  double glo = std::numeric_limits<double>::infinity();
  double ghi = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i + 1 < n ? std::abs(e[i]) : 0.0);
    glo = std::min(glo, d[i] - r);
    ghi = std::max(ghi, d[i] + r);
  }
  if (count_below(d, e, ghi) < m)
    throw solver_error("tridiag::lowest: bisection bracket failure (matrix assembly bug?)");
  std::vector<double> out(m);
  for (int j = 1; j <= m; ++j) {
    double lo = glo, hi = ghi;
    for (int it = 0; it < 240; ++it) {
      const double tol = rel_tol * std::max({1.0, std::abs(lo), std::abs(hi)});
      if (hi - lo <= tol) break;
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      if (count_below(d, e, mid) >= j)
        hi = mid;
      else
        lo = mid;
    }
    out[j - 1] = 0.5 * (lo + hi);
  }
  return out;
}

/// Solve (T - sigma I) x = b where T is symmetric tridiagonal and T - sigma I
/// is positive definite, via LDL^T. Overwrites x.
inline void shifted_solve(const std::vector<double>& d, const std::vector<double>& e, double sigma,
                          const std::vector<double>& b, std::vector<double>& x,
                          std::vector<double>& dfac, std::vector<double>& lfac) {
  const std::size_t n = d.size();
  dfac.resize(n);
  lfac.resize(n > 0 ? n - 1 : 0);
  dfac[0] = d[0] - sigma;
  if (!(dfac[0] > 0.0)) throw solver_error("shifted_solve: factorization not positive definite");
  for (std::size_t i = 1; i < n; ++i) {
    lfac[i - 1] = e[i - 1] / dfac[i - 1];
    dfac[i] = d[i] - sigma - lfac[i - 1] * e[i - 1];
    if (!(dfac[i] > 0.0)) throw solver_error("shifted_solve: factorization not positive definite");
  }
  x = b;
  for (std::size_t i = 1; i < n; ++i) x[i] -= lfac[i - 1] * x[i - 1];
  for (std::size_t i = 0; i < n; ++i) x[i] /= dfac[i];
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= lfac[i] * x[i + 1];
}

}  // namespace tridiag

namespace detail {

/// Smallest |t| on the given side (sign = +1/-1) at which the potential
/// reaches `threshold`, searching beyond the potential well on that side.
inline double potential_reach(const OperatorSpec& spec, int side, double threshold) {
  const auto v = [&](double s) { return potential(spec, side * s); };
  // position of the well (V = 0) on this side, if any
  double well = 0.0;
  if (spec.alpha > 0.0) {
    const double that = well_center(spec);
    if (spec.k % 2 == 1)  // even power k+1: wells at both +that and -that
      well = that;
    else
      well = (side > 0) ? that : 0.0;
  } else if (spec.alpha < 0.0 && spec.k % 2 == 0) {
    // even k: well at -|t_hat| on the negative side
    const double that = std::pow(-(spec.k + 1) * spec.alpha, 1.0 / (spec.k + 1));
    well = (side < 0) ? that : 0.0;
  }
  double hi = std::max(1.0, well + 1.0);
  int guard = 0;
  while (v(hi) < threshold) {
    hi *= 2.0;
    if (++guard > 200) throw solver_error("potential_reach: threshold never attained");
  }
  if (v(well) >= threshold) return well;
  return num::bisect_root([&](double s) { return v(s) - threshold; }, well, hi, 1e-12);
}

inline double default_h_max(const OperatorSpec& spec) {
  double h = spec.k >= 20 ? 5e-4 : 2e-3;
  if (spec.alpha > 0.0) {
    const double that = well_center(spec);
    if (that > 0.0) h = std::min(h, that / 500.0);
  }
  return h;
}

}  // namespace detail

/// Truncated computational domain for the given operator: endpoints where the
/// potential exceeds lambda_cap + 25, padded by 20% in length. Half-line
/// variants keep left = 0.
inline Grid choose_domain(const OperatorSpec& spec, double lambda_cap, double h_max = 0.0) {
  validate(spec);
  if (!(lambda_cap > 0.0)) throw std::invalid_argument("choose_domain: lambda_cap must be > 0");
  if (h_max <= 0.0) h_max = detail::default_h_max(spec);
  const double threshold = lambda_cap + 25.0;
  const double reach_right = detail::potential_reach(spec, +1, threshold);
  if (spec.boundary == Boundary::WholeLine) {
    // odd n with a node at t = 0: domain doubling then only adds far nodes,
    // keeping the sampled lattice (and the h^2 error coefficient) fixed
    const double reach_left = detail::potential_reach(spec, -1, threshold);
    const double ext = 1.2 * std::max(reach_left, reach_right);
    const int half = std::max(2, static_cast<int>(std::ceil(ext / h_max)));
    return make_grid(-ext, ext, 2 * half - 1);
  }
  const double right = 1.2 * reach_right;
  const int n = std::max(3, static_cast<int>(std::ceil(right / h_max)) - 1);
  return make_grid(0.0, right, n);
}

/// Assemble the symmetric tridiagonal matrix for -u'' + V u on the grid.
///
/// Node placement and boundary rows:
///   WholeLine / HalfLineDirichlet: nodes t_i = left + i h, Dirichlet value 0
///     implied at both domain ends (far truncation error is exponentially
///     small because V >= cap + 25 there).
///   HalfLineNeumann: nodes staggered half a step, t_i = left + (i-1/2) h,
///     with the mirror condition u(-h/2) = u(h/2) folded into the first row:
///     diag[0] = 1/h^2 + V(t_1). This keeps the matrix symmetric and the
///     scheme second order in h.
template <class V>
DiscretizedProblem assemble(const OperatorSpec& spec, const Grid& grid, V&& potential_fn) {
  const int n = grid.n;
  const double h = grid.h;
  const double inv_h2 = 1.0 / (h * h);
  DiscretizedProblem p;
  p.spec = spec;
  p.grid = grid;
  p.nodes.resize(n);
  p.diag.resize(n);
  p.offdiag.assign(n - 1, -inv_h2);
  const bool staggered = spec.boundary == Boundary::HalfLineNeumann;
  const double offset = staggered ? 0.5 : 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = grid.left + (i + 1 - offset) * h;
    p.nodes[i] = t;
    p.diag[i] = 2.0 * inv_h2 + potential_fn(t);
  }
  if (staggered) p.diag[0] = inv_h2 + potential_fn(p.nodes[0]);
  p.potential_fn = std::forward<V>(potential_fn);
  return p;
}

/// Discretize the model operator on the grid.
inline DiscretizedProblem discretize(const OperatorSpec& spec, const Grid& grid) {
  validate(spec);
  OperatorSpec s = spec;
  return assemble(s, grid, [s](double t) { return potential(s, t); });
}

/// Same grid and boundary treatment, half the spacing (n -> 2n+1).
inline DiscretizedProblem refine(const DiscretizedProblem& p) {
  Grid fine = make_grid(p.grid.left, p.grid.right, 2 * p.grid.n + 1);
  return assemble(p.spec, fine, p.potential_fn);
}

/// The m lowest eigenvalues, Richardson-extrapolated from the problem's grid
/// and its half-spacing refinement: lambda = (4 lambda_{h/2} - lambda_h) / 3.
/// error_estimate = max_j |lambda_{h/2,j} - lambda_{h,j}| / 3.
inline Spectrum lowest_eigenvalues(const DiscretizedProblem& problem, int m) {
  if (m < 1 || m > problem.grid.n)
    throw std::invalid_argument("lowest_eigenvalues: need 1 <= m <= n");
  const std::vector<double> coarse = tridiag::lowest(problem.diag, problem.offdiag, m);
  const DiscretizedProblem fineProblem = refine(problem);
  const std::vector<double> fine = tridiag::lowest(fineProblem.diag, fineProblem.offdiag, m);
  Spectrum s;
  s.grid_used = problem.grid;
  s.eigenvalues.resize(m);
  for (int j = 0; j < m; ++j) {
    s.eigenvalues[j] = (4.0 * fine[j] - coarse[j]) / 3.0;
    s.error_estimate = std::max(s.error_estimate, std::abs(fine[j] - coarse[j]) / 3.0);
  }
  return s;
}

/// Ground-state eigenpair of the discretized matrix by inverse iteration with
/// shift lambda_1 - eps. Normalized so that sum u_i^2 h = 1 and u > 0.
inline Eigenpair ground_state(const DiscretizedProblem& problem) {
  const int n = problem.grid.n;
  const double h = problem.grid.h;
  const double lambda1 = tridiag::lowest(problem.diag, problem.offdiag, 1)[0];
  double eps_shift = 1e-8 * std::max(1.0, std::abs(lambda1));
  std::vector<double> x(n, 1.0 / std::sqrt(n * h)), next, dfac, lfac;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const double sigma = lambda1 - eps_shift;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      tridiag::shifted_solve(problem.diag, problem.offdiag, sigma, x, next, dfac, lfac);
      double norm2 = 0.0;
      for (double v : next) norm2 += v * v;
      const double scale = 1.0 / std::sqrt(norm2 * h);
      double delta = 0.0;
      for (int i = 0; i < n; ++i) {
        next[i] *= scale;
        delta = std::max(delta, std::abs(next[i] - x[i]));
      }
      std::swap(x, next);
      if (delta < 1e-13) {
        converged = true;
        break;
      }
    }
    double mx = 0.0;
    for (double v : x) mx = std::max(mx, std::abs(v));
    double mn = mx;
    for (double& v : x) {
      if (std::abs(v) == mx && v < 0.0) {  // fix overall sign by the peak value
        for (double& w : x) w = -w;
        break;
      }
    }
    for (double v : x) mn = std::min(mn, v);
    if (converged && mn > 0.0) {
      Eigenpair pair;
      pair.lambda = lambda1;
      pair.u = x;
      pair.norm_weight = h;
      return pair;
    }
    eps_shift *= 10.0;  // degenerate shift; retry jittered
  }
  throw solver_error("ground_state: inverse iteration failed to converge to a positive vector");
}

/// Discrete L2(weight h) quantities of an eigenpair on its grid.
inline double grid_norm_sq(const Eigenpair& p) {
  double s = 0.0;
  for (double v : p.u) s += v * v;
  return s * p.norm_weight;
}

}  // namespace spectra
