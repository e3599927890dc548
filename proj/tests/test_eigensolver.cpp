#include "spectra/eigensolver.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "spectra/spectral_calculus.hpp"
#include "spectra/verify.hpp"

namespace {

using spectra::Boundary;
using spectra::DiscretizedProblem;
using spectra::Grid;
using spectra::OperatorSpec;

constexpr double kPi = std::numbers::pi;

std::vector<double> eigs(Boundary b, double left, double right, int n, double (*V)(double),
                         int m) {
  OperatorSpec tag{1, 0.0, b};
  const DiscretizedProblem p = spectra::assemble(tag, spectra::make_grid(left, right, n), V);
  return spectra::lowest_eigenvalues(p, m).eigenvalues;
}

TEST(ChooseDomain, PinnedExample) {
  // smallest L with (L^2/2)^2 >= 35 is (2 sqrt(35))^{1/2}, padded by 20%
  const Grid g = spectra::choose_domain({1, 0.0, Boundary::WholeLine}, 10.0);
  const double expected = 1.2 * std::sqrt(2.0 * std::sqrt(35.0));
  EXPECT_NEAR(g.right, expected, 1e-6);
  EXPECT_EQ(g.left, -g.right);
}

TEST(ChooseDomain, HalfLineStartsAtZero) {
  const Grid g = spectra::choose_domain({3, 0.0, Boundary::HalfLineNeumann}, 10.0);
  EXPECT_EQ(g.left, 0.0);
  EXPECT_GT(g.right, 0.0);
}

TEST(ChooseDomain, EndpointAboveThreshold) {
  for (double alpha : {0.0, 0.35, 2.0, -1.0}) {
    const OperatorSpec s{3, alpha, Boundary::WholeLine};
    const Grid g = spectra::choose_domain(s, 8.0);
    // the unpadded endpoint satisfied V >= cap + 25; with padding strictly more
    EXPECT_GE(spectra::potential(s, g.right), 33.0);
    EXPECT_GE(spectra::potential(s, g.left), 33.0);
  }
}

TEST(Discretize, FreeParticleBoxes) {
  // Dirichlet-Dirichlet on (0,1): (j pi)^2
  auto dd = eigs(Boundary::WholeLine, 0.0, 1.0, 1999, [](double) { return 0.0; }, 3);
  for (int j = 1; j <= 3; ++j) EXPECT_NEAR(dd[j - 1], j * j * kPi * kPi, 1e-6);
  // Neumann-Dirichlet on (0,1): ((2j-1) pi/2)^2. The staggered wall sits half
  // a cell past the last node, so it lands on 1 when right = 1 + h/2; compare
  // raw eigenvalues on that wall-matched grid (Richardson would move the wall).
  const int n = 20000;
  OperatorSpec tag{1, 0.0, Boundary::HalfLineNeumann};
  const Grid g = spectra::make_grid(0.0, 1.0 + 1.0 / (2 * n + 1), n);
  const DiscretizedProblem p = spectra::assemble(tag, g, [](double) { return 0.0; });
  const auto nd = spectra::tridiag::lowest(p.diag, p.offdiag, 3);
  for (int j = 1; j <= 3; ++j) {
    const double w = (2 * j - 1) * kPi / 2.0;
    EXPECT_NEAR(nd[j - 1], w * w, 1e-6);
  }
}

TEST(Discretize, NeumannNeumannBoxKernel) {
  // both-end Neumann box on (0, t_hat): ((j-1) pi / t_hat)^2
  const double t_hat = 2.0;
  const int n = 4000;
  const double h = t_hat / n;
  std::vector<double> d(n, 2.0 / (h * h)), e(n - 1, -1.0 / (h * h));
  d.front() = d.back() = 1.0 / (h * h);
  const auto lam = spectra::tridiag::lowest(d, e, 3);
  EXPECT_NEAR(lam[0], 0.0, 1e-10);
  for (int j = 2; j <= 3; ++j) {
    const double w = (j - 1) * kPi / t_hat;
    EXPECT_NEAR(lam[j - 1], w * w, 1e-4 * w * w);
  }
}

TEST(LowestEigenvalues, HarmonicOscillatorOracles) {
  auto wl = eigs(Boundary::WholeLine, -8.0, 8.0, 15999, [](double t) { return t * t; }, 3);
  for (int j = 1; j <= 3; ++j) EXPECT_NEAR(wl[j - 1], 2 * j - 1, 1e-8);
  auto hn = eigs(Boundary::HalfLineNeumann, 0.0, 8.0, 7999, [](double t) { return t * t; }, 3);
  for (int j = 1; j <= 3; ++j) EXPECT_NEAR(hn[j - 1], 4 * j - 3, 1e-8);
}

TEST(LowestEigenvalues, TableRowK1) {
  const OperatorSpec s{1, 0.35, Boundary::WholeLine};
  const Grid g = spectra::choose_domain(s, spectra::detail::eigen_cap(1, 0.35));
  const auto sp = spectra::lowest_eigenvalues(spectra::discretize(s, g), 3);
  EXPECT_NEAR(sp.eigenvalues[0], 0.57, 0.01);
  EXPECT_NEAR(sp.eigenvalues[1], 1.98, 0.01);
  EXPECT_NEAR(sp.eigenvalues[2], 4.11, 0.01);
}

TEST(LowestEigenvalues, RejectsBadM) {
  const OperatorSpec s{1, 0.0, Boundary::WholeLine};
  const DiscretizedProblem p = spectra::discretize(s, spectra::make_grid(-3.0, 3.0, 20));
  EXPECT_THROW(spectra::lowest_eigenvalues(p, 0), std::invalid_argument);
  EXPECT_THROW(spectra::lowest_eigenvalues(p, 21), std::invalid_argument);
}

TEST(LowestEigenvalues, RichardsonConsistency) {
  for (int k : {1, 2, 3})
    for (double a : {0.0, 0.35}) {
      const OperatorSpec s{k, a, Boundary::WholeLine};
      const Grid g = spectra::choose_domain(s, 15.0, 4e-3);
      const DiscretizedProblem p = spectra::discretize(s, g);
      const auto sp = spectra::lowest_eigenvalues(p, 3);
      const DiscretizedProblem p4 = spectra::refine(spectra::refine(p));
      const auto lam4 = spectra::tridiag::lowest(p4.diag, p4.offdiag, 3);
      for (int j = 0; j < 3; ++j)
        EXPECT_LE(std::abs(sp.eigenvalues[j] - lam4[j]), 10.0 * sp.error_estimate)
            << "k=" << k << " a=" << a << " j=" << j;
    }
}

TEST(LowestEigenvalues, DomainDoublingInvariance) {
  for (const auto& row : spectra::verify::reference_table()) {
    if (row.k > 4) break;  // full panel exercised by the acceptance suite
    const OperatorSpec s{row.k, row.alpha_min, Boundary::WholeLine};
    const Grid g = spectra::choose_domain(s, spectra::detail::eigen_cap(row.k, row.alpha_min));
    const Grid g2 = spectra::make_grid(2.0 * g.left, 2.0 * g.right, 2 * g.n + 1);
    const auto e1 = spectra::lowest_eigenvalues(spectra::discretize(s, g), 3).eigenvalues;
    const auto e2 = spectra::lowest_eigenvalues(spectra::discretize(s, g2), 3).eigenvalues;
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(e1[j], e2[j], 1e-8);
  }
}

TEST(LowestEigenvalues, PotentialShiftMovesSpectrumExactly) {
  const OperatorSpec s{1, 0.35, Boundary::WholeLine};
  const Grid g = spectra::choose_domain(s, 12.0);
  const double c = 7.0;
  const DiscretizedProblem p1 = spectra::discretize(s, g);
  const DiscretizedProblem p2 =
      spectra::assemble(s, g, [s, c](double t) { return spectra::potential(s, t) + c; });
  for (int i = 0; i < g.n; ++i) ASSERT_NEAR(p2.diag[i], p1.diag[i] + c, 1e-12);
  const auto e1 = spectra::tridiag::lowest(p1.diag, p1.offdiag, 3);
  const auto e2 = spectra::tridiag::lowest(p2.diag, p2.offdiag, 3);
  for (int j = 0; j < 3; ++j) EXPECT_NEAR(e2[j], e1[j] + c, 1e-10);
}

TEST(LowestEigenvalues, StrictOrderingOnReferencePanel) {
  for (const auto& row : spectra::verify::reference_table()) {
    if (row.k % 3 != 1) continue;  // k = 1, 4, 7, 10
    const OperatorSpec s{row.k, row.alpha_min, Boundary::WholeLine};
    const Grid g = spectra::choose_domain(s, spectra::detail::eigen_cap(row.k, row.alpha_min));
    const auto e = spectra::lowest_eigenvalues(spectra::discretize(s, g), 4).eigenvalues;
    for (int j = 0; j + 1 < 4; ++j) EXPECT_GT(e[j + 1], e[j]);
  }
}

TEST(LowestEigenvalues, TinyGridMatchesCharacteristicPolynomial) {
  const OperatorSpec s{1, 0.0, Boundary::WholeLine};
  const DiscretizedProblem p = spectra::discretize(s, spectra::make_grid(-3.0, 3.0, 12));
  const auto sturm = spectra::tridiag::lowest(p.diag, p.offdiag, 12);
  const auto charp = spectra::verify::charpoly_eigenvalues(p.diag, p.offdiag);
  ASSERT_EQ(charp.size(), 12u);
  for (int j = 0; j < 12; ++j) EXPECT_NEAR(sturm[j], charp[j], 1e-10);
}

TEST(GroundState, NormalizationPositivitySymmetry) {
  const OperatorSpec s{3, 0.0, Boundary::WholeLine};
  const Grid g = spectra::choose_domain(s, 12.0);
  const DiscretizedProblem p = spectra::discretize(s, g);
  const spectra::Eigenpair gs = spectra::ground_state(p);
  EXPECT_NEAR(spectra::grid_norm_sq(gs), 1.0, 1e-12);
  double min_u = 1e300;
  double sym = 0.0;
  for (int i = 0; i < g.n; ++i) {
    min_u = std::min(min_u, gs.u[i]);
    sym = std::max(sym, std::abs(gs.u[i] - gs.u[g.n - 1 - i]));
  }
  EXPECT_GT(min_u, 0.0);
  EXPECT_LE(sym, 1e-8);
  EXPECT_EQ(gs.norm_weight, g.h);
}

TEST(GroundState, MatchesLowestEigenvalue) {
  const OperatorSpec s{2, 0.4, Boundary::WholeLine};
  const Grid g = spectra::choose_domain(s, 12.0);
  const DiscretizedProblem p = spectra::discretize(s, g);
  const spectra::Eigenpair gs = spectra::ground_state(p);
  const double lam = spectra::tridiag::lowest(p.diag, p.offdiag, 1)[0];
  EXPECT_EQ(gs.lambda, lam);
  // residual || T u - lambda u || small
  double resid = 0.0;
  for (int i = 0; i < g.n; ++i) {
    double r = p.diag[i] * gs.u[i] - lam * gs.u[i];
    if (i > 0) r += p.offdiag[i - 1] * gs.u[i - 1];
    if (i + 1 < g.n) r += p.offdiag[i] * gs.u[i + 1];
    resid = std::max(resid, std::abs(r));
  }
  EXPECT_LE(resid, 1e-6);
}

TEST(Grid, Invariants) {
  const Grid g = spectra::make_grid(-2.0, 3.0, 9);
  EXPECT_DOUBLE_EQ(g.h, 0.5);
  EXPECT_THROW(spectra::make_grid(1.0, 1.0, 10), std::invalid_argument);
  EXPECT_THROW(spectra::make_grid(0.0, 1.0, 2), std::invalid_argument);
}

}  // namespace
