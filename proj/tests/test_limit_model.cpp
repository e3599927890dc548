#include "spectra/limit_model.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "spectra/eigensolver.hpp"
#include "spectra/spectral_calculus.hpp"

namespace {

using spectra::GlueSystem;

constexpr double kPi = std::numbers::pi;

// Direct discretization of the piecewise glue potential, with the jump points
// placed on grid nodes (side-averaged there) so the eigenvalues keep their
// second-order convergence.
std::vector<double> glue_oracle(const GlueSystem& g, int m) {
  const double h = g.eps / 400.0;
  const double left = g.t0 - std::ceil(2.5 / h) * h;
  const double right = g.t2 + std::ceil(3.0 / h) * h;
  const int n = static_cast<int>(std::llround((right - left) / h)) - 1;
  spectra::OperatorSpec tag{g.k, g.alpha, spectra::Boundary::WholeLine};
  const auto potential = [g, h](double t) {
    for (double tj : {g.t0, g.t1, g.t2})
      if (std::abs(t - tj) < 1e-6 * h)
        return 0.5 * (g.potential_at(tj - h) + g.potential_at(tj + 1e-3 * h));
    return g.potential_at(t);
  };
  const auto p = spectra::assemble(tag, spectra::make_grid(left, right, n), potential);
  return spectra::lowest_eigenvalues(p, m).eigenvalues;
}

TEST(LimitEigenvalue, ClosedForm) {
  EXPECT_NEAR(spectra::limit_eigenvalue(1, 0.0), kPi * kPi / 4.0, 1e-15);
  EXPECT_NEAR(spectra::limit_eigenvalue(2, 1.0), 1.0 + kPi * kPi, 1e-12);
  EXPECT_THROW(spectra::limit_eigenvalue(0, 0.0), std::invalid_argument);
}

TEST(F1, SeamAndContinuity) {
  const double alpha = 0.5, eps = 0.1;
  const double seam = alpha * alpha * (1.0 - eps);
  EXPECT_EQ(spectra::f1(seam, alpha, eps), 2.0);
  EXPECT_NEAR(spectra::f1(seam + 1e-10, alpha, eps), 2.0, 1e-4);
  EXPECT_NEAR(spectra::f1(seam - 1e-10, alpha, eps), 2.0, 1e-4);
}

TEST(F1, PoleDetection) {
  // first tan singularity at 2 sqrt(lambda) = pi/2
  EXPECT_THROW(spectra::f1(kPi * kPi / 16.0, 0.0, 0.3), spectra::pole_error);
}

TEST(F1, ZeroStructureBetweenPoles) {
  const double alpha = 0.7, eps = 0.1;
  const double shift = alpha * alpha * (1.0 - eps);
  for (int m = 1; m <= 4; ++m) {
    const double lo = shift + std::pow((2 * m - 1) * kPi / 4.0, 2) + 1e-6;
    const double hi = shift + std::pow((2 * m + 1) * kPi / 4.0, 2) - 1e-6;
    int changes = 0;
    double prev = spectra::f1(lo, alpha, eps);
    for (int i = 1; i <= 500; ++i) {
      const double lam = lo + (hi - lo) * i / 500;
      const double v = spectra::f1(lam, alpha, eps);
      if ((prev < 0) != (v < 0)) ++changes;
      prev = v;
    }
    EXPECT_EQ(changes, 1) << "pole interval m=" << m;
    EXPECT_LT(spectra::f1(lo, alpha, eps), 0.0);
    EXPECT_GT(spectra::f1(hi, alpha, eps), 0.0);
  }
}

TEST(F2, SignSmallLambdaAndZeroEps) {
  const double eps = 0.1;
  for (int i = 1; i <= 100; ++i) {
    const double lam = std::pow(kPi / (4.0 * eps), 2) * i / 101.0;
    EXPECT_LT(spectra::f2(lam, eps), 0.0);
  }
  EXPECT_NEAR(spectra::f2(1e-12, 0.3), -0.6, 1e-9);
  EXPECT_EQ(spectra::f2(2.0, 0.0), 0.0);
}

TEST(GlueSystem, InvariantsAndConstruction) {
  const GlueSystem g = GlueSystem::make(80, 0.5, 0.1);
  EXPECT_LT(g.t0, g.t1);
  EXPECT_LT(g.t1, g.t2);
  EXPECT_GE(g.A, g.B);
  EXPECT_GE(g.B, 0.0);
  EXPECT_THROW(GlueSystem::make(80, -0.1, 0.1), std::invalid_argument);
  EXPECT_THROW(GlueSystem::make(80, 0.5, 1.5), std::invalid_argument);
}

TEST(GlueResidual, BranchErrorWhenWallsTooLow) {
  // at k=30 the right wall B = (1.1^31/31 - 1/2)^2 ~ 0.0142 sits far below the
  // j=1..3 roots, so evaluation there must signal the branch violation
  const GlueSystem g = GlueSystem::make(30, 0.5, 0.1);
  EXPECT_LT(g.B, 0.02);
  EXPECT_THROW(spectra::glue_residual(2.7, g), spectra::branch_error);
}

TEST(GlueResidual, RootsMatchDirectDiscretization) {
  const GlueSystem g = GlueSystem::make(80, 0.5, 0.1);
  const auto oracle = glue_oracle(g, 3);
  for (int j = 0; j < 3; ++j) {
    const double root = spectra::num::bisect_root(
        [&](double lam) { return spectra::glue_residual(lam, g); }, oracle[j] - 1e-3,
        oracle[j] + 1e-3, 1e-14);
    EXPECT_NEAR(root, oracle[j], 1e-6);
  }
}

TEST(GlueResidual, AlphaZeroRootsApproachDirichletValues) {
  // as eps decreases (k scaled so the walls stay high) the roots approach
  // (j pi/2)^2; the relative deviation is of order 2 eps
  double prev_err = 1e300;
  for (double eps : {0.1, 0.05, 0.025}) {
    const int k = static_cast<int>(20.0 / eps);
    const GlueSystem g = GlueSystem::make(k, 0.0, eps);
    double err = 0.0;
    for (int j = 1; j <= 2; ++j) {
      const double target = spectra::limit_eigenvalue(j, 0.0);
      const double root = spectra::num::bisect_root(
          [&](double lam) { return spectra::glue_residual(lam, g); }, target * 0.7,
          target * 1.001, 1e-13);
      EXPECT_LT(std::abs(root - target), 2.5 * eps * target) << "j=" << j << " eps=" << eps;
      err = std::max(err, std::abs(root - target));
    }
    EXPECT_LT(err, prev_err);
    prev_err = err;
  }
}

TEST(SolveReduced, LimitAndErrorBound) {
  for (double eps : {0.1, 0.05, 0.025}) {
    const double root = spectra::solve_reduced(1, 0.0, eps, 100);
    EXPECT_NEAR(root, kPi * kPi / 4.0, 5.0 * eps);
  }
}

TEST(SolveReduced, RootsIncreaseInJ) {
  double prev = 0.0;
  for (int j = 1; j <= 3; ++j) {
    const double root = spectra::solve_reduced(j, 0.5, 0.05, 100);
    EXPECT_GT(root, prev);
    prev = root;
  }
}

TEST(SolveReduced, LinearTrendInEps) {
  // |root - (alpha^2 + (j pi/2)^2)| shrinks linearly in eps at alpha=1
  const double target = spectra::limit_eigenvalue(1, 1.0);
  const double e1 = std::abs(spectra::solve_reduced(1, 1.0, 0.1, 100) - target);
  const double e2 = std::abs(spectra::solve_reduced(1, 1.0, 0.05, 100) - target);
  const double e3 = std::abs(spectra::solve_reduced(1, 1.0, 0.025, 100) - target);
  EXPECT_GT(e1, e2);
  EXPECT_GT(e2, e3);
  EXPECT_NEAR(e1 / e2, 2.0, 0.5);
  EXPECT_NEAR(e2 / e3, 2.0, 0.5);
}

TEST(SolveReduced, PreconditionOnEps) {
  // (pi/(4 eps))^2 must exceed the top of the bracket interval
  EXPECT_THROW(spectra::solve_reduced(3, 1.5, 0.45, 100), std::invalid_argument);
}

TEST(ReducedVsFullResidual, AgreeAtLargeK) {
  const int k = 150;
  const double eps = 0.1, alpha = 0.5;
  const GlueSystem g = GlueSystem::make(k, alpha, eps);
  const double budget = (k + 1) * std::pow(1.0 + eps, -(k + 1.0)) * 100.0;
  for (int j = 1; j <= 2; ++j) {
    const double red = spectra::solve_reduced(j, alpha, eps, k);
    const double full = spectra::num::bisect_root(
        [&](double lam) { return spectra::glue_residual(lam, g); }, red - 0.02, red + 0.02,
        1e-14);
    EXPECT_LT(std::abs(red - full), budget);
  }
}

TEST(PiecewiseDomination, HoldsForLargeEnoughK) {
  const double eps = 0.1, alpha = 0.5;
  int found = -1;
  for (int k = 2; k <= 60 && found < 0; k += 2) {
    const GlueSystem g = GlueSystem::make(k, alpha, eps);
    bool dominated = true;
    for (int i = 0; i <= 4000 && dominated; ++i) {
      const double t = -3.0 + 6.0 * i / 4000;
      if (spectra::potential({k, alpha}, t) < g.potential_at(t) - 1e-12) dominated = false;
    }
    if (dominated) found = k;
  }
  EXPECT_GT(found, 0);
  EXPECT_LE(found, 40);
}

TEST(MonotoneApproach, Lambda1TowardLimit) {
  const auto lam1 = [](int k, double a) {
    spectra::OperatorSpec s{k, a, spectra::Boundary::WholeLine};
    const spectra::Grid g = spectra::choose_domain(s, spectra::detail::eigen_cap(k, a, 1),
                                                   spectra::detail::band_h_max(k));
    return spectra::lowest_eigenvalues(spectra::discretize(s, g), 1).eigenvalues[0];
  };
  for (bool odd : {false, true}) {
    const int klo = odd ? 21 : 20, khi = odd ? 41 : 40;
    double devlo = 0.0, devhi = 0.0;
    for (double a : {0.0, 0.5, 1.0}) {
      devlo = std::max(devlo, std::abs(lam1(klo, a) - spectra::limit_eigenvalue(1, a)));
      devhi = std::max(devhi, std::abs(lam1(khi, a) - spectra::limit_eigenvalue(1, a)));
    }
    EXPECT_LT(devhi, devlo);
  }
}

}  // namespace
