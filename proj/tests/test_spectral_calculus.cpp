#include "spectra/spectral_calculus.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "spectra/minimizer.hpp"

namespace {

using spectra::BandPoint;
using spectra::NondegeneracyCertificate;

TEST(BandPoint, EvenKDerivativeVanishesAtZero) {
  for (int k : {2, 4}) {
    const BandPoint bp = spectra::band_point(k, 0.0);
    EXPECT_NEAR(bp.d_lambda1, 0.0, 1e-6);
  }
}

TEST(BandPoint, OddKDerivativeNegativeAtZero) {
  // at alpha=0 the moment integral is positive, so the derivative is negative
  const BandPoint bp = spectra::band_point(1, 0.0);
  EXPECT_LT(bp.d_lambda1, 0.0);
  EXPECT_GT(bp.moment, 0.0);
  // cross-check by central differences on a shared grid
  spectra::detail::FrozenBand band(1, 1e-3);
  const double fd = (band.lambda1(1e-4) - band.lambda1(-1e-4)) / 2e-4;
  EXPECT_NEAR(bp.d_lambda1, fd, 1e-4);
}

TEST(BandPoint, DerivativeIsTwiceAlphaMinusMoment) {
  for (double a : {0.0, 0.2, 0.7}) {
    const BandPoint bp = spectra::band_point(3, a);
    EXPECT_DOUBLE_EQ(bp.d_lambda1, 2.0 * (bp.alpha - bp.moment));
  }
}

TEST(BandPoint, EnergyPartition) {
  for (int k : {1, 2, 4})
    for (double a : {0.0, 0.3, 0.9}) {
      const BandPoint bp = spectra::band_point(k, a);
      EXPECT_NEAR(bp.kinetic_norm_sq + bp.potential_norm_sq, bp.lambda1, 1e-6)
          << "k=" << k << " a=" << a;
    }
}

TEST(BandPoint, HellmannFeynmanVsCentralDifferences) {
  const double delta = 1e-4;
  for (int k : {1, 2, 3, 4, 5, 6}) {
    spectra::detail::FrozenBand band(k, 1.0 + delta);
    for (double a : {0.0, 0.1, 0.35, 1.0}) {
      const double hf = band.slope(a);
      const double fd = (band.lambda1(a + delta) - band.lambda1(a - delta)) / (2.0 * delta);
      EXPECT_NEAR(hf, fd, 1e-4) << "k=" << k << " a=" << a;
    }
  }
}

TEST(BandPoint, CriticalPointAtTableValue) {
  const BandPoint bp = spectra::band_point(1, 0.3468);
  EXPECT_NEAR(bp.d_lambda1, 0.0, 1e-3);  // near the k=1 band minimum
}

TEST(VirialCheck, AtCriticalPoints) {
  for (int k : {1, 3}) {
    const auto rep = spectra::find_minimum(k);
    const double residual = spectra::virial_check(k, rep.alpha_min);
    EXPECT_LE(std::abs(residual), 1e-5);
    const BandPoint bp = spectra::band_point(k, rep.alpha_min);
    // lambda1/(k+2): approximately 0.57/3 and 0.68/5 from the reference rows
    const double expected = k == 1 ? 0.57 / 3.0 : 0.68 / 5.0;
    EXPECT_NEAR(bp.potential_norm_sq, expected, 0.005);
    EXPECT_NEAR(bp.kinetic_norm_sq / bp.potential_norm_sq, k + 1.0, 1e-4);
  }
}

TEST(VirialCheck, RejectsNonCriticalPoint) {
  EXPECT_THROW(spectra::virial_check(1, 0.0), std::invalid_argument);
}

TEST(SecondDerivativeFd, QuadraticOracle) {
  const double fd = spectra::num::central_second_diff([](double a) { return a * a; }, 0.3, 1e-3);
  EXPECT_NEAR(fd, 2.0, 1e-9);
}

TEST(SecondDerivativeFd, PositiveAtMinima) {
  EXPECT_GT(spectra::second_derivative_fd(2, 0.0), 0.0);
  const auto rep = spectra::find_minimum(1);
  EXPECT_GT(spectra::second_derivative_fd(1, rep.alpha_min), 0.0);
}

TEST(Certificate, GapsMatchReferenceValues) {
  // gap values computed from the reference eigenvalues: branch B for odd k,
  // branch A for even k
  const auto rep3 = spectra::find_minimum(3);
  EXPECT_EQ(rep3.certificate.branch, NondegeneracyCertificate::Branch::B);
  EXPECT_NEAR(rep3.certificate.gap_value, 5.0 * 5.68 - 9.0 * 0.68, 0.1);
  const auto rep1 = spectra::find_minimum(1);
  EXPECT_NEAR(rep1.certificate.gap_value, 3.0 * 4.11 - 7.0 * 0.57, 0.1);
  const auto rep2 = spectra::find_minimum(2);
  EXPECT_EQ(rep2.certificate.branch, NondegeneracyCertificate::Branch::A);
  EXPECT_NEAR(rep2.certificate.gap_value, 4.0 * 2.50 - 8.0 * 0.66, 0.1);
}

TEST(Certificate, LowerBoundConsistent) {
  for (int k : {1, 2, 3}) {
    const auto rep = spectra::find_minimum(k);
    const auto& c = rep.certificate;
    ASSERT_GT(c.gap_value, 0.0);
    EXPECT_GT(c.second_derivative_lower, 0.0);
    EXPECT_GE(c.second_derivative_fd, c.second_derivative_lower - 1e-3);
  }
}

TEST(AboundCheck, HoldsAtOddCriticalPoints) {
  for (int k : {1, 3, 5}) {
    const auto rep = spectra::find_minimum(k);
    EXPECT_TRUE(spectra::abound_check(k, rep.alpha_min));
  }
  EXPECT_THROW(spectra::abound_check(2, 0.0), std::invalid_argument);
}

TEST(CriticalIdentity, AlphaEqualsMoment) {
  for (int k : {1, 3}) {
    const auto rep = spectra::find_minimum(k);
    const BandPoint bp = spectra::band_point(k, rep.alpha_min);
    EXPECT_NEAR(rep.alpha_min, bp.moment, 1e-6);
  }
}

}  // namespace
