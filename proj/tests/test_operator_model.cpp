#include "spectra/operator_model.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace {

using spectra::Boundary;
using spectra::OperatorSpec;
using spectra::ScalingParam;

TEST(Potential, WellZeros) {
  EXPECT_EQ(spectra::potential({1, 0.0}, 0.0), 0.0);
  // well bottom at t = (alpha (k+1))^{1/(k+1)}: 2^2/2 = 2
  EXPECT_EQ(spectra::potential({1, 2.0}, 2.0), 0.0);
}

TEST(Potential, DirectArithmetic) {
  // (1/4 - 0.16)^2 = 0.0081
  EXPECT_NEAR(spectra::potential({3, 0.16}, 1.0), 0.0081, 1e-15);
}

TEST(Potential, NonNegative) {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> td(-4.0, 4.0), ad(-2.0, 2.0);
  std::uniform_int_distribution<int> kd(1, 12);
  for (int i = 0; i < 3000; ++i)
    EXPECT_GE(spectra::potential({kd(rng), ad(rng)}, td(rng)), 0.0);
}

TEST(Potential, OddKIsEvenInT) {
  // k odd means the exponent k+1 is even, so V is even in t for every alpha
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> td(0.0, 4.0), ad(-2.0, 2.0);
  for (int k : {1, 3, 5, 9})
    for (int i = 0; i < 500; ++i) {
      const double t = td(rng), a = ad(rng);
      EXPECT_EQ(spectra::potential({k, a}, -t), spectra::potential({k, a}, t));
    }
}

TEST(Potential, EvenKParityMapsAlpha) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> td(0.0, 4.0), ad(-2.0, 2.0);
  for (int k : {2, 4, 10})
    for (int i = 0; i < 500; ++i) {
      const double t = td(rng), a = ad(rng);
      EXPECT_EQ(spectra::potential({k, a}, t), spectra::potential({k, -a}, -t));
    }
  // and V is not even in t once alpha != 0
  EXPECT_NE(spectra::potential({2, 1.0}, -1.0), spectra::potential({2, 1.0}, 1.0));
  // at alpha = 0 it is even for every k
  for (int k : {1, 2, 3, 4})
    EXPECT_EQ(spectra::potential({k, 0.0}, -1.3), spectra::potential({k, 0.0}, 1.3));
}

TEST(Potential, OddKNegativeAlphaBarrier) {
  for (int k : {1, 3, 7})
    for (int i = 0; i <= 400; ++i) {
      const double t = -5.0 + 10.0 * i / 400;
      const double a = -0.8;
      EXPECT_GE(spectra::potential({k, a}, t), a * a);
    }
}

TEST(ScaledPotential, RhoOneMatchesExactly) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> td(-3.0, 3.0), ad(-2.0, 2.0);
  for (int k : {1, 2, 3, 8})
    for (int i = 0; i < 300; ++i) {
      const OperatorSpec s{k, ad(rng)};
      const double t = td(rng);
      EXPECT_EQ(spectra::scaled_potential(s, {1.0}, t), spectra::potential(s, t));
    }
}

TEST(ScaledPotential, Values) {
  EXPECT_NEAR(spectra::scaled_potential({1, 0.0}, {1.0}, 1.0), 0.25, 1e-15);
  EXPECT_NEAR(spectra::scaled_potential({1, 1.0}, {2.0}, 1.0), 1.0, 1e-15);
  // t = 0 gives alpha^2 for any k and rho
  for (int k : {1, 2, 5})
    for (double rho : {0.5, 1.0, 3.0})
      EXPECT_NEAR(spectra::scaled_potential({k, 1.7}, {rho}, 0.0), 1.7 * 1.7, 1e-15);
}

TEST(ScaledPotential, RejectsNonPositiveRho) {
  EXPECT_THROW(spectra::scaled_potential({1, 0.0}, {0.0}, 1.0), std::invalid_argument);
  EXPECT_THROW(spectra::scaled_potential({1, 0.0}, {-2.0}, 1.0), std::invalid_argument);
}

TEST(WellCenter, Values) {
  EXPECT_NEAR(spectra::well_center({1, 2.0}), 2.0, 1e-15);
  EXPECT_EQ(spectra::well_center({3, 0.0}), 0.0);
  EXPECT_NEAR(spectra::well_center({3, 1.0}), std::pow(4.0, 0.25), 1e-15);
}

TEST(WellCenter, RejectsNegativeAlpha) {
  EXPECT_THROW(spectra::well_center({2, -1.0}), std::domain_error);
  EXPECT_THROW(spectra::well_center({3, -1.0}), std::domain_error);
}

TEST(OperatorSpecValidation, RejectsBadK) {
  EXPECT_THROW(spectra::validate(OperatorSpec{0, 0.0}), std::invalid_argument);
  EXPECT_THROW(spectra::validate(OperatorSpec{-3, 0.0}), std::invalid_argument);
}

}  // namespace
