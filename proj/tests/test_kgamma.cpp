#include <gtest/gtest.h>

#include "kmf/kgamma.hpp"
#include "kmf/verify.hpp"

using namespace kmf;

TEST(KGammaMatrix, FunctionalEquation) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CommutingFamilySampler s(seed, 3);
    const double k = s.uniform(0.5, 2.0);
    Matrix m = s.draw(0.2, 3.0, 1.0);
    Matrix lhs = k_gamma(Matrix(m + k * identity(3)), k);
    Matrix rhs = m * k_gamma(m, k);
    EXPECT_LT(relative_residual(lhs, rhs), 1e-11) << "seed " << seed;
  }
}

TEST(KGammaMatrix, InverseAgreesWithScaled) {
  CommutingFamilySampler s(7, 2);
  Matrix m = s.draw(0.5, 2.0);
  Matrix inv = k_gamma_inv(m, 1.3);
  EXPECT_LT(relative_residual(Matrix(inv * k_gamma(m, 1.3)), identity(2)), 1e-12);
  EXPECT_LT(relative_residual(k_gamma_inv_scaled(m, 1.3).value(), inv), 1e-12);
}

TEST(KBeta, DiagonalCase) {
  for (double k : {0.5, 1.0, 2.5}) {
    Matrix b = k_beta(Matrix(k * identity(3)), Matrix(k * identity(3)), k);
    EXPECT_LT(relative_residual(b, Matrix(identity(3) / k)), 1e-13);
  }
}

TEST(KBeta, ScalarOracle) {
  // B_2(1.5, 2.5), mpmath
  Matrix b = k_beta(Matrix(1.5 * identity(1)), Matrix(2.5 * identity(1)), 2.0);
  EXPECT_NEAR(b(0, 0).real(), 0.555360367269795735206243006399, 1e-13);
}

TEST(KBeta, NonCommutingRejected) {
  Matrix a(2, 2), b(2, 2);
  a << 1.0, 1.0, 0.0, 2.0;
  b << 1.0, 0.0, 1.0, 2.0;
  try {
    k_beta(a, b, 1.0);
    FAIL() << "expected NonCommuting";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonCommuting);
  }
}

TEST(KPochhammer, SequenceMatchesDirectProduct) {
  CommutingFamilySampler s(3, 2);
  Matrix m = s.draw(-1.0, 1.0);
  KPochhammerSequence seq(m, 0.7);
  Matrix direct = identity(2);
  for (long n = 0; n < 8; ++n) {
    EXPECT_LT(relative_residual(seq[n], direct), 1e-13);
    EXPECT_LT(relative_residual(k_pochhammer(m, n, 0.7), direct), 1e-13);
    direct = direct * (m + 0.7 * n * identity(2));
  }
}

TEST(KPochhammer, BinomialSeries) {
  CommutingFamilySampler s(11, 3);
  const double k = 1.4;
  Matrix m = s.draw(0.3, 2.0);
  const Complex zeta(0.2, 0.1);
  Matrix series = k_binomial_series(m, k, zeta, 200);
  Matrix closed = mat_func(m, [&](Complex l) { return std::pow(1.0 - k * zeta, -l / k); });
  EXPECT_LT(relative_residual(series, closed), 1e-12);
}

TEST(PositiveStable, Spectrum) {
  Matrix m = Matrix::Zero(2, 2);
  m.diagonal() << Complex(0.1, 5.0), 2.0;
  EXPECT_TRUE(positive_stable(m));
  m(0, 0) = Complex(-0.1, 5.0);
  EXPECT_FALSE(positive_stable(m));
}
