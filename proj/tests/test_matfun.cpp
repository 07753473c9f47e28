#include <gtest/gtest.h>

#include "kmf/matfun.hpp"

using namespace kmf;

TEST(MatFun, ExpOfDiagonalizable) {
  Matrix m(2, 2);
  m << 1.0, 2.0, 0.0, 3.0;
  Matrix e = mat_exp(m);
  Matrix expected(2, 2);
  expected << std::exp(1.0), std::exp(3.0) - std::exp(1.0), 0.0, std::exp(3.0);
  EXPECT_LT(relative_residual(e, expected), 1e-13);
}

TEST(MatFun, PowerMatchesRepeatedProduct) {
  Matrix m(2, 2);
  m << Complex(1.0, 0.1), 0.5, 0.2, 2.0;
  EXPECT_LT(relative_residual(mat_power(2.0, 2.0 * identity(2)), Matrix(4.0 * identity(2))), 1e-14);
  PowerFamily pf(m);
  EXPECT_LT(relative_residual(pf(3.0), mat_power(3.0, m)), 1e-13);
}

TEST(MatFun, DefectiveMatrixRejected) {
  Matrix j(2, 2);
  j << 1.0, 1.0, 0.0, 1.0;
  try {
    EigenBasis eb(j);
    FAIL() << "expected DefectiveMatrix";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DefectiveMatrix);
  }
}

TEST(MatFun, SpectralBounds) {
  Matrix m = Matrix::Zero(3, 3);
  m.diagonal() << Complex(-1.0, 2.0), 0.5, Complex(3.0, -1.0);
  SpectralBounds b = spectral_bounds(m);
  EXPECT_DOUBLE_EQ(b.lower, -1.0);
  EXPECT_DOUBLE_EQ(b.upper, 3.0);
  EXPECT_NEAR(spectral_radius(m), std::sqrt(10.0), 1e-14);
}

TEST(MatFun, TinyMatrixEigenvalues) {
  Matrix m(2, 2);
  m << 1e-310, 2e-310, 0.0, 3e-310;
  Vector ev = eigenvalues(m);
  EXPECT_NEAR(std::abs(ev(0)) + std::abs(ev(1)), 4e-310, 1e-320);
}

TEST(MatFun, ScaledMatrixKeepsHugeProducts) {
  ScaledMatrix a{identity(2), 600.0};
  ScaledMatrix b = a * a;
  EXPECT_NEAR(b.log_norm(), 1200.0 + std::log(std::sqrt(2.0)), 1e-12);
  ScaledMatrix inv = inverse(b);
  EXPECT_NEAR(inv.log_scale + std::log(inv.mat(0, 0).real()), -1200.0, 1e-12);
}

TEST(MatFun, ShiftInvertibility) {
  Matrix m = -2.0 * identity(2);
  EXPECT_FALSE(check_shift_invertible(m, 1.0, 5));
  EXPECT_TRUE(check_shift_invertible(m, 1.0, 1));
  EXPECT_TRUE(check_shift_invertible(Matrix(-2.5 * identity(2)), 1.0, 50));
}
