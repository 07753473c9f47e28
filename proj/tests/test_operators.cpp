#include <gtest/gtest.h>

#include <cmath>

#include "kmf/kgamma.hpp"
#include "kmf/operators.hpp"

using namespace kmf;

namespace {

MatrixFunction1D one_on(double lo, double hi) { return MatrixFunction1D::constant(identity(1), lo, hi); }

MatrixFunction1D decaying_exp() {
  MatrixFunction1D f = MatrixFunction1D::of(1, 0.0, INFINITY, [](double t) -> Matrix { return identity(1) * std::exp(-t); });
  f.decay = Decay::Exponential;
  return f;
}

double re(const Matrix& m) { return m(0, 0).real(); }

}  // namespace

TEST(Operators, RiemannLiouvilleOfOne) {
  for (double k : {0.7, 1.0, 1.6})
    for (double mu : {0.4, 1.0, 2.3}) {
      const double x = 1.7;
      double expected = std::pow(x, mu / k) / k_gamma(Complex(mu + k), k).real();
      EXPECT_NEAR(re(rl_integral(one_on(0.0, 10.0), 0.0, x, mu, k)), expected, 1e-10);
    }
}

TEST(Operators, RiemannLiouvilleDerivativeOfPower) {
  // D^mu t^(nu/k - 1) = (1/k) Gamma_k(nu) / Gamma_k(nu - mu) x^((nu - mu)/k - 1)
  const double k = 1.2, mu = 0.5, nu = 2.0, x = 0.8;
  MatrixFunction1D f = MatrixFunction1D::of(1, 0.0, 10.0, [&](double t) -> Matrix {
    return identity(1) * std::pow(t, nu / k - 1.0);
  });
  double expected =
      (k_gamma(Complex(nu), k) / k_gamma(Complex(nu - mu), k)).real() * std::pow(x, (nu - mu) / k - 1.0) / k;
  EXPECT_NEAR(re(rl_derivative(f, 0.0, x, mu, k)), expected, 1e-8);
}

TEST(Operators, WeylOfExponential) {
  for (double k : {0.6, 1.0, 1.8})
    for (double alpha : {0.3, 1.5}) {
      const double x = 0.4;
      EXPECT_NEAR(re(weyl_integral(decaying_exp(), x, alpha, k)), std::exp(-x) * std::pow(k, -alpha / k), 1e-10);
    }
}

TEST(Operators, WeylDerivativeOfExponential) {
  const double k = 1.5, alpha = 0.6, x = 0.3;
  EXPECT_NEAR(re(weyl_derivative(decaying_exp(), x, alpha, k)), std::exp(-x) * std::pow(k, alpha / k - 1.0), 1e-8);
}

TEST(Operators, LaplaceOfOne) {
  MatrixFunction1D f = MatrixFunction1D::constant(identity(1), 0.0, INFINITY);
  Matrix v = laplace_transform(f, Complex(2.0, 1.0));
  EXPECT_LT(std::abs(v(0, 0) - 1.0 / Complex(2.0, 1.0)), 1e-11);
  try {
    laplace_transform(f, Complex(-1.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GrowthViolation);
  }
}

TEST(Operators, FractionalFourierOfExponential) {
  // int_-inf^0 e^{i omega z} e^z dz = 1 / (1 + i omega)
  MatrixFunction1D f;
  f.dim = 1;
  f.eval = [](const Abscissa& t) -> Matrix { return identity(1) * std::exp(t.x); };
  f.decay = Decay::Exponential;
  const double w = 2.0, alpha = 0.5;
  const double omega = std::pow(w, 1.0 / alpha);
  Matrix v = frac_fourier(f, w, alpha);
  EXPECT_LT(std::abs(v(0, 0) - 1.0 / Complex(1.0, omega)), 1e-10);
}

TEST(Operators, BetaTransformOfOne) {
  const double k = 2.0;
  Matrix a = 1.5 * identity(1), b = 2.5 * identity(1);
  EXPECT_NEAR(re(beta_transform(one_on(0.0, 1.0), a, b, k)), 0.555360367269795735206243006399, 1e-11);
}

TEST(Operators, InputChecks) {
  EXPECT_THROW(rl_integral(one_on(0.0, 1.0), 0.0, -1.0, 1.0, 1.0), Error);
  EXPECT_THROW(rl_derivative(one_on(0.0, 1.0), 0.0, 0.5, 1.5, 1.0), Error);
  EXPECT_THROW(weyl_integral(one_on(0.0, INFINITY), 1.0, 0.5, 1.0), Error);
}
