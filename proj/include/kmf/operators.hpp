#pragma once

#include "kmf/quadrature.hpp"

namespace kmf {

struct DiffOptions {
  // Step is h_rel * max(1, |x|); shrunk when the stencil would cross a.
  double h_rel = 1e-5;
  double min_h = 1e-12;
};

// (1/k) int_0^1 t^{A/k - I} (1-t)^{B/k - I} f(t) dt, weights on the left.
Matrix beta_transform(const MatrixFunction1D& f, const Matrix& a, const Matrix& b, double k,
                      const QuadratureSpec& spec = {});

// int_0^inf e^{-st} f(t) dt; needs Re s > f.growth.
Matrix laplace_transform(const MatrixFunction1D& f, Complex s, const QuadratureSpec& spec = {});

// int_{-inf}^0 e^{i w^{1/alpha} z} f(z) dz. f is evaluated at z <= 0 with
// from_hi = -z; its decay field describes |f(-u)| as u grows.
Matrix frac_fourier(const MatrixFunction1D& f, double w, double alpha, const QuadratureSpec& spec = {});

// (1/(k Gamma_k(mu))) int_a^x (x-t)^{mu/k - 1} f(t) dt
Matrix rl_integral(const MatrixFunction1D& f, double a, double x, double mu, double k,
                   const QuadratureSpec& spec = {});

// d/dx I^{k - mu} f, 0 < mu < k
Matrix rl_derivative(const MatrixFunction1D& f, double a, double x, double mu, double k,
                     const QuadratureSpec& spec = {}, const DiffOptions& diff = {});

// (1/(k Gamma_k(alpha))) int_x^inf (t-x)^{alpha/k - 1} f(t) dt
Matrix weyl_integral(const MatrixFunction1D& f, double x, double alpha, double k, const QuadratureSpec& spec = {});

// -d/dx W^{k - alpha} f, 0 < alpha < k
Matrix weyl_derivative(const MatrixFunction1D& f, double x, double alpha, double k, const QuadratureSpec& spec = {},
                       const DiffOptions& diff = {});

// Five-point central difference with one Richardson step.
Matrix central_derivative(const std::function<Matrix(double)>& g, double x, double h);

}  // namespace kmf
