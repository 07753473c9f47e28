#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "kmf/error.hpp"
#include "kmf/gamma.hpp"

namespace kmf {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr double kDefaultConditionCap = 1e8;

inline Matrix identity(Index n) { return Matrix::Identity(n, n); }

template <class Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

// ||lhs - rhs||_F / max(1, ||rhs||_F)
template <class L, class R>
double relative_residual(const Eigen::MatrixBase<L>& lhs, const Eigen::MatrixBase<R>& rhs) {
  return (lhs - rhs).norm() / std::max(1.0, rhs.norm());
}

void require_square(const Matrix& m, const char* what);

// M(A) and m(A): max and min real part over the spectrum.
struct SpectralBounds {
  double upper = 0.0;
  double lower = 0.0;
};

SpectralBounds spectral_bounds(const Matrix& m);
Vector eigenvalues(const Matrix& m);
double spectral_radius(const Matrix& m);

// A matrix stored as mat * exp(log_scale). Used where factorials and
// Pochhammer products leave the double range.
struct ScaledMatrix {
  Matrix mat;
  double log_scale = 0.0;

  static ScaledMatrix from(const Matrix& m);
  void normalize();
  Matrix value() const;
  double log_norm() const;
};

ScaledMatrix operator*(const ScaledMatrix& a, const ScaledMatrix& b);
ScaledMatrix operator*(const ScaledMatrix& a, const Matrix& b);
ScaledMatrix operator*(const Matrix& a, const ScaledMatrix& b);
ScaledMatrix inverse(const ScaledMatrix& a, ErrorKind on_singular = ErrorKind::SingularMatrix);

// Cached eigendecomposition M = V diag(lambda) V^-1. Throws DefectiveMatrix
// when the eigenvector matrix is too ill-conditioned to trust.
class EigenBasis {
 public:
  explicit EigenBasis(const Matrix& m, double condition_cap = kDefaultConditionCap);

  const Vector& eigenvalues() const { return lambda_; }
  double condition() const { return condition_; }
  Index dim() const { return lambda_.size(); }

  template <class F>
  Matrix apply(F&& f) const {
    Vector d(lambda_.size());
    for (Index i = 0; i < d.size(); ++i) d(i) = f(lambda_(i));
    if (!d.allFinite()) throw Error(ErrorKind::DomainError, "matrix function not finite on the spectrum");
    return v_ * d.asDiagonal() * vinv_;
  }

  // f returns log of the scalar function; the result is renormalized by the
  // largest real part so huge or tiny values stay representable.
  template <class F>
  ScaledMatrix apply_log(F&& logf) const {
    Vector d(lambda_.size());
    double shift = -INFINITY;
    for (Index i = 0; i < d.size(); ++i) {
      d(i) = logf(lambda_(i));
      shift = std::max(shift, d(i).real());
    }
    if (!std::isfinite(shift)) throw Error(ErrorKind::DomainError, "matrix function not finite on the spectrum");
    for (Index i = 0; i < d.size(); ++i) d(i) = std::exp(d(i) - shift);
    ScaledMatrix out{v_ * d.asDiagonal() * vinv_, shift};
    out.normalize();
    return out;
  }

 private:
  Matrix v_;
  Matrix vinv_;
  Vector lambda_;
  double condition_ = 1.0;
};

template <class Derived, class F>
Matrix mat_func(const Eigen::MatrixBase<Derived>& m, F&& f, double condition_cap = kDefaultConditionCap) {
  return EigenBasis(Matrix(m), condition_cap).apply(std::forward<F>(f));
}

// x^M for many positive x sharing one eigendecomposition of M.
class PowerFamily {
 public:
  explicit PowerFamily(const Matrix& m) : basis_(m) {}
  Matrix operator()(double x) const {
    const double lx = std::log(x);
    return basis_.apply([lx](Complex z) { return std::exp(z * lx); });
  }
  // smallest real part of the exponent
  double lower() const { return basis_.eigenvalues().real().minCoeff(); }

 private:
  EigenBasis basis_;
};

// base^M for a positive real base
Matrix mat_power(double base, const Matrix& m);
Matrix mat_exp(const Matrix& m);

// True when M + k n I is invertible for every n in [0, lmax].
bool check_shift_invertible(const Matrix& m, double k, long lmax, double eps = 1e-10);

// ||AB - BA|| <= tol ||A|| ||B||
bool commutes(const Matrix& a, const Matrix& b, double tol = 1e-10);

}  // namespace kmf
