#include "kmf/matfun.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>

namespace kmf {

void require_square(const Matrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw Error(ErrorKind::InvalidInput, std::string(what) + " must be a non-empty square matrix");
  if (!m.allFinite()) throw Error(ErrorKind::InvalidInput, std::string(what) + " has non-finite entries");
}

Vector eigenvalues(const Matrix& m) {
  require_square(m, "matrix");
  // scale to unit norm; subnormal entries stall the QR iteration
  const double scale = m.cwiseAbs().maxCoeff();
  if (scale == 0.0) return Vector::Zero(m.rows());
  Eigen::ComplexEigenSolver<Matrix> es(m / scale, false);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::EigenFailure, "eigenvalue iteration did not converge");
  return es.eigenvalues() * scale;
}

SpectralBounds spectral_bounds(const Matrix& m) {
  Vector ev = eigenvalues(m);
  SpectralBounds b{-INFINITY, INFINITY};
  for (Index i = 0; i < ev.size(); ++i) {
    b.upper = std::max(b.upper, ev(i).real());
    b.lower = std::min(b.lower, ev(i).real());
  }
  return b;
}

double spectral_radius(const Matrix& m) {
  Vector ev = eigenvalues(m);
  return ev.cwiseAbs().maxCoeff();
}

ScaledMatrix ScaledMatrix::from(const Matrix& m) {
  ScaledMatrix s{m, 0.0};
  s.normalize();
  return s;
}

void ScaledMatrix::normalize() {
  double n = mat.norm();
  if (n > 0.0 && std::isfinite(n)) {
    mat /= n;
    log_scale += std::log(n);
  } else if (n == 0.0) {
    log_scale = -INFINITY;
  }
}

Matrix ScaledMatrix::value() const {
  if (log_scale == -INFINITY) return Matrix::Zero(mat.rows(), mat.cols());
  return mat * std::exp(log_scale);
}

double ScaledMatrix::log_norm() const {
  if (log_scale == -INFINITY) return -INFINITY;
  return log_scale + std::log(mat.norm());
}

ScaledMatrix operator*(const ScaledMatrix& a, const ScaledMatrix& b) {
  ScaledMatrix out{a.mat * b.mat, a.log_scale + b.log_scale};
  out.normalize();
  return out;
}

ScaledMatrix operator*(const ScaledMatrix& a, const Matrix& b) { return a * ScaledMatrix::from(b); }
ScaledMatrix operator*(const Matrix& a, const ScaledMatrix& b) { return ScaledMatrix::from(a) * b; }

ScaledMatrix inverse(const ScaledMatrix& a, ErrorKind on_singular) {
  Eigen::FullPivLU<Matrix> lu(a.mat);
  // a.mat has unit norm, so an absolute pivot threshold is meaningful
  lu.setThreshold(1e-13);
  if (!lu.isInvertible() || a.log_scale == -INFINITY) throw Error(on_singular, "matrix is singular");
  ScaledMatrix out{lu.inverse(), -a.log_scale};
  out.normalize();
  return out;
}

EigenBasis::EigenBasis(const Matrix& m, double condition_cap) {
  require_square(m, "matrix");
  const double scale = m.cwiseAbs().maxCoeff();
  Eigen::ComplexEigenSolver<Matrix> es(scale > 0.0 ? Matrix(m / scale) : m, true);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::EigenFailure, "eigenvalue iteration did not converge");
  lambda_ = scale > 0.0 ? Vector(es.eigenvalues() * scale) : es.eigenvalues();
  v_ = es.eigenvectors();
  if (m.rows() == 1) {
    v_.setOnes();
    vinv_.setOnes(1, 1);
    return;
  }
  Eigen::JacobiSVD<Matrix> svd(v_);
  const auto& sv = svd.singularValues();
  double smin = sv(sv.size() - 1);
  condition_ = smin > 0.0 ? sv(0) / smin : INFINITY;
  if (!(condition_ <= condition_cap))
    throw Error(ErrorKind::DefectiveMatrix, "eigenvector matrix condition number " + std::to_string(condition_));
  vinv_ = v_.partialPivLu().inverse();
}

Matrix mat_power(double base, const Matrix& m) {
  if (!(base > 0.0)) throw Error(ErrorKind::DomainError, "mat_power needs a positive base");
  if (base == 1.0) return identity(m.rows());
  const double lb = std::log(base);
  return mat_func(m, [lb](Complex z) { return std::exp(z * lb); });
}

Matrix mat_exp(const Matrix& m) {
  return mat_func(m, [](Complex z) { return std::exp(z); });
}

bool check_shift_invertible(const Matrix& m, double k, long lmax, double eps) {
  Vector ev = eigenvalues(m);
  for (Index i = 0; i < ev.size(); ++i) {
    double n = std::round(-ev(i).real() / k);
    if (n < 0.0 || n > static_cast<double>(lmax)) continue;
    if (std::abs(ev(i) + k * n) < eps * std::max(1.0, k * n)) return false;
  }
  return true;
}

bool commutes(const Matrix& a, const Matrix& b, double tol) {
  return (a * b - b * a).norm() <= tol * std::max(1.0, a.norm() * b.norm());
}

}  // namespace kmf
