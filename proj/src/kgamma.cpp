#include "kmf/kgamma.hpp"

namespace kmf {

namespace {

void require_k(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw Error(ErrorKind::InvalidInput, "k must be a positive real");
}

void require_gamma_domain(const EigenBasis& eb, double k) {
  for (Index i = 0; i < eb.dim(); ++i)
    if (near_gamma_pole(eb.eigenvalues()(i) / k))
      throw Error(ErrorKind::DomainError, "eigenvalue of M/k at a Gamma pole");
}

}  // namespace

Matrix k_gamma(const Matrix& m, double k) {
  require_k(k);
  EigenBasis eb(m);
  require_gamma_domain(eb, k);
  return eb.apply([k](Complex z) { return k_gamma(z, k); });
}

Matrix k_gamma_inv(const Matrix& m, double k) {
  require_k(k);
  EigenBasis eb(m);
  require_gamma_domain(eb, k);
  Vector g(eb.dim());
  for (Index i = 0; i < g.size(); ++i) {
    g(i) = k_gamma(eb.eigenvalues()(i), k);
    if (g(i) == 0.0 || !std::isfinite(std::abs(g(i))))
      throw Error(ErrorKind::SingularMatrix, "Gamma_k value not invertible in double precision");
  }
  Index i = 0;
  return eb.apply([&](Complex) { return 1.0 / g(i++); });
}

ScaledMatrix k_gamma_inv_scaled(const Matrix& m, double k) {
  require_k(k);
  EigenBasis eb(m);
  require_gamma_domain(eb, k);
  return eb.apply_log([k](Complex z) { return -log_k_gamma(z, k); });
}

Matrix k_beta(const Matrix& a, const Matrix& b, double k) {
  require_square(a, "a");
  require_square(b, "b");
  if (a.rows() != b.rows()) throw Error(ErrorKind::InvalidInput, "dimension mismatch");
  if ((a * b - b * a).norm() > 1e-12 * std::max(1.0, a.norm() * b.norm()))
    throw Error(ErrorKind::NonCommuting, "k_beta needs commuting arguments");
  return k_gamma(a, k) * k_gamma(b, k) * k_gamma_inv(a + b, k);
}

Matrix k_pochhammer(const Matrix& m, long n, double k) {
  require_square(m, "m");
  require_k(k);
  if (n < 0) throw Error(ErrorKind::InvalidInput, "n must be nonnegative");
  Matrix out = identity(m.rows());
  for (long j = 0; j < n; ++j) out = out * (m + (k * j) * identity(m.rows()));
  return out;
}

Matrix k_binomial_series(const Matrix& m, double k, Complex zeta, long nmax) {
  require_square(m, "m");
  require_k(k);
  if (std::abs(zeta) >= 1.0 / k) throw Error(ErrorKind::RadiusViolation, "|zeta| must be below 1/k");
  const Index n = m.rows();
  Matrix term = identity(n);
  Matrix sum = term;
  for (long j = 0; j < nmax; ++j) {
    term = term * (m + (k * j) * identity(n)) * (zeta / static_cast<double>(j + 1));
    sum += term;
  }
  return sum;
}

bool positive_stable(const Matrix& m) { return spectral_bounds(m).lower > 0.0; }

KPochhammerSequence::KPochhammerSequence(Matrix base, double k) : base_(std::move(base)), k_(k) {
  require_square(base_, "base");
  require_k(k);
  terms_.push_back(identity(base_.rows()));
}

const Matrix& KPochhammerSequence::operator[](long n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "n must be nonnegative");
  while (size() <= n) {
    long l = size() - 1;
    terms_.push_back(terms_.back() * (base_ + (k_ * l) * identity(base_.rows())));
  }
  return terms_[static_cast<std::size_t>(n)];
}

}  // namespace kmf
