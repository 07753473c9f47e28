#pragma once

#include <vector>

#include "kmf/matfun.hpp"

namespace kmf {

// Gamma_k(M) = k^(M/k - I) Gamma(M/k)
Matrix k_gamma(const Matrix& m, double k);
Matrix k_gamma_inv(const Matrix& m, double k);
// Gamma_k^-1(M) as a scaled matrix, for arguments whose Gamma values overflow.
ScaledMatrix k_gamma_inv_scaled(const Matrix& m, double k);

// Gamma_k(a) Gamma_k(b) Gamma_k^-1(a + b); a and b must commute.
Matrix k_beta(const Matrix& a, const Matrix& b, double k);

// M (M + kI) ... (M + (n-1)kI)
Matrix k_pochhammer(const Matrix& m, long n, double k);

// Partial sums of (1 - k zeta)^(-M/k) = sum_n (M)_{n,k} zeta^n / n!
Matrix k_binomial_series(const Matrix& m, double k, Complex zeta, long nmax);

// True when every eigenvalue lies in the positive half plane.
bool positive_stable(const Matrix& m);

class KPochhammerSequence {
 public:
  KPochhammerSequence(Matrix base, double k);

  const Matrix& operator[](long n);
  const Matrix& base() const { return base_; }
  double k() const { return k_; }
  long size() const { return static_cast<long>(terms_.size()); }

 private:
  Matrix base_;
  double k_;
  std::vector<Matrix> terms_;
};

}  // namespace kmf
