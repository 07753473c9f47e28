#pragma once

#include <complex>

namespace kmf {

using Complex = std::complex<double>;

// Principal-ish log gamma. Imaginary part is continuous off the negative
// real axis but is not the branch that tracks arg Gamma globally.
Complex complex_log_gamma(Complex z);
Complex complex_gamma(Complex z);
// 1/Gamma(z); exactly zero at the poles.
Complex complex_rgamma(Complex z);

// Gamma_k(z) = k^(z/k - 1) Gamma(z/k)
Complex log_k_gamma(Complex z, double k);
Complex k_gamma(Complex z, double k);
Complex k_rgamma(Complex z, double k);

// True when z lies within eps (relative) of 0, -1, -2, ...
bool near_gamma_pole(Complex z, double eps = 1e-12);

}  // namespace kmf
