#include "kmf/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "kmf/error.hpp"

namespace kmf {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * std::numbers::pi);

// Re z >= 0.5
Complex lanczos_log_gamma(Complex z) {
  z -= 1.0;
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  Complex t = z + kLanczosG + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log sin(pi z) for Im z >= 0 without overflow
Complex log_sin_pi(Complex z) {
  const Complex i(0.0, 1.0);
  const double pi = std::numbers::pi;
  return -i * pi * z + std::log(1.0 - std::exp(2.0 * i * pi * z)) + std::log(Complex(0.0, 0.5));
}

}  // namespace

bool near_gamma_pole(Complex z, double eps) {
  if (z.real() > 0.5) return false;
  double n = std::round(z.real());
  return std::abs(z - n) <= eps * std::max(1.0, std::abs(n));
}

Complex complex_log_gamma(Complex z) {
  if (near_gamma_pole(z, 0.0)) throw Error(ErrorKind::DomainError, "gamma pole");
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  if (z.imag() < 0.0) return std::conj(complex_log_gamma(std::conj(z)));
  // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
  return std::log(std::numbers::pi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

Complex complex_gamma(Complex z) {
  if (z.imag() == 0.0 && z.real() == std::round(z.real())) {
    if (z.real() <= 0.0) throw Error(ErrorKind::DomainError, "gamma pole");
    if (z.real() <= 171.0) return std::tgamma(z.real());
  }
  if (z.real() < 0.5 && std::abs(z.imag()) < 20.0) {
    // direct reflection keeps relative accuracy near the poles
    const double pi = std::numbers::pi;
    return pi / (std::sin(pi * z) * std::exp(lanczos_log_gamma(1.0 - z)));
  }
  return std::exp(complex_log_gamma(z));
}

Complex complex_rgamma(Complex z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real())) return 0.0;
  if (z.real() < 0.5 && std::abs(z.imag()) < 20.0) {
    const double pi = std::numbers::pi;
    return std::sin(pi * z) * std::exp(lanczos_log_gamma(1.0 - z)) / pi;
  }
  return std::exp(-complex_log_gamma(z));
}

Complex log_k_gamma(Complex z, double k) {
  if (!(k > 0.0)) throw Error(ErrorKind::InvalidInput, "k must be positive");
  return (z / k - 1.0) * std::log(k) + complex_log_gamma(z / k);
}

Complex k_gamma(Complex z, double k) {
  if (!(k > 0.0)) throw Error(ErrorKind::InvalidInput, "k must be positive");
  return std::pow(k, z / k - 1.0) * complex_gamma(z / k);
}

Complex k_rgamma(Complex z, double k) {
  if (!(k > 0.0)) throw Error(ErrorKind::InvalidInput, "k must be positive");
  return std::pow(k, 1.0 - z / k) * complex_rgamma(z / k);
}

}  // namespace kmf
