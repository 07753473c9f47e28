#include <Eigen/SVD>
#include <numbers>

#include "kmf/verify.hpp"

namespace kmf {

CommutingFamilySampler::CommutingFamilySampler(std::uint64_t seed, Index dim) : rng_(seed) {
  if (dim < 1) throw Error(ErrorKind::InvalidInput, "sampler dimension must be positive");
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int attempt = 0; attempt < 50; ++attempt) {
    Matrix v = identity(dim);
    for (Index i = 0; i < dim; ++i)
      for (Index j = 0; j < dim; ++j) v(i, j) += 0.35 * Complex(normal(rng_), normal(rng_));
    Eigen::JacobiSVD<Matrix> svd(v);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) > 0.0 && sv(0) / sv(sv.size() - 1) <= 8.0) {
      v_ = v;
      vinv_ = v.partialPivLu().inverse();
      return;
    }
  }
  throw Error(ErrorKind::SamplerExhausted, "no well-conditioned eigenbasis found");
}

Matrix CommutingFamilySampler::from_eigenvalues(const Vector& lambda) const {
  return v_ * lambda.asDiagonal() * vinv_;
}

Vector CommutingFamilySampler::eigenvalues_of(const Matrix& m) const { return (vinv_ * m * v_).diagonal(); }

Matrix CommutingFamilySampler::draw(double lo, double hi, double im) {
  Vector lambda(dim());
  for (Index i = 0; i < dim(); ++i) lambda(i) = Complex(uniform(lo, hi), uniform(-im, im));
  return from_eigenvalues(lambda);
}

double CommutingFamilySampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

int CommutingFamilySampler::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Complex CommutingFamilySampler::complex_modulus(double lo, double hi) {
  const double r = uniform(lo, hi);
  return std::polar(r, uniform(-std::numbers::pi, std::numbers::pi));
}

}  // namespace kmf
