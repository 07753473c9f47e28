#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "kmf/operators.hpp"
#include "kmf/rrsk.hpp"

namespace kmf {

struct VerifyOptions {
  EvalOptions eval{1e-15, 2000, true};
  QuadratureSpec quad{1e-13, 1e-13, 11, std::nullopt};
  DiffOptions diff;
};

struct SampleFailure {
  std::uint64_t seed = 0;
  double residual = 0.0;  // +inf when evaluation threw
  std::string message;
};

struct IdentityReport {
  std::string id;
  std::string paths;
  long samples = 0;
  double max_rel_residual = 0.0;
  double mean_rel_residual = 0.0;
  double tol = 0.0;
  std::vector<SampleFailure> failures;
  bool passed = false;
};

// Draws matrices V diag(lambda) V^-1 over one fixed, well-conditioned V, so
// every matrix from one sampler commutes with every other.
class CommutingFamilySampler {
 public:
  CommutingFamilySampler(std::uint64_t seed, Index dim);

  Index dim() const { return v_.rows(); }
  const Matrix& basis() const { return v_; }

  // Eigenvalues with real part in [lo, hi] and imaginary part in [-im, im].
  Matrix draw(double lo, double hi, double im = 0.2);
  Matrix from_eigenvalues(const Vector& lambda) const;
  Vector eigenvalues_of(const Matrix& m) const;  // diag(V^-1 m V)
  Matrix scalar(Complex c) const { return c * identity(dim()); }

  double uniform(double lo, double hi);
  int integer(int lo, int hi);
  // Random phase, modulus in [lo, hi].
  Complex complex_modulus(double lo, double hi);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  Matrix v_;
  Matrix vinv_;
};

struct Sides {
  Matrix lhs;
  Matrix rhs;
};

struct SampleContext {
  CommutingFamilySampler& draw;
  double k;
  long index;
  const VerifyOptions& opts;
};

struct IdentityCase {
  std::string id;
  std::string paths;        // "<lhs path> | <rhs path>"
  std::string corollaries;  // displayed equations covered as special cases
  double tol = 1e-9;
  // Draws an admissible sample and returns the deferred evaluation of both sides.
  std::function<std::function<Sides()>(SampleContext&)> build;
};

std::vector<IdentityCase> catalog();

IdentityReport verify(std::string_view id, long samples, std::uint64_t seed, const VerifyOptions& opts = {});
// Runs every catalog id starting with filter (all when empty).
std::vector<IdentityReport> verify_all(long samples, std::uint64_t seed, const VerifyOptions& opts = {},
                                       std::string_view filter = "");

}  // namespace kmf
