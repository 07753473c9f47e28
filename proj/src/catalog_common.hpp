#pragma once

// Shared helpers for the identity catalog.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmf/kgamma.hpp"
#include "kmf/verify.hpp"

namespace kmf::detail {

inline constexpr double kSeriesTol = 1e-9;
inline constexpr double kOdeTol = 1e-7;
inline constexpr double kQuadTol = 1e-6;

using Thunk = std::function<Sides()>;

// Thrown by a builder when a draw misses a precondition; the driver redraws.
struct Precondition : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const char* what) {
  if (!ok) throw Precondition(what);
}

struct Range {
  double lo;
  double hi;
};

// Eigenvalue ranges are in units of k.
struct Recipe {
  int r_min = 0, r_max = 2;
  int s_min = 0, s_max = 2;
  bool entire = true;  // force r <= s
  Range a{0.5, 2.5};
  Range p{0.5, 2.5};
  Range q{1.5, 3.5};
  Range b{0.6, 1.5};
  Range c{0.5, 2.5};
};

ParamSet draw_params(SampleContext& ctx, const Recipe& recipe);
// |z| up to entire_max for entire series, up to 0.6/k inside the radius.
Complex draw_argument(SampleContext& ctx, const ParamSet& p, double entire_max = 1.0);

inline Matrix series(const ParamSet& p, Complex z, const VerifyOptions& o) { return eval_series(p, z, o.eval).value; }
inline Matrix series(const ParamSet& p, const Matrix& z, const VerifyOptions& o) {
  return eval_series(p, z, o.eval).value;
}

inline Matrix kI(const ParamSet& p, double c = 1.0) { return (c * p.k) * identity(p.dim()); }
inline Matrix eye(const ParamSet& p) { return identity(p.dim()); }

// x^M for a positive real x
inline Matrix xpow(double x, const Matrix& m) { return mat_power(x, m); }
Matrix inv(const Matrix& m);

// Direct coefficient-by-coefficient series with fresh Pochhammer products;
// flags drop the (A)_l factor, the 1/l! factor or the Gamma_k^-1 factor.
struct DirectSeries {
  bool with_a = true;
  bool with_factorial = true;
  bool with_gamma = true;
};
Matrix direct_series(const ParamSet& p, Complex z, DirectSeries form = {});

// sum_l falling(E0 + l D, mu) x^(E0 + l D - mu I) c_l for real x > 0, where
// c_l are the series coefficients; the mu-th derivative of x^E0 R(x^D) for
// commuting E0, D and a coefficient list built on matching parameters.
Matrix power_series_derivative(RSeries& series, double x, const Matrix& e0, const Matrix& d, int mu,
                               const VerifyOptions& o);

// Series with its coefficient list cached across quadrature nodes.
class CachedSeries {
 public:
  CachedSeries(const ParamSet& p, const EvalOptions& eval) : s_(std::make_shared<RSeries>(p)), eval_(eval) {}
  Matrix operator()(Complex z) const { return s_->evaluate(z, eval_).value; }
  Matrix operator()(const Matrix& z) const { return s_->evaluate(z, eval_).value; }

 private:
  std::shared_ptr<RSeries> s_;
  EvalOptions eval_;
};

// A copy of p with new numerator and denominator lists.
ParamSet with_lists(const ParamSet& p, const Matrix& a, std::vector<Matrix> num, std::vector<Matrix> den);
std::vector<Matrix> without(const std::vector<Matrix>& v, std::size_t i);
// {(E + i k I)/m : i = 0..m-1}
std::vector<Matrix> spread(const Matrix& e, int m, double k);
std::size_t pick(SampleContext& ctx, std::size_t n);

// Integrand on [lo, hi] with known endpoint exponents.
MatrixFunction1D integrand(Index dim, double lo, double hi, std::function<Matrix(const Abscissa&)> fn,
                           double lo_exp = 0.0, double hi_exp = 0.0);

void add_series_cases(std::vector<IdentityCase>& out);
void add_integral_cases(std::vector<IdentityCase>& out);
void add_transform_cases(std::vector<IdentityCase>& out);

}  // namespace kmf::detail
