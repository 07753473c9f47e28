#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kmf/kgamma.hpp"

namespace kmf {

// Parameters of  r+1 R_{s,k}(A, P_1..P_r; Q_1..Q_s; B, C; z).
struct ParamSet {
  double k = 1.0;
  Matrix A;
  std::vector<Matrix> P;
  std::vector<Matrix> Q;
  Matrix B;
  Matrix C;

  Index dim() const { return A.rows(); }
  std::size_t r() const { return P.size(); }
  std::size_t s() const { return Q.size(); }
};

// Shapes, finiteness, k > 0 and invertibility of every Q_j + k l I, l <= lmax.
void validate(const ParamSet& p, long lmax = 500);

struct EvalOptions {
  double tol = 1e-14;
  long max_terms = 500;
  bool radius_guard = true;
};

enum class ConvergenceTag {
  DivergesForNonzeroZ,
  EntireInZ,
  InsideRadius,
  OnCircleAbsolute,
  OnCircleDiverges,
  OnCircleConditional,
};

std::string_view to_string(ConvergenceTag tag);

struct ConvergenceClass {
  ConvergenceTag tag = ConvergenceTag::EntireInZ;
  std::optional<double> radius;
};

struct EvalResult {
  Matrix value;
  long terms_used = 0;
  double residual_estimate = 0.0;
  ConvergenceClass convergence;
  std::vector<std::string> warnings;
};

ConvergenceClass classify_convergence(const ParamSet& p, Complex z);
// Matrix argument: classified through its spectral radius.
ConvergenceClass classify_convergence(const ParamSet& p, const Matrix& z);

// Series evaluator with a cached coefficient list
//   c_l = (1/l!) (A)_l prod (P_i)_l [prod (Q_j)_l]^-1 Gamma_k^-1(lB + C).
// Not thread-safe; build one per thread.
class RSeries {
 public:
  explicit RSeries(ParamSet p);

  const ParamSet& params() const { return p_; }
  const ScaledMatrix& coefficient(long l);

  EvalResult evaluate(Complex z, const EvalOptions& opts = {});
  // Z^l multiplies each coefficient from the left.
  EvalResult evaluate(const Matrix& z, const EvalOptions& opts = {});

  // Sum over l of transform(l, z^l c_l) under the same stopping rule.
  using Transform = std::function<Matrix(long, const Matrix&)>;
  EvalResult accumulate(Complex z, const Transform& transform, const EvalOptions& opts = {});

  // log ||z^l c_l|| for l < n (no stopping, no guard).
  std::vector<double> term_log_norms(Complex z, long n);

 private:
  void extend();

  ParamSet p_;
  std::vector<ScaledMatrix> coeffs_;
  ScaledMatrix poch_a_;
  std::vector<ScaledMatrix> poch_p_;
  std::vector<ScaledMatrix> poch_q_;
  double log_factorial_ = 0.0;
};

EvalResult eval_series(const ParamSet& p, Complex z, const EvalOptions& opts = {});
EvalResult eval_series(const ParamSet& p, const Matrix& z, const EvalOptions& opts = {});

struct ParamRef {
  enum class Kind { A, P, Q, C };
  Kind kind = Kind::A;
  std::size_t index = 0;

  static ParamRef a() { return {Kind::A, 0}; }
  static ParamRef p(std::size_t i) { return {Kind::P, i}; }
  static ParamRef q(std::size_t j) { return {Kind::Q, j}; }
  static ParamRef c() { return {Kind::C, 0}; }
};

ParamSet shift_param(const ParamSet& p, ParamRef which, long steps, long lmax = 500);

// theta = z d/dz applied order times, term by term.
Matrix theta_apply(const ParamSet& p, Complex z, const EvalOptions& opts = {}, int order = 1);

// D_z^mu by the closed form with shifted parameters.
Matrix derivative(const ParamSet& p, Complex z, int mu, const EvalOptions& opts = {});

ParamSet mittag_leffler(const Matrix& a, const Matrix& b, const Matrix& c, double k);

enum class SpecialKind { KFunction, MSeries, RRSClassic, HypergeometricF };

// Checks the reduction constraints on args. RRSClassic prepends Q_1 = I to
// args.Q; the others return args unchanged.
ParamSet special_case(SpecialKind kind, const ParamSet& args);

// r+1 F_{s,k}(A, P; Q; z): the series without the Gamma_k^-1(lB + C) factor,
// realized exactly as B = 0, C = kI since Gamma_k(kI) = I.
ParamSet hypergeometric_k(const Matrix& a, const std::vector<Matrix>& p, const std::vector<Matrix>& q, double k);

}  // namespace kmf
