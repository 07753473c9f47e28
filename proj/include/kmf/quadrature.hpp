#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "kmf/matfun.hpp"

namespace kmf {

// A quadrature node. from_lo / from_hi are the distances to the interval ends,
// computed without cancellation so endpoint singularities can be evaluated
// accurately. from_hi is +inf on semi-infinite intervals.
struct Abscissa {
  double x = 0.0;
  double from_lo = 0.0;
  double from_hi = 0.0;
};

enum class Decay { None, Exponential, Algebraic };

// Matrix-valued function of a real variable on [lo, hi] (hi may be +inf).
// The evaluator must be safe to call concurrently if integrations run in parallel.
struct MatrixFunction1D {
  std::function<Matrix(const Abscissa&)> eval;
  Index dim = 1;
  double lo = 0.0;
  double hi = 1.0;
  // Behaviour at +inf: exponential decay e^{-rate t} or algebraic t^{-rate}.
  Decay decay = Decay::None;
  double decay_rate = 1.0;
  // Length scale for the semi-infinite maps.
  double scale = 1.0;
  // Laplace transforms need |f(t)| <= c e^{growth t}.
  double growth = 0.0;
  // Power-law exponents of f at lo and hi, when known.
  std::optional<std::pair<double, double>> endpoint_exponents;

  Matrix operator()(double t) const { return eval(Abscissa{t, t - lo, hi - t}); }

  static MatrixFunction1D constant(const Matrix& value, double lo = 0.0, double hi = 1.0);
  static MatrixFunction1D of(Index dim, double lo, double hi, std::function<Matrix(double)> fn);
};

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_refinements = 10;
  // Extra power-law exponents at (lo, hi) supplied by the caller.
  std::optional<std::pair<double, double>> endpoint_exponents;
};

// Tanh-sinh on finite intervals; exp-sinh style maps on [lo, inf) chosen by
// the declared decay.
Matrix integrate(const MatrixFunction1D& f, const QuadratureSpec& spec = {});

}  // namespace kmf
