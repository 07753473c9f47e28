#include "kmf/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace kmf {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kTMax = 6.0;
constexpr int kNegligibleRun = 5;

struct Node {
  Abscissa at;
  double weight = 0.0;  // dx/dt
};

enum class Map { Finite, ExpDecay, Algebraic };

Node finite_node(double t, double lo, double hi) {
  const double s = kHalfPi * std::sinh(t);
  const double len = hi - lo;
  Node n;
  n.at.from_lo = len / (1.0 + std::exp(-2.0 * s));
  n.at.from_hi = len / (1.0 + std::exp(2.0 * s));
  n.at.x = n.at.from_lo <= n.at.from_hi ? lo + n.at.from_lo : hi - n.at.from_hi;
  const double ch = std::exp(s) + std::exp(-s);
  n.weight = 0.5 * len * (4.0 / (ch * ch)) * kHalfPi * std::cosh(t);
  return n;
}

// u = lo + L * (-log v) with v the tanh-sinh node on (0, 1)
Node exp_node(double t, double lo, double scale) {
  const double s = kHalfPi * std::sinh(t);
  const double ell = s >= 0.0 ? std::log1p(std::exp(-2.0 * s)) : -2.0 * s + std::log1p(std::exp(2.0 * s));
  Node n;
  n.at.from_lo = scale * ell;
  n.at.from_hi = INFINITY;
  n.at.x = lo + n.at.from_lo;
  n.weight = scale * std::numbers::pi * std::cosh(t) / (1.0 + std::exp(2.0 * s));
  return n;
}

// u = lo + L e^{2s}
Node algebraic_node(double t, double lo, double scale) {
  const double s = kHalfPi * std::sinh(t);
  const double e = std::exp(2.0 * s);
  Node n;
  n.at.from_lo = scale * e;
  n.at.from_hi = INFINITY;
  n.at.x = lo + n.at.from_lo;
  n.weight = std::numbers::pi * scale * std::cosh(t) * e;
  return n;
}

void check_exponents(const std::optional<std::pair<double, double>>& e) {
  if (e && (e->first <= -1.0 || e->second <= -1.0))
    throw Error(ErrorKind::IntegrandSingular, "endpoint exponent <= -1 is not integrable");
}

}  // namespace

MatrixFunction1D MatrixFunction1D::constant(const Matrix& value, double lo, double hi) {
  MatrixFunction1D f;
  f.eval = [value](const Abscissa&) { return value; };
  f.dim = value.rows();
  f.lo = lo;
  f.hi = hi;
  return f;
}

MatrixFunction1D MatrixFunction1D::of(Index dim, double lo, double hi, std::function<Matrix(double)> fn) {
  MatrixFunction1D f;
  f.eval = [fn = std::move(fn)](const Abscissa& a) { return fn(a.x); };
  f.dim = dim;
  f.lo = lo;
  f.hi = hi;
  return f;
}

Matrix integrate(const MatrixFunction1D& f, const QuadratureSpec& spec) {
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0))
    throw Error(ErrorKind::InvalidInput, "quadrature tolerances must be positive");
  if (!f.eval) throw Error(ErrorKind::InvalidInput, "integrand has no evaluator");
  check_exponents(f.endpoint_exponents);
  check_exponents(spec.endpoint_exponents);
  if (!(f.lo < f.hi) || std::isnan(f.lo) || std::isinf(f.lo))
    throw Error(ErrorKind::InvalidInput, "integration interval must satisfy lo < hi with finite lo");

  Map map = Map::Finite;
  if (std::isinf(f.hi)) {
    if (f.decay == Decay::Exponential) map = Map::ExpDecay;
    else if (f.decay == Decay::Algebraic) {
      if (!(f.decay_rate > 1.0))
        throw Error(ErrorKind::NonDecayingIntegrand, "algebraic decay exponent must exceed 1 on [lo, inf)");
      map = Map::Algebraic;
    } else {
      throw Error(ErrorKind::NonDecayingIntegrand, "semi-infinite interval needs declared decay");
    }
  }
  double scale = f.scale;
  if (map == Map::ExpDecay) scale = f.scale / std::max(f.decay_rate, 1e-3);

  auto node = [&](double t) {
    switch (map) {
      case Map::Finite: return finite_node(t, f.lo, f.hi);
      case Map::ExpDecay: return exp_node(t, f.lo, scale);
      case Map::Algebraic: break;
    }
    return algebraic_node(t, f.lo, scale);
  };

  const Index n = f.dim;
  Matrix prev = Matrix::Zero(n, n);
  for (int level = 0; level <= spec.max_refinements; ++level) {
    const double h = std::ldexp(1.0, -level);
    const long step = level == 0 ? 1 : 2;
    Matrix sum = Matrix::Zero(n, n);
    auto add = [&](double t) {
      Node nd = node(t);
      if (nd.weight == 0.0) return 0.0;
      Matrix v = f.eval(nd.at);
      if (!v.allFinite()) throw Error(ErrorKind::NonConvergentQuadrature, "integrand not finite at a node");
      v *= nd.weight;
      sum += v;
      return v.norm();
    };
    if (level == 0) add(0.0);
    for (int side : {1, -1}) {
      int negligible = 0;
      for (long j = 1; static_cast<double>(j) * h <= kTMax; j += step) {
        const double t = side * static_cast<double>(j) * h;
        const double c = add(t);
        const double ref = std::max((0.5 * prev + h * sum).norm(), 1e-300);
        negligible = (c * h <= 1e-18 * ref) ? negligible + 1 : 0;
        if (negligible >= kNegligibleRun && std::abs(t) >= 2.0) break;
      }
    }
    Matrix cur = level == 0 ? Matrix(h * sum) : Matrix(0.5 * prev + h * sum);
    if (level >= 3) {
      const double diff = (cur - prev).norm();
      if (diff <= std::max(spec.abs_tol, spec.rel_tol * cur.norm())) return cur;
    }
    prev = cur;
  }
  throw Error(ErrorKind::NonConvergentQuadrature,
              "refinement budget of " + std::to_string(spec.max_refinements) + " levels exhausted");
}

}  // namespace kmf
