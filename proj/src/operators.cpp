#include "kmf/operators.hpp"

#include <cmath>

#include "kmf/kgamma.hpp"

namespace kmf {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw Error(ErrorKind::InvalidInput, std::string(what) + " must be positive");
}

std::optional<std::pair<double, double>> with_exponents(const MatrixFunction1D& f, double lo_extra, double hi_extra) {
  double lo = lo_extra, hi = hi_extra;
  if (f.endpoint_exponents) {
    lo += f.endpoint_exponents->first;
    hi += f.endpoint_exponents->second;
  }
  return std::make_pair(lo, hi);
}

double step_for(double a, double x, const DiffOptions& diff) {
  const double scale = std::max(1.0, std::abs(x));
  double h = diff.h_rel * scale;
  while (x - 2.0 * h <= a) {
    h *= 0.5;
    if (h < diff.min_h * scale) throw Error(ErrorKind::StepTooSmall, "difference step collapsed near the lower limit");
  }
  return h;
}

}  // namespace

Matrix central_derivative(const std::function<Matrix(double)>& g, double x, double h) {
  auto five = [&](double hh) -> Matrix {
    return (g(x - 2.0 * hh) - 8.0 * g(x - hh) + 8.0 * g(x + hh) - g(x + 2.0 * hh)) / (12.0 * hh);
  };
  Matrix d1 = five(h);
  Matrix d2 = five(0.5 * h);
  return (16.0 * d2 - d1) / 15.0;
}

Matrix beta_transform(const MatrixFunction1D& f, const Matrix& a, const Matrix& b, double k,
                      const QuadratureSpec& spec) {
  require_positive(k, "k");
  require_square(a, "A");
  require_square(b, "B");
  if (a.rows() != f.dim || b.rows() != f.dim) throw Error(ErrorKind::InvalidInput, "dimension mismatch");
  if (!positive_stable(a) || !positive_stable(b))
    throw Error(ErrorKind::DomainError, "k-Beta transform weights must be positive stable");
  const Matrix id = identity(f.dim);
  PowerFamily pa(a / k - id), pb(b / k - id);
  MatrixFunction1D g;
  g.dim = f.dim;
  g.lo = 0.0;
  g.hi = 1.0;
  g.eval = [&](const Abscissa& t) -> Matrix { return pa(t.from_lo) * pb(t.from_hi) * f.eval(t); };
  QuadratureSpec s = spec;
  s.endpoint_exponents = with_exponents(f, pa.lower(), pb.lower());
  return integrate(g, s) / k;
}

Matrix laplace_transform(const MatrixFunction1D& f, Complex s, const QuadratureSpec& spec) {
  if (!(s.real() > f.growth)) throw Error(ErrorKind::GrowthViolation, "Re s must exceed the declared growth rate");
  MatrixFunction1D g;
  g.dim = f.dim;
  g.lo = 0.0;
  g.hi = INFINITY;
  g.decay = Decay::Exponential;
  g.decay_rate = s.real() - f.growth;
  g.scale = f.scale;
  g.eval = [&](const Abscissa& t) -> Matrix { return std::exp(-s * t.x) * f.eval(t); };
  QuadratureSpec sp = spec;
  sp.endpoint_exponents = with_exponents(f, 0.0, 0.0);
  return integrate(g, sp);
}

Matrix frac_fourier(const MatrixFunction1D& f, double w, double alpha, const QuadratureSpec& spec) {
  require_positive(w, "w");
  require_positive(alpha, "alpha");
  const double omega = std::pow(w, 1.0 / alpha);
  auto at = [&](double u) { return f.eval(Abscissa{-u, INFINITY, u}); };

  // probe |f(-u)| along the ray
  double peak = 0.0, last = 0.0;
  for (double u : {0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0}) {
    last = at(u * f.scale).norm();
    if (!std::isfinite(last)) throw Error(ErrorKind::NonDecayingIntegrand, "integrand not finite on the ray");
    peak = std::max(peak, last);
  }
  if (peak == 0.0) return Matrix::Zero(f.dim, f.dim);
  if (last > 1e-8 * peak) throw Error(ErrorKind::NonDecayingIntegrand, "f(z) does not decay as z -> -inf");
  double rate = f.decay == Decay::Exponential ? f.decay_rate
                                              : std::max(1e-2, std::log(peak / std::max(last, 1e-300)) / (64.0 * f.scale));

  MatrixFunction1D g;
  g.dim = f.dim;
  g.lo = 0.0;
  g.hi = INFINITY;
  g.decay = Decay::Exponential;
  g.decay_rate = rate;
  g.scale = 1.0;
  g.eval = [&](const Abscissa& u) -> Matrix {
    return std::exp(Complex(0.0, -omega * u.x)) * f.eval(Abscissa{-u.x, INFINITY, u.from_lo});
  };
  return integrate(g, spec);
}

Matrix rl_integral(const MatrixFunction1D& f, double a, double x, double mu, double k, const QuadratureSpec& spec) {
  require_positive(k, "k");
  require_positive(mu, "mu");
  if (!(x > a)) throw Error(ErrorKind::InvalidInput, "rl_integral needs x > a");
  const double e = mu / k - 1.0;
  MatrixFunction1D g;
  g.dim = f.dim;
  g.lo = a;
  g.hi = x;
  g.eval = [&](const Abscissa& t) -> Matrix { return std::pow(t.from_hi, e) * f.eval(t); };
  QuadratureSpec s = spec;
  s.endpoint_exponents = with_exponents(f, 0.0, e);
  return integrate(g, s) * (1.0 / (k * k_gamma(Complex(mu), k)).real());
}

Matrix rl_derivative(const MatrixFunction1D& f, double a, double x, double mu, double k, const QuadratureSpec& spec,
                     const DiffOptions& diff) {
  require_positive(k, "k");
  if (!(mu > 0.0 && mu < k)) throw Error(ErrorKind::InvalidInput, "rl_derivative needs 0 < mu < k");
  if (!(x > a)) throw Error(ErrorKind::InvalidInput, "rl_derivative needs x > a");
  const double h = step_for(a, x, diff);
  auto g = [&](double xx) { return rl_integral(f, a, xx, k - mu, k, spec); };
  return central_derivative(g, x, h);
}

Matrix weyl_integral(const MatrixFunction1D& f, double x, double alpha, double k, const QuadratureSpec& spec) {
  require_positive(k, "k");
  require_positive(alpha, "alpha");
  const double e = alpha / k - 1.0;
  MatrixFunction1D g;
  g.dim = f.dim;
  g.lo = x;
  g.hi = INFINITY;
  g.scale = f.scale;
  switch (f.decay) {
    case Decay::None:
      throw Error(ErrorKind::NonDecayingIntegrand, "k-Weyl integral needs declared decay");
    case Decay::Exponential:
      g.decay = Decay::Exponential;
      g.decay_rate = f.decay_rate;
      break;
    case Decay::Algebraic:
      if (!(f.decay_rate > alpha / k))
        throw Error(ErrorKind::NonDecayingIntegrand, "algebraic decay too slow for this order");
      g.decay = Decay::Algebraic;
      g.decay_rate = f.decay_rate - e;
      break;
  }
  g.eval = [&](const Abscissa& t) -> Matrix { return std::pow(t.from_lo, e) * f.eval(t); };
  QuadratureSpec s = spec;
  s.endpoint_exponents = with_exponents(f, e, 0.0);
  return integrate(g, s) * (1.0 / (k * k_gamma(Complex(alpha), k)).real());
}

Matrix weyl_derivative(const MatrixFunction1D& f, double x, double alpha, double k, const QuadratureSpec& spec,
                       const DiffOptions& diff) {
  require_positive(k, "k");
  if (!(alpha > 0.0 && alpha < k)) throw Error(ErrorKind::InvalidInput, "weyl_derivative needs 0 < alpha < k");
  const double h = step_for(std::isfinite(f.lo) ? f.lo : -INFINITY, x, diff);
  auto g = [&](double xx) { return weyl_integral(f, xx, k - alpha, k, spec); };
  return -central_derivative(g, x, h);
}

}  // namespace kmf
