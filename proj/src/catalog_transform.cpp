// Laplace, fractional k-Fourier, Riemann-Liouville and Weyl transforms.

#include <cmath>

#include "catalog_common.hpp"

namespace kmf::detail {

namespace {

Recipe entire_base(int rmin, int smin) {
  Recipe r;
  r.r_min = rmin;
  r.r_max = std::max(rmin, 2);
  r.s_min = smin;
  r.s_max = std::max(smin, 2);
  return r;
}

// R(zt) has order k/Re(B) when r = s, too fast for a Laplace integral once
// B < kI; one extra denominator keeps the order below 1.
Recipe laplace_base(SampleContext& ctx) {
  const int r = static_cast<int>(ctx.index % 2);
  Recipe rec = entire_base(r, r + 1);
  rec.r_max = r;
  return rec;
}

std::vector<Matrix> plus(std::vector<Matrix> v, const Matrix& m) {
  v.push_back(m);
  return v;
}

double min_real(const Matrix& m) { return spectral_bounds(m).lower; }

// t^{X/k - I} R(z t) on [0, inf), X may be zero.
MatrixFunction1D power_times_series(const ParamSet& p, const Matrix& x, Complex z, const VerifyOptions& o) {
  PowerFamily px(x / p.k - eye(p));
  CachedSeries r(p, o.eval);
  return integrand(p.dim(), 0.0, INFINITY, [=](const Abscissa& t) -> Matrix { return px(t.x) * r(z * t.x); },
                   px.lower());
}

void laplace(std::vector<IdentityCase>& out) {
  out.push_back({"2.30", "Laplace transform of t^{C/k-I} R(z t^{B/k}) | k (sk)^{-C/k} times the k-hypergeometric series",
                 "", kQuadTol, [](SampleContext& ctx) -> Thunk {
                   ParamSet p = draw_params(ctx, laplace_base(ctx));
                   Complex z = ctx.draw.complex_modulus(0.2, 0.6);
                   double s = ctx.draw.uniform(1.0, 2.5);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     const double k = p.k;
                     PowerFamily pc(p.C / k - eye(p)), pb(p.B / k);
                     CachedSeries rs(p, o.eval);
                     auto f = integrand(p.dim(), 0.0, INFINITY, [=](const Abscissa& t) -> Matrix {
                       return pc(t.x) * rs(Matrix(z * pb(t.x)));
                     }, pc.lower());
                     Matrix lhs = laplace_transform(f, s, o.quad);
                     ParamSet h = hypergeometric_k(p.A, p.P, p.Q, k);
                     Matrix rhs = k * xpow(s * k, -p.C / k) * series(h, Matrix(z * xpow(k * s, -p.B / k)), o);
                     return Sides{lhs, rhs};
                   };
                 }});
  out.push_back({"2.31", "Laplace transform of t^{E/k-I} R(zt) | k Gamma_k(E) (sk)^{-E/k} R(E added; z/(sk))", "",
                 kQuadTol, [](SampleContext& ctx) -> Thunk {
                   ParamSet p = draw_params(ctx, laplace_base(ctx));
                   Matrix e = ctx.draw.draw(0.4 * ctx.k, 1.5 * ctx.k);
                   Complex z = draw_argument(ctx, p);
                   double s = ctx.draw.uniform(1.0, 2.5);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     const double k = p.k;
                     Matrix lhs = laplace_transform(power_times_series(p, e, z, o), s, o.quad);
                     Matrix rhs = k * k_gamma(e, k) * xpow(s * k, -e / k) *
                                  series(with_lists(p, p.A, plus(p.P, e), p.Q), z / (s * k), o);
                     return Sides{lhs, rhs};
                   };
                 }});
  out.push_back({"2.32", "Laplace transform of R(zt) | (1/s) R(kI added; z/(ks))", "", kQuadTol,
                 [](SampleContext& ctx) -> Thunk {
                   ParamSet p = draw_params(ctx, laplace_base(ctx));
                   Complex z = draw_argument(ctx, p);
                   double s = ctx.draw.uniform(1.0, 2.5);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     const double k = p.k;
                     Matrix lhs = laplace_transform(power_times_series(p, kI(p), z, o), s, o.quad);
                     Matrix rhs = series(with_lists(p, p.A, plus(p.P, kI(p)), p.Q), z / (k * s), o) / s;
                     return Sides{lhs, rhs};
                   };
                 }});
  out.push_back({"2.33", "Laplace transform of t^{A/k-I} R(A removed; zt) | (1/s)(sk)^{I-A/k} Gamma_k(A) R(z/(ks))", "",
                 kQuadTol, [](SampleContext& ctx) -> Thunk {
                   ParamSet p = draw_params(ctx, entire_base(1, 1));
                   Complex z = draw_argument(ctx, p);
                   double s = ctx.draw.uniform(1.0, 2.5);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     const double k = p.k;
                     ParamSet red = with_lists(p, p.P[0], without(p.P, 0), p.Q);
                     Matrix lhs = laplace_transform(power_times_series(red, p.A, z, o), s, o.quad);
                     Matrix rhs = xpow(s * k, eye(p) - p.A / k) * k_gamma(p.A, k) * series(p, z / (k * s), o) / s;
                     return Sides{lhs, rhs};
                   };
                 }});
  out.push_back({"2.34",
                 "Laplace transform of t^{P_i/k-I} R(P_i removed; zt) | (1/s)(sk)^{I-P_i/k} Gamma_k(P_i) R(z/(sk))", "",
                 kQuadTol, [](SampleContext& ctx) -> Thunk {
                   ParamSet p = draw_params(ctx, entire_base(1, 1));
                   std::size_t i = pick(ctx, p.r());
                   Complex z = draw_argument(ctx, p);
                   double s = ctx.draw.uniform(1.0, 2.5);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     const double k = p.k;
                     ParamSet red = with_lists(p, p.A, without(p.P, i), p.Q);
                     Matrix lhs = laplace_transform(power_times_series(red, p.P[i], z, o), s, o.quad);
                     Matrix rhs =
                         xpow(s * k, eye(p) - p.P[i] / k) * k_gamma(p.P[i], k) * series(p, z / (s * k), o) / s;
                     return Sides{lhs, rhs};
                   };
                 }});
}

// With B = kI, A = C + n k I and P_1 = Q_1 + m k I the series is e^z times a
// matrix polynomial of degree n + m:
//   R(z) = e^z sum_j z^j / j! sum_{i<=j} (-1)^{j-i} binom(j, i) i! c_i.
std::vector<Matrix> exp_polynomial(RSeries& s, int degree) {
  std::vector<Matrix> out;
  for (int j = 0; j <= degree; ++j) {
    Matrix d = Matrix::Zero(s.params().dim(), s.params().dim());
    double binom = 1.0;
    for (int i = 0; i <= j; ++i) {
      const double sign = ((j - i) % 2 == 0) ? 1.0 : -1.0;
      d += sign * binom * std::tgamma(i + 1.0) * s.coefficient(i).value();
      binom = binom * (j - i) / (i + 1);
    }
    out.push_back(d / std::tgamma(j + 1.0));
  }
  return out;
}

void fourier(std::vector<IdentityCase>& out) {
  out.push_back({"2.35",
                 "fractional k-Fourier transform of R (exponential-polynomial family) | (1/(i omega)) R(kI added; "
                 "i/(k omega))",
                 "", kQuadTol, [](SampleContext& ctx) -> Thunk {
                   const double k = ctx.k;
                   auto& d = ctx.draw;
                   const int rs = static_cast<int>(ctx.index % 2);
                   const int n = static_cast<int>(ctx.index % 3);
                   const int m = rs ? static_cast<int>((ctx.index / 2) % 2) : 0;
                   ParamSet p;
                   p.k = k;
                   p.B = k * identity(d.dim());
                   p.C = d.draw(0.5 * k, 2.5 * k);
                   p.A = p.C + (n * k) * identity(d.dim());
                   if (rs) {
                     p.Q.push_back(d.draw(0.5 * k, 2.5 * k));
                     p.P.push_back(p.Q[0] + (m * k) * identity(d.dim()));
                   }
                   validate(p);
                   double omega = d.uniform(1.6, 3.0);
                   double alpha = d.uniform(0.5, 1.0);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     RSeries s(p);
                     const std::vector<Matrix> poly = exp_polynomial(s, n + m);
                     MatrixFunction1D f;
                     f.dim = p.dim();
                     f.lo = -INFINITY;
                     f.hi = 0.0;
                     f.decay = Decay::Exponential;
                     f.decay_rate = 1.0;
                     f.scale = 1.0 + n + m;
                     f.eval = [poly](const Abscissa& t) -> Matrix {
                       Matrix acc = poly.back();
                       for (std::size_t j = poly.size() - 1; j-- > 0;) acc = poly[j] + t.x * acc;
                       return std::exp(t.x) * acc;
                     };
                     Matrix lhs = frac_fourier(f, std::pow(omega, alpha), alpha, o.quad);
                     ParamSet q = with_lists(p, kI(p), plus(p.P, p.A), p.Q);
                     Matrix rhs = series(q, Complex(0.0, 1.0 / (k * omega)), o) / Complex(0.0, omega);
                     return Sides{lhs, rhs};
                   };
                 }});
}

void riemann_liouville(std::vector<IdentityCase>& out) {
  out.push_back({"2.36", "k-RL integral of t^{E/k} R(t) by quadrature | Gamma ratio x^{(E+mu I)/k} R(E+kI; E+(mu+k)I)",
                 "", kQuadTol, [](SampleContext& ctx) -> Thunk {
                   const double k = ctx.k;
                   ParamSet p = draw_params(ctx, entire_base(0, 0));
                   Matrix e = ctx.draw.draw(0.4 * k, 1.5 * k);
                   double mu = k * ctx.draw.uniform(0.2, 1.0);
                   double x = ctx.draw.uniform(0.5, 1.5);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     PowerFamily pe(e / k);
                     CachedSeries r(p, o.eval);
                     auto f = integrand(p.dim(), 0.0, x, [=](const Abscissa& t) -> Matrix {
                       return pe(t.from_lo) * r(Complex(t.x));
                     }, pe.lower());
                     Matrix lhs = rl_integral(f, 0.0, x, mu, k, o.quad);
                     ParamSet q = with_lists(p, p.A, plus(p.P, e + kI(p)), plus(p.Q, e + kI(p, 1.0 + mu / k)));
                     Matrix rhs = k_gamma(e + kI(p), k) * k_gamma_inv(e + kI(p, 1.0 + mu / k), k) *
                                  xpow(x, (e + mu * eye(p)) / k) * series(q, Complex(x), o);
                     return Sides{lhs, rhs};
                   };
                 }});
  out.push_back({"2.37",
                 "k-RL derivative of t^{E/k} R(t) by differenced quadrature | (1/k) Gamma ratio x^{(E+(k-mu)I)/k-I} R",
                 "", kQuadTol, [](SampleContext& ctx) -> Thunk {
                   const double k = ctx.k;
                   ParamSet p = draw_params(ctx, entire_base(0, 0));
                   Matrix e = ctx.draw.draw(0.4 * k, 1.5 * k);
                   double mu = k * ctx.draw.uniform(0.2, 0.9);
                   double x = ctx.draw.uniform(0.5, 1.5);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     PowerFamily pe(e / k);
                     CachedSeries r(p, o.eval);
                     auto f = integrand(p.dim(), 0.0, INFINITY, [=](const Abscissa& t) -> Matrix {
                       return pe(t.from_lo) * r(Complex(t.x));
                     }, pe.lower());
                     Matrix lhs = rl_derivative(f, 0.0, x, mu, k, o.quad, o.diff);
                     const Matrix lower = e + (k - mu) * eye(p);
                     ParamSet q = with_lists(p, p.A, plus(p.P, e + kI(p)), plus(p.Q, lower));
                     Matrix rhs = k_gamma(e + kI(p), k) * k_gamma_inv(lower, k) * xpow(x, lower / k - eye(p)) *
                                  series(q, Complex(x), o) / k;
                     return Sides{lhs, rhs};
                   };
                 }});
  out.push_back({"2.38", "k-RL integral from a of (t-a)^{E/k-I} R(nu(t-a)) | Gamma ratio (x-a)^{(E+mu I)/k-I} R", "",
                 kQuadTol, [](SampleContext& ctx) -> Thunk {
                   const double k = ctx.k;
                   ParamSet p = draw_params(ctx, entire_base(0, 0));
                   Matrix e = ctx.draw.draw(0.4 * k, 1.5 * k);
                   double mu = k * ctx.draw.uniform(0.2, 1.0);
                   double a = ctx.draw.uniform(-1.0, 1.0);
                   double x = a + ctx.draw.uniform(0.5, 1.5);
                   Complex nu = ctx.draw.complex_modulus(0.2, 1.0);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     PowerFamily pe(e / k - eye(p));
                     CachedSeries r(p, o.eval);
                     auto f = integrand(p.dim(), a, INFINITY, [=](const Abscissa& t) -> Matrix {
                       return pe(t.from_lo) * r(nu * t.from_lo);
                     }, pe.lower());
                     Matrix lhs = rl_integral(f, a, x, mu, k, o.quad);
                     const Matrix upper = e + mu * eye(p);
                     ParamSet q = with_lists(p, p.A, plus(p.P, e), plus(p.Q, upper));
                     Matrix rhs = k_gamma(e, k) * k_gamma_inv(upper, k) * xpow(x - a, upper / k - eye(p)) *
                                  series(q, nu * (x - a), o);
                     return Sides{lhs, rhs};
                   };
                 }});
  out.push_back({"2.39", "k-RL derivative from a of (t-a)^{E/k-I} R(nu(t-a)) | (1/k) Gamma ratio (x-a)^{(E-mu I)/k-I} R",
                 "", kQuadTol, [](SampleContext& ctx) -> Thunk {
                   const double k = ctx.k;
                   ParamSet p = draw_params(ctx, entire_base(0, 0));
                   double mu = k * ctx.draw.uniform(0.2, 0.9);
                   Matrix e = ctx.draw.draw(mu + 0.3 * k, mu + 1.5 * k);
                   double a = ctx.draw.uniform(-1.0, 1.0);
                   double x = a + ctx.draw.uniform(0.5, 1.5);
                   Complex nu = ctx.draw.complex_modulus(0.2, 1.0);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     PowerFamily pe(e / k - eye(p));
                     CachedSeries r(p, o.eval);
                     auto f = integrand(p.dim(), a, INFINITY, [=](const Abscissa& t) -> Matrix {
                       return pe(t.from_lo) * r(nu * t.from_lo);
                     }, pe.lower());
                     Matrix lhs = rl_derivative(f, a, x, mu, k, o.quad, o.diff);
                     const Matrix lower = e - mu * eye(p);
                     ParamSet q = with_lists(p, p.A, plus(p.P, e), plus(p.Q, lower));
                     Matrix rhs = k_gamma(e, k) * k_gamma_inv(lower, k) * xpow(x - a, lower / k - eye(p)) *
                                  series(q, nu * (x - a), o) / k;
                     return Sides{lhs, rhs};
                   };
                 }});
}

// (u+a)^{-E/k} R(1/(u+a)) on (-a, inf)
MatrixFunction1D reciprocal_family(const ParamSet& p, const Matrix& e, double a, const VerifyOptions& o) {
  PowerFamily pe(-e / p.k);
  CachedSeries r(p, o.eval);
  MatrixFunction1D f = integrand(p.dim(), -a, INFINITY, [=](const Abscissa& t) -> Matrix {
    const double v = t.x + a;
    return pe(v) * r(Complex(1.0 / v));
  });
  f.endpoint_exponents.reset();
  f.decay = Decay::Algebraic;
  f.decay_rate = min_real(e) / p.k;
  f.scale = 1.0 + a;
  return f;
}

// (u+a)^{-C/k} R(shifted C; nu (u+a)^{-B/k}) on (-a, inf)
MatrixFunction1D scaled_family(const ParamSet& shifted, const Matrix& c, double a, Complex nu, const VerifyOptions& o) {
  const double k = shifted.k;
  PowerFamily pc(-c / k), pb(-shifted.B / k);
  CachedSeries r(shifted, o.eval);
  MatrixFunction1D f = integrand(shifted.dim(), -a, INFINITY, [=](const Abscissa& t) -> Matrix {
    const double v = t.x + a;
    return pc(v) * r(Matrix(nu * pb(v)));
  });
  f.endpoint_exponents.reset();
  f.decay = Decay::Algebraic;
  f.decay_rate = min_real(c) / k;
  f.scale = 1.0 + a;
  return f;
}

void weyl(std::vector<IdentityCase>& out) {
  out.push_back({"2.40", "k-Weyl integral of (u+a)^{-E/k} R(1/(u+a)) | (x+a)^{(beta I-E)/k} Gamma ratio R(E-beta; E)",
                 "", kQuadTol, [](SampleContext& ctx) -> Thunk {
                   const double k = ctx.k;
                   ParamSet p = draw_params(ctx, entire_base(0, 0));
                   double beta = k * ctx.draw.uniform(0.2, 1.5);
                   Matrix e = ctx.draw.draw(beta + 0.4 * k, beta + 1.5 * k);
                   double a = ctx.draw.uniform(0.5, 1.5);
                   double x = ctx.draw.uniform(0.0, 1.0);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     Matrix lhs = weyl_integral(reciprocal_family(p, e, a, o), x, beta, k, o.quad);
                     const Matrix lower = e - beta * eye(p);
                     ParamSet q = with_lists(p, p.A, plus(p.P, lower), plus(p.Q, e));
                     Matrix rhs = xpow(x + a, -lower / k) * k_gamma_inv(e, k) * k_gamma(lower, k) *
                                  series(q, Complex(1.0 / (x + a)), o);
                     return Sides{lhs, rhs};
                   };
                 }});
  out.push_back({"2.41", "k-Weyl integral of (u+a)^{-C/k} R(C - beta I; nu(u+a)^{-B/k}) | (x+a)^{(beta I-C)/k} R(C)", "",
                 kQuadTol, [](SampleContext& ctx) -> Thunk {
                   const double k = ctx.k;
                   ParamSet p = draw_params(ctx, entire_base(0, 0));
                   double beta = k * ctx.draw.uniform(0.2, 1.5);
                   p.C = ctx.draw.draw(beta + 0.4 * k, beta + 1.5 * k);
                   validate(p);
                   double a = ctx.draw.uniform(0.5, 1.5);
                   double x = ctx.draw.uniform(0.0, 1.0);
                   Complex nu = ctx.draw.complex_modulus(0.2, 1.0);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     ParamSet shifted = p;
                     shifted.C = p.C - beta * eye(p);
                     Matrix lhs = weyl_integral(scaled_family(shifted, p.C, a, nu, o), x, beta, k, o.quad);
                     Matrix rhs = xpow(x + a, (beta * eye(p) - p.C) / k) * series(p, Matrix(nu * xpow(x + a, -p.B / k)), o);
                     return Sides{lhs, rhs};
                   };
                 }});
  out.push_back({"2.42",
                 "k-Weyl derivative of (u+a)^{-E/k} R(1/(u+a)) by differenced quadrature | (1/k) (x+a)^{((k-beta)I-E)/k-I} "
                 "Gamma ratio R(E+beta; E)",
                 "", kQuadTol, [](SampleContext& ctx) -> Thunk {
                   const double k = ctx.k;
                   ParamSet p = draw_params(ctx, entire_base(0, 0));
                   double beta = k * ctx.draw.uniform(0.2, 0.9);
                   Matrix e = ctx.draw.draw(k - beta + 0.4 * k, k - beta + 1.5 * k);
                   double a = ctx.draw.uniform(0.5, 1.5);
                   double x = ctx.draw.uniform(0.0, 1.0);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     Matrix lhs = weyl_derivative(reciprocal_family(p, e, a, o), x, beta, k, o.quad, o.diff);
                     const Matrix upper = e + beta * eye(p);
                     ParamSet q = with_lists(p, p.A, plus(p.P, upper), plus(p.Q, e));
                     Matrix rhs = xpow(x + a, ((k - beta) * eye(p) - e) / k - eye(p)) * k_gamma_inv(e, k) *
                                  k_gamma(upper, k) * series(q, Complex(1.0 / (x + a)), o) / k;
                     return Sides{lhs, rhs};
                   };
                 }});
  out.push_back({"2.43",
                 "k-Weyl derivative of (u+a)^{-C/k} R(C + beta I; nu(u+a)^{-B/k}) by differenced quadrature | (1/k) "
                 "(x+a)^{((k-beta)I-C)/k-I} R(C)",
                 "", kQuadTol, [](SampleContext& ctx) -> Thunk {
                   const double k = ctx.k;
                   ParamSet p = draw_params(ctx, entire_base(0, 0));
                   double beta = k * ctx.draw.uniform(0.2, 0.9);
                   p.C = ctx.draw.draw(k - beta + 0.4 * k, k - beta + 1.5 * k);
                   validate(p);
                   double a = ctx.draw.uniform(0.5, 1.5);
                   double x = ctx.draw.uniform(0.0, 1.0);
                   Complex nu = ctx.draw.complex_modulus(0.2, 1.0);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     ParamSet shifted = p;
                     shifted.C = p.C + beta * eye(p);
                     Matrix lhs = weyl_derivative(scaled_family(shifted, p.C, a, nu, o), x, beta, k, o.quad, o.diff);
                     Matrix rhs = xpow(x + a, ((k - beta) * eye(p) - p.C) / k - eye(p)) *
                                  series(p, Matrix(nu * xpow(x + a, -p.B / k)), o) / k;
                     return Sides{lhs, rhs};
                   };
                 }});
}

}  // namespace

void add_transform_cases(std::vector<IdentityCase>& out) {
  laplace(out);
  fourier(out);
  riemann_liouville(out);
  weyl(out);
}

}  // namespace kmf::detail
