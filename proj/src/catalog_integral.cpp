// Integral representations: Euler-type integrals on [0,1], Gamma-type
// integrals on [0,inf), integrals over [0,x] and [a,x], k-Beta transforms and
// the Mittag-Leffler integral.

#include <cmath>

#include "catalog_common.hpp"

namespace kmf::detail {

namespace {

Recipe base(int rmin, int smin, bool entire) {
  Recipe r;
  r.r_min = rmin;
  r.r_max = std::max(rmin, 2);
  r.s_min = smin;
  r.s_max = std::max(smin, 2);
  r.entire = entire;
  return r;
}

// Gamma_k(Q) Gamma_k^-1(X) Gamma_k^-1(Q - X) / k
Matrix euler_constant(const Matrix& x, const Matrix& q, double k) {
  return k_gamma(q, k) * k_gamma_inv(x, k) * k_gamma_inv(q - x, k) / k;
}

// (1/k) Gamma ratio * int_0^1 xi^{X/k-I} (1-xi)^{(Q-X)/k-I} R_red(z xi) dxi
Matrix euler_integral(const ParamSet& red, const Matrix& x, const Matrix& q, Complex z, const VerifyOptions& o) {
  const double k = red.k;
  const Matrix id = identity(red.dim());
  PowerFamily px(x / k - id), pq((q - x) / k - id);
  CachedSeries r(red, o.eval);
  auto f = integrand(red.dim(), 0.0, 1.0, [=](const Abscissa& t) -> Matrix {
    return px(t.from_lo) * pq(t.from_hi) * r(z * t.x);
  }, px.lower(), pq.lower());
  return euler_constant(x, q, k) * integrate(f, o.quad);
}

// Gamma_k^-1(X) int_0^inf xi^{X-I} e^{-xi^k/k} R_red(z xi^k) dxi
Matrix gamma_integral(const ParamSet& red, const Matrix& x, Complex z, const VerifyOptions& o) {
  const double k = red.k;
  PowerFamily px(x - identity(red.dim()));
  CachedSeries r(red, o.eval);
  auto f = integrand(red.dim(), 0.0, INFINITY, [=](const Abscissa& t) -> Matrix {
    const double tk = std::pow(t.x, k);
    return std::exp(-tk / k) * px(t.x) * r(z * tk);
  }, px.lower());
  f.decay = Decay::Exponential;
  f.decay_rate = std::min(1.0, k * k);
  return k_gamma_inv(x, k) * integrate(f, o.quad);
}

void euler(std::vector<IdentityCase>& out) {
  out.push_back({"2.19", "series R | Euler integral over [0,1] removing A and Q_j", "", kQuadTol,
                 [](SampleContext& ctx) -> Thunk {
                   const double k = ctx.k;
                   Recipe rec = base(1, 1, false);
                   ParamSet p = draw_params(ctx, rec);
                   std::size_t j = pick(ctx, p.s());
                   p.A = ctx.draw.draw(0.4 * k, 1.5 * k);
                   p.Q[j] = p.A + ctx.draw.draw(0.4 * k, 1.5 * k);
                   validate(p);
                   Complex z = draw_argument(ctx, p);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     ParamSet red = with_lists(p, p.P[0], without(p.P, 0), without(p.Q, j));
                     return Sides{series(p, z, o), euler_integral(red, p.A, p.Q[j], z, o)};
                   };
                 }});
  out.push_back({"2.20", "series R | Euler integral over [0,1] removing P_i and Q_j", "", kQuadTol,
                 [](SampleContext& ctx) -> Thunk {
                   const double k = ctx.k;
                   ParamSet p = draw_params(ctx, base(1, 1, false));
                   std::size_t i = pick(ctx, p.r());
                   std::size_t j = pick(ctx, p.s());
                   p.P[i] = ctx.draw.draw(0.4 * k, 1.5 * k);
                   p.Q[j] = p.P[i] + ctx.draw.draw(0.4 * k, 1.5 * k);
                   validate(p);
                   Complex z = draw_argument(ctx, p);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     ParamSet red = with_lists(p, p.A, without(p.P, i), without(p.Q, j));
                     return Sides{series(p, z, o), euler_integral(red, p.P[i], p.Q[j], z, o)};
                   };
                 }});
  out.push_back({"2.21", "series R | Gamma-type integral over [0,inf) removing A", "", kQuadTol,
                 [](SampleContext& ctx) -> Thunk {
                   ParamSet p = draw_params(ctx, base(1, 1, true));
                   Complex z = draw_argument(ctx, p);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     ParamSet red = with_lists(p, p.P[0], without(p.P, 0), p.Q);
                     return Sides{series(p, z, o), gamma_integral(red, p.A, z, o)};
                   };
                 }});
  out.push_back({"2.22", "series R | Gamma-type integral over [0,inf) removing P_i", "", kQuadTol,
                 [](SampleContext& ctx) -> Thunk {
                   ParamSet p = draw_params(ctx, base(1, 1, true));
                   std::size_t i = pick(ctx, p.r());
                   Complex z = draw_argument(ctx, p);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     ParamSet red = with_lists(p, p.A, without(p.P, i), p.Q);
                     return Sides{series(p, z, o), gamma_integral(red, p.P[i], z, o)};
                   };
                 }});
}

void intervals(std::vector<IdentityCase>& out) {
  out.push_back({"2.24", "quadrature over [0,x] of xi^{Q_j/k-I}(x-xi)^{E/k-I} R(z xi) | k-Beta times R(Q_j + E; zx)",
                 "", kQuadTol, [](SampleContext& ctx) -> Thunk {
                   const double k = ctx.k;
                   Recipe rec = base(0, 1, true);
                   rec.q = {0.4, 1.5};
                   ParamSet p = draw_params(ctx, rec);
                   std::size_t j = pick(ctx, p.s());
                   Matrix e = ctx.draw.draw(0.4 * k, 1.5 * k);
                   double x = ctx.draw.uniform(0.5, 1.5);
                   Complex z = draw_argument(ctx, p);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     const Matrix id = eye(p);
                     PowerFamily pq(p.Q[j] / k - id), pe(e / k - id);
                     CachedSeries r(p, o.eval);
                     auto f = integrand(p.dim(), 0.0, x, [=](const Abscissa& t) -> Matrix {
                       return pq(t.from_lo) * pe(t.from_hi) * r(z * t.x);
                     }, pq.lower(), pe.lower());
                     ParamSet shifted = p;
                     shifted.Q[j] = p.Q[j] + e;
                     Matrix rhs = k * k_beta(p.Q[j], e, k) * xpow(x, (p.Q[j] + e) / k - id) * series(shifted, z * x, o);
                     return Sides{integrate(f, o.quad), rhs};
                   };
                 }});
  out.push_back({"2.25",
                 "quadrature over [a,x] of (x-xi)^{E/k-I}(xi-a)^{Q_j/k-I} R(a - xi) | k-Beta times R(Q_j + E; a - x)",
                 "", kQuadTol, [](SampleContext& ctx) -> Thunk {
                   const double k = ctx.k;
                   Recipe rec = base(0, 1, true);
                   rec.q = {0.4, 1.5};
                   ParamSet p = draw_params(ctx, rec);
                   std::size_t j = pick(ctx, p.s());
                   Matrix e = ctx.draw.draw(0.4 * k, 1.5 * k);
                   double a = ctx.draw.uniform(-1.0, 1.0);
                   double x = a + ctx.draw.uniform(0.5, 2.0);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     const Matrix id = eye(p);
                     PowerFamily pq(p.Q[j] / k - id), pe(e / k - id);
                     CachedSeries r(p, o.eval);
                     auto f = integrand(p.dim(), a, x, [=](const Abscissa& t) -> Matrix {
                       return pe(t.from_hi) * pq(t.from_lo) * r(Complex(-t.from_lo));
                     }, pq.lower(), pe.lower());
                     ParamSet shifted = p;
                     shifted.Q[j] = p.Q[j] + e;
                     Matrix rhs = k * k_beta(e, p.Q[j], k) * xpow(x - a, (p.Q[j] + e) / k - id) *
                                  series(shifted, Complex(a - x), o);
                     return Sides{integrate(f, o.quad), rhs};
                   };
                 }});
  out.push_back({"2.26", "series with spread E and E+M lists at c z^mu | quadrature over [0,z]", "", kQuadTol,
                 [](SampleContext& ctx) -> Thunk {
                   const double k = ctx.k;
                   ParamSet p = draw_params(ctx, base(0, 0, true));
                   const int mu = 1 + static_cast<int>(ctx.index % 2);
                   Matrix e = ctx.draw.draw(0.4 * k, 1.5 * k);
                   Matrix m = ctx.draw.draw(0.4 * k, 1.5 * k);
                   Complex c = ctx.draw.complex_modulus(0.1, 0.5);
                   double x = ctx.draw.uniform(0.5, 1.0);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     std::vector<Matrix> num = p.P, den = p.Q;
                     for (auto& d : spread(e, mu, k)) num.push_back(d);
                     for (auto& d : spread(e + m, mu, k)) den.push_back(d);
                     Matrix lhs = series(with_lists(p, p.A, num, den), c * std::pow(x, mu), o);

                     const Matrix id = eye(p);
                     PowerFamily pe(e / k - id), pm(m / k - id);
                     CachedSeries r(p, o.eval);
                     auto f = integrand(p.dim(), 0.0, x, [=](const Abscissa& t) -> Matrix {
                       return pe(t.from_lo) * pm(t.from_hi) * r(c * std::pow(t.x, mu));
                     }, pe.lower(), pm.lower());
                     Matrix rhs = xpow(x, id - (e + m) / k) * k_gamma_inv(e, k) * k_gamma(e + m, k) *
                                  k_gamma_inv(m, k) * integrate(f, o.quad) / k;
                     return Sides{lhs, rhs};
                   };
                 }});
  out.push_back({"2.27", "series with spread E, M and E+M lists | quadrature over [0,1] with xi^mu (1-xi)^nu", "",
                 kQuadTol, [](SampleContext& ctx) -> Thunk {
                   const double k = ctx.k;
                   ParamSet p = draw_params(ctx, base(0, 0, true));
                   const int mu = 1 + static_cast<int>(ctx.index % 2);
                   const int nu = 1 + static_cast<int>((ctx.index / 2) % 2);
                   Matrix e = ctx.draw.draw(0.4 * k, 1.5 * k);
                   Matrix m = ctx.draw.draw(0.4 * k, 1.5 * k);
                   Complex alpha = ctx.draw.complex_modulus(0.2, 1.0);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     std::vector<Matrix> num = p.P, den = p.Q;
                     for (auto& d : spread(e, mu, k)) num.push_back(d);
                     for (auto& d : spread(m, nu, k)) num.push_back(d);
                     for (auto& d : spread(e + m, mu + nu, k)) den.push_back(d);
                     const double w = std::pow(mu, mu) * std::pow(nu, nu) / std::pow(mu + nu, mu + nu);
                     Matrix lhs = series(with_lists(p, p.A, num, den), alpha * w, o);

                     const Matrix id = eye(p);
                     PowerFamily pe(e / k - id), pm(m / k - id);
                     CachedSeries r(p, o.eval);
                     auto f = integrand(p.dim(), 0.0, 1.0, [=](const Abscissa& t) -> Matrix {
                       return pe(t.from_lo) * pm(t.from_hi) * r(alpha * std::pow(t.from_lo, mu) * std::pow(t.from_hi, nu));
                     }, pe.lower(), pm.lower());
                     Matrix rhs = k_gamma_inv(e, k) * k_gamma(e + m, k) * k_gamma_inv(m, k) * integrate(f, o.quad) / k;
                     return Sides{lhs, rhs};
                   };
                 }});
}

void beta(std::vector<IdentityCase>& out) {
  out.push_back({"2.28", "k-Beta transform of R(A + E; zt) with weights (A, E) | Gamma ratio times R", "", kQuadTol,
                 [](SampleContext& ctx) -> Thunk {
                   const double k = ctx.k;
                   ParamSet p = draw_params(ctx, base(0, 0, false));
                   Matrix e = ctx.draw.draw(0.4 * k, 1.5 * k);
                   Complex z = draw_argument(ctx, p);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     ParamSet up = p;
                     up.A = p.A + e;
                     CachedSeries r(up, o.eval);
                     auto f = integrand(p.dim(), 0.0, 1.0, [=](const Abscissa& t) -> Matrix { return r(z * t.x); });
                     Matrix lhs = beta_transform(f, p.A, e, k, o.quad);
                     Matrix rhs = k_gamma(p.A, k) * k_gamma(e, k) * k_gamma_inv(p.A + e, k) * series(p, z, o);
                     return Sides{lhs, rhs};
                   };
                 }});
  out.push_back({"2.29", "k-Beta transform of R(P_i + E; zt) with weights (P_i, E) | Gamma ratio times R", "",
                 kQuadTol, [](SampleContext& ctx) -> Thunk {
                   const double k = ctx.k;
                   ParamSet p = draw_params(ctx, base(1, 0, false));
                   std::size_t i = pick(ctx, p.r());
                   Matrix e = ctx.draw.draw(0.4 * k, 1.5 * k);
                   Complex z = draw_argument(ctx, p);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     ParamSet up = p;
                     up.P[i] = p.P[i] + e;
                     CachedSeries r(up, o.eval);
                     auto f = integrand(p.dim(), 0.0, 1.0, [=](const Abscissa& t) -> Matrix { return r(z * t.x); });
                     Matrix lhs = beta_transform(f, p.P[i], e, k, o.quad);
                     Matrix rhs =
                         k_gamma(p.P[i], k) * k_gamma(e, k) * k_gamma_inv(p.P[i] + e, k) * series(p, z, o);
                     return Sides{lhs, rhs};
                   };
                 }});
}

void mittag_leffler_integral(std::vector<IdentityCase>& out) {
  out.push_back({"3.1", "series with spread P and Q lists at z | Euler integral of the Mittag-Leffler function at z t^r",
                 "", kQuadTol, [](SampleContext& ctx) -> Thunk {
                   const double k = ctx.k;
                   const int r = 1 + static_cast<int>(ctx.index % 2);
                   auto& d = ctx.draw;
                   Matrix a = d.draw(0.5 * k, 2.5 * k);
                   Matrix b = d.draw(0.6 * k, 1.5 * k, 0.1);
                   Matrix c = d.draw(0.5 * k, 2.5 * k);
                   Matrix pm = d.draw(0.4 * k, 1.5 * k);
                   Matrix qm = pm + d.draw(0.4 * k, 1.5 * k);
                   Complex z = d.complex_modulus(0.2, 1.0);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     ParamSet e = mittag_leffler(a, b, c, k);
                     Matrix lhs = series(with_lists(e, a, spread(pm, r, k), spread(qm, r, k)), z, o);

                     const Matrix id = identity(a.rows());
                     PowerFamily pp(pm / k - id), pq((qm - pm) / k - id);
                     CachedSeries ml(e, o.eval);
                     auto f = integrand(a.rows(), 0.0, 1.0, [=](const Abscissa& t) -> Matrix {
                       return pp(t.from_lo) * pq(t.from_hi) * ml(z * std::pow(t.x, r));
                     }, pp.lower(), pq.lower());
                     return Sides{lhs, euler_constant(pm, qm, k) * integrate(f, o.quad)};
                   };
                 }});
}

}  // namespace

void add_integral_cases(std::vector<IdentityCase>& out) {
  euler(out);
  intervals(out);
  beta(out);
  mittag_leffler_integral(out);
}

}  // namespace kmf::detail
