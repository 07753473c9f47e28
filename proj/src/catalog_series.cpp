// Series-versus-series identities: contiguous relations, theta relations,
// differential properties, the differential equation and the k = 1 special cases.

#include <cmath>

#include "catalog_common.hpp"

namespace kmf::detail {

namespace {

Matrix theta_series(const ParamSet& p, Complex z, const VerifyOptions& o, int order = 1) {
  return theta_apply(p, z, o.eval, order);
}

// (kI theta + M) R
Matrix k_theta_plus(const ParamSet& p, Complex z, const Matrix& m, const VerifyOptions& o) {
  return p.k * theta_series(p, z, o) + m * series(p, z, o);
}

// two distinct indices
std::pair<std::size_t, std::size_t> pick_two(SampleContext& ctx, std::size_t n) {
  std::size_t a = pick(ctx, n);
  std::size_t b = (a + 1 + pick(ctx, n - 1)) % n;
  return {a, b};
}

// Matrix polynomial in theta: coefficient d multiplies theta^d.
using ThetaPoly = std::vector<Matrix>;

ThetaPoly times_linear(const ThetaPoly& poly, double lead, const Matrix& constant) {
  const Index n = constant.rows();
  ThetaPoly out(poly.size() + 1, Matrix::Zero(n, n));
  for (std::size_t d = 0; d < poly.size(); ++d) {
    out[d] += constant * poly[d];
    out[d + 1] += lead * poly[d];
  }
  return out;
}

Matrix apply_poly(const ThetaPoly& poly, const ParamSet& p, Complex z, const VerifyOptions& o) {
  Matrix out = Matrix::Zero(p.dim(), p.dim());
  for (std::size_t d = 0; d < poly.size(); ++d) {
    if (poly[d].norm() == 0.0) continue;
    out += poly[d] * (d == 0 ? series(p, z, o) : theta_series(p, z, o, static_cast<int>(d)));
  }
  return out;
}

// falling factorial of l: l (l-1) ... (l-mu+1)
double falling(long l, int mu) {
  double f = 1.0;
  for (int j = 0; j < mu; ++j) f *= static_cast<double>(l - j);
  return f;
}

Recipe with_r(int rmin, int smin = 0) {
  Recipe r;
  r.r_min = rmin;
  r.r_max = std::max(rmin, 2);
  r.s_min = smin;
  r.s_max = std::max(smin, 2);
  r.entire = false;
  return r;
}

void contiguous(std::vector<IdentityCase>& out) {
  out.push_back({"2.3a", "series (A - P_i) R | series at A + kI and P_i + kI", "", kSeriesTol,
                 [](SampleContext& ctx) -> Thunk {
                   ParamSet p = draw_params(ctx, with_r(1));
                   Complex z = draw_argument(ctx, p);
                   std::size_t i = pick(ctx, p.r());
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     Matrix lhs = (p.A - p.P[i]) * series(p, z, o);
                     Matrix rhs = p.A * series(shift_param(p, ParamRef::a(), 1), z, o) -
                                  p.P[i] * series(shift_param(p, ParamRef::p(i), 1), z, o);
                     return Sides{lhs, rhs};
                   };
                 }});
  out.push_back({"2.3b", "series (P_v - P_i) R | series at P_v + kI and P_i + kI", "", kSeriesTol,
                 [](SampleContext& ctx) -> Thunk {
                   ParamSet p = draw_params(ctx, with_r(2, 1));
                   Complex z = draw_argument(ctx, p);
                   auto [v, i] = pick_two(ctx, p.r());
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     Matrix lhs = (p.P[v] - p.P[i]) * series(p, z, o);
                     Matrix rhs = p.P[v] * series(shift_param(p, ParamRef::p(v), 1), z, o) -
                                  p.P[i] * series(shift_param(p, ParamRef::p(i), 1), z, o);
                     return Sides{lhs, rhs};
                   };
                 }});
  out.push_back({"2.4", "series (Q_v - Q_j) R | series at Q_v - kI and Q_j - kI", "", kSeriesTol,
                 [](SampleContext& ctx) -> Thunk {
                   ParamSet p = draw_params(ctx, with_r(0, 2));
                   Complex z = draw_argument(ctx, p);
                   auto [v, j] = pick_two(ctx, p.s());
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     Matrix lhs = (p.Q[v] - p.Q[j]) * series(p, z, o);
                     Matrix rhs = (p.Q[v] - kI(p)) * series(shift_param(p, ParamRef::q(v), -1), z, o) -
                                  (p.Q[j] - kI(p)) * series(shift_param(p, ParamRef::q(j), -1), z, o);
                     return Sides{lhs, rhs};
                   };
                 }});
  out.push_back({"2.5a", "series (A - Q_j + kI) R | series at A + kI and Q_j - kI", "", kSeriesTol,
                 [](SampleContext& ctx) -> Thunk {
                   ParamSet p = draw_params(ctx, with_r(0, 1));
                   Complex z = draw_argument(ctx, p);
                   std::size_t j = pick(ctx, p.s());
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     Matrix lhs = (p.A - p.Q[j] + kI(p)) * series(p, z, o);
                     Matrix rhs = p.A * series(shift_param(p, ParamRef::a(), 1), z, o) -
                                  (p.Q[j] - kI(p)) * series(shift_param(p, ParamRef::q(j), -1), z, o);
                     return Sides{lhs, rhs};
                   };
                 }});
  out.push_back({"2.5b", "series (P_i - Q_j + kI) R | series at P_i + kI and Q_j - kI", "", kSeriesTol,
                 [](SampleContext& ctx) -> Thunk {
                   ParamSet p = draw_params(ctx, with_r(1, 1));
                   Complex z = draw_argument(ctx, p);
                   std::size_t i = pick(ctx, p.r());
                   std::size_t j = pick(ctx, p.s());
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     Matrix lhs = (p.P[i] - p.Q[j] + kI(p)) * series(p, z, o);
                     Matrix rhs = p.P[i] * series(shift_param(p, ParamRef::p(i), 1), z, o) -
                                  (p.Q[j] - kI(p)) * series(shift_param(p, ParamRef::q(j), -1), z, o);
                     return Sides{lhs, rhs};
                   };
                 }});
}

// One of the six lines of the shift expansion, chosen by sample index.
void shift_expansion(std::vector<IdentityCase>& out) {
  out.push_back(
      {"2.8", "series at the shifted parameter | weighted sum of unshifted terms Psi_l", "2.6, 2.7", kSeriesTol,
       [](SampleContext& ctx) -> Thunk {
         const int line = static_cast<int>(ctx.index % 6);
         const int n = 1 + static_cast<int>(ctx.index % 3);
         Recipe rec = with_r(1, 1);
         if (line == 5) rec.q = {n + 0.5, n + 2.5};
         ParamSet p = draw_params(ctx, rec);
         Complex z = draw_argument(ctx, p);
         std::size_t i = pick(ctx, p.r());
         std::size_t j = pick(ctx, p.s());
         const VerifyOptions& o = ctx.opts;
         return [=, &o] {
           const Matrix id = eye(p);
           const double k = p.k;
           ParamSet shifted;
           std::function<Matrix(long)> weight;
           auto up = [&](const Matrix& x) {
             return [x, n, k, id](long l) {
               Matrix w = id;
               for (int m = 1; m <= n; ++m) w = w * inv(x + k * (m - 1) * id) * (x + k * (l + m - 1) * id);
               return w;
             };
           };
           auto down = [&](const Matrix& x) {
             return [x, n, k, id](long l) {
               Matrix w = id;
               for (int m = 1; m <= n; ++m) w = w * (x - k * m * id) * inv(x + k * (l - m) * id);
               return w;
             };
           };
           switch (line) {
             case 0: shifted = shift_param(p, ParamRef::a(), n); weight = up(p.A); break;
             case 1: shifted = shift_param(p, ParamRef::a(), -n); weight = down(p.A); break;
             case 2: shifted = shift_param(p, ParamRef::p(i), n); weight = up(p.P[i]); break;
             case 3: shifted = shift_param(p, ParamRef::p(i), -n); weight = down(p.P[i]); break;
             case 4:
               shifted = shift_param(p, ParamRef::q(j), n);
               weight = [x = p.Q[j], n, k, id](long l) {
                 Matrix w = id;
                 for (int m = 1; m <= n; ++m) w = w * (x + k * (m - 1) * id) * inv(x + k * (l + m - 1) * id);
                 return w;
               };
               break;
             default:
               shifted = shift_param(p, ParamRef::q(j), -n);
               weight = [x = p.Q[j], n, k, id](long l) {
                 Matrix w = id;
                 for (int m = 1; m <= n; ++m) w = w * inv(x - k * m * id) * (x + k * (l - m) * id);
                 return w;
               };
               break;
           }
           RSeries base(p);
           Matrix rhs = base.accumulate(z, [&](long l, const Matrix& t) -> Matrix { return weight(l) * t; }, o.eval).value;
           return Sides{series(shifted, z, o), rhs};
         };
       }});
}

void theta_relations(std::vector<IdentityCase>& out) {
  out.push_back({"2.9", "theta series (k theta + X) R | weighted sum of (X + k l I) Psi_l, X = A or P_i", "",
                 kSeriesTol, [](SampleContext& ctx) -> Thunk {
                   ParamSet p = draw_params(ctx, with_r(1));
                   Complex z = draw_argument(ctx, p);
                   const Matrix x = (ctx.index % 2 == 0) ? p.A : p.P[pick(ctx, p.r())];
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     RSeries s(p);
                     const double k = p.k;
                     Matrix rhs =
                         s.accumulate(z, [&](long l, const Matrix& t) -> Matrix { return (x + k * l * eye(p)) * t; }, o.eval)
                             .value;
                     return Sides{k_theta_plus(p, z, x, o), rhs};
                   };
                 }});
  out.push_back({"2.10a", "theta series (k theta + A) R | series A R(A + kI)", "", kSeriesTol,
                 [](SampleContext& ctx) -> Thunk {
                   ParamSet p = draw_params(ctx, with_r(0));
                   Complex z = draw_argument(ctx, p);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     return Sides{k_theta_plus(p, z, p.A, o), p.A * series(shift_param(p, ParamRef::a(), 1), z, o)};
                   };
                 }});
  out.push_back({"2.10b", "theta series (k theta + P_i) R | series P_i R(P_i + kI)", "", kSeriesTol,
                 [](SampleContext& ctx) -> Thunk {
                   ParamSet p = draw_params(ctx, with_r(1));
                   Complex z = draw_argument(ctx, p);
                   std::size_t i = pick(ctx, p.r());
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     return Sides{k_theta_plus(p, z, p.P[i], o),
                                  p.P[i] * series(shift_param(p, ParamRef::p(i), 1), z, o)};
                   };
                 }});
  out.push_back({"2.11", "theta series (k theta + Q_j - kI) R | series (Q_j - kI) R(Q_j - kI)", "", kSeriesTol,
                 [](SampleContext& ctx) -> Thunk {
                   ParamSet p = draw_params(ctx, with_r(0, 1));
                   Complex z = draw_argument(ctx, p);
                   std::size_t j = pick(ctx, p.s());
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     const Matrix qk = p.Q[j] - kI(p);
                     return Sides{k_theta_plus(p, z, qk, o), qk * series(shift_param(p, ParamRef::q(j), -1), z, o)};
                   };
                 }});
}

void differential(std::vector<IdentityCase>& out) {
  out.push_back({"2.12", "series R | C R(C + kI) + B theta R(C + kI)", "", kSeriesTol,
                 [](SampleContext& ctx) -> Thunk {
                   ParamSet p = draw_params(ctx, with_r(0));
                   Complex z = draw_argument(ctx, p);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     ParamSet c1 = shift_param(p, ParamRef::c(), 1);
                     return Sides{series(p, z, o), p.C * series(c1, z, o) + p.B * theta_series(c1, z, o)};
                   };
                 }});
  out.push_back({"2.13", "closed-form derivative with shifted parameters | term-wise differentiated series", "",
                 kSeriesTol, [](SampleContext& ctx) -> Thunk {
                   ParamSet p = draw_params(ctx, with_r(0));
                   Complex z = draw_argument(ctx, p);
                   const int mu = 1 + static_cast<int>(ctx.index % 3);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     RSeries s(p);
                     const Complex zmu = std::pow(z, mu);
                     Matrix rhs = s.accumulate(z, [&](long l, const Matrix& t) -> Matrix { return (falling(l, mu) / zmu) * t; },
                                               o.eval)
                                      .value;
                     return Sides{derivative(p, z, mu, o.eval), rhs};
                   };
                 }});
  out.push_back({"2.14",
                 "term-wise mu-th derivative of x^{C/k - I} R(x^{B/k}) | k^-mu x^{C/k-(mu+1)I} R(C - mu k I; matrix "
                 "argument x^{B/k})",
                 "", kSeriesTol, [](SampleContext& ctx) -> Thunk {
                   const int mu = 1 + static_cast<int>(ctx.index % 3);
                   Recipe rec;
                   rec.c = {mu + 0.5, mu + 2.5};
                   ParamSet p = draw_params(ctx, rec);
                   const double x = ctx.draw.uniform(0.4, 1.2);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     const double k = p.k;
                     RSeries s(p);
                     Matrix lhs = power_series_derivative(s, x, p.C / k - eye(p), p.B / k, mu, o);
                     ParamSet q = p;
                     q.C = p.C - mu * kI(p);
                     Matrix rhs = std::pow(k, -mu) * xpow(x, p.C / k - (mu + 1.0) * eye(p)) *
                                  series(q, xpow(x, p.B / k), o);
                     return Sides{lhs, rhs};
                   };
                 }});
  out.push_back({"2.15", "term-wise mu-th derivative of x^{A/k+(mu-1)I} R | k^-mu (A)_mu x^{A/k-I} R(A + mu k I)", "",
                 kSeriesTol, [](SampleContext& ctx) -> Thunk {
                   const int mu = 1 + static_cast<int>(ctx.index % 3);
                   ParamSet p = draw_params(ctx, Recipe{});
                   const double x = ctx.draw.uniform(0.4, 1.2);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     const double k = p.k;
                     RSeries s(p);
                     Matrix lhs = power_series_derivative(s, x, p.A / k + (mu - 1.0) * eye(p), eye(p), mu, o);
                     Matrix rhs = std::pow(k, -mu) * k_pochhammer(p.A, mu, k) * xpow(x, p.A / k - eye(p)) *
                                  series(shift_param(p, ParamRef::a(), mu), x, o);
                     return Sides{lhs, rhs};
                   };
                 }});
  out.push_back({"2.16", "term-wise mu-th derivative of x^{P_i/k+(mu-1)I} R | k^-mu (P_i)_mu x^{P_i/k-I} R(P_i + mu k I)",
                 "", kSeriesTol, [](SampleContext& ctx) -> Thunk {
                   const int mu = 1 + static_cast<int>(ctx.index % 3);
                   Recipe rec;
                   rec.r_min = 1;
                   ParamSet p = draw_params(ctx, rec);
                   std::size_t i = pick(ctx, p.r());
                   const double x = ctx.draw.uniform(0.4, 1.2);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     const double k = p.k;
                     RSeries s(p);
                     Matrix lhs = power_series_derivative(s, x, p.P[i] / k + (mu - 1.0) * eye(p), eye(p), mu, o);
                     Matrix rhs = std::pow(k, -mu) * k_pochhammer(p.P[i], mu, k) * xpow(x, p.P[i] / k - eye(p)) *
                                  series(shift_param(p, ParamRef::p(i), mu), x, o);
                     return Sides{lhs, rhs};
                   };
                 }});
  out.push_back({"2.17",
                 "term-wise mu-th derivative of x^{Q_j/k} R(Q_j + kI) | k^-mu Gamma_k(Q_j + kI) Gamma_k^-1(Q_j - (mu-1)kI) "
                 "x^{Q_j/k - mu I} R(Q_j - (mu-1)kI)",
                 "", kSeriesTol, [](SampleContext& ctx) -> Thunk {
                   const int mu = 1 + static_cast<int>(ctx.index % 3);
                   Recipe rec;
                   rec.s_min = 1;
                   rec.q = {mu + 0.5, mu + 2.5};
                   ParamSet p = draw_params(ctx, rec);
                   std::size_t j = pick(ctx, p.s());
                   const double x = ctx.draw.uniform(0.4, 1.2);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     const double k = p.k;
                     const Matrix& q = p.Q[j];
                     RSeries s(shift_param(p, ParamRef::q(j), 1));
                     Matrix lhs = power_series_derivative(s, x, q / k, eye(p), mu, o);
                     Matrix rhs = std::pow(k, -mu) * k_gamma(q + kI(p), k) * k_gamma_inv(q - (mu - 1.0) * kI(p), k) *
                                  xpow(x, q / k - mu * eye(p)) * series(shift_param(p, ParamRef::q(j), 1 - mu), x, o);
                     return Sides{lhs, rhs};
                   };
                 }});
  out.push_back({"2.18",
                 "theta Prod_j (k theta + Q_j - kI) R via theta powers | z (k theta + A) Prod_i (k theta + P_i) R(C -> B + C)",
                 "", kOdeTol, [](SampleContext& ctx) -> Thunk {
                   ParamSet p = draw_params(ctx, with_r(0));
                   Complex z = draw_argument(ctx, p);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] {
                     const Index n = p.dim();
                     ThetaPoly left{Matrix::Zero(n, n), eye(p)};
                     for (const auto& q : p.Q) left = times_linear(left, p.k, q - kI(p));
                     ThetaPoly right{eye(p)};
                     right = times_linear(right, p.k, p.A);
                     for (const auto& pi : p.P) right = times_linear(right, p.k, pi);
                     ParamSet shifted = p;
                     shifted.C = p.B + p.C;
                     return Sides{apply_poly(left, p, z, o), z * apply_poly(right, shifted, z, o)};
                   };
                 }});
}

ParamSet unit_k(SampleContext& ctx, Recipe rec) {
  ParamSet p = draw_params(ctx, rec);
  // redraw on the k = 1 scale; draw_params used ctx.k
  require(p.k == 1.0, "special cases sample at k = 1");
  return p;
}

void special_cases(std::vector<IdentityCase>& out) {
  out.push_back({"3.7", "Mittag-Leffler parameter set through the series engine | direct coefficient series", "",
                 1e-12, [](SampleContext& ctx) -> Thunk {
                   ctx.k = 1.0;
                   Recipe rec;
                   rec.r_max = 0;
                   rec.s_max = 0;
                   ParamSet base = unit_k(ctx, rec);
                   ParamSet p = mittag_leffler(base.A, base.B, base.C, 1.0);
                   Complex z = draw_argument(ctx, p, 1.5);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] { return Sides{series(p, z, o), direct_series(p, z)}; };
                 }});
  out.push_back({"3.8", "K-function reduction through the series engine | direct coefficient series", "", kSeriesTol,
                 [](SampleContext& ctx) -> Thunk {
                   ctx.k = 1.0;
                   ParamSet p = special_case(SpecialKind::KFunction, unit_k(ctx, Recipe{}));
                   Complex z = draw_argument(ctx, p);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] { return Sides{series(p, z, o), direct_series(p, z)}; };
                 }});
  out.push_back({"3.9", "M-series reduction (A = I) | direct series without (A)_l and 1/l!", "", kSeriesTol,
                 [](SampleContext& ctx) -> Thunk {
                   ctx.k = 1.0;
                   ParamSet args = unit_k(ctx, Recipe{});
                   args.A = eye(args);
                   ParamSet p = special_case(SpecialKind::MSeries, args);
                   Complex z = draw_argument(ctx, p);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] { return Sides{series(p, z, o), direct_series(args, z, {false, false, true})}; };
                 }});
  out.push_back({"3.10", "classical R reduction (A = Q_1 = I) | direct series of the classical R-function", "",
                 kSeriesTol, [](SampleContext& ctx) -> Thunk {
                   ctx.k = 1.0;
                   Recipe rec;
                   rec.s_max = 1;
                   ParamSet args = unit_k(ctx, rec);
                   args.A = eye(args);
                   ParamSet p = special_case(SpecialKind::RRSClassic, args);
                   Complex z = draw_argument(ctx, p);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] { return Sides{series(p, z, o), direct_series(args, z, {false, true, true})}; };
                 }});
  out.push_back({"3.11", "hypergeometric reduction (A = B = C = I) | direct pFq series", "", kSeriesTol,
                 [](SampleContext& ctx) -> Thunk {
                   ctx.k = 1.0;
                   ParamSet args = unit_k(ctx, Recipe{});
                   args.A = args.B = args.C = eye(args);
                   ParamSet p = special_case(SpecialKind::HypergeometricF, args);
                   Complex z = draw_argument(ctx, p);
                   const VerifyOptions& o = ctx.opts;
                   return [=, &o] { return Sides{series(p, z, o), direct_series(args, z, {false, true, false})}; };
                 }});
}

}  // namespace

std::size_t pick(SampleContext& ctx, std::size_t n) { return static_cast<std::size_t>(ctx.draw.integer(0, int(n) - 1)); }

ParamSet with_lists(const ParamSet& p, const Matrix& a, std::vector<Matrix> num, std::vector<Matrix> den) {
  ParamSet out = p;
  out.A = a;
  out.P = std::move(num);
  out.Q = std::move(den);
  return out;
}

std::vector<Matrix> without(const std::vector<Matrix>& v, std::size_t i) {
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (j != i) out.push_back(v[j]);
  return out;
}

std::vector<Matrix> spread(const Matrix& e, int m, double k) {
  std::vector<Matrix> out;
  for (int i = 0; i < m; ++i) out.push_back((e + (i * k) * identity(e.rows())) / static_cast<double>(m));
  return out;
}

MatrixFunction1D integrand(Index dim, double lo, double hi, std::function<Matrix(const Abscissa&)> fn, double lo_exp,
                           double hi_exp) {
  MatrixFunction1D f;
  f.dim = dim;
  f.lo = lo;
  f.hi = hi;
  f.eval = std::move(fn);
  f.endpoint_exponents = std::make_pair(lo_exp, hi_exp);
  return f;
}

Matrix inv(const Matrix& m) {
  Eigen::FullPivLU<Matrix> lu(m);
  if (!lu.isInvertible()) throw Error(ErrorKind::SingularMatrix, "matrix not invertible");
  return lu.inverse();
}

Matrix direct_series(const ParamSet& p, Complex z, DirectSeries form) {
  const Index n = p.dim();
  const double k = p.k;
  Matrix sum = Matrix::Zero(n, n);
  int small = 0;
  for (long l = 0; l < 400; ++l) {
    Matrix t = form.with_a ? k_pochhammer(p.A, l, k) : identity(n);
    for (const auto& m : p.P) t = t * k_pochhammer(m, l, k);
    if (!p.Q.empty()) {
      Matrix den = identity(n);
      for (const auto& m : p.Q) den = den * k_pochhammer(m, l, k);
      t = t * inv(den);
    }
    if (form.with_gamma) t = t * k_gamma_inv(static_cast<double>(l) * p.B + p.C, k);
    Complex scale = std::pow(z, static_cast<double>(l));
    if (form.with_factorial) scale /= std::tgamma(static_cast<double>(l) + 1.0);
    t *= scale;
    sum += t;
    small = t.norm() <= 1e-17 * sum.norm() ? small + 1 : 0;
    if (small >= 3) return sum;
  }
  throw Error(ErrorKind::TruncationFailure, "direct series did not settle");
}

Matrix power_series_derivative(RSeries& s, double x, const Matrix& e0, const Matrix& d, int mu,
                               const VerifyOptions& o) {
  EvalOptions eo = o.eval;
  eo.radius_guard = false;
  const double lx = std::log(x);
  auto transform = [&](long l, const Matrix& c) -> Matrix {
    Matrix e = e0 + static_cast<double>(l) * d;
    Matrix w = mat_func(e, [&](Complex lam) {
      Complex f = 1.0;
      for (int j = 0; j < mu; ++j) f *= lam - static_cast<double>(j);
      return f * std::exp((lam - static_cast<double>(mu)) * lx);
    });
    return w * c;
  };
  return s.accumulate(1.0, transform, eo).value;
}

ParamSet draw_params(SampleContext& ctx, const Recipe& rec) {
  auto& d = ctx.draw;
  const double k = ctx.k;
  int r = d.integer(rec.r_min, rec.r_max);
  int s = d.integer(rec.s_min, rec.s_max);
  if (rec.entire && s < r) s = r;
  if (!rec.entire && r > s + 1) s = r - 1;
  ParamSet p;
  p.k = k;
  p.A = d.draw(rec.a.lo * k, rec.a.hi * k);
  for (int i = 0; i < r; ++i) p.P.push_back(d.draw(rec.p.lo * k, rec.p.hi * k));
  for (int j = 0; j < s; ++j) p.Q.push_back(d.draw(rec.q.lo * k, rec.q.hi * k));
  // With r = s + 1 the series has radius 1/k only for Re B >= kI; smaller B
  // makes it diverge, so B is drawn real there.
  if (r == s + 1)
    p.B = d.draw(std::max(rec.b.lo, 1.0) * k, std::max(rec.b.hi, 1.0) * k, 0.0);
  else
    p.B = d.draw(rec.b.lo * k, rec.b.hi * k, 0.1);
  p.C = d.draw(rec.c.lo * k, rec.c.hi * k);
  validate(p);
  return p;
}

Complex draw_argument(SampleContext& ctx, const ParamSet& p, double entire_max) {
  if (p.r() == p.s() + 1) return ctx.draw.complex_modulus(0.1 / p.k, 0.6 / p.k);
  return ctx.draw.complex_modulus(0.2, entire_max);
}

void add_series_cases(std::vector<IdentityCase>& out) {
  contiguous(out);
  shift_expansion(out);
  theta_relations(out);
  differential(out);
  special_cases(out);
}

}  // namespace kmf::detail
