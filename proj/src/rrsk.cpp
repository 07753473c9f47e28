#include "kmf/rrsk.hpp"

#include <cmath>

namespace kmf {

namespace {

constexpr double kLogMax = 700.0;
constexpr double kLogMin = -745.0;

bool on_circle(double az, double radius) { return std::abs(az - radius) <= 1e-12 * radius; }

ConvergenceClass classify_abs(const ParamSet& p, double az) {
  const std::size_t r = p.r(), s = p.s();
  if (r > s + 1) return {ConvergenceTag::DivergesForNonzeroZ, std::nullopt};
  if (r <= s) return {ConvergenceTag::EntireInZ, std::nullopt};
  const double radius = 1.0 / p.k;
  if (on_circle(az, radius)) {
    double lhs = 0.0;
    for (const auto& q : p.Q) lhs += spectral_bounds(q).lower;
    double rhs = spectral_bounds(p.A).upper;
    for (const auto& pi : p.P) rhs += spectral_bounds(pi).upper;
    if (lhs > rhs) return {ConvergenceTag::OnCircleAbsolute, radius};
    if (lhs <= rhs - p.k) return {ConvergenceTag::OnCircleDiverges, radius};
    return {ConvergenceTag::OnCircleConditional, radius};
  }
  if (az < radius) return {ConvergenceTag::InsideRadius, radius};
  return {ConvergenceTag::DivergesForNonzeroZ, radius};
}

void guard(const ConvergenceClass& cls, double az, const EvalOptions& opts) {
  if (!opts.radius_guard || az == 0.0) return;
  switch (cls.tag) {
    case ConvergenceTag::EntireInZ:
    case ConvergenceTag::InsideRadius:
      return;
    case ConvergenceTag::DivergesForNonzeroZ:
      throw Error(ErrorKind::RadiusViolation, "series diverges at this argument");
    default:
      throw Error(ErrorKind::RadiusViolation, "argument on the circle |z| = 1/k; disable the radius guard to evaluate");
  }
}

void require_options(const EvalOptions& opts) {
  if (!(opts.tol > 0.0)) throw Error(ErrorKind::InvalidInput, "tol must be positive");
  if (opts.max_terms < 1) throw Error(ErrorKind::InvalidInput, "max_terms must be at least 1");
}

Matrix materialize(const ScaledMatrix& t, long l) {
  if (t.log_scale < kLogMin) return Matrix::Zero(t.mat.rows(), t.mat.cols());
  if (t.log_scale > kLogMax)
    throw Error(ErrorKind::TruncationFailure, "term " + std::to_string(l) + " overflows double range");
  return t.mat * std::exp(t.log_scale);
}

using TermFn = std::function<ScaledMatrix(long)>;

EvalResult run_sum(const TermFn& term, const RSeries::Transform& transform, const EvalOptions& opts,
                   ConvergenceClass cls, Index n) {
  Matrix sum = Matrix::Zero(n, n);
  int small = 0;
  for (long l = 0; l < opts.max_terms; ++l) {
    Matrix t = materialize(term(l), l);
    if (transform) t = transform(l, t);
    sum += t;
    if (!sum.allFinite()) throw Error(ErrorKind::TruncationFailure, "partial sum not finite at term " + std::to_string(l));
    const double tn = t.norm(), sn = sum.norm();
    // an all-zero prefix (transforms that kill low orders) is not convergence
    small = (sn > 0.0 && tn <= opts.tol * sn) ? small + 1 : 0;
    if (small >= 3) return {sum, l + 1, sn > 0.0 ? tn / sn : 0.0, cls, {}};
  }
  throw Error(ErrorKind::TruncationFailure,
              "tolerance not met within " + std::to_string(opts.max_terms) + " terms");
}

void add_warnings(const ParamSet& p, EvalResult& res) {
  if (!positive_stable(p.C)) res.warnings.push_back("C is not positive stable; using the analytic continuation");
  if (spectral_bounds(p.B).lower < 0.0) res.warnings.push_back("B has eigenvalues with negative real part");
}

}  // namespace

std::string_view to_string(ConvergenceTag tag) {
  switch (tag) {
    case ConvergenceTag::DivergesForNonzeroZ: return "DivergesForNonzeroZ";
    case ConvergenceTag::EntireInZ: return "EntireInZ";
    case ConvergenceTag::InsideRadius: return "InsideRadius";
    case ConvergenceTag::OnCircleAbsolute: return "OnCircleAbsolute";
    case ConvergenceTag::OnCircleDiverges: return "OnCircleDiverges";
    case ConvergenceTag::OnCircleConditional: return "OnCircleConditional";
  }
  return "Unknown";
}

void validate(const ParamSet& p, long lmax) {
  if (!(p.k > 0.0) || !std::isfinite(p.k)) throw Error(ErrorKind::InvalidInput, "k must be a positive real");
  require_square(p.A, "A");
  const Index n = p.dim();
  auto same = [n](const Matrix& m, const char* what) {
    require_square(m, what);
    if (m.rows() != n) throw Error(ErrorKind::InvalidInput, std::string(what) + " dimension mismatch");
  };
  same(p.B, "B");
  same(p.C, "C");
  for (const auto& m : p.P) same(m, "P_i");
  for (const auto& m : p.Q) same(m, "Q_j");
  for (std::size_t j = 0; j < p.Q.size(); ++j)
    if (!check_shift_invertible(p.Q[j], p.k, lmax))
      throw Error(ErrorKind::SingularQShift, "Q_" + std::to_string(j + 1) + " + k l I is singular for some l");
}

ConvergenceClass classify_convergence(const ParamSet& p, Complex z) { return classify_abs(p, std::abs(z)); }

ConvergenceClass classify_convergence(const ParamSet& p, const Matrix& z) {
  return classify_abs(p, spectral_radius(z));
}

RSeries::RSeries(ParamSet p) : p_(std::move(p)) {
  const Index n = p_.dim();
  poch_a_ = ScaledMatrix::from(identity(n));
  poch_p_.assign(p_.r(), poch_a_);
  poch_q_.assign(p_.s(), poch_a_);
}

void RSeries::extend() {
  const long l = static_cast<long>(coeffs_.size());
  const Index n = p_.dim();
  const Matrix id = identity(n);

  ScaledMatrix g;
  try {
    g = k_gamma_inv_scaled(static_cast<double>(l) * p_.B + p_.C, p_.k);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DomainError) throw;
    throw Error(ErrorKind::GammaDomainError, "lB + C hits a Gamma_k pole at l = " + std::to_string(l));
  }

  ScaledMatrix num = poch_a_;
  for (const auto& m : poch_p_) num = num * m;
  ScaledMatrix c = num;
  if (!poch_q_.empty()) {
    ScaledMatrix den = poch_q_.front();
    for (std::size_t j = 1; j < poch_q_.size(); ++j) den = den * poch_q_[j];
    c = c * inverse(den, ErrorKind::SingularQShift);
  }
  c = c * g;
  c.log_scale -= log_factorial_;
  coeffs_.push_back(c);

  const double kl = p_.k * static_cast<double>(l);
  poch_a_ = poch_a_ * (p_.A + kl * id);
  for (std::size_t i = 0; i < poch_p_.size(); ++i) poch_p_[i] = poch_p_[i] * (p_.P[i] + kl * id);
  for (std::size_t j = 0; j < poch_q_.size(); ++j) poch_q_[j] = poch_q_[j] * (p_.Q[j] + kl * id);
  log_factorial_ += std::log(static_cast<double>(l + 1));
}

const ScaledMatrix& RSeries::coefficient(long l) {
  while (static_cast<long>(coeffs_.size()) <= l) extend();
  return coeffs_[static_cast<std::size_t>(l)];
}

EvalResult RSeries::accumulate(Complex z, const Transform& transform, const EvalOptions& opts) {
  require_options(opts);
  const double az = std::abs(z);
  ConvergenceClass cls = classify_convergence(p_, z);
  guard(cls, az, opts);
  if (az == 0.0) {
    Matrix t = materialize(coefficient(0), 0);
    if (transform) t = transform(0, t);
    return {t, 1, 0.0, cls, {}};
  }
  const double logz = std::log(az), argz = std::arg(z);
  auto term = [&](long l) {
    const ScaledMatrix& c = coefficient(l);
    const double dl = static_cast<double>(l);
    return ScaledMatrix{c.mat * std::polar(1.0, dl * argz), c.log_scale + dl * logz};
  };
  return run_sum(term, transform, opts, cls, p_.dim());
}

EvalResult RSeries::evaluate(Complex z, const EvalOptions& opts) { return accumulate(z, nullptr, opts); }

EvalResult RSeries::evaluate(const Matrix& z, const EvalOptions& opts) {
  require_options(opts);
  if (z.rows() != p_.dim() || z.cols() != p_.dim()) throw Error(ErrorKind::InvalidInput, "argument dimension mismatch");
  const double az = spectral_radius(z);
  ConvergenceClass cls = classify_abs(p_, az);
  guard(cls, az, opts);
  if (z.norm() == 0.0) return {materialize(coefficient(0), 0), 1, 0.0, cls, {}};
  ScaledMatrix zs = ScaledMatrix::from(z);
  ScaledMatrix power = ScaledMatrix::from(identity(p_.dim()));
  long next = 0;
  auto term = [&](long l) {
    while (next < l) {
      power = power * zs;
      ++next;
    }
    return power * coefficient(l);
  };
  return run_sum(term, nullptr, opts, cls, p_.dim());
}

std::vector<double> RSeries::term_log_norms(Complex z, long n) {
  std::vector<double> out;
  const double logz = std::log(std::abs(z));
  for (long l = 0; l < n; ++l) out.push_back(coefficient(l).log_norm() + static_cast<double>(l) * logz);
  return out;
}

EvalResult eval_series(const ParamSet& p, Complex z, const EvalOptions& opts) {
  validate(p, opts.max_terms);
  EvalResult res = RSeries(p).evaluate(z, opts);
  add_warnings(p, res);
  return res;
}

EvalResult eval_series(const ParamSet& p, const Matrix& z, const EvalOptions& opts) {
  validate(p, opts.max_terms);
  EvalResult res = RSeries(p).evaluate(z, opts);
  add_warnings(p, res);
  return res;
}

ParamSet shift_param(const ParamSet& p, ParamRef which, long steps, long lmax) {
  ParamSet out = p;
  const Matrix delta = (p.k * static_cast<double>(steps)) * identity(p.dim());
  switch (which.kind) {
    case ParamRef::Kind::A:
      out.A += delta;
      break;
    case ParamRef::Kind::C:
      out.C += delta;
      break;
    case ParamRef::Kind::P:
      if (which.index >= p.P.size()) throw Error(ErrorKind::InvalidInput, "P index out of range");
      out.P[which.index] += delta;
      break;
    case ParamRef::Kind::Q:
      if (which.index >= p.Q.size()) throw Error(ErrorKind::InvalidInput, "Q index out of range");
      out.Q[which.index] += delta;
      if (!check_shift_invertible(out.Q[which.index], p.k, lmax))
        throw Error(ErrorKind::SingularQShift, "shifted Q_" + std::to_string(which.index + 1) + " violates invertibility");
      break;
  }
  return out;
}

Matrix theta_apply(const ParamSet& p, Complex z, const EvalOptions& opts, int order) {
  validate(p, opts.max_terms);
  RSeries series(p);
  auto weight = [order](long l, const Matrix& t) -> Matrix {
    return std::pow(static_cast<double>(l), order) * t;
  };
  return series.accumulate(z, weight, opts).value;
}

Matrix derivative(const ParamSet& p, Complex z, int mu, const EvalOptions& opts) {
  if (mu < 1) throw Error(ErrorKind::InvalidInput, "mu must be a positive integer");
  validate(p, opts.max_terms);
  Matrix pre = k_pochhammer(p.A, mu, p.k);
  for (const auto& m : p.P) pre = pre * k_pochhammer(m, mu, p.k);
  if (!p.Q.empty()) {
    Matrix den = k_pochhammer(p.Q.front(), mu, p.k);
    for (std::size_t j = 1; j < p.Q.size(); ++j) den = den * k_pochhammer(p.Q[j], mu, p.k);
    Eigen::FullPivLU<Matrix> lu(den);
    if (!lu.isInvertible()) throw Error(ErrorKind::SingularQShift, "(Q_j)_mu product is singular");
    pre = pre * lu.inverse();
  }
  ParamSet shifted = p;
  const Matrix d = (p.k * mu) * identity(p.dim());
  shifted.A += d;
  for (auto& m : shifted.P) m += d;
  for (auto& m : shifted.Q) m += d;
  shifted.C = static_cast<double>(mu) * p.B + p.C;
  return pre * eval_series(shifted, z, opts).value;
}

ParamSet mittag_leffler(const Matrix& a, const Matrix& b, const Matrix& c, double k) {
  return ParamSet{k, a, {}, {}, b, c};
}

namespace {

bool is_identity(const Matrix& m) { return (m - identity(m.rows())).norm() <= 1e-14 * std::sqrt(double(m.rows())); }

}  // namespace

ParamSet special_case(SpecialKind kind, const ParamSet& args) {
  validate(args);
  if (args.k != 1.0) throw Error(ErrorKind::InvalidReduction, "special cases need k = 1");
  switch (kind) {
    case SpecialKind::KFunction:
      return args;
    case SpecialKind::MSeries:
      if (!is_identity(args.A)) throw Error(ErrorKind::InvalidReduction, "M-series needs A = I");
      return args;
    case SpecialKind::RRSClassic: {
      if (!is_identity(args.A)) throw Error(ErrorKind::InvalidReduction, "classical R-function needs A = I");
      ParamSet out = args;
      out.Q.insert(out.Q.begin(), identity(args.dim()));
      return out;
    }
    case SpecialKind::HypergeometricF:
      if (!is_identity(args.A) || !is_identity(args.B) || !is_identity(args.C))
        throw Error(ErrorKind::InvalidReduction, "hypergeometric reduction needs A = B = C = I");
      return args;
  }
  throw Error(ErrorKind::InvalidReduction, "unknown special case");
}

ParamSet hypergeometric_k(const Matrix& a, const std::vector<Matrix>& p, const std::vector<Matrix>& q, double k) {
  const Index n = a.rows();
  return ParamSet{k, a, p, q, Matrix::Zero(n, n), k * identity(n)};
}

}  // namespace kmf
