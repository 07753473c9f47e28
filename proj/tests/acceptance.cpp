// Acceptance checks. One PASS/FAIL line per criterion; exit status is the
// number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "kmf/json_io.hpp"
#include "kmf/kgamma.hpp"
#include "kmf/operators.hpp"
#include "kmf/rrsk.hpp"
#include "kmf/verify.hpp"

using namespace kmf;

namespace {

constexpr double kCollapseTol = 1e-12;
constexpr long kCollapseTerms = 25;
constexpr double kGammaTol = 1e-10;
constexpr double kBetaTol = 1e-9;
constexpr double kBetaExactTol = 1e-12;
constexpr double kRadiusTol = 1e-14;
constexpr long kRadiusGrowthBy = 300;
constexpr double kSeriesTol = 1e-9;
constexpr double kOdeTol = 1e-7;
constexpr double kQuadTol = 1e-6;
constexpr double kCatalogSeconds = 300.0;
constexpr double kEigenTol = 1e-10;
constexpr double kOperatorTol = 1e-9;

int failures = 0;

void report(int n, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", n, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

void guarded(int n, const char* name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(n, name, false, std::string("threw: ") + e.what());
  }
}

Matrix sc(Complex c) { return c * identity(1); }

void collapse() {
  ParamSet p;
  p.k = 1.0;
  p.A = p.B = p.C = identity(1);
  auto t0 = std::chrono::steady_clock::now();
  EvalResult r = eval_series(p, Complex(1.0));
  double us = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - t0).count();
  double err = std::abs(r.value(0, 0) - 2.718281828459045);
  report(1, "collapse to e", err <= kCollapseTol && r.terms_used <= kCollapseTerms,
         fmt("|R - e| = %.2e, ", err) + std::to_string(r.terms_used) + " terms, " + fmt("%.0f us", us));
}

void gamma_equation() {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    CommutingFamilySampler s(1000 + i, 3);
    const double k = s.uniform(0.3, 3.0);
    Matrix m = s.draw(-2.5, 4.0, 1.5);
    if (!check_shift_invertible(m, k, 0, 1e-3)) m += 0.5 * k * identity(3);
    Matrix lhs = k_gamma(Matrix(m + k * identity(3)), k);
    worst = std::max(worst, relative_residual(lhs, Matrix(m * k_gamma(m, k))));
  }
  report(2, "k-Gamma functional equation", worst <= kGammaTol, fmt("max residual %.2e over 100 matrices", worst));
}

void beta_consistency() {
  double worst = 0.0;
  MatrixFunction1D one;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const Index n = 2 + static_cast<Index>(i % 3);
    CommutingFamilySampler s(2000 + i, n);
    const double k = s.uniform(0.5, 2.0);
    Matrix a = s.draw(0.3 * k, 3.0 * k, 0.5), b = s.draw(0.3 * k, 3.0 * k, 0.5);
    one = MatrixFunction1D::constant(identity(n), 0.0, 1.0);
    one.dim = n;
    QuadratureSpec q{1e-13, 1e-13, 12, std::nullopt};
    worst = std::max(worst, relative_residual(beta_transform(one, a, b, k, q), k_beta(a, b, k)));
  }
  double exact = 0.0;
  for (double k : {0.25, 0.5, 1.0, 1.5, 2.0, 3.7}) {
    Matrix kk = k * identity(3);
    exact = std::max(exact, relative_residual(k_beta(kk, kk, k), Matrix(identity(3) / k)));
  }
  report(3, "k-Beta gamma form vs integral", worst <= kBetaTol && exact <= kBetaExactTol,
         fmt("max residual %.2e over 50 pairs, a=b=kI residual %.2e", worst, exact));
}

void radius() {
  ParamSet p;
  p.k = 2.0;
  p.A = sc(1.0);
  p.P = {sc(1.5), sc(0.5)};
  p.Q = {sc(2.5)};
  p.B = sc(2.0);
  p.C = sc(1.0);
  EvalResult inside = eval_series(p, Complex(0.45));
  const bool ok_inside = inside.residual_estimate <= kRadiusTol && inside.value.allFinite();

  RSeries series(p);
  std::vector<double> logs = series.term_log_norms(Complex(0.55), kRadiusGrowthBy + 1);
  double lo = logs.front();
  for (double v : logs) lo = std::min(lo, v);
  const bool grows = logs.back() > lo;

  bool truncation = false;
  EvalOptions off;
  off.radius_guard = false;
  off.max_terms = kRadiusGrowthBy;
  try {
    eval_series(p, Complex(0.55), off);
  } catch (const Error& e) {
    truncation = e.kind() == ErrorKind::TruncationFailure;
  }
  report(4, "convergence radius 1/k", ok_inside && grows && truncation,
         fmt("|z|=0.45 residual %.2e; |z|=0.55 log-norm rise %.2f", inside.residual_estimate, logs.back() - lo) +
             (truncation ? ", TruncationFailure raised" : ", no TruncationFailure"));
}

double group_tol(const std::string& id) {
  const int major = std::stoi(id.substr(0, id.find('.')));
  const int minor = std::stoi(id.substr(id.find('.') + 1));
  if (major == 2 && minor == 18) return kOdeTol;
  if ((major == 2 && minor >= 19) || (major == 3 && minor == 1)) return kQuadTol;
  return kSeriesTol;
}

std::string catalog_json;

void full_catalog() {
  auto t0 = std::chrono::steady_clock::now();
  auto reports = verify_all(8, 0);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  catalog_json = to_json(reports).dump();
  int bad = 0;
  std::string first;
  for (const auto& r : reports)
    if (!r.passed || !(r.max_rel_residual <= group_tol(r.id))) {
      ++bad;
      if (first.empty()) first = ", first " + r.id;
    }
  report(5, "identity catalog, 8 samples, seed 0", bad == 0 && secs <= kCatalogSeconds && !reports.empty(),
         std::to_string(reports.size()) + " identities, " + std::to_string(bad) + " failed" + first +
             fmt(", %.1f s", secs));
}

void eigen_consistency() {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const Index n = 2 + static_cast<Index>(i % 3);
    CommutingFamilySampler s(3000 + i, n);
    ParamSet p;
    p.k = i == 0 ? 1.0 : s.uniform(0.5, 2.0);
    p.A = s.draw(0.2, 2.0);
    const int r = s.integer(0, 2);
    for (int j = 0; j < r; ++j) p.P.push_back(s.draw(0.2, 2.0));
    p.Q = {s.draw(0.5, 2.5), s.draw(0.5, 2.5)};
    p.B = s.draw(p.k, 2.0 * p.k, 0.0);
    p.C = s.draw(0.3, 2.0);
    Matrix z = s.draw(0.05, 0.4, 0.2);
    Matrix mat = eval_series(p, z).value;
    Vector lz = s.eigenvalues_of(z), out(n);
    for (Index e = 0; e < n; ++e) {
      auto at = [&](const Matrix& m) { return sc(s.eigenvalues_of(m)(e)); };
      ParamSet q;
      q.k = p.k;
      q.A = at(p.A);
      for (const auto& m : p.P) q.P.push_back(at(m));
      for (const auto& m : p.Q) q.Q.push_back(at(m));
      q.B = at(p.B);
      q.C = at(p.C);
      out(e) = eval_series(q, lz(e)).value(0, 0);
    }
    worst = std::max(worst, relative_residual(mat, s.from_eigenvalues(out)));
  }
  report(6, "matrix vs spectral evaluation", worst <= kEigenTol, fmt("max residual %.2e over 20 sets", worst));
}

void operator_spots() {
  double rl = 0.0, weyl = 0.0;
  CommutingFamilySampler s(4000, 1);
  MatrixFunction1D one = MatrixFunction1D::constant(identity(1), 0.0, 100.0);
  MatrixFunction1D ex = MatrixFunction1D::of(1, 0.0, INFINITY, [](double t) -> Matrix { return sc(std::exp(-t)); });
  ex.decay = Decay::Exponential;
  for (int i = 0; i < 10; ++i) {
    const double x = s.uniform(0.1, 5.0), mu = s.uniform(0.1, 3.0), k = s.uniform(0.3, 2.5);
    const double want = std::pow(x, mu / k) / k_gamma(Complex(mu + k), k).real();
    rl = std::max(rl, std::abs(rl_integral(one, 0.0, x, mu, k)(0, 0) - want) / std::max(1.0, want));
  }
  for (int i = 0; i < 10; ++i) {
    const double x = s.uniform(0.0, 5.0), alpha = s.uniform(0.1, 3.0), k = s.uniform(0.3, 2.5);
    const double want = std::exp(-x) * std::pow(k, -alpha / k);
    weyl = std::max(weyl, std::abs(weyl_integral(ex, x, alpha, k)(0, 0) - want) / std::max(1.0, want));
  }
  report(7, "fractional operator spot values", rl <= kOperatorTol && weyl <= kOperatorTol,
         fmt("RL max error %.2e, Weyl max error %.2e", rl, weyl));
}

void determinism() {
  std::string again = to_json(verify_all(8, 0)).dump();
  const bool same = !catalog_json.empty() && again == catalog_json;
  report(8, "determinism", same, same ? std::to_string(again.size()) + " bytes identical" : "outputs differ");
}

}  // namespace

int main() {
  guarded(1, "collapse to e", collapse);
  guarded(2, "k-Gamma functional equation", gamma_equation);
  guarded(3, "k-Beta gamma form vs integral", beta_consistency);
  guarded(4, "convergence radius 1/k", radius);
  guarded(5, "identity catalog, 8 samples, seed 0", full_catalog);
  guarded(6, "matrix vs spectral evaluation", eigen_consistency);
  guarded(7, "fractional operator spot values", operator_spots);
  guarded(8, "determinism", determinism);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures;
}
