#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "kmf/rrsk.hpp"
#include "kmf/verify.hpp"

using namespace kmf;

namespace {

Matrix sc(Complex c) { return c * identity(1); }

ParamSet scalar_set(double k, Complex a, std::vector<Complex> p, std::vector<Complex> q, Complex b, Complex c) {
  ParamSet ps;
  ps.k = k;
  ps.A = sc(a);
  for (auto v : p) ps.P.push_back(sc(v));
  for (auto v : q) ps.Q.push_back(sc(v));
  ps.B = sc(b);
  ps.C = sc(c);
  return ps;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(RSeries, CollapsesToExponential) {
  ParamSet p = scalar_set(1.0, 1.0, {}, {}, 1.0, 1.0);
  EvalResult r = eval_series(p, Complex(1.0));
  EXPECT_NEAR(std::abs(r.value(0, 0) - std::numbers::e), 0.0, 1e-14);
  EXPECT_LE(r.terms_used, 25);
  r = eval_series(p, Complex(-2.0, 1.0));
  EXPECT_LT(std::abs(r.value(0, 0) - std::exp(Complex(-2.0, 1.0))), 1e-14);
}

TEST(RSeries, Classification) {
  ParamSet p = scalar_set(2.0, 1.0, {1.5, 0.5}, {2.5}, 2.0, 1.0);
  ConvergenceClass c = classify_convergence(p, Complex(0.1));
  EXPECT_EQ(c.tag, ConvergenceTag::InsideRadius);
  ASSERT_TRUE(c.radius.has_value());
  EXPECT_DOUBLE_EQ(*c.radius, 0.5);

  EXPECT_EQ(classify_convergence(scalar_set(1.0, 1.0, {}, {}, 1.0, 1.0), Complex(100.0)).tag,
            ConvergenceTag::EntireInZ);
  EXPECT_EQ(classify_convergence(scalar_set(1.0, 1.0, {1.0, 1.0}, {}, 1.0, 1.0), Complex(0.1)).tag,
            ConvergenceTag::DivergesForNonzeroZ);
  // z = 0 is always evaluable
  EXPECT_NO_THROW(eval_series(scalar_set(1.0, 1.0, {1.0, 1.0}, {}, 1.0, 1.0), Complex(0.0)));
}

TEST(RSeries, OnCircleTags) {
  // sum of Re(Q) - Re(A) - Re(P), divided by k, decides the circle behaviour
  ParamSet abs_conv = scalar_set(1.0, 0.5, {0.5, 0.5}, {3.0}, 1.0, 1.0);
  EXPECT_EQ(classify_convergence(abs_conv, Complex(1.0)).tag, ConvergenceTag::OnCircleAbsolute);
  ParamSet div = scalar_set(1.0, 2.0, {2.0, 2.0}, {1.0}, 1.0, 1.0);
  EXPECT_EQ(classify_convergence(div, Complex(1.0)).tag, ConvergenceTag::OnCircleDiverges);
  ParamSet cond = scalar_set(1.0, 1.0, {1.0, 1.0}, {2.5}, 1.0, 1.0);
  EXPECT_EQ(classify_convergence(cond, Complex(0.0, -1.0)).tag, ConvergenceTag::OnCircleConditional);
  EXPECT_THROW(eval_series(cond, Complex(1.0)), Error);
}

TEST(RSeries, GuardErrors) {
  ParamSet p = scalar_set(2.0, 1.0, {1.5, 0.5}, {2.5}, 2.0, 1.0);
  EXPECT_EQ(kind_of([&] { eval_series(p, Complex(0.6)); }), ErrorKind::RadiusViolation);
  EvalOptions off;
  off.radius_guard = false;
  off.max_terms = 300;
  EXPECT_EQ(kind_of([&] { eval_series(p, Complex(0.55), off); }), ErrorKind::TruncationFailure);

  ParamSet singular = scalar_set(1.0, 1.0, {}, {-3.0}, 1.0, 1.0);
  EXPECT_EQ(kind_of([&] { validate(singular); }), ErrorKind::SingularQShift);

  ParamSet mismatched = p;
  mismatched.C = identity(2);
  EXPECT_EQ(kind_of([&] { validate(mismatched); }), ErrorKind::InvalidInput);
}

TEST(RSeries, SpecialCaseReductions) {
  ParamSet ml = scalar_set(1.0, 1.0, {}, {}, 1.0, 1.0);
  EXPECT_NO_THROW(special_case(SpecialKind::MSeries, scalar_set(1.0, 1.0, {1.0}, {2.0}, 1.0, 1.0)));
  ParamSet classic = special_case(SpecialKind::RRSClassic, ml);
  ASSERT_EQ(classic.s(), 1u);
  EXPECT_LT(relative_residual(classic.Q[0], identity(1)), 1e-15);
  EXPECT_EQ(kind_of([&] { special_case(SpecialKind::HypergeometricF, scalar_set(2.0, 1.0, {}, {}, 1.0, 1.0)); }),
            ErrorKind::InvalidReduction);
}

TEST(RSeries, HypergeometricMatchesClosedForm) {
  // 2F1(1, 1; 2; z) = -log(1 - z) / z
  ParamSet h = hypergeometric_k(sc(1.0), {sc(1.0)}, {sc(2.0)}, 1.0);
  EvalResult r = eval_series(h, Complex(0.5));
  EXPECT_NEAR(r.value(0, 0).real(), 1.38629436111989061883446424292, 1e-13);
  EXPECT_NEAR(r.value(0, 0).imag(), 0.0, 1e-15);
}

TEST(RSeries, MatrixArgumentMatchesSpectral) {
  CommutingFamilySampler s(5, 3);
  ParamSet p;
  p.k = 1.3;
  p.A = s.draw(0.5, 1.5);
  p.P = {s.draw(0.5, 1.5)};
  p.Q = {s.draw(1.0, 2.0)};
  p.B = s.draw(1.3, 2.0, 0.0);
  p.C = s.draw(0.5, 1.5);
  Matrix z = s.draw(0.1, 0.3, 0.1);
  Matrix mat = eval_series(p, z).value;
  Vector lz = s.eigenvalues_of(z);
  Vector out(3);
  for (Index i = 0; i < 3; ++i) {
    ParamSet e;
    e.k = p.k;
    auto pick = [&](const Matrix& m) { return sc(s.eigenvalues_of(m)(i)); };
    e.A = pick(p.A);
    e.P = {pick(p.P[0])};
    e.Q = {pick(p.Q[0])};
    e.B = pick(p.B);
    e.C = pick(p.C);
    out(i) = eval_series(e, lz(i)).value(0, 0);
  }
  EXPECT_LT(relative_residual(mat, s.from_eigenvalues(out)), 1e-12);
}

TEST(RSeries, ThetaAndDerivative) {
  // theta e^z = z e^z and D^2 e^z = e^z
  ParamSet p = scalar_set(1.0, 1.0, {}, {}, 1.0, 1.0);
  const Complex z(0.7, -0.3);
  EXPECT_LT(std::abs(theta_apply(p, z)(0, 0) - z * std::exp(z)), 1e-13);
  EXPECT_LT(std::abs(derivative(p, z, 2)(0, 0) - std::exp(z)), 1e-13);
}

TEST(RSeries, ShiftParamRejectsSingular) {
  ParamSet p = scalar_set(1.0, 1.0, {}, {1.0}, 1.0, 1.0);
  EXPECT_EQ(kind_of([&] { shift_param(p, ParamRef::q(0), -1); }), ErrorKind::SingularQShift);
  ParamSet up = shift_param(p, ParamRef::a(), 2);
  EXPECT_NEAR(up.A(0, 0).real(), 3.0, 1e-15);
}
