#include <doctest.h>

#include <cmath>
#include <numbers>

#include "desitter/errors.hpp"
#include "desitter/solver.hpp"
#include "desitter/surfaces.hpp"
#include "support.hpp"

using namespace desitter;
using testing_support::Gen;

namespace {

constexpr CaseKind kGroups[] = {CaseKind::Spherical, CaseKind::Hyperbolic, CaseKind::Parabolic};
constexpr double kHalfPi = std::numbers::pi / 2;

double max_diff(const Mat4& a, const Mat4& b) {
  double m = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
  return m;
}

double dist(const LVec4& a, const LVec4& b) {
  double m = 0;
  for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Curves of u(t) over v = t that live in every half-space near t = pi/2.
CurveUV sample_curve(Gen& g, CaseKind kind) {
  const double u0 = kind == CaseKind::Parabolic ? g.uniform(-0.5, 0.1) : g.uniform(0.3, 1.0);
  const double a1 = g.uniform(-0.4, 0.4), a2 = g.uniform(-0.4, 0.4);
  return CurveUV(
      [=](double t) {
        const double x = t - kHalfPi;
        return ChartJet{u0 + a1 * x + a2 * x * x, a1 + 2 * a2 * x, 2 * a2, t, 1, 0};
      },
      kHalfPi - 0.4, kHalfPi + 0.4);
}

}  // namespace

TEST_CASE("rotation groups: identity, composition, isometry, axis") {
  Gen g(41);
  for (CaseKind kind : kGroups) {
    CAPTURE(to_string(kind));
    const RotationGroup R(kind);
    CHECK(max_diff(R.matrix(0), identity4()) == 0);
    for (int k = 0; k < 50; ++k) {
      const double s1 = g.uniform(-2, 2), s2 = g.uniform(-2, 2);
      CHECK(max_diff(R.matrix(s1) * R.matrix(s2), R.matrix(s1 + s2)) < 1e-12 * (1 + std::exp(std::abs(s1) + std::abs(s2))));
      const LVec4 p{g.uniform(-1, 1), g.uniform(-1, 1), g.uniform(-1, 1), g.uniform(-1, 1)};
      const LVec4 q{g.uniform(-1, 1), g.uniform(-1, 1), g.uniform(-1, 1), g.uniform(-1, 1)};
      const double s = g.uniform(-1, 1);
      CHECK(std::abs(inner4(R.matrix(s) * p, R.matrix(s) * q) - inner4(p, q)) < 1e-12);
      const LVec4 axis = R.axis_point(g.uniform(-2, 2));
      CHECK(inner4(axis, axis) == doctest::Approx(1).epsilon(1e-12));
      CHECK(axis.x4() == 0);
      CHECK(dist(R.matrix(s) * axis, axis) < 1e-12);
    }
    // Derivative matrices against central differences.
    const double s = 0.37, h = 1e-5;
    Mat4 fd1{}, fd2{};
    const Mat4 mp = R.matrix(s + h), mm = R.matrix(s - h), m0 = R.matrix(s);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        fd1[i][j] = (mp[i][j] - mm[i][j]) / (2 * h);
        fd2[i][j] = (mp[i][j] - 2 * m0[i][j] + mm[i][j]) / (h * h);
      }
    CHECK(max_diff(fd1, R.matrix_ds(s)) < 1e-8);
    CHECK(max_diff(fd2, R.matrix_dss(s)) < 1e-4);
  }
}

TEST_CASE("surface points") {
  const CurveUV par = CurveUV::parallel(1.0, -1, 1);
  const LVec4 p = surface_point(par, 0.0, 1.0, CaseKind::Spherical);
  const double c = std::cosh(1.0), s = std::sinh(1.0);
  CHECK(dist(p, LVec4{c, 0, c * s, s * s}) < 1e-14);
  Gen g(42);
  for (CaseKind kind : kGroups) {
    const CurveUV curve = sample_curve(g, kind);
    const double t = kHalfPi + 0.1;
    const ChartJet j = curve.jet(t);
    CHECK(dist(surface_point(curve, t, 0.0, kind), LVec4(psi(j.u, j.v))) < 1e-15);
    for (int k = 0; k < 20; ++k) {
      const double s1 = g.uniform(-1, 1), s2 = g.uniform(-1, 1);
      const LVec4 q = surface_point(curve, t, s1 + s2, kind);
      CHECK(inner4(q, q) == doctest::Approx(1).epsilon(1e-12));
      const RotationGroup R(kind);
      CHECK(dist(q, R.matrix(s1) * (R.matrix(s2) * LVec4(psi(j.u, j.v)))) < 1e-12);
    }
  }
}

TEST_CASE("fundamental forms of the spherical parallel") {
  const CurveUV par = CurveUV::parallel(1.0, -1, 1);
  const double c = std::cosh(1.0), s = std::sinh(1.0);
  for (FormMode mode : {FormMode::Analytic, FormMode::FiniteDifference}) {
    SurfaceSample x = fundamental_forms(par, 0.0, 0.0, CaseKind::Spherical, mode);
    CHECK(x.E == doctest::Approx(c * c).epsilon(1e-9));
    CHECK(x.G == doctest::Approx(s * s).epsilon(1e-9));
    CHECK(std::abs(x.F) < 1e-9);
    CHECK(dist(x.normal, LVec4{s * c / c, 0, c * c / c, 0}) < 1e-9);
    CHECK(inner4(x.normal, x.normal) == doctest::Approx(-1).epsilon(1e-9));
    CHECK(x.delta == 1);
  }
}

TEST_CASE("H of the rotated parallel is -coth(2 u0)") {
  for (double u0 : {0.4, 1.0, 1.7}) {
    const CurveUV par = CurveUV::parallel(u0, -1, 1);
    for (double s : {-1.0, 0.0, 0.5}) {
      SurfaceSample x = fundamental_forms(par, 0.2, s, CaseKind::Spherical, FormMode::FiniteDifference);
      const double H = mean_curvature(x);
      CHECK(H == doctest::Approx(-1 / std::tanh(2 * u0)).epsilon(1e-8));
      CHECK(x.H == H);
      CHECK(mean_curvature_closed_form(par, 0.2, CaseKind::Spherical) ==
            doctest::Approx(-1 / std::tanh(2 * u0)).epsilon(1e-12));
    }
  }
  CHECK(std::abs(-1 / std::tanh(2.0)) == doctest::Approx(1.0373).epsilon(1e-4));
}

TEST_CASE("analytic and finite-difference forms agree; normal invariants") {
  Gen g(43);
  for (int k = 0; k < 90; ++k) {
    const CaseKind kind = kGroups[k % 3];
    CAPTURE(to_string(kind));
    const CurveUV curve = sample_curve(g, kind);
    const double t = kHalfPi + g.uniform(-0.3, 0.3), s = g.uniform(-1, 1);
    SurfaceSample a = fundamental_forms(curve, t, s, kind, FormMode::Analytic);
    SurfaceSample f = fundamental_forms(curve, t, s, kind, FormMode::FiniteDifference);
    auto rel = [](double x, double y) { return std::abs(x - y) / std::max(1.0, std::abs(x)); };
    CHECK(rel(a.E, f.E) < 1e-6);
    CHECK(rel(a.G, f.G) < 1e-6);
    CHECK(rel(a.h11, f.h11) < 1e-6);
    CHECK(rel(a.h22, f.h22) < 1e-6);
    CHECK(std::abs(f.F) < 1e-8);
    CHECK(std::abs(f.h12) < 1e-8);
    CHECK(a.delta == f.delta);
    CHECK(dist(a.normal, f.normal) < 1e-8);
    for (const SurfaceSample* x : {&a, &f}) {
      CHECK(std::abs(inner4(x->normal, x->point)) < 1e-8);
      CHECK(std::abs(inner4(x->normal, x->r_t)) < 1e-8);
      CHECK(std::abs(inner4(x->normal, x->r_s)) < 1e-8);
      CHECK(std::abs(inner4(x->normal, x->normal) + x->epsilon) < 1e-8);
    }
    CHECK(std::abs(mean_curvature(a) - mean_curvature_closed_form(curve, t, kind)) < 1e-8);
    CHECK(std::abs(mean_curvature(f) - a.H) < 1e-6);
  }
}

TEST_CASE("H does not depend on the rotation parameter") {
  Gen g(44);
  for (CaseKind kind : kGroups) {
    const CurveUV curve = sample_curve(g, kind);
    const double t = kHalfPi + 0.12;
    double lo = 1e300, hi = -1e300;
    for (int j = 0; j <= 8; ++j) {
      SurfaceSample x = fundamental_forms(curve, t, -1 + 0.25 * j, kind, FormMode::FiniteDifference);
      const double H = mean_curvature(x);
      lo = std::min(lo, H);
      hi = std::max(hi, H);
    }
    CHECK(hi - lo < 1e-8);
  }
}

TEST_CASE("intrinsic display matches the forms on intrinsic catenaries with lambda = 0") {
  const CatenaryResult r = solve(centered_problem(CaseKind::Intrinsic, 0.0, 1.2, 0.0, {-0.6, 0.6}));
  for (std::size_t i = 10; i + 10 < r.samples.size(); i += 37) {
    const double t = r.samples[i].t;
    SurfaceSample x = fundamental_forms(r.curve, t, 0.3, CaseKind::Intrinsic, FormMode::Analytic);
    const double H = mean_curvature(x);
    CHECK(std::abs(H - mean_curvature_closed_form(r.curve, t, CaseKind::Intrinsic)) < 1e-8);
    CHECK(std::abs(H) > 1e-2);
  }
}

TEST_CASE("surface errors") {
  const CurveUV mer = CurveUV::meridian(0.2, 0.1, 1.0);
  CHECK_THROWS_AS(fundamental_forms(mer, 0.5, 0.0, CaseKind::Spherical, FormMode::Analytic), std::invalid_argument);
  const CurveUV par = CurveUV::parallel(1.0, 0, 1);
  CHECK_THROWS_AS(fundamental_forms(par, 0.001, 0.0, CaseKind::Spherical, FormMode::FiniteDifference), std::out_of_range);
  // The equator lies on the spherical axis: G = sinh(0)^2 = 0.
  const CurveUV eq = CurveUV::equator(0, 1);
  CHECK_THROWS_AS(fundamental_forms(eq, 0.5, 0.0, CaseKind::Spherical, FormMode::Analytic), DegenerateSurface);
  SurfaceSample bad = fundamental_forms(par, 0.5, 0.0, CaseKind::Spherical, FormMode::Analytic);
  bad.G = 0;
  CHECK_THROWS_AS(mean_curvature(bad), DegenerateSurface);
}
