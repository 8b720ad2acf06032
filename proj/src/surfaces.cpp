#include "desitter/surfaces.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "desitter/errors.hpp"

namespace desitter {

namespace {

CaseKind group_kind(CaseKind kind) { return kind == CaseKind::Intrinsic ? CaseKind::Spherical : kind; }

}  // namespace

Mat4 RotationGroup::matrix(double s) const {
  switch (group_kind(kind_)) {
    case CaseKind::Hyperbolic: {
      const double c = std::cos(s), n = std::sin(s);
      return Mat4{{{1, 0, 0, 0}, {0, c, 0, -n}, {0, 0, 1, 0}, {0, n, 0, c}}};
    }
    case CaseKind::Parabolic: {
      const double q = 0.5 * s * s;
      return Mat4{{{1, 0, 0, 0}, {0, 1 - q, q, s}, {0, -q, q + 1, s}, {0, -s, s, 1}}};
    }
    default: {
      const double c = std::cosh(s), n = std::sinh(s);
      return Mat4{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, c, n}, {0, 0, n, c}}};
    }
  }
}

Mat4 RotationGroup::matrix_ds(double s) const {
  switch (group_kind(kind_)) {
    case CaseKind::Hyperbolic: {
      const double c = std::cos(s), n = std::sin(s);
      return Mat4{{{0, 0, 0, 0}, {0, -n, 0, -c}, {0, 0, 0, 0}, {0, c, 0, -n}}};
    }
    case CaseKind::Parabolic:
      return Mat4{{{0, 0, 0, 0}, {0, -s, s, 1}, {0, -s, s, 1}, {0, -1, 1, 0}}};
    default: {
      const double c = std::cosh(s), n = std::sinh(s);
      return Mat4{{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, n, c}, {0, 0, c, n}}};
    }
  }
}

Mat4 RotationGroup::matrix_dss(double s) const {
  switch (group_kind(kind_)) {
    case CaseKind::Hyperbolic: {
      const double c = std::cos(s), n = std::sin(s);
      return Mat4{{{0, 0, 0, 0}, {0, -c, 0, n}, {0, 0, 0, 0}, {0, -n, 0, -c}}};
    }
    case CaseKind::Parabolic:
      return Mat4{{{0, 0, 0, 0}, {0, -1, 1, 0}, {0, -1, 1, 0}, {0, 0, 0, 0}}};
    default: {
      const double c = std::cosh(s), n = std::sinh(s);
      return Mat4{{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, c, n}, {0, 0, n, c}}};
    }
  }
}

LVec4 RotationGroup::axis_point(double theta) const {
  switch (group_kind(kind_)) {
    case CaseKind::Hyperbolic: return {std::cosh(theta), 0, std::sinh(theta), 0};  // y = 0
    case CaseKind::Parabolic: return {1, theta, theta, 0};                          // y = z
    default: return {std::cos(theta), std::sin(theta), 0, 0};                        // z = 0
  }
}

LVec4 surface_point(const CurveUV& curve, double t, double s, CaseKind kind) {
  const ChartJet j = curve.jet(t);
  return RotationGroup(kind).matrix(s) * LVec4(psi(j.u, j.v));
}

namespace {

void require_graph_over_v(const ChartJet& j, double t) {
  const double tol = 1e-12 * std::max(1.0, std::abs(t));
  if (std::abs(j.v - t) > tol || std::abs(j.dv - 1.0) > 1e-12 || std::abs(j.ddv) > 1e-12)
    throw std::invalid_argument("surface formulas need a curve parametrized with v = t");
}

struct CurveTerms {
  ChartJet j;
  double c, sh, st, ct;  // cosh u, sinh u, sin t, cos t
  double speed;
  int eps;
};

CurveTerms curve_terms(const CurveUV& curve, double t, double tol) {
  const ChartJet j = curve.jet(t);
  require_graph_over_v(j, t);
  const double q = speed_squared(j);
  int eps = 0;
  switch (causal_character(q, tol)) {
    case Causal::Spacelike: eps = 1; break;
    case Causal::Timelike: eps = -1; break;
    case Causal::Lightlike: throw DegenerateCurve("generating curve is lightlike at t = " + std::to_string(t));
  }
  return {j, std::cosh(j.u), std::sinh(j.u), std::sin(j.v), std::cos(j.v), std::sqrt(std::abs(q)), eps};
}

LVec4 analytic_normal(const CurveTerms& k, double s, CaseKind kind) {
  const double up = k.j.du, c = k.c, sh = k.sh, st = k.st, ct = k.ct, g = k.speed;
  switch (group_kind(kind)) {
    case CaseKind::Hyperbolic: {
      const double m = ct * up + st * sh * c;
      return (1.0 / g) * LVec4{ct * sh * c - st * up, std::cos(s) * m, c * c, std::sin(s) * m};
    }
    case CaseKind::Parabolic: {
      const double s2 = s * s, sh2u = std::sinh(2.0 * k.j.u);
      return (0.5 / g) * LVec4{ct * sh2u - 2.0 * st * up,
                               -(s2 - 2.0) * ct * up + s2 * c * c - 0.5 * (s2 - 2.0) * st * sh2u,
                               -s2 * ct * up + (s2 + 2.0) * c * c - 0.5 * s2 * st * sh2u,
                               -s * (2.0 * ct * up - 2.0 * c * c + st * sh2u)};
    }
    default:
      return (1.0 / g) * LVec4{ct * sh * c - up * st, up * ct + st * sh * c, std::cosh(s) * c * c, std::sinh(s) * c * c};
  }
}

double analytic_G(const CurveTerms& k, CaseKind kind) {
  switch (group_kind(kind)) {
    case CaseKind::Hyperbolic: return k.st * k.st * k.c * k.c;
    case CaseKind::Parabolic: {
      const double d = k.sh - k.c * k.st;
      return d * d;
    }
    default: return k.sh * k.sh;
  }
}

double analytic_h22(const CurveTerms& k, CaseKind kind) {
  const double up = k.j.du, c = k.c, sh = k.sh, st = k.st, ct = k.ct, g = k.speed;
  switch (group_kind(kind)) {
    case CaseKind::Hyperbolic: return -c * st * (up * ct + sh * c * st) / g;
    case CaseKind::Parabolic: return (c * st - sh) * (c * c - sh * c * st - up * ct) / g;
    default: return -sh * c * c / g;
  }
}

SurfaceSample analytic_sample(const CurveUV& curve, double t, double s, CaseKind kind, double tol) {
  const CurveTerms k = curve_terms(curve, t, tol);
  const RotationGroup group(kind);
  const LVec4 gamma(psi(k.j.u, k.j.v));
  const LVec4 velocity(LVec3{k.sh * k.j.du * k.ct - k.c * k.st, k.sh * k.j.du * k.st + k.c * k.ct, k.c * k.j.du});

  SurfaceSample out;
  out.point = group.matrix(s) * gamma;
  out.r_t = group.matrix(s) * velocity;
  out.r_s = group.matrix_ds(s) * gamma;
  out.epsilon = k.eps;
  out.E = k.c * k.c - k.j.du * k.j.du;
  out.F = 0.0;
  out.G = analytic_G(k, kind);
  out.h11 = (2.0 * k.j.du * k.j.du * k.sh - k.sh * k.c * k.c - k.c * k.j.ddu) / k.speed;
  out.h12 = 0.0;
  out.h22 = analytic_h22(k, kind);
  out.normal = analytic_normal(k, s, kind);
  return out;
}

void check_stencil_domain(const CurveUV& curve, double t, double h) {
  if (t - 2.0 * h < curve.a() || t + 2.0 * h > curve.b())
    throw std::out_of_range("finite-difference stencil at t = " + std::to_string(t) + " leaves the curve domain");
}

SurfaceSample fd_sample(const CurveUV& curve, double t, double s, CaseKind kind, double h, double tol) {
  if (!(h > 0)) throw std::invalid_argument("finite-difference step must be positive");
  check_stencil_domain(curve, t, h);
  const CurveTerms k = curve_terms(curve, t, tol);

  auto p = [&](int i, int j) { return surface_point(curve, t + i * h, s + j * h, kind); };
  // Fourth-order central weights for the first derivative, indexed by offset -2..2.
  constexpr std::array<double, 5> w1{1.0, -8.0, 0.0, 8.0, -1.0};
  constexpr std::array<double, 5> w2{-1.0, 16.0, -30.0, 16.0, -1.0};

  std::array<LVec4, 5> along_t, along_s;
  for (int i = -2; i <= 2; ++i) {
    along_t[i + 2] = p(i, 0);
    along_s[i + 2] = p(0, i);
  }
  LVec4 rt, rs, rtt, rss, rts;
  for (int i = 0; i < 5; ++i) {
    rt = rt + (w1[i] / (12.0 * h)) * along_t[i];
    rs = rs + (w1[i] / (12.0 * h)) * along_s[i];
    rtt = rtt + (w2[i] / (12.0 * h * h)) * along_t[i];
    rss = rss + (w2[i] / (12.0 * h * h)) * along_s[i];
  }
  for (int i = 0; i < 5; ++i) {
    if (w1[i] == 0.0) continue;
    for (int j = 0; j < 5; ++j) {
      if (w1[j] == 0.0) continue;
      rts = rts + (w1[i] * w1[j] / (144.0 * h * h)) * p(i - 2, j - 2);
    }
  }

  SurfaceSample out;
  out.point = along_t[2];
  out.r_t = rt;
  out.r_s = rs;
  out.epsilon = k.eps;
  out.E = inner4(rt, rt);
  out.F = inner4(rt, rs);
  out.G = inner4(rs, rs);

  LVec4 w = cross4(out.point, rt, rs);
  const double ww = inner4(w, w);
  if (std::abs(ww) <= tol * tol) throw DegenerateSurface("normal of the surface is degenerate");
  w = (1.0 / std::sqrt(std::abs(ww))) * w;
  const LVec4 reference = analytic_normal(k, s, kind);
  if (inner4(w, reference) * inner4(reference, reference) < 0.0) w = -w;
  out.normal = w;

  out.h11 = inner4(w, rtt);
  out.h12 = inner4(w, rts);
  out.h22 = inner4(w, rss);
  return out;
}

}  // namespace

SurfaceSample fundamental_forms(const CurveUV& curve, double t, double s, CaseKind kind, FormMode mode,
                                double fd_step, double tol) {
  SurfaceSample out = (mode == FormMode::Analytic) ? analytic_sample(curve, t, s, kind, tol)
                                                   : fd_sample(curve, t, s, kind, fd_step, tol);
  mean_curvature(out, tol);
  return out;
}

double mean_curvature(SurfaceSample& sample, double tol) {
  const double det = sample.E * sample.G - sample.F * sample.F;
  if (std::abs(det) <= tol) throw DegenerateSurface("EG - F^2 vanishes (lightlike surface)");
  sample.delta = det > 0 ? 1 : -1;
  sample.H = 0.5 * sample.delta * (sample.E * sample.h22 - 2.0 * sample.F * sample.h12 + sample.G * sample.h11) / det;
  return sample.H;
}

double mean_curvature_closed_form(const CurveUV& curve, double t, CaseKind kind, double tol) {
  const CurveTerms k = curve_terms(curve, t, tol);
  const FrameAtT f = frame_at(curve, t, tol);
  const double E = k.eps * k.speed * k.speed;
  const double G = analytic_G(k, kind);
  const double EG = E * G;
  if (std::abs(EG) <= tol) throw DegenerateSurface("EG vanishes (lightlike surface)");
  const int delta = EG > 0 ? 1 : -1;
  const double g = k.speed, kappa = f.kappa, up = k.j.du;
  const double c = k.c, sh = k.sh, st = k.st, ct = k.ct;

  switch (kind) {
    case CaseKind::Spherical:
      return -delta * k.eps * sh * g / (2.0 * EG) * (c * c + kappa * sh * g);
    case CaseKind::Hyperbolic:
      return -delta * k.eps * c * st * g / (2.0 * EG) * (up * ct + sh * c * st + c * st * g * kappa);
    case CaseKind::Parabolic: {
      const double d = c * st - sh;
      return delta * k.eps * d * g / (2.0 * EG) * (c * c - sh * c * st - up * ct - kappa * d * g);
    }
    case CaseKind::Intrinsic: {
      if (std::abs(k.j.u) <= kDenominatorTol) throw SingularDenominator("intrinsic display needs u != 0");
      return -delta * c / (2.0 * g * sh) * (c - k.j.dv * sh / k.j.u);
    }
  }
  return 0.0;
}

}  // namespace desitter
