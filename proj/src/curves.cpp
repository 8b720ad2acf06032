#include "desitter/curves.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <boost/math/interpolators/quintic_hermite.hpp>

#include "desitter/errors.hpp"

namespace desitter {

std::string_view to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::Spherical: return "spherical";
    case CaseKind::Hyperbolic: return "hyperbolic";
    case CaseKind::Parabolic: return "parabolic";
    case CaseKind::Intrinsic: return "intrinsic";
  }
  return "unknown";
}

std::optional<CaseKind> parse_case(std::string_view name) {
  for (CaseKind k : {CaseKind::Spherical, CaseKind::Hyperbolic, CaseKind::Parabolic, CaseKind::Intrinsic}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

CurveUV::CurveUV(Evaluator eval, double a, double b) : eval_(std::move(eval)), a_(a), b_(b) {
  if (!eval_) throw std::invalid_argument("curve evaluator is empty");
  if (!(a < b)) throw std::invalid_argument("curve domain must satisfy a < b");
}

CurveUV CurveUV::from_uniform_samples(std::span<const double> t, std::span<const double> u,
                                      std::span<const double> v) {
  if (t.size() < 4 || u.size() != t.size() || v.size() != t.size())
    throw std::invalid_argument("need at least 4 samples of matching length");
  const double step = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
  if (!(step > 0)) throw std::invalid_argument("sample parameters must increase");
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (std::abs((t[i] - t[i - 1]) - step) > 1e-9 * std::max(1.0, std::abs(step)))
      throw std::invalid_argument("samples must be uniformly spaced");
  }
  using Spline = boost::math::interpolators::cardinal_cubic_b_spline<double>;
  auto su = std::make_shared<Spline>(u.data(), u.size(), t.front(), step);
  auto sv = std::make_shared<Spline>(v.data(), v.size(), t.front(), step);
  return CurveUV(
      [su, sv](double x) {
        return ChartJet{(*su)(x), su->prime(x), su->double_prime(x), (*sv)(x), sv->prime(x), sv->double_prime(x)};
      },
      t.front(), t.back());
}

CurveUV CurveUV::from_graph_samples(std::span<const double> t, std::span<const double> u,
                                    std::span<const double> du, std::span<const double> ddu) {
  if (t.size() < 2 || u.size() != t.size() || du.size() != t.size() || ddu.size() != t.size())
    throw std::invalid_argument("need at least 2 samples of matching length");
  using Hermite = boost::math::interpolators::quintic_hermite<std::vector<double>>;
  auto h = std::make_shared<Hermite>(std::vector<double>(t.begin(), t.end()), std::vector<double>(u.begin(), u.end()),
                                     std::vector<double>(du.begin(), du.end()),
                                     std::vector<double>(ddu.begin(), ddu.end()));
  return CurveUV([h](double x) { return ChartJet{(*h)(x), h->prime(x), h->double_prime(x), x, 1.0, 0.0}; },
                 t.front(), t.back());
}

CurveUV CurveUV::parallel(double u0, double a, double b) {
  return CurveUV([u0](double x) { return ChartJet{u0, 0, 0, x, 1, 0}; }, a, b);
}

CurveUV CurveUV::meridian(double v0, double a, double b) {
  return CurveUV([v0](double x) { return ChartJet{x, 1, 0, v0, 0, 0}; }, a, b);
}

CurveUV CurveUV::equator(double a, double b) { return parallel(0.0, a, b); }

LVec3 psi(double u, double v) {
  return {std::cosh(u) * std::cos(v), std::cosh(u) * std::sin(v), std::sinh(u)};
}

LVec3 psi_u(double u, double v) {
  return {std::sinh(u) * std::cos(v), std::sinh(u) * std::sin(v), std::cosh(u)};
}

double speed_squared(const ChartJet& j) {
  const double c = std::cosh(j.u);
  return j.dv * j.dv * c * c - j.du * j.du;
}

namespace {

LVec3 velocity_of(const ChartJet& j) {
  const double c = std::cosh(j.u), s = std::sinh(j.u);
  const double cv = std::cos(j.v), sv = std::sin(j.v);
  return {s * j.du * cv - c * j.dv * sv, s * j.du * sv + c * j.dv * cv, c * j.du};
}

int causal_sign_or_throw(double speed2, double tol, double t) {
  switch (causal_character(speed2, tol)) {
    case Causal::Spacelike: return 1;
    case Causal::Timelike: return -1;
    case Causal::Lightlike: break;
  }
  throw DegenerateCurve("curve is lightlike at t = " + std::to_string(t));
}

}  // namespace

FrameAtT frame_at(const CurveUV& curve, double t, double tol) {
  const ChartJet j = curve.jet(t);
  const double speed2 = speed_squared(j);
  const int eps = causal_sign_or_throw(speed2, tol, t);
  const double speed = std::sqrt(std::abs(speed2));
  const double c = std::cosh(j.u), s = std::sinh(j.u);

  const double numer = j.dv * (j.dv * j.dv * s * c * c - 2.0 * j.du * j.du * s) - c * (j.du * j.ddv - j.dv * j.ddu);

  FrameAtT f;
  f.point = psi(j.u, j.v);
  f.velocity = velocity_of(j);
  f.speed = speed;
  f.epsilon = eps;
  f.kappa = eps * numer / (speed * speed * speed);
  f.normal = (-1.0 / speed) * cross3(f.point, f.velocity);
  return f;
}

double kappa_fd_oracle(const CurveUV& curve, double t, double h, double tol) {
  if (!(h > 0)) throw std::invalid_argument("finite-difference step must be positive");
  auto embedded = [&](double x) {
    const ChartJet j = curve.jet(x);
    return psi(j.u, j.v);
  };
  const LVec3 gm = embedded(t - h), g0 = embedded(t), gp = embedded(t + h);
  const LVec3 d1 = (0.5 / h) * (gp - gm);
  const LVec3 d2 = (1.0 / (h * h)) * (gp - 2.0 * g0 + gm);
  const double speed2 = inner3(d1, d1);
  const int eps = causal_sign_or_throw(speed2, tol, t);
  const double speed = std::sqrt(std::abs(speed2));
  return eps * det3(g0, d1, d2) / (speed * speed * speed);
}

double height(double u, double v, CaseKind kind) {
  switch (kind) {
    case CaseKind::Spherical: return std::sinh(u);
    case CaseKind::Hyperbolic: return std::cosh(u) * std::sin(v);
    case CaseKind::Parabolic: return std::cosh(u) * std::sin(v) - std::sinh(u);
    case CaseKind::Intrinsic: return u;
  }
  return 0.0;
}

double half_space_value(double u, double v, CaseKind kind) {
  switch (kind) {
    case CaseKind::Spherical:
    case CaseKind::Intrinsic: return std::sinh(u);  // z > 0
    case CaseKind::Hyperbolic: return std::cosh(u) * std::sin(v);  // y > 0
    case CaseKind::Parabolic: return std::cosh(u) * std::sin(v) - std::sinh(u);  // y - z > 0
  }
  return 0.0;
}

bool in_half_space(double u, double v, CaseKind kind) { return half_space_value(u, v, kind) > 0.0; }

double distance(double u, double v, CaseKind kind) {
  if (!in_half_space(u, v, kind)) {
    throw OutOfHalfSpace("point (u=" + std::to_string(u) + ", v=" + std::to_string(v) +
                         ") is outside the positive half-space of the " + std::string(to_string(kind)) +
                         " reference");
  }
  return height(u, v, kind);
}

LVec3 reference_field(double u, double v, CaseKind kind) {
  switch (kind) {
    case CaseKind::Spherical: return {0, 0, 1};
    case CaseKind::Hyperbolic: return {0, 1, 0};
    case CaseKind::Parabolic: return {0, 1, 1};
    case CaseKind::Intrinsic: return psi_u(u, v);
  }
  return {};
}

int normal_angle_sign(CaseKind kind) {
  return (kind == CaseKind::Hyperbolic || kind == CaseKind::Parabolic) ? -1 : 1;
}

double catenary_numerator(const ChartJet& j, CaseKind kind) {
  const double c = std::cosh(j.u), s = std::sinh(j.u);
  switch (kind) {
    case CaseKind::Spherical: return j.dv * c * c;
    case CaseKind::Hyperbolic: return j.du * std::cos(j.v) + j.dv * s * c * std::sin(j.v);
    case CaseKind::Parabolic: return j.dv * c * (s * std::sin(j.v) - c) + j.du * std::cos(j.v);
    case CaseKind::Intrinsic: return j.dv * c;
  }
  return 0.0;
}

namespace {

double guarded_weight(const ChartJet& j, CaseKind kind, double lambda, double tol, double t) {
  const double w = height(j.u, j.v, kind) + lambda;
  if (std::abs(w) <= tol)
    throw SingularDenominator("d + lambda vanishes at t = " + std::to_string(t));
  return w;
}

}  // namespace

double catenary_residual(const CurveUV& curve, double t, CaseKind kind, double lambda, double tol) {
  const FrameAtT f = frame_at(curve, t);
  const ChartJet j = curve.jet(t);
  const double w = guarded_weight(j, kind, lambda, tol, t);
  return f.kappa + catenary_numerator(j, kind) / (w * f.speed);
}

double normal_angle_residual(const CurveUV& curve, double t, CaseKind kind, double lambda, double tol) {
  const FrameAtT f = frame_at(curve, t);
  const ChartJet j = curve.jet(t);
  const double w = guarded_weight(j, kind, lambda, tol, t);
  const LVec3 field = reference_field(j.u, j.v, kind);
  return f.kappa * w - normal_angle_sign(kind) * inner3(f.normal, field);
}

double first_integral(const CurveUV& curve, double t, double lambda) {
  const FrameAtT f = frame_at(curve, t);
  const ChartJet j = curve.jet(t);
  const double c = std::cosh(j.u);
  return f.epsilon * j.dv * c * c * (std::sinh(j.u) + lambda) / f.speed;
}

}  // namespace desitter
