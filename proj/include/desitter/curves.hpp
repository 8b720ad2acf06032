// Curves of the de Sitter plane S^2_1 in the chart
//   Psi(u, v) = (cosh u cos v, cosh u sin v, sinh u),
// their geodesic curvature and the pointwise catenary equations for the four
// reference configurations.
#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>

#include "desitter/lorentz.hpp"

namespace desitter {

/// Guard on |d + lambda| below which catenary equations are treated as singular.
inline constexpr double kDenominatorTol = 1e-8;

/// Reference configuration measuring the "height" of a curve.
///   Spherical  - spacelike plane z = 0,      d = sinh u,                 field Z = d/dz
///   Hyperbolic - timelike plane y = 0,       d = cosh u sin v,           field Y = d/dy
///   Parabolic  - degenerate plane y = z,     d = cosh u sin v - sinh u,  field T = d/dy + d/dz
///   Intrinsic  - geodesic z = 0 in S^2_1,    d = u (arc length),         field V = Psi_u
enum class CaseKind { Spherical, Hyperbolic, Parabolic, Intrinsic };

std::string_view to_string(CaseKind kind);
std::optional<CaseKind> parse_case(std::string_view name);

/// Chart coordinates of a curve and their first two derivatives at one parameter value.
struct ChartJet {
  double u = 0, du = 0, ddu = 0;
  double v = 0, dv = 0, ddv = 0;
};

/// A curve t -> Psi(u(t), v(t)) on [a, b]. Either analytic (an evaluator returning exact
/// derivatives) or interpolated from samples. Cheap to copy; immutable after construction
/// and safe to share between threads.
class CurveUV {
 public:
  using Evaluator = std::function<ChartJet(double)>;

  CurveUV(Evaluator eval, double a, double b);

  /// C^2 cubic B-spline interpolation of uniformly spaced samples (t[i+1]-t[i] constant).
  static CurveUV from_uniform_samples(std::span<const double> t, std::span<const double> u,
                                      std::span<const double> v);

  /// Quintic Hermite interpolation of u with known u', u'' at the knots; v(t) = t.
  /// Knots must be strictly increasing but need not be uniform.
  static CurveUV from_graph_samples(std::span<const double> t, std::span<const double> u,
                                    std::span<const double> du, std::span<const double> ddu);

  /// Analytic curves used throughout tests and the CLI.
  static CurveUV parallel(double u0, double a, double b);        // u = u0, v = t
  static CurveUV meridian(double v0, double a, double b);        // u = t,  v = v0
  static CurveUV equator(double a, double b);                     // u = 0,  v = t

  ChartJet jet(double t) const { return eval_(t); }
  double a() const { return a_; }
  double b() const { return b_; }

 private:
  Evaluator eval_;
  double a_, b_;
};

struct FrameAtT {
  LVec3 point;
  LVec3 velocity;
  double speed = 0;   // |gamma'| = sqrt(|<gamma', gamma'>|)
  int epsilon = 1;    // +1 spacelike, -1 timelike
  double kappa = 0;   // geodesic curvature
  LVec3 normal;       // principal normal n = -gamma x gamma' / |gamma'|
};

LVec3 psi(double u, double v);
/// Partial derivative Psi_u, the unit field tangent to the meridians.
LVec3 psi_u(double u, double v);

/// <gamma', gamma'> = v'^2 cosh(u)^2 - u'^2.
double speed_squared(const ChartJet& j);

/// Frame, causal sign and geodesic curvature
///   kappa = eps [v'(v'^2 sinh u cosh^2 u - 2u'^2 sinh u) - cosh u (u'v'' - v'u'')] / |gamma'|^3.
/// Throws DegenerateCurve when |<gamma',gamma'>| <= tol.
FrameAtT frame_at(const CurveUV& curve, double t, double tol = kCausalTol);

/// kappa = eps det(gamma, gamma', gamma'') / |gamma'|^3 with gamma', gamma'' taken by central
/// differences of the embedded curve. Never reads the chart derivatives.
double kappa_fd_oracle(const CurveUV& curve, double t, double h, double tol = kCausalTol);

/// Value whose positivity defines the case's positive half-space.
double half_space_value(double u, double v, CaseKind kind);
bool in_half_space(double u, double v, CaseKind kind);

/// Signed height expression d(u, v) used by the energies (no half-space check).
double height(double u, double v, CaseKind kind);

/// Distance to the reference; throws OutOfHalfSpace when the point is not in (S^2_1)^+.
double distance(double u, double v, CaseKind kind);

/// Unit field orthogonal to the reference (Z, Y, T, or Psi_u at (u,v) for Intrinsic).
LVec3 reference_field(double u, double v, CaseKind kind);

/// Sign in kappa (d + lambda) = sigma <n, field>: +1 Spherical/Intrinsic, -1 Hyperbolic/Parabolic.
int normal_angle_sign(CaseKind kind);

/// Numerator N of the catenary equation kappa = -N / ((d + lambda) |gamma'|).
double catenary_numerator(const ChartJet& j, CaseKind kind);

/// kappa(t) minus the catenary right-hand side. Throws SingularDenominator if |d + lambda| <= tol.
double catenary_residual(const CurveUV& curve, double t, CaseKind kind, double lambda,
                         double tol = kDenominatorTol);

/// kappa (d + lambda) - sigma <n, field>; vanishes exactly where catenary_residual does.
double normal_angle_residual(const CurveUV& curve, double t, CaseKind kind, double lambda,
                             double tol = kDenominatorTol);

/// Conserved momentum of the spherical energy, dJ/dv' = eps v' cosh^2 u (sinh u + lambda) / |gamma'|.
double first_integral(const CurveUV& curve, double t, double lambda);

}  // namespace desitter
