// Rotational surfaces of S^3_1 generated by curves of S^2_1 x {0}, their fundamental forms
// and mean curvature.
#pragma once

#include "desitter/curves.hpp"
#include "desitter/lorentz.hpp"

namespace desitter {

/// Default finite-difference step for the FiniteDifference mode (fourth-order stencils).
inline constexpr double kSurfaceFdStep = 1e-3;

/// One-parameter isometry group of S^3_1 fixing the axis L = Pi cap S^2_1 pointwise.
/// Intrinsic uses the spherical group (its axis is the geodesic z = 0).
class RotationGroup {
 public:
  explicit RotationGroup(CaseKind kind) : kind_(kind) {}

  CaseKind kind() const { return kind_; }
  Mat4 matrix(double s) const;
  /// d/ds and d^2/ds^2 of matrix(s).
  Mat4 matrix_ds(double s) const;
  Mat4 matrix_dss(double s) const;
  /// A point of the axis geodesic, embedded with fourth coordinate 0, for parameter theta.
  LVec4 axis_point(double theta) const;

 private:
  CaseKind kind_;
};

enum class FormMode { Analytic, FiniteDifference };

struct SurfaceSample {
  LVec4 point;
  LVec4 r_t, r_s;  // tangent vectors
  double E = 0, F = 0, G = 0;
  double h11 = 0, h12 = 0, h22 = 0;
  LVec4 normal;
  int delta = 1;    // sign(EG - F^2)
  int epsilon = 1;  // causal sign of the generating curve
  double H = 0;
};

/// R_s (Psi(u(t), v(t)), 0).
LVec4 surface_point(const CurveUV& curve, double t, double s, CaseKind kind);

/// Coefficients of the first and second fundamental forms at (t, s). The curve must be a
/// graph over v = t. Analytic mode uses per-case closed forms; FiniteDifference mode
/// differentiates surface_point numerically and builds N from a generalized cross product
/// (orientation aligned with the analytic normal). Throws DegenerateSurface if |EG - F^2| <= tol.
SurfaceSample fundamental_forms(const CurveUV& curve, double t, double s, CaseKind kind, FormMode mode,
                                double fd_step = kSurfaceFdStep, double tol = kCausalTol);

/// H = (delta/2)(E h22 - 2F h12 + G h11)/(EG - F^2); also stored in sample.H.
double mean_curvature(SurfaceSample& sample, double tol = kCausalTol);

/// Closed-form H in terms of the curvature of the generating curve:
///   Spherical/Hyperbolic/Parabolic: H = -delta eps d |gamma'| (N + kappa d |gamma'|) / (2 E G),
///     written out per case, with N the case's catenary numerator.
///   Intrinsic (valid on intrinsic catenaries with lambda = 0):
///     H = -delta cosh(u) (cosh(u) - v' sinh(u)/u) / (2 |gamma'| sinh(u)).
double mean_curvature_closed_form(const CurveUV& curve, double t, CaseKind kind, double tol = kCausalTol);

}  // namespace desitter
