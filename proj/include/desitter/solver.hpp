// Catenaries of S^2_1 as graphs u(t) over v = t, integrated by fixed-step RK4.
#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "desitter/curves.hpp"

namespace desitter {

struct CatenaryProblem {
  CaseKind kind = CaseKind::Spherical;
  double lambda = 0.0;
  double u0 = 0.5;
  double du0 = 0.0;
  double t0 = 0.0;
  std::pair<double, double> span{0.0, 1.0};
  double step = 1e-3;
  /// Expected causal sign of the initial velocity; 0 means infer it.
  int epsilon_hint = 0;
};

/// Problem with t0 at the midpoint of the span.
CatenaryProblem centered_problem(CaseKind kind, double lambda, double u0, double du0,
                                 std::pair<double, double> span, double step = 1e-3);

enum class Termination { SpanCompleted, LightlikeApproach, DenominatorSingularity, LeftHalfSpace };

std::string_view to_string(Termination t);

struct GraphSample {
  double t, u, du, ddu;
};

struct CatenaryResult {
  std::vector<GraphSample> samples;  // increasing t
  CurveUV curve;                     // quintic Hermite through the samples, v = t
  Termination termination = Termination::SpanCompleted;
  int epsilon = 1;
};

/// u'' along v = t obtained by inverting the curvature formula with v' = 1, v'' = 0:
///   u'' = [eps kappa |gamma'|^3 - sinh u cosh^2 u + 2 u'^2 sinh u] / cosh u,
/// with kappa the case's catenary curvature. Since kappa |gamma'| carries the factor
/// 1/|gamma'|, eps kappa |gamma'|^3 = -N (cosh^2 u - u'^2) / (d + lambda) and the right-hand
/// side stays smooth through the light cone.
double catenary_acceleration(CaseKind kind, double lambda, double t, double u, double du);

/// Integrates both ways from t0 to the ends of the span. Stops early (keeping only valid
/// samples) on approach to the light cone, a vanishing weight d + lambda, or on leaving the
/// half-space. A rejected step is retried with halved sub-steps, so samples run up to the
/// event; near the light cone the last retained |speed^2| lies in [10 tol, 100 tol]. Throws InvalidProblem on bad initial data.
CatenaryResult solve(const CatenaryProblem& problem);

/// Euclidean catenary y(x) = cosh(c x + a) / c - lambda.
double euclidean_catenary(double c, double a, double lambda, double x);

/// y''/(1 + y'^2) - 1/(y + lambda) on the closed form; zero analytically.
double euclidean_el_residual(double c, double a, double lambda, double x);

}  // namespace desitter
