// Data-parallel sweeps. Each kernel has a serial reference with identical per-point
// arithmetic; the OpenMP version writes into preallocated slots so results do not depend on
// thread count or scheduling.
#pragma once

#include <span>
#include <vector>

#include "desitter/surfaces.hpp"
#include "desitter/variational.hpp"

namespace desitter {

struct SurfaceGridPoint {
  double t = 0, s = 0;
  double H_forms = 0;        // mean_curvature(fundamental_forms(...)) in the requested mode
  double H_closed = 0;       // mean_curvature_closed_form
  double F = 0, h12 = 0;
  double normal_defect = 0;  // max of |<N,r>|, |<N,r_t>|, |<N,r_s>|, |<N,N> + eps|
  int delta = 1, epsilon = 1;
};

/// Row-major over (t, s): index = i * s_values.size() + j.
std::vector<SurfaceGridPoint> surface_grid_serial(const CurveUV& curve, CaseKind kind,
                                                  std::span<const double> t_values,
                                                  std::span<const double> s_values, FormMode mode,
                                                  double fd_step = kSurfaceFdStep);
std::vector<SurfaceGridPoint> surface_grid_parallel(const CurveUV& curve, CaseKind kind,
                                                    std::span<const double> t_values,
                                                    std::span<const double> s_values, FormMode mode,
                                                    double fd_step = kSurfaceFdStep);

/// scaled_first_variation for every basis element.
std::vector<double> first_variation_scores_serial(const DiscreteCurve& curve, CaseKind kind, double lambda,
                                                  const std::vector<Perturbation>& basis, double h);
std::vector<double> first_variation_scores_parallel(const DiscreteCurve& curve, CaseKind kind, double lambda,
                                                    const std::vector<Perturbation>& basis, double h);

}  // namespace desitter
