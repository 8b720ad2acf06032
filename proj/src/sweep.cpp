#include "desitter/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

namespace desitter {

namespace {

SurfaceGridPoint grid_point(const CurveUV& curve, CaseKind kind, double t, double s, FormMode mode, double fd_step) {
  const SurfaceSample x = fundamental_forms(curve, t, s, kind, mode, fd_step);
  SurfaceGridPoint g;
  g.t = t;
  g.s = s;
  g.H_forms = x.H;
  g.H_closed = mean_curvature_closed_form(curve, t, kind);
  g.F = x.F;
  g.h12 = x.h12;
  g.delta = x.delta;
  g.epsilon = x.epsilon;
  g.normal_defect = std::max({std::abs(inner4(x.normal, x.point)), std::abs(inner4(x.normal, x.r_t)),
                              std::abs(inner4(x.normal, x.r_s)),
                              std::abs(inner4(x.normal, x.normal) + x.epsilon)});
  return g;
}

// Runs body(i) for i in [0, n) on the OpenMP team; the first exception (lowest index) is
// rethrown after the loop.
template <class Body>
void parallel_for(long n, Body&& body) {
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<SurfaceGridPoint> surface_grid_serial(const CurveUV& curve, CaseKind kind,
                                                  std::span<const double> t_values,
                                                  std::span<const double> s_values, FormMode mode, double fd_step) {
  std::vector<SurfaceGridPoint> out;
  out.reserve(t_values.size() * s_values.size());
  for (double t : t_values)
    for (double s : s_values) out.push_back(grid_point(curve, kind, t, s, mode, fd_step));
  return out;
}

std::vector<SurfaceGridPoint> surface_grid_parallel(const CurveUV& curve, CaseKind kind,
                                                    std::span<const double> t_values,
                                                    std::span<const double> s_values, FormMode mode, double fd_step) {
  const std::size_t ns = s_values.size();
  std::vector<SurfaceGridPoint> out(t_values.size() * ns);
  parallel_for(static_cast<long>(out.size()), [&](long k) {
    const auto idx = static_cast<std::size_t>(k);
    out[idx] = grid_point(curve, kind, t_values[idx / ns], s_values[idx % ns], mode, fd_step);
  });
  return out;
}

std::vector<double> first_variation_scores_serial(const DiscreteCurve& curve, CaseKind kind, double lambda,
                                                  const std::vector<Perturbation>& basis, double h) {
  std::vector<double> out;
  out.reserve(basis.size());
  for (const auto& p : basis) out.push_back(scaled_first_variation(curve, kind, lambda, p, h));
  return out;
}

std::vector<double> first_variation_scores_parallel(const DiscreteCurve& curve, CaseKind kind, double lambda,
                                                    const std::vector<Perturbation>& basis, double h) {
  std::vector<double> out(basis.size());
  parallel_for(static_cast<long>(basis.size()), [&](long k) {
    const auto idx = static_cast<std::size_t>(k);
    out[idx] = scaled_first_variation(curve, kind, lambda, basis[idx], h);
  });
  return out;
}

}  // namespace desitter
