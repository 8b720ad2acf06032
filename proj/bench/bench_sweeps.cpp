// Serial reference vs OpenMP kernels on the two data-parallel sweeps.
//   bench_sweeps [repetitions]
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <vector>

#include "desitter/solver.hpp"
#include "desitter/sweep.hpp"

using namespace desitter;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void report(const char* name, std::size_t items, double serial, double parallel, bool same) {
  std::printf("%-28s %8zu items  serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n", name, items, serial, parallel,
              serial / parallel, same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::printf("threads: %d, best of %d\n", omp_get_max_threads(), reps);

  const double c = std::numbers::pi / 2;
  const CatenaryResult r = solve(centered_problem(CaseKind::Hyperbolic, 0.5, 0.3, 0.0, {c - 0.8, c + 0.8}));
  std::vector<double> ts, ss;
  for (std::size_t i = 5; i + 5 < r.samples.size(); ++i) ts.push_back(r.samples[i].t);
  for (int j = 0; j <= 20; ++j) ss.push_back(-1 + 0.1 * j);

  for (FormMode mode : {FormMode::Analytic, FormMode::FiniteDifference}) {
    std::vector<SurfaceGridPoint> a, b;
    const double ts_serial = best_of(reps, [&] { a = surface_grid_serial(r.curve, CaseKind::Hyperbolic, ts, ss, mode); });
    const double ts_parallel = best_of(reps, [&] { b = surface_grid_parallel(r.curve, CaseKind::Hyperbolic, ts, ss, mode); });
    bool same = a.size() == b.size();
    for (std::size_t k = 0; same && k < a.size(); ++k) same = a[k].H_forms == b[k].H_forms && a[k].H_closed == b[k].H_closed;
    report(mode == FormMode::Analytic ? "surface grid (analytic)" : "surface grid (finite diff)", a.size(), ts_serial,
           ts_parallel, same);
  }

  const DiscreteCurve d = discretize(r.curve, 400);
  const auto basis = hat_basis(400, 200, 1);
  std::vector<double> a, b;
  const double fv_serial = best_of(reps, [&] { a = first_variation_scores_serial(d, CaseKind::Hyperbolic, 0.5, basis, 1e-5); });
  const double fv_parallel = best_of(reps, [&] { b = first_variation_scores_parallel(d, CaseKind::Hyperbolic, 0.5, basis, 1e-5); });
  report("first-variation scores", basis.size(), fv_serial, fv_parallel, a == b);
  return 0;
}
