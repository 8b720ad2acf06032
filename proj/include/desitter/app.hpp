// Command-line front end: solve, verify, scan and export.
//
// Exit codes: 0 success, 1 invalid input / internal error / failed verification,
// 2 the solver stopped before completing the requested span.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "desitter/curves.hpp"
#include "desitter/solver.hpp"

namespace desitter::app {

enum class Command { Solve, Verify, Scan, Export };
enum class Format { Csv, Json };
/// Curve fed to `export`: a solved catenary or one of the analytic reference curves.
enum class CurveSource { Catenary, Equator, Parallel, Meridian };

struct Thresholds {
  double residual = 1e-6;
  double h_zero = 1e-6;
  double h_floor = 1e-2;
  double first_variation = 1e-4;
  double first_integral = 1e-6;
  double path_agreement = 1e-8;   // forms vs closed form; also F, h12 and normal defects
  double fd_agreement = 1e-6;     // analytic vs finite-difference forms
};

struct RunConfig {
  Command command = Command::Verify;
  CaseKind kind = CaseKind::Spherical;
  double lambda = 0.0;
  double u0 = 0.5;
  double du0 = 0.0;
  std::optional<double> t0;  // span midpoint when absent
  std::pair<double, double> span{0.0, 1.2};
  double step = 1e-3;
  int grid_n = 200;
  std::string output_path;   // empty: write the artifact to stdout
  Format format = Format::Csv;
  std::uint64_t seed = 1;
  Thresholds thresholds;
  std::vector<double> scan_lambdas{0.0, 0.25, 0.5, 0.75};
  int basis_size = 20;
  CurveSource curve = CurveSource::Catenary;
  std::string surface_output;  // export: optional (x1..x4, t, s) grid file
  int s_count = 5;
  double s_max = 1.0;
  double v0 = 0.0;  // meridian export
};

/// Initial data that yields a full-span trajectory for each case.
RunConfig defaults_for(CaseKind kind);

std::string_view to_string(Command c);
std::string_view to_string(Format f);
std::string_view to_string(CurveSource c);

CatenaryProblem make_problem(const RunConfig& config);

struct VerifyReport {
  CaseKind kind = CaseKind::Spherical;
  double lambda = 0;
  Termination termination = Termination::SpanCompleted;
  std::size_t samples = 0;
  std::size_t grid_points = 0;
  double max_residual = 0;
  double max_normal_angle_residual = 0;
  double max_abs_H_forms = 0;
  double min_abs_H_forms = 0;
  double max_abs_H_closed = 0;
  double max_abs_H_fd = 0;
  double max_path_disagreement = 0;  // |H_forms - H_closed|
  double max_fd_disagreement = 0;    // |H_forms - H_fd|
  double max_normal_defect = 0;
  double first_variation_score = 0;
  std::optional<double> first_integral_drift;  // spherical only
  bool catenary = false;
  bool expected_minimal = false;
  bool passed = false;
  std::string verdict;
};

VerifyReport verify(const RunConfig& config);
std::string render_report(const VerifyReport& report, const RunConfig& config, Format format);

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_export(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.command, mapping library errors to exit status 1.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and runs. Never throws.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace desitter::app
