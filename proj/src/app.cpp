#include "desitter/app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "desitter/errors.hpp"
#include "desitter/surfaces.hpp"
#include "desitter/sweep.hpp"
#include "desitter/variational.hpp"

namespace desitter::app {

using nlohmann::ordered_json;

RunConfig defaults_for(CaseKind kind) {
  RunConfig c;
  c.kind = kind;
  constexpr double half_pi = std::numbers::pi / 2;
  switch (kind) {
    case CaseKind::Spherical:
      c.u0 = 0.5;
      c.span = {0.0, 1.2};
      break;
    case CaseKind::Hyperbolic:
      c.u0 = 0.3;
      c.span = {half_pi - 0.8, half_pi + 0.8};
      break;
    case CaseKind::Parabolic:
      c.u0 = 0.0;
      c.span = {half_pi - 0.6, half_pi + 0.6};
      break;
    case CaseKind::Intrinsic:
      c.u0 = 1.2;
      c.span = {-0.6, 0.6};
      break;
  }
  return c;
}

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Solve: return "solve";
    case Command::Verify: return "verify";
    case Command::Scan: return "scan";
    case Command::Export: return "export";
  }
  return "unknown";
}

std::string_view to_string(Format f) { return f == Format::Csv ? "csv" : "json"; }

std::string_view to_string(CurveSource c) {
  switch (c) {
    case CurveSource::Catenary: return "catenary";
    case CurveSource::Equator: return "equator";
    case CurveSource::Parallel: return "parallel";
    case CurveSource::Meridian: return "meridian";
  }
  return "unknown";
}

CatenaryProblem make_problem(const RunConfig& config) {
  CatenaryProblem p = centered_problem(config.kind, config.lambda, config.u0, config.du0, config.span, config.step);
  if (config.t0) p.t0 = *config.t0;
  return p;
}

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void check_config(const RunConfig& c) {
  const double nums[] = {c.lambda, c.u0, c.du0, c.span.first, c.span.second, c.step, c.s_max, c.v0,
                         c.t0.value_or(0.0)};
  for (double x : nums)
    if (!std::isfinite(x)) throw InvalidProblem("numeric parameters must be finite");
  for (double x : c.scan_lambdas)
    if (!std::isfinite(x)) throw InvalidProblem("scan lambdas must be finite");
  if (!(c.step > 0)) throw InvalidProblem("step must be positive");
  if (c.grid_n < 8) throw InvalidProblem("grid_n must be at least 8");
  if (c.basis_size < 0) throw InvalidProblem("basis size must be non-negative");
  if (c.s_count < 1) throw InvalidProblem("s_count must be at least 1");
  if (!(c.span.first < c.span.second)) throw InvalidProblem("span must satisfy t_start < t_end");
}

ordered_json meta_json(const RunConfig& c) {
  ordered_json m;
  m["command"] = to_string(c.command);
  m["case"] = to_string(c.kind);
  m["lambda"] = c.lambda;
  m["u0"] = c.u0;
  m["du0"] = c.du0;
  m["t0"] = make_problem(c).t0;
  m["span"] = {c.span.first, c.span.second};
  m["step"] = c.step;
  m["grid_n"] = c.grid_n;
  m["format"] = to_string(c.format);
  m["seed"] = c.seed;
  m["thresholds"] = {{"residual", c.thresholds.residual},
                     {"h_zero", c.thresholds.h_zero},
                     {"h_floor", c.thresholds.h_floor},
                     {"first_variation", c.thresholds.first_variation},
                     {"first_integral", c.thresholds.first_integral},
                     {"path_agreement", c.thresholds.path_agreement},
                     {"fd_agreement", c.thresholds.fd_agreement}};
  m["basis_size"] = c.basis_size;
  if (c.command == Command::Scan) m["lambdas"] = c.scan_lambdas;
  if (c.command == Command::Export) {
    m["curve"] = to_string(c.curve);
    m["v0"] = c.v0;
    m["s_count"] = c.s_count;
    m["s_max"] = c.s_max;
  }
  return m;
}

void meta_csv(std::ostream& os, const RunConfig& c) {
  const ordered_json m = meta_json(c);
  for (const auto& [k, v] : m.items()) os << "# " << k << " = " << v.dump() << '\n';
}

// Writes to the configured file, or to `out` when no path is set.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << text;
  if (!f.flush()) throw std::runtime_error("write failed: " + path);
}

std::string table(const RunConfig& c, const std::vector<std::string>& columns,
                  const std::vector<std::vector<double>>& rows, const ordered_json& extra) {
  std::ostringstream os;
  if (c.format == Format::Csv) {
    os << "# desitter " << to_string(c.command) << '\n';
    meta_csv(os, c);
    for (const auto& [k, v] : extra.items()) os << "# " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    os << '#';
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : " ") << columns[i];
    os << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << fmt(r[i]);
      os << '\n';
    }
    return os.str();
  }
  ordered_json j;
  j["schema"] = 1;
  j["meta"] = meta_json(c);
  for (const auto& [k, v] : extra.items()) j["meta"][k] = v;
  j["columns"] = columns;
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json o;
    for (std::size_t i = 0; i < r.size(); ++i) o[columns[i]] = r[i];
    arr.push_back(std::move(o));
  }
  j["rows"] = std::move(arr);
  return j.dump(2) + "\n";
}

int termination_status(Termination t) { return t == Termination::SpanCompleted ? 0 : 2; }

double max_abs(std::span<const double> xs) {
  double m = 0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return m;
}

std::vector<double> s_grid(const RunConfig& c) {
  if (c.s_count == 1) return {0.0};
  std::vector<double> s;
  for (int j = 0; j < c.s_count; ++j) s.push_back(-c.s_max + 2.0 * c.s_max * j / (c.s_count - 1));
  return s;
}

CurveUV export_curve(const RunConfig& c, std::vector<double>& ts, Termination& term) {
  term = Termination::SpanCompleted;
  if (c.curve == CurveSource::Catenary) {
    CatenaryResult r = solve(make_problem(c));
    term = r.termination;
    for (const auto& s : r.samples) ts.push_back(s.t);
    return r.curve;
  }
  const auto [a, b] = c.span;
  for (int i = 0; i <= c.grid_n; ++i) ts.push_back(i == c.grid_n ? b : a + (b - a) * i / c.grid_n);
  switch (c.curve) {
    case CurveSource::Equator: return CurveUV::equator(a, b);
    case CurveSource::Parallel: return CurveUV::parallel(c.u0, a, b);
    case CurveSource::Meridian: return CurveUV::meridian(c.v0, a, b);
    case CurveSource::Catenary: break;
  }
  throw std::logic_error("unreachable");
}

}  // namespace

VerifyReport verify(const RunConfig& config) {
  check_config(config);
  const Thresholds& thr = config.thresholds;
  const CatenaryResult sol = solve(make_problem(config));
  const CurveUV& curve = sol.curve;

  VerifyReport rep;
  rep.kind = config.kind;
  rep.lambda = config.lambda;
  rep.termination = sol.termination;
  rep.samples = sol.samples.size();

  // Residuals at interior knots and halfway between knots, where the interpolant is not
  // pinned to the ODE.
  const auto& smp = sol.samples;
  for (std::size_t i = 1; i + 1 < smp.size(); ++i) {
    for (double t : {smp[i].t, 0.5 * (smp[i].t + smp[i + 1].t)}) {
      rep.max_residual = std::max(rep.max_residual, std::abs(catenary_residual(curve, t, config.kind, config.lambda)));
      rep.max_normal_angle_residual = std::max(
          rep.max_normal_angle_residual, std::abs(normal_angle_residual(curve, t, config.kind, config.lambda)));
    }
  }

  // Surface grid over interior samples leaving room for the finite-difference stencils.
  std::vector<double> ts;
  const double margin = 3.0 * kSurfaceFdStep;
  for (std::size_t i = 1; i + 1 < smp.size(); ++i)
    if (smp[i].t - curve.a() >= margin && curve.b() - smp[i].t >= margin) ts.push_back(smp[i].t);
  if (ts.empty()) throw InvalidProblem("trajectory too short for a surface grid");
  const std::vector<double> ss = s_grid(config);

  // The intrinsic closed display only holds for lambda = 0; otherwise compare against the
  // general spherical-group display, which holds for every curve.
  const bool intrinsic_display = config.kind == CaseKind::Intrinsic && config.lambda == 0.0;
  const CaseKind surface_kind =
      config.kind == CaseKind::Intrinsic && !intrinsic_display ? CaseKind::Spherical : config.kind;
  const auto analytic = surface_grid_parallel(curve, surface_kind, ts, ss, FormMode::Analytic);
  const auto fd = surface_grid_parallel(curve, surface_kind, ts, ss, FormMode::FiniteDifference);
  rep.grid_points = analytic.size();
  rep.min_abs_H_forms = std::numeric_limits<double>::infinity();
  double structural = 0;
  for (std::size_t k = 0; k < analytic.size(); ++k) {
    const auto& p = analytic[k];
    const auto& q = fd[k];
    rep.max_abs_H_forms = std::max(rep.max_abs_H_forms, std::abs(p.H_forms));
    rep.min_abs_H_forms = std::min(rep.min_abs_H_forms, std::abs(p.H_forms));
    rep.max_abs_H_closed = std::max(rep.max_abs_H_closed, std::abs(p.H_closed));
    rep.max_abs_H_fd = std::max(rep.max_abs_H_fd, std::abs(q.H_forms));
    rep.max_path_disagreement = std::max(rep.max_path_disagreement, std::abs(p.H_forms - p.H_closed));
    rep.max_fd_disagreement = std::max(rep.max_fd_disagreement, std::abs(p.H_forms - q.H_forms));
    rep.max_normal_defect = std::max({rep.max_normal_defect, p.normal_defect, q.normal_defect});
    structural = std::max({structural, std::abs(q.F), std::abs(q.h12)});
  }

  const DiscreteCurve dc = discretize(curve, static_cast<std::size_t>(config.grid_n));
  const auto basis = hat_basis(dc.intervals(), static_cast<std::size_t>(config.basis_size), config.seed);
  const auto scores = first_variation_scores_parallel(dc, config.kind, config.lambda, basis, 1e-5);
  rep.first_variation_score = max_abs(scores);

  bool conserved = true;
  if (config.kind == CaseKind::Spherical) {
    const double j0 = first_integral(curve, smp.front().t, config.lambda);
    double drift = 0;
    for (const auto& s : smp)
      drift = std::max(drift, std::abs(first_integral(curve, s.t, config.lambda) - j0));
    rep.first_integral_drift = drift / std::max(std::abs(j0), std::numeric_limits<double>::min());
    conserved = *rep.first_integral_drift < thr.first_integral;
  }

  rep.catenary = rep.max_residual < thr.residual && rep.first_variation_score < thr.first_variation && conserved;
  rep.expected_minimal = rep.catenary && config.lambda == 0.0 && config.kind != CaseKind::Intrinsic;
  const bool minimal = rep.max_abs_H_forms < thr.h_zero && rep.max_abs_H_closed < thr.h_zero;
  const bool bounded_below = rep.min_abs_H_forms > thr.h_floor;
  const bool consistent = rep.max_path_disagreement < thr.path_agreement &&
                          rep.max_fd_disagreement < thr.fd_agreement &&
                          rep.max_normal_defect < thr.path_agreement && structural < thr.path_agreement;

  if (!rep.catenary) {
    rep.verdict = "not a catenary";
  } else if (config.kind == CaseKind::Intrinsic) {
    rep.verdict = minimal ? "intrinsic catenary, minimal" : "intrinsic catenary, not minimal";
  } else {
    rep.verdict = minimal ? "catenary, minimal" : "catenary, not minimal";
  }
  rep.passed = rep.catenary && consistent && (rep.expected_minimal ? minimal : bounded_below);
  return rep;
}

std::string render_report(const VerifyReport& r, const RunConfig& config, Format format) {
  ordered_json j;
  j["case"] = to_string(r.kind);
  j["lambda"] = r.lambda;
  j["termination"] = to_string(r.termination);
  j["samples"] = r.samples;
  j["grid_points"] = r.grid_points;
  j["max_residual"] = r.max_residual;
  j["max_normal_angle_residual"] = r.max_normal_angle_residual;
  j["max_abs_H_forms"] = r.max_abs_H_forms;
  j["min_abs_H_forms"] = r.min_abs_H_forms;
  j["max_abs_H_closed"] = r.max_abs_H_closed;
  j["max_abs_H_fd"] = r.max_abs_H_fd;
  j["max_path_disagreement"] = r.max_path_disagreement;
  j["max_fd_disagreement"] = r.max_fd_disagreement;
  j["max_normal_defect"] = r.max_normal_defect;
  j["first_variation_score"] = r.first_variation_score;
  if (r.first_integral_drift) j["first_integral_drift"] = *r.first_integral_drift;
  j["catenary"] = r.catenary;
  j["expected_minimal"] = r.expected_minimal;
  j["verdict"] = r.verdict;
  j["result"] = r.passed ? "PASS" : "FAIL";

  if (format == Format::Json) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["meta"] = meta_json(config);
    doc["rows"] = ordered_json::array({j});
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& [k, v] : j.items()) {
    os << k << " = ";
    if (v.is_string()) os << v.get<std::string>();
    else if (v.is_number_float()) os << fmt(v.get<double>());
    else os << v.dump();
    os << '\n';
  }
  return os.str();
}

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  check_config(config);
  const CatenaryResult r = solve(make_problem(config));
  std::vector<std::vector<double>> rows;
  double worst = 0;
  for (const auto& s : r.samples) {
    const FrameAtT f = frame_at(r.curve, s.t);
    const double res = catenary_residual(r.curve, s.t, config.kind, config.lambda);
    worst = std::max(worst, std::abs(res));
    rows.push_back({s.t, s.u, s.du, f.kappa, res});
  }
  ordered_json extra;
  extra["termination"] = to_string(r.termination);
  extra["epsilon"] = r.epsilon;
  extra["max_abs_residual"] = worst;
  emit(config.output_path, table(config, {"t", "u", "du", "kappa", "residual"}, rows, extra), out);
  if (r.termination != Termination::SpanCompleted)
    err << "solve: stopped early (" << to_string(r.termination) << ") at t in [" << fmt(r.samples.front().t)
        << ", " << fmt(r.samples.back().t) << "]\n";
  return termination_status(r.termination);
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const VerifyReport rep = verify(config);
  emit(config.output_path, render_report(rep, config, config.format), out);
  if (rep.termination != Termination::SpanCompleted) {
    err << "verify: solver stopped early (" << to_string(rep.termination) << ")\n";
    return 2;
  }
  return rep.passed ? 0 : 1;
}

int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& err) {
  check_config(config);
  if (config.scan_lambdas.empty()) throw InvalidProblem("lambda grid is empty");
  const CatenaryResult r = solve(make_problem(config));
  const DiscreteCurve dc = discretize(r.curve, static_cast<std::size_t>(config.grid_n));
  const auto basis = hat_basis(dc.intervals(), static_cast<std::size_t>(config.basis_size), config.seed);
  const auto scores = critical_lambda_scan(dc, config.kind, config.scan_lambdas, basis);
  std::vector<std::vector<double>> rows;
  std::size_t best = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    rows.push_back({scores[i].lambda, scores[i].score});
    if (scores[i].score < scores[best].score) best = i;
  }
  ordered_json extra;
  extra["termination"] = to_string(r.termination);
  extra["argmin_lambda"] = scores[best].lambda;
  emit(config.output_path, table(config, {"lambda", "score"}, rows, extra), out);
  if (r.termination != Termination::SpanCompleted)
    err << "scan: solver stopped early (" << to_string(r.termination) << ")\n";
  return termination_status(r.termination);
}

int cmd_export(const RunConfig& config, std::ostream& out, std::ostream& err) {
  check_config(config);
  std::vector<double> ts;
  Termination term;
  const CurveUV curve = export_curve(config, ts, term);

  std::vector<std::vector<double>> rows;
  for (double t : ts) {
    const ChartJet j = curve.jet(t);
    const LVec3 p = psi(j.u, j.v);
    rows.push_back({t, p.x(), p.y(), p.z()});
  }
  ordered_json extra;
  extra["termination"] = to_string(term);
  emit(config.output_path, table(config, {"t", "x", "y", "z"}, rows, extra), out);

  if (!config.surface_output.empty()) {
    std::vector<std::vector<double>> grid;
    for (double t : ts)
      for (double s : s_grid(config)) {
        const LVec4 q = surface_point(curve, t, s, config.kind);
        grid.push_back({q.x1(), q.x2(), q.x3(), q.x4(), t, s});
      }
    emit(config.surface_output, table(config, {"x1", "x2", "x3", "x4", "t", "s"}, grid, extra), out);
  }
  if (term != Termination::SpanCompleted) err << "export: solver stopped early (" << to_string(term) << ")\n";
  return termination_status(term);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Solve: return cmd_solve(config, out, err);
      case Command::Verify: return cmd_verify(config, out, err);
      case Command::Scan: return cmd_scan(config, out, err);
      case Command::Export: return cmd_export(config, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  } catch (...) {
    err << "error: unknown failure\n";
  }
  return 1;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Catenaries of the de Sitter plane and their rotational surfaces"};
  app.require_subcommand(1, 1);

  std::string case_name = "spherical";
  std::string format = "csv";
  std::string curve_name = "catenary";
  RunConfig c;
  std::vector<double> span;

  struct Flags {
    CLI::Option *u0, *span, *t0;
  };
  auto add_common = [&](CLI::App* sub) {
    Flags f{};
    sub->add_option("--case", case_name, "spherical | hyperbolic | parabolic | intrinsic")
        ->check(CLI::IsMember({"spherical", "hyperbolic", "parabolic", "intrinsic"}));
    sub->add_option("--lambda", c.lambda, "Lagrange multiplier");
    f.u0 = sub->add_option("--u0", c.u0, "initial u (per-case default)");
    sub->add_option("--du0", c.du0, "initial u'");
    f.t0 = sub->add_option("--t0", c.t0, "initial parameter (default: span midpoint)");
    f.span = sub->add_option("--span", span, "parameter interval")->expected(2);
    sub->add_option("--step", c.step, "RK4 step");
    sub->add_option("--grid-n", c.grid_n, "intervals for discretized curves (>= 8)");
    sub->add_option("-o,--output", c.output_path, "output file (default: stdout)");
    sub->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", c.seed, "perturbation basis seed");
    sub->add_option("--basis-size", c.basis_size, "number of random perturbations");
    sub->add_option("--residual-tol", c.thresholds.residual, "max catenary residual");
    sub->add_option("--h-zero-tol", c.thresholds.h_zero, "max |H| counted as minimal");
    sub->add_option("--h-floor", c.thresholds.h_floor, "min |H| required when not minimal");
    sub->add_option("--fv-tol", c.thresholds.first_variation, "max first-variation score");
    sub->add_option("--fi-tol", c.thresholds.first_integral, "max relative first-integral drift");
    sub->add_option("--agreement-tol", c.thresholds.path_agreement, "forms vs closed-form H");
    sub->add_option("--fd-tol", c.thresholds.fd_agreement, "analytic vs finite-difference H");
    sub->add_option("--s-count", c.s_count, "number of rotation parameters");
    sub->add_option("--s-max", c.s_max, "rotation parameters span [-s_max, s_max]");
    return f;
  };

  auto* solve_cmd = app.add_subcommand("solve", "integrate a catenary and write samples");
  auto* verify_cmd = app.add_subcommand("verify", "check catenary and minimality properties");
  auto* scan_cmd = app.add_subcommand("scan", "first-variation score over a lambda grid");
  auto* export_cmd = app.add_subcommand("export", "write embedded curve and surface samples");
  const Flags f_solve = add_common(solve_cmd);
  const Flags f_verify = add_common(verify_cmd);
  const Flags f_scan = add_common(scan_cmd);
  const Flags f_export = add_common(export_cmd);
  std::vector<double> lambdas;
  scan_cmd->add_option("--lambdas", lambdas, "lambda grid");
  export_cmd->add_option("--curve", curve_name, "catenary | equator | parallel | meridian")
      ->check(CLI::IsMember({"catenary", "equator", "parallel", "meridian"}));
  export_cmd->add_option("--surface-output", c.surface_output, "also write a surface grid here");
  export_cmd->add_option("--v0", c.v0, "meridian longitude");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  const Flags* f = nullptr;
  if (solve_cmd->parsed()) c.command = Command::Solve, f = &f_solve;
  if (verify_cmd->parsed()) c.command = Command::Verify, f = &f_verify;
  if (scan_cmd->parsed()) c.command = Command::Scan, f = &f_scan;
  if (export_cmd->parsed()) c.command = Command::Export, f = &f_export;

  c.kind = *parse_case(case_name);
  const RunConfig d = defaults_for(c.kind);
  if (f->u0->count() == 0) c.u0 = d.u0;
  c.span = f->span->count() ? std::pair{span[0], span[1]} : d.span;
  c.format = format == "json" ? Format::Json : Format::Csv;
  if (!lambdas.empty()) c.scan_lambdas = lambdas;
  if (curve_name == "equator") c.curve = CurveSource::Equator;
  else if (curve_name == "parallel") c.curve = CurveSource::Parallel;
  else if (curve_name == "meridian") c.curve = CurveSource::Meridian;
  return run(c, out, err);
}

}  // namespace desitter::app
