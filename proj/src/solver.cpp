#include "desitter/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "desitter/errors.hpp"

namespace desitter {

CatenaryProblem centered_problem(CaseKind kind, double lambda, double u0, double du0,
                                 std::pair<double, double> span, double step) {
  CatenaryProblem p;
  p.kind = kind;
  p.lambda = lambda;
  p.u0 = u0;
  p.du0 = du0;
  p.span = span;
  p.t0 = 0.5 * (span.first + span.second);
  p.step = step;
  return p;
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::SpanCompleted: return "SpanCompleted";
    case Termination::LightlikeApproach: return "LightlikeApproach";
    case Termination::DenominatorSingularity: return "DenominatorSingularity";
    case Termination::LeftHalfSpace: return "LeftHalfSpace";
  }
  return "unknown";
}

double catenary_acceleration(CaseKind kind, double lambda, double t, double u, double du) {
  const double c = std::cosh(u), s = std::sinh(u);
  const ChartJet j{u, du, 0.0, t, 1.0, 0.0};
  const double weight = height(u, t, kind) + lambda;
  const double eps_kappa_speed3 = -catenary_numerator(j, kind) * (c * c - du * du) / weight;
  return (eps_kappa_speed3 - s * c * c + 2.0 * du * du * s) / c;
}

namespace {

using State = std::array<double, 2>;  // (u, u')

State rk4_step(CaseKind kind, double lambda, double t, const State& y, double h) {
  auto f = [&](double tt, const State& yy) {
    return State{yy[1], catenary_acceleration(kind, lambda, tt, yy[0], yy[1])};
  };
  const State k1 = f(t, y);
  const State k2 = f(t + 0.5 * h, {y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]});
  const State k3 = f(t + 0.5 * h, {y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]});
  const State k4 = f(t + h, {y[0] + h * k3[0], y[1] + h * k3[1]});
  return {y[0] + h / 6.0 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]),
          y[1] + h / 6.0 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])};
}

double signed_speed2(int eps, const State& y) {
  const double c = std::cosh(y[0]);
  return eps * (c * c - y[1] * y[1]);
}

constexpr double kLightlikeStop = 10.0 * kCausalTol;
constexpr double kLightlikeLanding = 100.0 * kCausalTol;

struct Leg {
  std::vector<GraphSample> samples;  // excludes t0, ordered away from t0
  Termination termination = Termination::SpanCompleted;
};

class Integrator {
 public:
  Integrator(const CatenaryProblem& p, int eps) : p_(p), eps_(eps) {}

  Leg run(double t_end) const {
    Leg leg;
    const double length = t_end - p_.t0;
    if (length == 0.0) return leg;
    const auto n = static_cast<long>(std::ceil(std::abs(length) / p_.step - 1e-9));
    const double h = length / static_cast<double>(n);

    State y{p_.u0, p_.du0};
    double t = p_.t0;
    for (long i = 0; i < n; ++i) {
      const double t_next = (i + 1 == n) ? t_end : p_.t0 + static_cast<double>(i + 1) * h;
      const double h_i = t_next - t;
      const State y_next = rk4_step(p_.kind, p_.lambda, t, y, h_i);
      if (check(t_next, y_next)) {
        leg.termination = refine(t, y, h_i, leg);
        return leg;
      }
      t = t_next;
      y = y_next;
      leg.samples.push_back(sample(t, y));
    }
    return leg;
  }

  GraphSample sample(double t, const State& y) const {
    return {t, y[0], y[1], catenary_acceleration(p_.kind, p_.lambda, t, y[0], y[1])};
  }

 private:
  std::optional<Termination> check(double t, const State& y) const {
    if (!std::isfinite(y[0]) || !std::isfinite(y[1])) return Termination::DenominatorSingularity;
    if (signed_speed2(eps_, y) < kLightlikeStop) return Termination::LightlikeApproach;
    if (!in_half_space(y[0], t, p_.kind)) return Termination::LeftHalfSpace;
    if (std::abs(height(y[0], t, p_.kind) + p_.lambda) < kDenominatorTol)
      return Termination::DenominatorSingularity;
    return std::nullopt;
  }

  // Creeps up on the event with shrinking sub-steps from the last good state. Accepted
  // sub-steps are kept as samples; near the light cone this stops once |speed^2| falls inside
  // [10 tol, 100 tol]. Returns the reason given by the last rejected sub-step.
  Termination refine(double t, State y, double h, Leg& leg) const {
    Termination reason = *check(t + h, rk4_step(p_.kind, p_.lambda, t, y, h));
    const double t_stop = t + h;
    double sub = 0.5 * h;
    for (int iter = 0; iter < 10000 && std::abs(sub) > 1e-14 * std::max(1.0, std::abs(t)); ++iter) {
      if (std::abs(t_stop - t) < std::abs(sub)) sub = t_stop - t;
      const State next = rk4_step(p_.kind, p_.lambda, t, y, sub);
      if (auto stop = check(t + sub, next)) {
        reason = *stop;
        sub *= 0.5;
        continue;
      }
      t += sub;
      y = next;
      leg.samples.push_back(sample(t, y));
      if (signed_speed2(eps_, y) <= kLightlikeLanding) return Termination::LightlikeApproach;
    }
    return reason;
  }

  const CatenaryProblem& p_;
  int eps_;
};

int validate(const CatenaryProblem& p) {
  const bool finite = std::isfinite(p.lambda) && std::isfinite(p.u0) && std::isfinite(p.du0) &&
                      std::isfinite(p.t0) && std::isfinite(p.span.first) && std::isfinite(p.span.second) &&
                      std::isfinite(p.step);
  if (!finite) throw InvalidProblem("non-finite problem parameter");
  if (!(p.step > 0)) throw InvalidProblem("step must be positive");
  if (!(p.span.first < p.span.second)) throw InvalidProblem("span must satisfy t_start < t_end");
  if (!in_half_space(p.u0, p.t0, p.kind))
    throw InvalidProblem("initial point is outside positive half-space of the " + std::string(to_string(p.kind)) +
                         " reference");
  if (std::abs(height(p.u0, p.t0, p.kind) + p.lambda) <= kDenominatorTol)
    throw InvalidProblem("d + lambda vanishes at the initial point");
  const double c = std::cosh(p.u0);
  const double speed2 = c * c - p.du0 * p.du0;
  int eps = 0;
  switch (causal_character(speed2, kCausalTol)) {
    case Causal::Spacelike: eps = 1; break;
    case Causal::Timelike: eps = -1; break;
    case Causal::Lightlike: throw InvalidProblem("degenerate initial velocity (lightlike)");
  }
  if (p.t0 < p.span.first || p.t0 > p.span.second) throw InvalidProblem("t0 lies outside the span");
  if (p.epsilon_hint != 0 && p.epsilon_hint != eps)
    throw InvalidProblem("initial velocity causal character contradicts epsilon_hint");
  return eps;
}

}  // namespace

CatenaryResult solve(const CatenaryProblem& problem) {
  const int eps = validate(problem);
  const Integrator integrator(problem, eps);

  const Leg backward = integrator.run(problem.span.first);
  const Leg forward = integrator.run(problem.span.second);

  std::vector<GraphSample> samples;
  samples.reserve(backward.samples.size() + forward.samples.size() + 1);
  samples.insert(samples.end(), backward.samples.rbegin(), backward.samples.rend());
  samples.push_back(integrator.sample(problem.t0, {problem.u0, problem.du0}));
  samples.insert(samples.end(), forward.samples.begin(), forward.samples.end());
  if (samples.size() < 2) throw InvalidProblem("trajectory terminated before completing a single step");

  std::vector<double> t, u, du, ddu;
  for (const auto& s : samples) {
    t.push_back(s.t);
    u.push_back(s.u);
    du.push_back(s.du);
    ddu.push_back(s.ddu);
  }

  Termination term = Termination::SpanCompleted;
  if (forward.termination != Termination::SpanCompleted) term = forward.termination;
  else if (backward.termination != Termination::SpanCompleted) term = backward.termination;

  return CatenaryResult{std::move(samples), CurveUV::from_graph_samples(t, u, du, ddu), term, eps};
}

double euclidean_catenary(double c, double a, double lambda, double x) {
  if (!(c > 0)) throw std::invalid_argument("catenary parameter c must be positive");
  return std::cosh(c * x + a) / c - lambda;
}

double euclidean_el_residual(double c, double a, double lambda, double x) {
  const double y = euclidean_catenary(c, a, lambda, x);
  if (y + lambda == 0.0) throw SingularDenominator("y + lambda vanishes");
  const double dy = std::sinh(c * x + a);
  const double ddy = c * std::cosh(c * x + a);
  return ddy / (1.0 + dy * dy) - 1.0 / (y + lambda);
}

}  // namespace desitter
