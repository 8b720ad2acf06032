#include "desitter/variational.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "desitter/errors.hpp"
#include "desitter/sweep.hpp"

namespace desitter {

DiscreteCurve discretize(const CurveUV& curve, std::size_t intervals) {
  if (intervals == 0) throw std::invalid_argument("need at least one interval");
  DiscreteCurve d;
  d.a = curve.a();
  d.b = curve.b();
  d.nodes.reserve(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) {
    // Pin the last node to b exactly; interpolants reject parameters past the domain.
    const double t = (i == intervals) ? d.b : d.a + (d.b - d.a) * static_cast<double>(i) / static_cast<double>(intervals);
    const ChartJet j = curve.jet(t);
    d.nodes.push_back({j.u, j.v});
  }
  return d;
}

namespace {

double chord_q(const NodeUV& p, const NodeUV& q) {
  const double um = 0.5 * (p.u + q.u);
  const double du = q.u - p.u, dv = q.v - p.v;
  const double c = std::cosh(um);
  return dv * dv * c * c - du * du;
}

}  // namespace

void validate(const DiscreteCurve& curve) {
  if (curve.intervals() < 8) throw DegenerateCurve("discrete curve needs at least 8 intervals");
  if (!(curve.a < curve.b)) throw DegenerateCurve("discrete curve needs a < b");
  const double floor = kCausalTol * curve.dt() * curve.dt();
  int sign = 0;
  for (std::size_t i = 0; i < curve.intervals(); ++i) {
    const double q = chord_q(curve.nodes[i], curve.nodes[i + 1]);
    if (std::abs(q) <= floor) throw DegenerateCurve("lightlike chord at index " + std::to_string(i));
    const int s = q > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) throw DegenerateCurve("chord causal character changes at index " + std::to_string(i));
  }
}

double energy(const DiscreteCurve& curve, CaseKind kind, double lambda) {
  validate(curve);
  for (const auto& n : curve.nodes) (void)distance(n.u, n.v, kind);
  double sum = 0.0;
  for (std::size_t i = 0; i < curve.intervals(); ++i) {
    const NodeUV& p = curve.nodes[i];
    const NodeUV& q = curve.nodes[i + 1];
    const double d = height(0.5 * (p.u + q.u), 0.5 * (p.v + q.v), kind);
    sum += (d + lambda) * std::sqrt(std::abs(chord_q(p, q)));
  }
  return sum;
}

double length(const DiscreteCurve& curve) {
  validate(curve);
  double sum = 0.0;
  for (std::size_t i = 0; i < curve.intervals(); ++i)
    sum += std::sqrt(std::abs(chord_q(curve.nodes[i], curve.nodes[i + 1])));
  return sum;
}

namespace {

DiscreteCurve displaced(const DiscreteCurve& curve, const Perturbation& pert, double h) {
  DiscreteCurve out = curve;
  for (std::size_t i = 0; i < out.nodes.size(); ++i) {
    out.nodes[i].u += h * pert.deltas[i].u;
    out.nodes[i].v += h * pert.deltas[i].v;
  }
  return out;
}

}  // namespace

double first_variation(const DiscreteCurve& curve, CaseKind kind, double lambda, const Perturbation& pert,
                       double h) {
  if (pert.deltas.size() != curve.nodes.size())
    throw std::invalid_argument("perturbation size does not match the curve");
  if (!pert.deltas.empty()) {
    const auto& f = pert.deltas.front();
    const auto& l = pert.deltas.back();
    if (f.u != 0 || f.v != 0 || l.u != 0 || l.v != 0)
      throw std::invalid_argument("perturbation must vanish at the endpoints");
  }
  if (sup_norm(pert) == 0.0) return 0.0;
  const double ep = energy(displaced(curve, pert, h), kind, lambda);
  const double em = energy(displaced(curve, pert, -h), kind, lambda);
  return (ep - em) / (2.0 * h);
}

double sup_norm(const Perturbation& pert) {
  double m = 0.0;
  for (const auto& d : pert.deltas) m = std::max({m, std::abs(d.u), std::abs(d.v)});
  return m;
}

double scaled_first_variation(const DiscreteCurve& curve, CaseKind kind, double lambda, const Perturbation& pert,
                              double h) {
  const double norm = sup_norm(pert);
  if (norm == 0.0) return 0.0;
  return std::abs(first_variation(curve, kind, lambda, pert, h)) / (norm * (curve.b - curve.a));
}

namespace {

// Uniform in [0, 1) from the top 53 bits; mt19937_64 output is fixed by the standard, so
// this is reproducible across standard libraries (unlike uniform_real_distribution).
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Perturbation hat(std::size_t intervals, double center, double half_width, double au, double av) {
  Perturbation p;
  p.deltas.resize(intervals + 1);
  for (std::size_t i = 1; i < intervals; ++i) {
    const double w = std::max(0.0, 1.0 - std::abs(static_cast<double>(i) - center) / half_width);
    p.deltas[i] = {w * au, w * av};
  }
  return p;
}

}  // namespace

std::vector<Perturbation> hat_basis(std::size_t intervals, std::size_t count, std::uint64_t seed) {
  if (intervals < 8) throw std::invalid_argument("hat basis needs at least 8 intervals");
  std::mt19937_64 rng(seed);
  const double n = static_cast<double>(intervals);
  std::vector<Perturbation> basis;
  basis.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double half_width = n * (0.05 + 0.20 * unit(rng));
    const double center = half_width + (n - 2.0 * half_width) * unit(rng);
    const double angle = 2.0 * std::numbers::pi * unit(rng);
    basis.push_back(hat(intervals, center, half_width, std::cos(angle), std::sin(angle)));
  }
  return basis;
}

Perturbation u_bump(std::size_t intervals, std::size_t center, std::size_t half_width, double amplitude) {
  if (half_width == 0 || center < half_width || center + half_width > intervals)
    throw std::invalid_argument("bump support must lie inside the curve");
  return hat(intervals, static_cast<double>(center), static_cast<double>(half_width), amplitude, 0.0);
}

std::vector<LambdaScore> critical_lambda_scan(const DiscreteCurve& curve, CaseKind kind,
                                              const std::vector<double>& lambdas,
                                              const std::vector<Perturbation>& basis, double h) {
  if (lambdas.empty()) throw std::invalid_argument("lambda grid must be non-empty");
  std::vector<LambdaScore> out;
  out.reserve(lambdas.size());
  for (double lambda : lambdas) {
    const auto scores = first_variation_scores_parallel(curve, kind, lambda, basis, h);
    const double worst = scores.empty() ? 0.0 : *std::max_element(scores.begin(), scores.end());
    out.push_back({lambda, worst});
  }
  return out;
}

}  // namespace desitter
