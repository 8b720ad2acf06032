// Discretized weighted-length energies E[gamma] = int (d + lambda) |gamma'| dt and
// finite-difference first variations certifying criticality.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "desitter/curves.hpp"

namespace desitter {

struct NodeUV {
  double u = 0, v = 0;
};

/// Nodes (u_i, v_i) at t_i = a + i (b - a) / N, i = 0..N.
struct DiscreteCurve {
  double a = 0, b = 1;
  std::vector<NodeUV> nodes;

  std::size_t intervals() const { return nodes.empty() ? 0 : nodes.size() - 1; }
  double dt() const { return (b - a) / static_cast<double>(intervals()); }
};

/// Endpoint-pinned variation: deltas.front() and deltas.back() must be zero.
struct Perturbation {
  std::vector<NodeUV> deltas;
};

/// Samples the curve at N + 1 uniform parameters.
DiscreteCurve discretize(const CurveUV& curve, std::size_t intervals);

/// Throws DegenerateCurve unless N >= 8 and all chords share one strict causal sign.
void validate(const DiscreteCurve& curve);

/// Midpoint rule: sum over chords of (d(mid) + lambda) * |chord|, with |chord| the
/// Lorentzian chord length sqrt|dv^2 cosh^2(u_mid) - du^2|.
/// Throws OutOfHalfSpace if a node leaves the half-space and DegenerateCurve for bad chords.
double energy(const DiscreteCurve& curve, CaseKind kind, double lambda);

double length(const DiscreteCurve& curve);

/// [E(curve + h p) - E(curve - h p)] / 2h.
double first_variation(const DiscreteCurve& curve, CaseKind kind, double lambda, const Perturbation& pert,
                       double h);

/// sup-norm of the perturbation over both coordinates.
double sup_norm(const Perturbation& pert);

/// |first_variation| / (sup_norm(p) * (b - a)); zero for a zero perturbation.
double scaled_first_variation(const DiscreteCurve& curve, CaseKind kind, double lambda, const Perturbation& pert,
                              double h);

/// Deterministic basis of `count` hat functions on a grid of `intervals` chords, each with a
/// random center, half-width and (u, v) amplitude direction. Endpoints stay pinned.
std::vector<Perturbation> hat_basis(std::size_t intervals, std::size_t count, std::uint64_t seed);

/// Hat of height `amplitude` in u only, centered at node `center` with half-width `half_width` nodes.
Perturbation u_bump(std::size_t intervals, std::size_t center, std::size_t half_width, double amplitude);

struct LambdaScore {
  double lambda;
  double score;  // max scaled |first variation| over the basis
};

/// One criticality score per lambda; an empty basis scores 0.
std::vector<LambdaScore> critical_lambda_scan(const DiscreteCurve& curve, CaseKind kind,
                                              const std::vector<double>& lambdas,
                                              const std::vector<Perturbation>& basis, double h = 1e-5);

}  // namespace desitter
