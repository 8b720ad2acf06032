// Small helpers shared by the unit tests: a seeded generator for hand-rolled property tests
// and a few analytic curves with exact derivatives.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "desitter/curves.hpp"

namespace testing_support {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  int sign() { return uniform(0, 1) < 0.5 ? -1 : 1; }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// (u, v) = (amp sin(w t + phase), t): spacelike for small amp.
inline desitter::CurveUV wave(double amp, double w, double phase, double a, double b) {
  return desitter::CurveUV(
      [=](double t) {
        const double x = w * t + phase;
        return desitter::ChartJet{amp * std::sin(x), amp * w * std::cos(x), -amp * w * w * std::sin(x), t, 1, 0};
      },
      a, b);
}

// (u, v) = (k t, t) with |k| > cosh(u) along [a, b] is timelike.
inline desitter::CurveUV line(double k, double a, double b) {
  return desitter::CurveUV([=](double t) { return desitter::ChartJet{k * t, k, 0, t, 1, 0}; }, a, b);
}

// General (u(t), v(t)) with v not the parameter: u = c0 + c1 t + c2 t^2, v = d1 t + d2 t^2.
inline desitter::CurveUV quadratic(double c0, double c1, double c2, double d1, double d2, double a, double b) {
  return desitter::CurveUV(
      [=](double t) {
        return desitter::ChartJet{c0 + c1 * t + c2 * t * t, c1 + 2 * c2 * t, 2 * c2, d1 * t + d2 * t * t,
                                  d1 + 2 * d2 * t, 2 * d2};
      },
      a, b);
}

}  // namespace testing_support
