// Error types raised by the geometry layers.
#pragma once

#include <stdexcept>
#include <string>

namespace desitter {

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The curve is (numerically) lightlike at the evaluated parameter.
class DegenerateCurve : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// A point lies outside the positive half-space of the reference configuration.
class OutOfHalfSpace : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// The weighted density d + lambda vanishes (or u = 0 in the intrinsic display).
class SingularDenominator : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// The induced surface metric is degenerate: |EG - F^2| below tolerance.
class DegenerateSurface : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// A catenary problem whose initial data violates its invariants.
class InvalidProblem : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

}  // namespace desitter
