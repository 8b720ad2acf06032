// Lorentz-Minkowski linear algebra for L^3 (signature ++-) and L^4 (signature ++-+).
#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace desitter {

/// Default tolerance on <v,v> for deciding the causal character of a vector.
inline constexpr double kCausalTol = 1e-10;

/// A vector of L^3 with metric dx^2 + dy^2 - dz^2. Components must be finite.
class LVec3 {
 public:
  constexpr LVec3() = default;
  LVec3(double x, double y, double z);

  double x() const { return c_[0]; }
  double y() const { return c_[1]; }
  double z() const { return c_[2]; }
  double operator[](std::size_t i) const { return c_[i]; }

  friend LVec3 operator+(const LVec3& a, const LVec3& b);
  friend LVec3 operator-(const LVec3& a, const LVec3& b);
  friend LVec3 operator*(double k, const LVec3& a);
  friend LVec3 operator-(const LVec3& a) { return -1.0 * a; }

 private:
  std::array<double, 3> c_{};
};

/// A vector of L^4 with metric dx1^2 + dx2^2 - dx3^2 + dx4^2. Components must be finite.
class LVec4 {
 public:
  constexpr LVec4() = default;
  LVec4(double x1, double x2, double x3, double x4);
  /// Embeds L^3 into L^4 as (x, y, z, 0).
  explicit LVec4(const LVec3& v);

  double x1() const { return c_[0]; }
  double x2() const { return c_[1]; }
  double x3() const { return c_[2]; }
  double x4() const { return c_[3]; }
  double operator[](std::size_t i) const { return c_[i]; }

  friend LVec4 operator+(const LVec4& a, const LVec4& b);
  friend LVec4 operator-(const LVec4& a, const LVec4& b);
  friend LVec4 operator*(double k, const LVec4& a);
  friend LVec4 operator-(const LVec4& a) { return -1.0 * a; }

 private:
  std::array<double, 4> c_{};
};

enum class Causal { Spacelike, Timelike, Lightlike };

std::string_view to_string(Causal c);

double inner3(const LVec3& a, const LVec3& b);
double inner4(const LVec4& a, const LVec4& b);

/// Determinant of the 3x3 matrix whose rows are a, b, c. Every orientation-dependent
/// quantity in the library (curvature sign, normals) is routed through this one convention.
double det3(const LVec3& a, const LVec3& b, const LVec3& c);

/// Lorentzian cross product: the unique w with inner3(w, c) == det3(a, b, c) for all c.
LVec3 cross3(const LVec3& a, const LVec3& b);

/// Determinant of the 4x4 matrix whose rows are a, b, c, d.
double det4(const LVec4& a, const LVec4& b, const LVec4& c, const LVec4& d);

/// Generalized cross product in L^4: the unique w with inner4(w, d) == det4(a, b, c, d) for all d.
/// It is inner4-orthogonal to a, b and c.
LVec4 cross4(const LVec4& a, const LVec4& b, const LVec4& c);

/// Classifies a squared norm v2 = <v,v>: Spacelike above tol, Timelike below -tol.
Causal causal_character(double v2, double tol = kCausalTol);

/// Row-major 4x4 real matrix acting on L^4 column vectors.
using Mat4 = std::array<std::array<double, 4>, 4>;

Mat4 identity4();
Mat4 operator*(const Mat4& a, const Mat4& b);
LVec4 operator*(const Mat4& m, const LVec4& p);

}  // namespace desitter
