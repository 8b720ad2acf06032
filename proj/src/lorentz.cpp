#include "desitter/lorentz.hpp"

#include <cmath>
#include <initializer_list>
#include <stdexcept>

namespace desitter {

namespace {

void require_finite(std::initializer_list<double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite vector component");
  }
}

}  // namespace

LVec3::LVec3(double x, double y, double z) : c_{x, y, z} { require_finite({x, y, z}); }

LVec3 operator+(const LVec3& a, const LVec3& b) { return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]}; }
LVec3 operator-(const LVec3& a, const LVec3& b) { return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]}; }
LVec3 operator*(double k, const LVec3& a) { return {k * a.c_[0], k * a.c_[1], k * a.c_[2]}; }

LVec4::LVec4(double x1, double x2, double x3, double x4) : c_{x1, x2, x3, x4} {
  require_finite({x1, x2, x3, x4});
}

LVec4::LVec4(const LVec3& v) : c_{v.x(), v.y(), v.z(), 0.0} {}

LVec4 operator+(const LVec4& a, const LVec4& b) {
  return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]};
}
LVec4 operator-(const LVec4& a, const LVec4& b) {
  return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]};
}
LVec4 operator*(double k, const LVec4& a) { return {k * a.c_[0], k * a.c_[1], k * a.c_[2], k * a.c_[3]}; }

std::string_view to_string(Causal c) {
  switch (c) {
    case Causal::Spacelike: return "spacelike";
    case Causal::Timelike: return "timelike";
    case Causal::Lightlike: return "lightlike";
  }
  return "unknown";
}

double inner3(const LVec3& a, const LVec3& b) { return a.x() * b.x() + a.y() * b.y() - a.z() * b.z(); }

double inner4(const LVec4& a, const LVec4& b) {
  return a.x1() * b.x1() + a.x2() * b.x2() - a.x3() * b.x3() + a.x4() * b.x4();
}

double det3(const LVec3& a, const LVec3& b, const LVec3& c) {
  return a.x() * (b.y() * c.z() - b.z() * c.y()) - a.y() * (b.x() * c.z() - b.z() * c.x()) +
         a.z() * (b.x() * c.y() - b.y() * c.x());
}

LVec3 cross3(const LVec3& a, const LVec3& b) {
  return {a.y() * b.z() - a.z() * b.y(), a.z() * b.x() - a.x() * b.z(), -(a.x() * b.y() - a.y() * b.x())};
}

namespace {

// 3x3 minor of rows (a,b,c) with column `skip` removed, columns kept in order.
double minor3(const LVec4& a, const LVec4& b, const LVec4& c, std::size_t skip) {
  std::array<std::size_t, 3> col{};
  for (std::size_t j = 0, k = 0; j < 4; ++j) {
    if (j != skip) col[k++] = j;
  }
  return a[col[0]] * (b[col[1]] * c[col[2]] - b[col[2]] * c[col[1]]) -
         a[col[1]] * (b[col[0]] * c[col[2]] - b[col[2]] * c[col[0]]) +
         a[col[2]] * (b[col[0]] * c[col[1]] - b[col[1]] * c[col[0]]);
}

}  // namespace

double det4(const LVec4& a, const LVec4& b, const LVec4& c, const LVec4& d) {
  // Expansion along the last row.
  double sum = 0.0;
  for (std::size_t j = 0; j < 4; ++j) {
    const double sign = ((3 + j) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * d[j] * minor3(a, b, c, j);
  }
  return sum;
}

LVec4 cross4(const LVec4& a, const LVec4& b, const LVec4& c) {
  // Euclidean cofactors e_j with sum_j e_j d_j = det4(a,b,c,d); the metric flips x3.
  std::array<double, 4> e{};
  for (std::size_t j = 0; j < 4; ++j) {
    const double sign = ((3 + j) % 2 == 0) ? 1.0 : -1.0;
    e[j] = sign * minor3(a, b, c, j);
  }
  return {e[0], e[1], -e[2], e[3]};
}

Causal causal_character(double v2, double tol) {
  if (v2 > tol) return Causal::Spacelike;
  if (v2 < -tol) return Causal::Timelike;
  return Causal::Lightlike;
}

Mat4 identity4() {
  Mat4 m{};
  for (std::size_t i = 0; i < 4; ++i) m[i][i] = 1.0;
  return m;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 m{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) m[i][j] += a[i][k] * b[k][j];
  return m;
}

LVec4 operator*(const Mat4& m, const LVec4& p) {
  std::array<double, 4> r{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) r[i] += m[i][k] * p[k];
  return {r[0], r[1], r[2], r[3]};
}

}  // namespace desitter
