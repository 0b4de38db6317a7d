#pragma once

#include "rpolar/mat3.hpp"

namespace rpolar {

// Synthetic indentation of the cube [-1,1]^3: points are displaced vertically,
// z' = z * s(r) with r the distance from the indenter axis. The scale s is
// 3/4 (r^2 + 1/3) inside the core cylinder r <= 1/2, the identity outside
// r >= 1, and a smooth exponential blend in between, so the map is C^1 with
// det = s(r) in [1/4, 1].

namespace detail {

struct IndentScale {
  double s;       // z-scale
  double ds_dr;   // radial derivative
};

inline IndentScale indent_scale(double r) {
  if (r <= 0.5) return {0.75 * (r * r + 1.0 / 3.0), 1.5 * r};
  if (r >= 1.0) return {1.0, 0.0};

  // blend exponent; -> -inf at the inner seam, +inf at the outer seam
  const double a = 1.0 / (1.0 - r);
  const double b = 2.0 / (1.0 - 2.0 * r);
  const double w = a + b;
  if (w > 700.0) return {1.0, 0.0};  // exp would overflow; the value is identity anyway

  const double e = std::exp(w);       // underflows to 0 toward the inner seam
  const double inv = 1.0 / (e + 1.0);
  const double s = 1.0 + 0.75 * (r * r - 1.0) * inv;
  const double dw = a * a + b * b;  // d/dr [1/(1-r)] = 1/(1-r)^2, d/dr [2/(1-2r)] = 4/(1-2r)^2 = b^2
  const double ds = 0.75 * (2.0 * r * inv - (r * r - 1.0) * dw * (e * inv) * inv);
  return {s, ds};
}

}  // namespace detail

//! The indentation map. Identity in x and y; z is scaled by s(r).
inline Vec3 indent_deformation(const Vec3& p) {
  const double r = std::sqrt(p.x * p.x + p.y * p.y);
  return {p.x, p.y, p.z * detail::indent_scale(r).s};
}

//! Analytic deformation gradient of indent_deformation. The third row is
//! (z s'(r) x/r, z s'(r) y/r, s(r)); on the core branch s'(r)/r = 3/2 exactly,
//! so the axis r = 0 is evaluated without the radial quotient.
inline Mat3 indent_gradient(const Vec3& p) {
  const double r = std::sqrt(p.x * p.x + p.y * p.y);
  Mat3 f = Mat3::identity();
  if (r <= 0.5) {
    f(2, 0) = 1.5 * p.z * p.x;
    f(2, 1) = 1.5 * p.z * p.y;
    f(2, 2) = 0.75 * (r * r + 1.0 / 3.0);
    return f;
  }
  const detail::IndentScale sc = detail::indent_scale(r);
  f(2, 0) = p.z * sc.ds_dr * p.x / r;
  f(2, 1) = p.z * sc.ds_dr * p.y / r;
  f(2, 2) = sc.s;
  return f;
}

}  // namespace rpolar
