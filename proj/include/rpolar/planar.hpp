#pragma once

#include <optional>
#include <stdexcept>

#include "rpolar/mat3.hpp"
#include "rpolar/rotation.hpp"

namespace rpolar {

//! Section plane with unit normal n and an adapted frame Q = (u, v, n), so
//! Q e3 = n. Positive spin angles turn u toward v, i.e. counterclockwise
//! about +n by the right-hand rule.
struct OrientedPlane {
  Vec3 normal;
  Rotation3 frame;
};

//! Planar spin of a matrix about a plane normal. degenerate is set when the
//! planar block has non-positive determinant (no nearest planar rotation);
//! angle is 0 in that case and must not be used.
struct Spin {
  double angle = 0.0;  // radians, (-pi, pi]
  Mat2 planar_block;
  bool degenerate = false;
};

//! Deterministic frame completion: pick the canonical axis least aligned with
//! n (ties: smallest index), Gram-Schmidt it against n, close with v = n x u.
inline OrientedPlane adapted_frame(const Vec3& n_in) {
  const double len = norm(n_in);
  if (std::fabs(len - 1.0) > 1e-9)
    throw std::invalid_argument("adapted_frame: normal must be a unit vector");
  const Vec3 n = (1.0 / len) * n_in;

  int least = 0;
  for (int i = 1; i < 3; ++i)
    if (std::fabs(n[i]) < std::fabs(n[least])) least = i;
  Vec3 e{};
  e[least] = 1.0;

  const Vec3 u = normalized(e - dot(e, n) * n);
  const Vec3 v = cross(n, u);
  return {n, Rotation3::from_matrix(Mat3::from_columns(u, v, n))};
}

//! Upper-left 2x2 block of Q^T L Q, the in-plane part of L.
inline Mat2 planar_block(const Mat3& l, const OrientedPlane& plane) {
  const Mat3 b = transpose(plane.frame.matrix()) * l * plane.frame.matrix();
  return {{b(0, 0), b(0, 1), b(1, 0), b(1, 1)}};
}

//! Closed-form 2D polar factor; empty when det L <= 0 (the nearest-rotation
//! problem degenerates there).
inline std::optional<Mat2> polar2(const Mat2& l) {
  if (det(l) <= 0.0) return std::nullopt;
  const double a = l(0, 0) + l(1, 1);
  const double b = l(0, 1) - l(1, 0);
  const double s = std::sqrt(norm_sq(l) + 2.0 * det(l));  // = sqrt(a^2 + b^2)
  Mat2 r;
  r(0, 0) = a / s;
  r(0, 1) = b / s;
  r(1, 0) = -b / s;
  r(1, 1) = a / s;
  return r;
}

//! Rotation angle of a planar rotation, in (-pi, pi]. Equal to
//! sign(r21) * arccos(r11) with sign(0) = +1, computed through atan2 which is
//! exact for the identity and exactly antisymmetric in r21.
inline double spin_angle(const Mat2& r) {
  const double a = std::atan2(r(1, 0), r(0, 0));
  return a == -kPi ? kPi : a;
}

inline Spin planar_spin(const Mat3& l, const OrientedPlane& plane) {
  Spin out;
  out.planar_block = planar_block(l, plane);
  const std::optional<Mat2> r = polar2(out.planar_block);
  if (!r) {
    out.degenerate = true;
    return out;
  }
  out.angle = spin_angle(*r);
  return out;
}

//! Relative rotation taking a to b: b a^T.
inline Rotation3 misorientation(const Rotation3& a, const Rotation3& b) {
  return b * a.transposed();
}

}  // namespace rpolar
