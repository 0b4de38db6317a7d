#pragma once

#include <stdexcept>

#include "rpolar/mat3.hpp"

namespace rpolar {

//! Axis-angle pair with unit axis and angle in (-pi, pi].
struct AngleAxis {
  double angle = 0.0;
  Vec3 axis{0.0, 0.0, 1.0};
};

//! Proper rotation (member of SO(3)). Construction through from_matrix validates
//! orthonormality (R^T R = 1 within 1e-12 per entry) and det R = 1 within 1e-12;
//! the other factories produce rotations by construction.
class Rotation3 {
 public:
  Rotation3() : m_(Mat3::identity()) {}

  static Rotation3 identity() { return Rotation3(); }

  //! Validating factory; throws std::invalid_argument if m is not in SO(3).
  static Rotation3 from_matrix(const Mat3& m) {
    const Mat3 gram = transpose(m) * m;
    if (max_abs(gram - Mat3::identity()) > 1e-12)
      throw std::invalid_argument("Rotation3: matrix is not orthonormal");
    if (std::fabs(det(m) - 1.0) > 1e-12)
      throw std::invalid_argument("Rotation3: matrix has det != 1");
    return Rotation3(m);
  }

  //! Rodrigues formula; axis need not be normalized exactly (it is renormalized).
  static Rotation3 from_axis_angle(const Vec3& axis, double angle) {
    const Vec3 n = normalized(axis);
    return from_unit_axis_angle(n, angle);
  }

  //! Rotation by |v| radians about v/|v|; v = 0 gives the identity.
  static Rotation3 from_rotation_vector(const Vec3& v) {
    const double a = norm(v);
    if (a < 1e-300) return Rotation3();
    return from_unit_axis_angle((1.0 / a) * v, a);
  }

  //! Assumes |n| = 1; hot path for the brute-force oracle.
  static Rotation3 from_unit_axis_angle(const Vec3& n, double angle) {
    const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
    Mat3 r;
    r(0, 0) = c + n.x * n.x * t;
    r(0, 1) = n.x * n.y * t - n.z * s;
    r(0, 2) = n.x * n.z * t + n.y * s;
    r(1, 0) = n.x * n.y * t + n.z * s;
    r(1, 1) = c + n.y * n.y * t;
    r(1, 2) = n.y * n.z * t - n.x * s;
    r(2, 0) = n.x * n.z * t - n.y * s;
    r(2, 1) = n.y * n.z * t + n.x * s;
    r(2, 2) = c + n.z * n.z * t;
    return Rotation3(r);
  }

  const Mat3& matrix() const { return m_; }

  Rotation3 transposed() const { return Rotation3(transpose(m_)); }

  Rotation3 operator*(const Rotation3& o) const { return Rotation3(m_ * o.m_); }

  Vec3 operator*(const Vec3& v) const { return m_ * v; }

  //! Angle in [0, pi]; the axis of a near-identity rotation defaults to e3.
  AngleAxis to_angle_axis() const {
    const double c = clamp(0.5 * (trace(m_) - 1.0), -1.0, 1.0);
    const double angle = std::acos(c);
    // vector part of the skew component; vanishes at angle 0 and pi
    const Vec3 w{0.5 * (m_(2, 1) - m_(1, 2)), 0.5 * (m_(0, 2) - m_(2, 0)),
                 0.5 * (m_(1, 0) - m_(0, 1))};
    if (angle < 1e-9) return {angle, Vec3{0.0, 0.0, 1.0}};
    if (kPi - angle > 1e-6) return {angle, normalized(w)};
    // near pi: recover the axis from the dominant column of R + 1
    const Mat3 b = m_ + Mat3::identity();
    int best = 0;
    double best_n = 0.0;
    for (int j = 0; j < 3; ++j) {
      const double n = norm(b.col(j));
      if (n > best_n) {
        best_n = n;
        best = j;
      }
    }
    Vec3 axis = normalized(b.col(best));
    // orient consistently with the (tiny) skew part when available
    if (dot(axis, w) < 0.0) axis = -axis;
    return {angle, axis};
  }

 private:
  explicit Rotation3(const Mat3& m) : m_(m) {}  // trusted, no validation

  Mat3 m_;
};

//! Geodesic distance on SO(3): the rotation angle of a^T b, in [0, pi].
inline double geodesic_distance(const Rotation3& a, const Rotation3& b) {
  const double c = 0.5 * (trace(transpose(a.matrix()) * b.matrix()) - 1.0);
  return std::acos(clamp(c, -1.0, 1.0));
}

}  // namespace rpolar
