#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace rpolar {

constexpr double kPi = 3.14159265358979323846;

//! Clamps x to [lo, hi].
inline double clamp(double x, double lo, double hi) {
  return x < lo ? lo : (x > hi ? hi : x);
}

//! Sign with sign(0) = +1, so that arccos-based angle extraction maps 0 -> +0.
inline double sign_pos(double x) { return x < 0.0 ? -1.0 : 1.0; }

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

//! Returns a/|a|; throws for near-zero input.
inline Vec3 normalized(const Vec3& a) {
  const double n = norm(a);
  if (n < 1e-300) throw std::invalid_argument("normalized: zero vector");
  return (1.0 / n) * a;
}

//! 2x2 matrix, row-major. Used for planar blocks and the 2D polar factor.
struct Mat2 {
  std::array<double, 4> m{};

  double operator()(int r, int c) const { return m[2 * r + c]; }
  double& operator()(int r, int c) { return m[2 * r + c]; }

  static Mat2 identity() { return {{1.0, 0.0, 0.0, 1.0}}; }

  //! Planar rotation by alpha (counterclockwise).
  static Mat2 rotation(double alpha) {
    const double c = std::cos(alpha), s = std::sin(alpha);
    return {{c, -s, s, c}};
  }
};

inline Mat2 operator-(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.m[i] = a.m[i] - b.m[i];
  return r;
}

inline double det(const Mat2& a) { return a.m[0] * a.m[3] - a.m[1] * a.m[2]; }

inline double norm_sq(const Mat2& a) {
  return a.m[0] * a.m[0] + a.m[1] * a.m[1] + a.m[2] * a.m[2] + a.m[3] * a.m[3];
}

//! 3x3 matrix, row-major storage.
struct Mat3 {
  std::array<double, 9> m{};

  double operator()(int r, int c) const { return m[3 * r + c]; }
  double& operator()(int r, int c) { return m[3 * r + c]; }

  Vec3 row(int r) const { return {m[3 * r], m[3 * r + 1], m[3 * r + 2]}; }
  Vec3 col(int c) const { return {m[c], m[c + 3], m[c + 6]}; }

  void set_col(int c, const Vec3& v) {
    m[c] = v.x;
    m[c + 3] = v.y;
    m[c + 6] = v.z;
  }

  static Mat3 identity() { return {{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

  static Mat3 diagonal(double a, double b, double c) {
    return {{a, 0, 0, 0, b, 0, 0, 0, c}};
  }

  static Mat3 from_columns(const Vec3& a, const Vec3& b, const Vec3& c) {
    return {{a.x, b.x, c.x, a.y, b.y, c.y, a.z, b.z, c.z}};
  }
};

inline Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r.m[i] = a.m[i] + b.m[i];
  return r;
}

inline Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r.m[i] = a.m[i] - b.m[i];
  return r;
}

inline Mat3 operator*(double s, const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r.m[i] = s * a.m[i];
  return r;
}

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
  return r;
}

inline Vec3 operator*(const Mat3& a, const Vec3& v) {
  return {a.m[0] * v.x + a.m[1] * v.y + a.m[2] * v.z,
          a.m[3] * v.x + a.m[4] * v.y + a.m[5] * v.z,
          a.m[6] * v.x + a.m[7] * v.y + a.m[8] * v.z};
}

inline Mat3 transpose(const Mat3& a) {
  return {{a.m[0], a.m[3], a.m[6], a.m[1], a.m[4], a.m[7], a.m[2], a.m[5], a.m[8]}};
}

inline double trace(const Mat3& a) { return a.m[0] + a.m[4] + a.m[8]; }

inline double det(const Mat3& a) {
  return a.m[0] * (a.m[4] * a.m[8] - a.m[5] * a.m[7]) -
         a.m[1] * (a.m[3] * a.m[8] - a.m[5] * a.m[6]) +
         a.m[2] * (a.m[3] * a.m[7] - a.m[4] * a.m[6]);
}

//! Frobenius inner product <a, b> = tr(a^T b).
inline double inner(const Mat3& a, const Mat3& b) {
  double s = 0.0;
  for (int i = 0; i < 9; ++i) s += a.m[i] * b.m[i];
  return s;
}

inline double norm_sq(const Mat3& a) { return inner(a, a); }

inline double norm(const Mat3& a) { return std::sqrt(norm_sq(a)); }

inline Mat3 sym(const Mat3& a) { return 0.5 * (a + transpose(a)); }

inline Mat3 skew(const Mat3& a) { return 0.5 * (a - transpose(a)); }

//! Orthogonal split X = sym(X) + skew(X); |X|^2 = |sym(X)|^2 + |skew(X)|^2.
inline std::pair<Mat3, Mat3> sym_skew_split(const Mat3& a) {
  return {sym(a), skew(a)};
}

inline double max_abs(const Mat3& a) {
  double s = 0.0;
  for (int i = 0; i < 9; ++i) s = std::max(s, std::fabs(a.m[i]));
  return s;
}

inline bool is_finite(const Mat3& a) {
  for (int i = 0; i < 9; ++i)
    if (!std::isfinite(a.m[i])) return false;
  return true;
}

}  // namespace rpolar
