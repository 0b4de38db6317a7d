#pragma once

#include <algorithm>
#include <stdexcept>

#include "rpolar/eigen_sym.hpp"
#include "rpolar/mat3.hpp"
#include "rpolar/rotation.hpp"

namespace rpolar {

//! Gap threshold (relative to sigma_1) below which a singular spectrum is
//! treated as not simple.
constexpr double kDegeneracyGap = 1e-9;

//! Principal frame of the stretch U = sqrt(F^T F): singular values of F in
//! descending order and a proper rotation whose columns are the principal
//! directions. near_degenerate is set when a gap sigma_i - sigma_{i+1} falls
//! below kDegeneracyGap * sigma_1; consumers that need a simple spectrum
//! (relaxed_polar_pair) reject such frames, everything else may proceed.
struct SpectralFrame {
  std::array<double, 3> sigma{};
  Rotation3 frame;
  bool near_degenerate = false;
};

//! Polar decomposition F = rotation * stretch with stretch symmetric positive
//! definite.
struct PolarParts {
  Rotation3 rotation;
  Mat3 stretch;
};

//! Deterministic orientation of an eigenvector basis. Columns are ordered by
//! descending eigenvalue; each column's sign is fixed so its largest-magnitude
//! component is positive (ties: the first such component); the third column is
//! then flipped if needed so det = +1. The input only has to be orthonormal to
//! about 1e-9; the result is re-orthonormalized to full precision (which cannot
//! disturb the sign policy: the dominant component of a unit vector is >= 3^-1/2).
inline Rotation3 orient_eigenframe(const Mat3& vectors, const std::array<double, 3>& values) {
  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return values[i] > values[j] || (values[i] == values[j] && i < j);
  });

  std::array<Vec3, 3> q;
  for (int k = 0; k < 3; ++k) {
    Vec3 col = vectors.col(order[k]);
    int dominant = 0;
    for (int i = 1; i < 3; ++i)
      if (std::fabs(col[i]) > std::fabs(col[dominant])) dominant = i;
    if (col[dominant] < 0.0) col = -col;
    q[k] = col;
  }

  q[0] = normalized(q[0]);
  q[1] = normalized(q[1] - dot(q[1], q[0]) * q[0]);
  q[2] = cross(q[0], q[1]);  // equals the sign-fixed column up to the det flip
  return Rotation3::from_matrix(Mat3::from_columns(q[0], q[1], q[2]));
}

namespace detail {

//! Eigenvalues/-vectors of F^T F with the GL+(3) and positivity checks shared
//! by spectral_frame and polar_decompose.
inline SymEigen stretch_eigen(const Mat3& f) {
  if (!is_finite(f)) throw std::invalid_argument("spectral_frame: non-finite input");
  if (det(f) <= 0.0) throw std::invalid_argument("spectral_frame: det F <= 0, F is not in GL+(3)");
  SymEigen e = sym_eigen(transpose(f) * f);
  for (double lam : e.values)
    if (!(lam > 1e-14)) throw std::invalid_argument("spectral_frame: F is numerically singular");
  return e;
}

}  // namespace detail

inline SpectralFrame spectral_frame(const Mat3& f) {
  const SymEigen e = detail::stretch_eigen(f);
  SpectralFrame out;
  for (int i = 0; i < 3; ++i) out.sigma[i] = std::sqrt(e.values[i]);
  out.frame = orient_eigenframe(e.vectors, e.values);
  const double tol = kDegeneracyGap * out.sigma[0];
  out.near_degenerate =
      (out.sigma[0] - out.sigma[1] <= tol) || (out.sigma[1] - out.sigma[2] <= tol);
  return out;
}

//! U and U^-1 share the eigenbasis of F^T F, so both come from one spectral
//! synthesis; the rotation is F U^-1.
inline PolarParts polar_decompose(const Mat3& f) {
  const SymEigen e = detail::stretch_eigen(f);
  const Mat3& v = e.vectors;
  std::array<double, 3> sigma{};
  for (int i = 0; i < 3; ++i) sigma[i] = std::sqrt(e.values[i]);
  const Mat3 vt = transpose(v);
  const Mat3 u = v * Mat3::diagonal(sigma[0], sigma[1], sigma[2]) * vt;
  const Mat3 u_inv = v * Mat3::diagonal(1.0 / sigma[0], 1.0 / sigma[1], 1.0 / sigma[2]) * vt;
  return {Rotation3::from_matrix(f * u_inv), u};
}

}  // namespace rpolar
