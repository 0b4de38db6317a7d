#pragma once

#include "rpolar/eigen_sym.hpp"
#include "rpolar/mat3.hpp"
#include "rpolar/rotation.hpp"

namespace rpolar {

//! Nearest (Frobenius) symmetric positive semidefinite matrix and the
//! distance to it: residual^2 = |skew(X)|^2 + sum_i min(lambda_i, 0)^2 over
//! the eigenvalues of sym(X).
struct PsdProjection {
  Mat3 projection;
  double residual = 0.0;
};

//! Eigen-clamp form of the projection: drop skew(X), clamp the negative
//! eigenvalues of sym(X) to zero.
inline PsdProjection project_psd(const Mat3& x) {
  const SymEigen e = sym_eigen(sym(x));
  const Mat3 clamped = Mat3::diagonal(std::max(e.values[0], 0.0), std::max(e.values[1], 0.0),
                                      std::max(e.values[2], 0.0));
  PsdProjection out;
  out.projection = e.vectors * clamped * transpose(e.vectors);
  out.residual = norm(x - out.projection);
  return out;
}

//! Sufficient condition |X - 1| < 1 under which sym(X) is already positive
//! definite and the projection reduces to dropping the skew part.
inline bool is_definiteness_guaranteed(const Mat3& x) {
  return norm(x - Mat3::identity()) < 1.0;
}

//! PSD approximation of the relative stretch R^T F, e.g. with R an
//! experimentally measured lattice rotation and F the macroscopic gradient.
inline PsdProjection approx_plastic_stretch(const Rotation3& r, const Mat3& f) {
  if (det(f) <= 0.0)
    throw std::invalid_argument("approx_plastic_stretch: det F <= 0, F is not in GL+(3)");
  return project_psd(transpose(r.matrix()) * f);
}

}  // namespace rpolar
