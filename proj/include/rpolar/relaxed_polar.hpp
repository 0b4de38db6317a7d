#pragma once

#include <stdexcept>

#include "rpolar/energy.hpp"
#include "rpolar/kinematics.hpp"

namespace rpolar {

//! Both energy-minimizing rotations, the relative rotation angle and the data
//! they were built from. In the classical regime plus == minus == polar.
//!
//! Note on frame/sigma: the pair for general non-classical weights is computed
//! by reduction, i.e. on the rescaled gradient F/lambda, so the frame member
//! carries the singular values of F/lambda (identical to those of F when
//! mu_c = 0). The principal directions are unaffected by the scaling.
struct RelaxedPolarResult {
  Rotation3 plus;
  Rotation3 minus;
  double beta_hat = 0.0;  // relative rotation angle, >= 0
  Regime regime = Regime::Classical;
  SpectralFrame frame;
  Rotation3 polar;
};

//! Plane of maximal stretch: principal directions of the two largest singular
//! values, their polar-rotated images, and the axis (q3) the optimal relative
//! rotation turns about.
struct StretchPlane {
  Vec3 q1, q2, q3;
  Vec3 deformed_q1, deformed_q2;
};

//! Optimal relative rotation angle: 0 while sigma_1 + sigma_2 <= rho, then
//! arccos(rho / (sigma_1 + sigma_2)). Continuous at the boundary and
//! increasing toward pi/2 as the stretch grows.
inline double optimal_angle(double sigma1, double sigma2, const Weights& w) {
  if (!(sigma1 >= sigma2) || !(sigma2 > 0.0))
    throw std::invalid_argument("optimal_angle: require sigma1 >= sigma2 > 0");
  const double rho = reduction_data(w).rho;
  const double sum = sigma1 + sigma2;
  if (sum <= rho) return 0.0;
  return std::acos(rho / sum);
}

//! Rotation by beta about e3.
inline Rotation3 relative_rotation(double beta) {
  if (!(std::fabs(beta) <= kPi))
    throw std::invalid_argument("relative_rotation: require |beta| <= pi");
  return Rotation3::from_unit_axis_angle(Vec3{0.0, 0.0, 1.0}, beta);
}

namespace detail {

//! The (mu, mu_c) = (1, 0) algorithm. General weights reduce to this on the
//! rescaled gradient.
inline RelaxedPolarResult relaxed_polar_reduced(const Mat3& f) {
  RelaxedPolarResult out;
  out.frame = spectral_frame(f);
  if (out.frame.near_degenerate)
    throw std::invalid_argument("relaxed_polar_pair: spectrum not simple");

  const std::array<double, 3>& s = out.frame.sigma;
  out.regime = classify_from_sum(s[0] + s[1], 2.0);

  const Rotation3& q = out.frame.frame;
  const Mat3 u_inv = q.matrix() *
                     Mat3::diagonal(1.0 / s[0], 1.0 / s[1], 1.0 / s[2]) *
                     transpose(q.matrix());
  out.polar = Rotation3::from_matrix(f * u_inv);

  const double sum = s[0] + s[1];
  out.beta_hat = sum <= 2.0 ? 0.0 : std::acos(2.0 / sum);

  // Branch signs follow the closed-form algorithm: the plus branch applies the
  // relative rotation by -beta_hat about q3, the minus branch by +beta_hat.
  const Rotation3 qt = q.transposed();
  out.plus = out.polar * q * relative_rotation(-out.beta_hat) * qt;
  out.minus = out.polar * q * relative_rotation(out.beta_hat) * qt;
  return out;
}

}  // namespace detail

//! Closed-form minimizers of W(R; F) = mu |sym(R^T F - 1)|^2
//! + mu_c |skew(R^T F - 1)|^2 over SO(3), for the non-classical range
//! mu > mu_c. Throws for mu_c >= mu (the minimizer is then polar(F), see
//! polar_decompose) and for gradients whose singular spectrum is not simple.
inline RelaxedPolarResult relaxed_polar_pair(const Mat3& f, const Weights& w) {
  if (!w.non_classical())
    throw std::invalid_argument(
        "relaxed_polar_pair: classical parameter range (mu_c >= mu), minimizer is polar(F)");
  return detail::relaxed_polar_reduced(rescale(f, w));
}

inline StretchPlane stretch_plane(const Mat3& f) {
  const SpectralFrame sf = spectral_frame(f);
  if (sf.near_degenerate)
    throw std::invalid_argument("stretch_plane: spectrum not simple");
  const PolarParts pp = polar_decompose(f);
  StretchPlane out;
  out.q1 = sf.frame.matrix().col(0);
  out.q2 = sf.frame.matrix().col(1);
  out.q3 = sf.frame.matrix().col(2);
  out.deformed_q1 = pp.rotation * out.q1;
  out.deformed_q2 = pp.rotation * out.q2;
  return out;
}

}  // namespace rpolar
