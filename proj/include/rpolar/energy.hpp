#pragma once

#include <stdexcept>

#include "rpolar/kinematics.hpp"
#include "rpolar/mat3.hpp"
#include "rpolar/rotation.hpp"

namespace rpolar {

//! Cosserat shear-stretch weights. mu > 0 is the shear modulus, mu_c >= 0 the
//! rotational couple modulus. The interesting (non-classical) regime is
//! mu > mu_c; for mu_c >= mu the energy-minimizing rotation is the polar
//! factor (Grioli's theorem and its generalization).
struct Weights {
  double mu;
  double mu_c;

  Weights(double mu_, double mu_c_) : mu(mu_), mu_c(mu_c_) {
    if (!(mu > 0.0) || !(mu_c >= 0.0) || !std::isfinite(mu) || !std::isfinite(mu_c))
      throw std::invalid_argument("Weights: require mu > 0 and mu_c >= 0");
  }

  bool non_classical() const { return mu > mu_c; }
};

//! Parameter reduction for the non-classical range: lambda scales the
//! deformation gradient, rho is the singular radius separating the regimes.
struct ReductionData {
  double lambda;  // mu / (mu - mu_c)
  double rho;     // 2 mu / (mu - mu_c) = 2 lambda
};

inline ReductionData reduction_data(const Weights& w) {
  if (!w.non_classical())
    throw std::invalid_argument("reduction_data: classical parameter range (mu_c >= mu), reduction undefined");
  const double lambda = w.mu / (w.mu - w.mu_c);
  return {lambda, 2.0 * lambda};
}

//! F/lambda; minimizing the (mu, mu_c) energy for F is equivalent to
//! minimizing the (1, 0) energy for the rescaled gradient.
inline Mat3 rescale(const Mat3& f, const Weights& w) {
  const double lambda = reduction_data(w).lambda;
  Mat3 out = f;
  for (double& v : out.m) v /= lambda;
  return out;
}

//! W(R; F) = mu |sym(R^T F - 1)|^2 + mu_c |skew(R^T F - 1)|^2.
//! Precondition (unchecked, this is the oracle's hot path): det F > 0.
inline double shear_stretch_energy(const Rotation3& r, const Mat3& f, const Weights& w) {
  const Mat3 m = transpose(r.matrix()) * f;
  double sym_sq = 0.0, skew_sq = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double d = m(i, i) - 1.0;
    sym_sq += d * d;
    for (int j = i + 1; j < 3; ++j) {
      const double a = 0.5 * (m(i, j) + m(j, i));
      const double b = 0.5 * (m(i, j) - m(j, i));
      sym_sq += 2.0 * a * a;
      skew_sq += 2.0 * b * b;
    }
  }
  return w.mu * sym_sq + w.mu_c * skew_sq;
}

//! Maximal mean planar stretch u = (sigma_1 + sigma_2)/2 and the matching
//! strain s = u - 1.
struct MeanPlanarStretch {
  double stretch;
  double strain;
};

inline MeanPlanarStretch mean_planar_stretch(const Mat3& f) {
  const SymEigen e = detail::stretch_eigen(f);
  const double u = 0.5 * (std::sqrt(e.values[0]) + std::sqrt(e.values[1]));
  return {u, u - 1.0};
}

enum class Regime { Classical, NonClassical, Boundary };

namespace detail {

//! Regime from the sum of the two largest singular values, with a +-1e-12*rho
//! band around the singular radius classified as Boundary.
inline Regime classify_from_sum(double sigma_sum, double rho) {
  const double tol = 1e-12 * rho;
  if (sigma_sum < rho - tol) return Regime::Classical;
  if (sigma_sum > rho + tol) return Regime::NonClassical;
  return Regime::Boundary;
}

}  // namespace detail

//! Requires the non-classical parameter range mu > mu_c; for mu_c >= mu the
//! minimizer is polar(F) regardless of the spectrum (use polar_decompose).
inline Regime classify(const Mat3& f, const Weights& w) {
  const ReductionData rd = reduction_data(w);
  const SymEigen e = detail::stretch_eigen(f);
  return detail::classify_from_sum(std::sqrt(e.values[0]) + std::sqrt(e.values[1]), rd.rho);
}

inline const char* regime_name(Regime r) {
  switch (r) {
    case Regime::Classical: return "classical";
    case Regime::NonClassical: return "non-classical";
    default: return "boundary";
  }
}

}  // namespace rpolar
