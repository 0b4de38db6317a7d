#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

#include "rpolar/nanoindent.hpp"
#include "rpolar/planar.hpp"
#include "rpolar/relaxed_polar.hpp"

namespace rpolar {

enum class RotationField { Polar, RelaxedPlus, RelaxedMinus, Collage };

//! Planar sampling grid inside the closed cube [-1,1]^3. Points are
//! offset * n + u q1 + v q2 in the plane's adapted frame; rows iterate v
//! ascending (outer), columns u ascending (inner), which for a section with
//! normal e2 walks z from top to bottom, matching the image ordering.
struct GridSpec {
  OrientedPlane plane;
  double offset = 0.0;
  double u_min = -1.0, u_max = 1.0;
  double v_min = -1.0, v_max = 1.0;
  int nu = 201, nv = 201;
};

//! One grid point of the indentation benchmark. spin_deg is NaN (and
//! spin_valid false) where the requested rotation field or its planar spin is
//! undefined; degenerate marks points where an active relative rotation meets
//! a non-simple singular spectrum, the case the regime CSV column reports as
//! "degenerate".
struct FieldSample {
  Vec3 point;
  Vec3 deformed;
  Mat3 gradient;
  std::array<double, 3> sigma{};
  Regime regime = Regime::Classical;
  bool degenerate = false;
  double beta_hat = 0.0;
  double spin_deg = 0.0;
  bool spin_valid = false;
};

namespace detail {

inline void validate_grid(const GridSpec& g) {
  if (g.nu < 2 || g.nv < 2) throw std::invalid_argument("sample_grid: resolution must be >= 2");
  if (!(g.u_min < g.u_max) || !(g.v_min < g.v_max))
    throw std::invalid_argument("sample_grid: empty extent");
  for (double u : {g.u_min, g.u_max})
    for (double v : {g.v_min, g.v_max}) {
      const Vec3 p = g.offset * g.plane.normal + u * g.plane.frame.matrix().col(0) +
                     v * g.plane.frame.matrix().col(1);
      for (int i = 0; i < 3; ++i)
        if (std::fabs(p[i]) > 1.0 + 1e-12)
          throw std::invalid_argument("sample_grid: extent leaves the cube [-1,1]^3");
    }
}

}  // namespace detail

//! Samples the indentation benchmark over a grid and attaches the planar spin
//! of the requested rotation field about the section normal. patch_u only
//! matters for the collage field: plus branch for u < patch_u, minus branch
//! for u >= patch_u.
inline std::vector<FieldSample> sample_grid(const GridSpec& grid, const Weights& w,
                                            RotationField field, double patch_u = 0.0) {
  detail::validate_grid(grid);
  const ReductionData rd = reduction_data(w);
  const Vec3 qu = grid.plane.frame.matrix().col(0);
  const Vec3 qv = grid.plane.frame.matrix().col(1);
  const double nan = std::numeric_limits<double>::quiet_NaN();

  std::vector<FieldSample> out;
  out.reserve(static_cast<size_t>(grid.nu) * grid.nv);

  for (int iv = 0; iv < grid.nv; ++iv) {
    const double v = grid.v_min + (grid.v_max - grid.v_min) * iv / (grid.nv - 1);
    for (int iu = 0; iu < grid.nu; ++iu) {
      const double u = grid.u_min + (grid.u_max - grid.u_min) * iu / (grid.nu - 1);

      FieldSample s;
      s.point = grid.offset * grid.plane.normal + u * qu + v * qv;
      s.deformed = indent_deformation(s.point);
      s.gradient = indent_gradient(s.point);

      const SpectralFrame sf = spectral_frame(s.gradient);
      s.sigma = sf.sigma;
      const double sum = s.sigma[0] + s.sigma[1];
      s.regime = detail::classify_from_sum(sum, rd.rho);
      s.beta_hat = sum <= rd.rho ? 0.0 : std::acos(rd.rho / sum);

      RotationField want = field;
      if (field == RotationField::Collage)
        want = u < patch_u ? RotationField::RelaxedPlus : RotationField::RelaxedMinus;

      // The branches deviate from polar only when beta_hat > 0; only then does
      // a non-simple spectrum make them ill-defined.
      if (want != RotationField::Polar && s.beta_hat > 0.0 && sf.near_degenerate) {
        s.degenerate = true;
        s.spin_deg = nan;
        out.push_back(s);
        continue;
      }

      Rotation3 rot;
      if (want == RotationField::Polar || s.beta_hat == 0.0) {
        rot = polar_decompose(s.gradient).rotation;
      } else {
        const RelaxedPolarResult pair = relaxed_polar_pair(s.gradient, w);
        rot = want == RotationField::RelaxedPlus ? pair.plus : pair.minus;
      }

      const Spin spin = planar_spin(rot.matrix(), grid.plane);
      if (spin.degenerate) {
        s.spin_deg = nan;
      } else {
        s.spin_deg = spin.angle * (180.0 / kPi);
        s.spin_valid = true;
      }
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace rpolar
