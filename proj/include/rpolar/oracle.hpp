#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "rpolar/energy.hpp"
#include "rpolar/mat3.hpp"
#include "rpolar/rotation.hpp"

namespace rpolar {

//! Verification tolerances shared by the test suite and the verify command:
//! the closed form may not beat the oracle by more than kOracleEnergyTol, and
//! the oracle minimizer must sit within kOracleAngleTol of a closed-form
//! branch.
constexpr double kOracleEnergyTol = 1e-6;
constexpr double kOracleAngleTol = 1e-3;

//! Result of a brute-force search; value is the smallest energy seen and
//! resolution the final local grid spacing in radians.
struct OracleResult {
  Rotation3 minimizer;
  double value = 0.0;
  double resolution = 0.0;
};

struct PlanarOracleResult {
  double angle = 0.0;
  double value = 0.0;
  double resolution = 0.0;
};

namespace detail {

inline Vec3 fibonacci_sphere_point(int i, int n) {
  constexpr double kGoldenAngle = 2.399963229728653;  // 2*pi*(1 - 1/phi)
  const double z = 1.0 - 2.0 * (i + 0.5) / n;
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = kGoldenAngle * i;
  return {r * std::cos(phi), r * std::sin(phi), z};
}

}  // namespace detail

//! Global minimization of W(.; F) over SO(3) by exhaustive search, independent
//! of the closed-form construction. Coarse stage: coarse_n^2 Fibonacci-sphere
//! axes times coarse_n angles in (-pi, pi], ties broken by smaller |angle|,
//! then angle, then lexicographic axis. Refinement: greedy compass search in
//! rotation-vector space, halving the step refine_levels times. The default
//! depth leaves a final step of ~8e-9 rad so the returned value is converged
//! far below kOracleEnergyTol and re-runs with different coarse grids agree to
//! ~1e-12.
inline OracleResult min_energy_so3(const Mat3& f, const Weights& w, int coarse_n = 48,
                                   int refine_levels = 24) {
  if (coarse_n < 16) throw std::invalid_argument("min_energy_so3: require coarse_n >= 16");
  if (det(f) <= 0.0) throw std::invalid_argument("min_energy_so3: det F <= 0");

  const int n_axes = coarse_n * coarse_n;
  double best_value = 0.0;
  double best_angle = 0.0;
  Vec3 best_axis{0.0, 0.0, 1.0};
  bool first = true;

  for (int i = 0; i < n_axes; ++i) {
    const Vec3 axis = detail::fibonacci_sphere_point(i, n_axes);
    for (int j = 0; j < coarse_n; ++j) {
      const double angle = -kPi + 2.0 * kPi * (j + 1) / coarse_n;
      const double value =
          shear_stretch_energy(Rotation3::from_unit_axis_angle(axis, angle), f, w);
      bool better = first || value < best_value;
      if (!better && value == best_value) {
        if (std::fabs(angle) != std::fabs(best_angle))
          better = std::fabs(angle) < std::fabs(best_angle);
        else if (angle != best_angle)
          better = angle < best_angle;
        else
          better = axis.x < best_axis.x ||
                   (axis.x == best_axis.x &&
                    (axis.y < best_axis.y || (axis.y == best_axis.y && axis.z < best_axis.z)));
      }
      if (better) {
        first = false;
        best_value = value;
        best_angle = angle;
        best_axis = axis;
      }
    }
  }

  Vec3 v = best_angle * best_axis;
  double h = 2.0 * kPi / coarse_n;
  for (int level = 0; level < refine_levels; ++level) {
    for (bool moved = true; moved;) {
      moved = false;
      for (int d = 0; d < 3; ++d) {
        for (double step : {h, -h}) {
          Vec3 cand = v;
          cand[d] += step;
          const double value =
              shear_stretch_energy(Rotation3::from_rotation_vector(cand), f, w);
          if (value < best_value) {
            best_value = value;
            v = cand;
            moved = true;
          }
        }
      }
    }
    h *= 0.5;
  }

  return {Rotation3::from_rotation_vector(v), best_value, h};
}

//! Nearest planar rotation to a 2x2 block by scanning |L - R(alpha)|^2 on a
//! uniform grid (n_samples >= 360) and golden-section refinement of the best
//! cell down to 1e-10 rad.
inline PlanarOracleResult min_planar_distance(const Mat2& l, int n_samples = 720) {
  if (n_samples < 360) throw std::invalid_argument("min_planar_distance: require n_samples >= 360");

  // The objective is evaluated in extended precision: near the minimum the
  // variation between neighboring candidates drops below double rounding of
  // the O(1) distance value, which would let the bracket drift by ~1e-8 rad.
  const auto dist = [&l](double alpha) -> long double {
    const long double c = std::cos(static_cast<long double>(alpha));
    const long double s = std::sin(static_cast<long double>(alpha));
    const long double d00 = static_cast<long double>(l(0, 0)) - c;
    const long double d01 = static_cast<long double>(l(0, 1)) + s;
    const long double d10 = static_cast<long double>(l(1, 0)) - s;
    const long double d11 = static_cast<long double>(l(1, 1)) - c;
    return d00 * d00 + d01 * d01 + d10 * d10 + d11 * d11;
  };

  double best_alpha = 0.0;
  long double best_value = 0.0;
  bool first = true;
  for (int j = 0; j < n_samples; ++j) {
    const double alpha = -kPi + 2.0 * kPi * (j + 1) / n_samples;
    const long double value = dist(alpha);
    if (first || value < best_value ||
        (value == best_value && std::fabs(alpha) < std::fabs(best_alpha))) {
      first = false;
      best_value = value;
      best_alpha = alpha;
    }
  }

  constexpr double kTol = 1e-10;
  constexpr double kInvPhi = 0.6180339887498949;
  double a = best_alpha - 2.0 * kPi / n_samples;
  double b = best_alpha + 2.0 * kPi / n_samples;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  long double fc = dist(c), fd = dist(d);
  while (b - a > kTol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = dist(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = dist(d);
    }
  }

  double alpha = 0.5 * (a + b);
  if (alpha > kPi) alpha -= 2.0 * kPi;
  if (alpha <= -kPi) alpha += 2.0 * kPi;
  return {alpha, static_cast<double>(dist(alpha)), kTol};
}

//! Seeded corpus generator for the verification suites: F = R1 diag(sigma) R2^T
//! with Haar-random rotations and singular values uniform in
//! [sigma_min, sigma_max], resampled until consecutive gaps exceed min_gap.
inline Mat3 random_gradient(std::mt19937_64& rng, double sigma_min = 0.2,
                            double sigma_max = 5.0, double min_gap = 0.15) {
  std::uniform_real_distribution<double> uni(sigma_min, sigma_max);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const auto haar_rotation = [&]() {
    // normalized Gaussian quaternion
    double q[4];
    double nsq = 0.0;
    do {
      nsq = 0.0;
      for (double& qi : q) {
        qi = gauss(rng);
        nsq += qi * qi;
      }
    } while (nsq < 1e-12);
    const double inv = 1.0 / std::sqrt(nsq);
    const double w = q[0] * inv, x = q[1] * inv, y = q[2] * inv, z = q[3] * inv;
    Mat3 r;
    r(0, 0) = 1 - 2 * (y * y + z * z);
    r(0, 1) = 2 * (x * y - w * z);
    r(0, 2) = 2 * (x * z + w * y);
    r(1, 0) = 2 * (x * y + w * z);
    r(1, 1) = 1 - 2 * (x * x + z * z);
    r(1, 2) = 2 * (y * z - w * x);
    r(2, 0) = 2 * (x * z - w * y);
    r(2, 1) = 2 * (y * z + w * x);
    r(2, 2) = 1 - 2 * (x * x + y * y);
    return r;
  };

  std::array<double, 3> s{};
  for (;;) {
    for (double& v : s) v = uni(rng);
    std::sort(s.begin(), s.end(), std::greater<>());
    if (s[0] - s[1] > min_gap && s[1] - s[2] > min_gap) break;
  }
  // draw in named statements: evaluation order inside one expression would be
  // compiler-dependent and the corpus must be reproducible from the seed alone
  const Mat3 left = haar_rotation();
  const Mat3 right = haar_rotation();
  return left * Mat3::diagonal(s[0], s[1], s[2]) * transpose(right);
}

}  // namespace rpolar
