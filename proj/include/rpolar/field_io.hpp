#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "rpolar/field.hpp"

namespace rpolar {

//! Shortest representation that round-trips a double exactly.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

//! Regime vocabulary of the CSV: boundary points behave classically
//! (beta_hat = 0) and are reported as such; "degenerate" marks points where
//! the requested branch rotation was not constructible.
inline const char* csv_regime(const FieldSample& s) {
  if (s.degenerate) return "degenerate";
  return s.regime == Regime::NonClassical ? "non-classical" : "classical";
}

//! One row per sample in grid order. Floats carry 17 significant digits so
//! parsing the file reproduces the in-memory values bit for bit.
inline void write_csv(std::ostream& os, const std::vector<FieldSample>& samples) {
  os << "# spin_deg is the planar spin about the section normal in degrees; "
        "beta_hat is the relative rotation angle in radians\n";
  os << "x,y,z,sigma1,sigma2,sigma3,regime,beta_hat,spin_deg\n";
  for (const FieldSample& s : samples) {
    os << format_double(s.point.x) << ',' << format_double(s.point.y) << ','
       << format_double(s.point.z) << ',' << format_double(s.sigma[0]) << ','
       << format_double(s.sigma[1]) << ',' << format_double(s.sigma[2]) << ','
       << csv_regime(s) << ',' << format_double(s.beta_hat) << ','
       << format_double(s.spin_deg) << '\n';
  }
}

//! Diverging blue-white-red color for a spin clamped to +-clamp_deg: exact
//! white at 0, saturated blue/red at the clamp, red minus blue channel equal
//! to 255 * spin/clamp throughout (monotone in the spin). Invalid spins render
//! mid-gray.
struct Rgb {
  unsigned char r, g, b;
};

inline Rgb spin_color(double spin_deg, bool valid, double clamp_deg) {
  if (!valid) return {128, 128, 128};
  const double t = clamp(spin_deg / clamp_deg, -1.0, 1.0);
  const int depth = static_cast<int>(std::lround(255.0 * std::fabs(t)));
  const auto faded = static_cast<unsigned char>(255 - depth);
  if (t >= 0.0) return {255, faded, faded};
  return {faded, faded, 255};
}

//! Binary P6 image of the spin field; pixels stream in sample order, which is
//! the image's row-major top-down order for sections built by sample_grid.
inline void write_ppm(std::ostream& os, const std::vector<FieldSample>& samples, int width,
                      int height, double clamp_deg) {
  os << "P6\n" << width << ' ' << height << "\n255\n";
  for (const FieldSample& s : samples) {
    const Rgb c = spin_color(s.spin_deg, s.spin_valid, clamp_deg);
    os.put(static_cast<char>(c.r));
    os.put(static_cast<char>(c.g));
    os.put(static_cast<char>(c.b));
  }
}

}  // namespace rpolar
