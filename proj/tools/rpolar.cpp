// Command-line front end: polar/relaxed-polar decomposition reports, spin-map
// sections of the synthetic indentation benchmark, oracle verification runs
// and nearest-PSD projections.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse errors,
// 3 I/O failures.

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rpolar/rpolar.hpp"

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

rpolar::Mat3 read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open matrix file: " + path);
  rpolar::Mat3 m;
  for (double& v : m.m)
    if (!(in >> v)) throw InputFailure("matrix file must contain 9 reals (row-major): " + path);
  double extra;
  if (in >> extra) throw InputFailure("matrix file has trailing data: " + path);
  return m;
}

void print_matrix(std::ostream& os, const std::string& name, const rpolar::Mat3& m) {
  os << name << " =\n";
  for (int i = 0; i < 3; ++i) {
    os << " ";
    for (int j = 0; j < 3; ++j) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), " %12.9g", m(i, j));
      os << buf;
    }
    os << "\n";
  }
}

void append_matrix_columns(std::string& header, std::string& row, const std::string& prefix,
                           const rpolar::Mat3& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      header += ',' + prefix + '_' + std::to_string(i + 1) + std::to_string(j + 1);
      row += ',' + rpolar::format_double(m(i, j));
    }
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw IoFailure("cannot open output file: " + path);
  out << content;
  if (!out) throw IoFailure("write failed: " + path);
}

// ---------------------------------------------------------------- decompose

int cmd_decompose(const std::string& matrix_path, double mu, double mu_c,
                  const std::string& csv_path) {
  using namespace rpolar;
  const Mat3 f = read_matrix(matrix_path);
  if (det(f) <= 0.0) throw InputFailure("det F <= 0: input is not in GL+(3)");
  const Weights w(mu, mu_c);

  const PolarParts pp = polar_decompose(f);
  const SpectralFrame sf = spectral_frame(f);
  const MeanPlanarStretch mmp = mean_planar_stretch(f);
  const double energy_polar = shear_stretch_energy(pp.rotation, f, w);

  std::ostream& os = std::cout;
  print_matrix(os, "F", f);
  os << "det F = " << format_double(det(f)) << "\n";
  os << "sigma = (" << format_double(sf.sigma[0]) << ", " << format_double(sf.sigma[1]) << ", "
     << format_double(sf.sigma[2]) << ")\n";
  os << "u_mmp = " << format_double(mmp.stretch) << "   s_mmp = " << format_double(mmp.strain)
     << "\n";

  std::string header = "mu,mu_c,sigma1,sigma2,sigma3,u_mmp,s_mmp,regime,beta_hat,"
                       "energy_polar,energy_branch";
  std::string row = format_double(mu) + ',' + format_double(mu_c) + ',' +
                    format_double(sf.sigma[0]) + ',' + format_double(sf.sigma[1]) + ',' +
                    format_double(sf.sigma[2]) + ',' + format_double(mmp.stretch) + ',' +
                    format_double(mmp.strain) + ',';

  if (!w.non_classical()) {
    os << "weights: mu = " << mu << "  mu_c = " << mu_c << "  (classical parameter range)\n";
    os << "note: for mu_c >= mu the energy-minimizing rotation is the polar factor\n";
    print_matrix(os, "polar(F)", pp.rotation.matrix());
    print_matrix(os, "U", pp.stretch);
    os << "energy: polar = " << format_double(energy_polar) << "\n";
    row += "grioli,0," + format_double(energy_polar) + ',' + format_double(energy_polar);
    append_matrix_columns(header, row, "polar", pp.rotation.matrix());
    append_matrix_columns(header, row, "u", pp.stretch);
    append_matrix_columns(header, row, "rplus", pp.rotation.matrix());
    append_matrix_columns(header, row, "rminus", pp.rotation.matrix());
  } else {
    const ReductionData rd = reduction_data(w);
    const Regime regime = classify(f, w);
    const double sum = sf.sigma[0] + sf.sigma[1];
    const double beta_hat = sum <= rd.rho ? 0.0 : std::acos(rd.rho / sum);
    os << "weights: mu = " << mu << "  mu_c = " << mu_c << "  (lambda = " << format_double(rd.lambda)
       << ", rho = " << format_double(rd.rho) << ")\n";

    const bool branch_defined = beta_hat == 0.0 || !sf.near_degenerate;
    Rotation3 plus = pp.rotation, minus = pp.rotation;
    if (beta_hat > 0.0 && branch_defined) {
      const RelaxedPolarResult pair = relaxed_polar_pair(f, w);
      plus = pair.plus;
      minus = pair.minus;
    }
    const double energy_branch = shear_stretch_energy(plus, f, w);

    os << "regime: " << (branch_defined ? regime_name(regime) : "degenerate") << "\n";
    os << "beta_hat = " << format_double(beta_hat) << " rad  ("
       << format_double(beta_hat * 180.0 / kPi) << " deg)\n";
    print_matrix(os, "polar(F)", pp.rotation.matrix());
    print_matrix(os, "U", pp.stretch);
    if (branch_defined) {
      print_matrix(os, "rpolar+", plus.matrix());
      print_matrix(os, "rpolar-", minus.matrix());
      os << "energy: polar = " << format_double(energy_polar)
         << "   branches = " << format_double(energy_branch) << "\n";
    } else {
      os << "note: singular spectrum is not simple; branch rotations are undefined\n";
      os << "energy: polar = " << format_double(energy_polar) << "\n";
    }

    const double nan = std::numeric_limits<double>::quiet_NaN();
    row += std::string(branch_defined ? regime_name(regime) : "degenerate") + ',' +
           format_double(beta_hat) + ',' + format_double(energy_polar) + ',' +
           format_double(branch_defined ? energy_branch : nan);
    append_matrix_columns(header, row, "polar", pp.rotation.matrix());
    append_matrix_columns(header, row, "u", pp.stretch);
    const Mat3 nan_mat = nan * Mat3::identity();  // scalar product reaches every entry
    append_matrix_columns(header, row, "rplus", branch_defined ? plus.matrix() : nan_mat);
    append_matrix_columns(header, row, "rminus", branch_defined ? minus.matrix() : nan_mat);
  }

  const std::string csv = header + '\n' + row + '\n';
  if (csv_path.empty()) {
    os << "\ncsv:\n" << csv;
  } else {
    write_text(csv_path, csv);
  }
  return 0;
}

// -------------------------------------------------------------------- field

struct Section {
  rpolar::Vec3 normal;
  double offset = 0.0;
};

Section parse_section(const std::string& text) {
  if (text.size() < 3 || text[1] != '=')
    throw InputFailure("section must look like x=0.5, y=0.5 or z=0");
  rpolar::Vec3 n{};
  switch (text[0]) {
    case 'x': n.x = 1.0; break;
    case 'y': n.y = 1.0; break;
    case 'z': n.z = 1.0; break;
    default: throw InputFailure("section axis must be x, y or z");
  }
  size_t used = 0;
  double offset;
  try {
    offset = std::stod(text.substr(2), &used);
  } catch (const std::exception&) {
    throw InputFailure("cannot parse section offset: " + text);
  }
  if (used != text.size() - 2) throw InputFailure("trailing junk in section: " + text);
  if (std::fabs(offset) > 1.0) throw InputFailure("section offset must lie in [-1, 1]");
  return {n, offset};
}

int cmd_field(const std::string& section_text, int res, const std::string& rotation_name,
              double patch_x, double clamp_deg, double mu, double mu_c,
              const std::string& csv_path, const std::string& ppm_path) {
  using namespace rpolar;
  const Weights w(mu, mu_c);
  if (!w.non_classical())
    throw InputFailure("field requires the non-classical range mu > mu_c "
                       "(for mu_c >= mu the minimizer is polar everywhere)");
  if (clamp_deg <= 0.0) throw InputFailure("clamp-deg must be positive");

  RotationField field;
  if (rotation_name == "polar") field = RotationField::Polar;
  else if (rotation_name == "rpolar+") field = RotationField::RelaxedPlus;
  else if (rotation_name == "rpolar-") field = RotationField::RelaxedMinus;
  else if (rotation_name == "collage") field = RotationField::Collage;
  else throw InputFailure("rotation must be one of polar, rpolar+, rpolar-, collage");

  const Section sec = parse_section(section_text);
  GridSpec grid;
  grid.plane = adapted_frame(sec.normal);
  grid.offset = sec.offset;
  grid.nu = grid.nv = res;

  const std::vector<FieldSample> samples = sample_grid(grid, w, field, patch_x);

  {
    std::ofstream out(csv_path);
    if (!out) throw IoFailure("cannot open output file: " + csv_path);
    write_csv(out, samples);
    if (!out) throw IoFailure("write failed: " + csv_path);
  }
  if (!ppm_path.empty()) {
    std::ofstream out(ppm_path, std::ios::binary);
    if (!out) throw IoFailure("cannot open output file: " + ppm_path);
    write_ppm(out, samples, grid.nu, grid.nv, clamp_deg);
    if (!out) throw IoFailure("write failed: " + ppm_path);
  }

  int degenerate = 0;
  for (const FieldSample& s : samples)
    if (!s.spin_valid) ++degenerate;
  std::cout << "field: " << samples.size() << " samples (" << grid.nu << "x" << grid.nv
            << "), rotation = " << rotation_name << ", " << degenerate
            << " degenerate points\n";
  return 0;
}

// ------------------------------------------------------------------- verify

int cmd_verify(int count, unsigned long long seed, double mu, double mu_c) {
  using namespace rpolar;
  const Weights w(mu, mu_c);
  std::mt19937_64 rng(seed);

  double max_gap = -std::numeric_limits<double>::infinity();
  double max_geo = 0.0;
  Mat3 worst_gap_f, worst_geo_f;

  for (int i = 0; i < count; ++i) {
    const Mat3 f = random_gradient(rng);
    const OracleResult oracle = min_energy_so3(f, w);

    double closed_form, geo;
    if (w.non_classical()) {
      const RelaxedPolarResult pair = relaxed_polar_pair(f, w);
      closed_form = shear_stretch_energy(pair.plus, f, w);
      geo = std::min(geodesic_distance(oracle.minimizer, pair.plus),
                     geodesic_distance(oracle.minimizer, pair.minus));
    } else {
      const PolarParts pp = polar_decompose(f);
      closed_form = shear_stretch_energy(pp.rotation, f, w);
      geo = geodesic_distance(oracle.minimizer, pp.rotation);
    }
    const double gap = closed_form - oracle.value;
    if (gap > max_gap) {
      max_gap = gap;
      worst_gap_f = f;
    }
    if (geo > max_geo) {
      max_geo = geo;
      worst_geo_f = f;
    }
  }

  std::cout << "verify: count = " << count << ", seed = " << seed << ", mu = " << mu
            << ", mu_c = " << mu_c
            << (w.non_classical() ? " (branch closed form)" : " (polar, Grioli range)") << "\n";
  std::cout << "max energy gap (closed form - oracle): " << rpolar::format_double(max_gap)
            << "  (tolerance " << kOracleEnergyTol << ")\n";
  std::cout << "max angular deviation: " << rpolar::format_double(max_geo) << " rad  (tolerance "
            << kOracleAngleTol << ")\n";

  const bool ok = max_gap <= kOracleEnergyTol && max_geo <= kOracleAngleTol;
  if (!ok) {
    std::cout << "worst gap F:";
    for (double v : worst_gap_f.m) std::cout << ' ' << format_double(v);
    std::cout << "\nworst deviation F:";
    for (double v : worst_geo_f.m) std::cout << ' ' << format_double(v);
    std::cout << "\nFAIL\n";
    return kExitVerifyFailure;
  }
  std::cout << "PASS\n";
  return 0;
}

// ------------------------------------------------------------------ project

int cmd_project(const std::string& matrix_path) {
  using namespace rpolar;
  const Mat3 x = read_matrix(matrix_path);
  const PsdProjection proj = project_psd(x);

  print_matrix(std::cout, "X", x);
  print_matrix(std::cout, "pi(X)", proj.projection);
  std::cout << "residual |X - pi(X)| = " << format_double(proj.residual) << "\n";
  std::cout << "definiteness guaranteed (|X - 1| < 1): "
            << (is_definiteness_guaranteed(x) ? "yes" : "no") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed-form energy-minimizing rotations and micropolar kinematics"};
  app.require_subcommand(1);

  std::string matrix_path, csv_path, ppm_path;
  double mu = 1.0, mu_c = 0.0;

  CLI::App* dec = app.add_subcommand("decompose", "polar and relaxed-polar decomposition report");
  dec->add_option("--matrix", matrix_path, "file with 9 reals, row-major")->required();
  dec->add_option("--mu", mu, "shear modulus")->capture_default_str();
  dec->add_option("--mu-c", mu_c, "rotational couple modulus")->capture_default_str();
  dec->add_option("--csv", csv_path, "write the machine-readable row here instead of stdout");

  std::string section = "y=0.5", rotation = "polar";
  int res = 201;
  double patch_x = 0.0, clamp_deg = 8.0;
  CLI::App* fld = app.add_subcommand("field", "spin-map section of the indentation benchmark");
  fld->add_option("--section", section, "axis-aligned section plane, e.g. y=0.5")
      ->capture_default_str();
  fld->add_option("--res", res, "grid resolution per axis")
      ->check(CLI::Range(2, 4001))
      ->capture_default_str();
  fld->add_option("--rotation", rotation, "polar, rpolar+, rpolar- or collage")
      ->capture_default_str();
  fld->add_option("--patch-x", patch_x, "collage: plus branch left of this in-plane coordinate")
      ->capture_default_str();
  fld->add_option("--clamp-deg", clamp_deg, "color clamp in degrees")->capture_default_str();
  fld->add_option("--mu", mu, "shear modulus")->capture_default_str();
  fld->add_option("--mu-c", mu_c, "rotational couple modulus")->capture_default_str();
  fld->add_option("--csv", csv_path, "CSV output path")->required();
  fld->add_option("--ppm", ppm_path, "optional binary P6 spin map");

  int count = 100;
  unsigned long long seed = 1;
  CLI::App* ver = app.add_subcommand("verify", "closed form vs brute-force oracle on random F");
  ver->add_option("--count", count, "number of random gradients")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ver->add_option("--seed", seed, "RNG seed")->capture_default_str();
  ver->add_option("--mu", mu, "shear modulus")->capture_default_str();
  ver->add_option("--mu-c", mu_c, "rotational couple modulus")->capture_default_str();

  CLI::App* prj = app.add_subcommand("project", "nearest symmetric positive semidefinite matrix");
  prj->add_option("--matrix", matrix_path, "file with 9 reals, row-major")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (dec->parsed()) return cmd_decompose(matrix_path, mu, mu_c, csv_path);
    if (fld->parsed())
      return cmd_field(section, res, rotation, patch_x, clamp_deg, mu, mu_c, csv_path, ppm_path);
    if (ver->parsed()) return cmd_verify(count, seed, mu, mu_c);
    if (prj->parsed()) return cmd_project(matrix_path);
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const InputFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
