#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "rpolar/oracle.hpp"
#include "rpolar/planar.hpp"
#include "test_support.hpp"

using namespace rpolar;

namespace {

//! World matrix acting as the planar rotation by alpha inside the given plane.
Mat3 embedded_rotation(const OrientedPlane& plane, double alpha) {
  const Mat3 q = plane.frame.matrix();
  const double c = std::cos(alpha), s = std::sin(alpha);
  const Mat3 block{{c, -s, 0, s, c, 0, 0, 0, 1}};
  return q * block * transpose(q);
}

}  // namespace

TEST_CASE("adapted frame") {
  const OrientedPlane z = adapted_frame({0, 0, 1});
  CHECK(test_support::max_abs_diff(z.frame.matrix(), Mat3::identity()) < 1e-15);

  // for n = e2 the least aligned axis is e1, so u = e1 and v = n x u = -e3
  const OrientedPlane y = adapted_frame({0, 1, 0});
  const Mat3 want = Mat3::from_columns({1, 0, 0}, {0, 0, -1}, {0, 1, 0});
  CHECK(test_support::max_abs_diff(y.frame.matrix(), want) < 1e-15);

  // generic normals: orthonormal right-handed, last column is n
  std::mt19937_64 rng(501);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    const Vec3 n = normalized(Vec3{gauss(rng), gauss(rng), gauss(rng)});
    const OrientedPlane p = adapted_frame(n);
    const Mat3 q = p.frame.matrix();
    CHECK(test_support::max_abs_diff(transpose(q) * q, Mat3::identity()) < 1e-13);
    CHECK(norm(q.col(2) - n) < 1e-13);
    CHECK(det(q) == Catch::Approx(1.0).margin(1e-13));
  }

  CHECK_THROWS_AS(adapted_frame({0, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(adapted_frame({0, 0, 0}), std::invalid_argument);
  // a normal off by less than the tolerance is accepted
  CHECK_NOTHROW(adapted_frame({0, 0, 1.0 + 1e-10}));
}

TEST_CASE("planar block extraction") {
  const OrientedPlane z = adapted_frame({0, 0, 1});
  Mat3 l = Mat3::diagonal(2.0, 3.0, 7.0);
  l(0, 1) = 0.5;
  const Mat2 b = planar_block(l, z);
  CHECK(b(0, 0) == 2.0);
  CHECK(b(0, 1) == 0.5);
  CHECK(b(1, 0) == 0.0);
  CHECK(b(1, 1) == 3.0);
}

TEST_CASE("closed-form 2D polar factor") {
  const Mat2 l{{2, 1, 0, 1}};
  const std::optional<Mat2> r = polar2(l);
  REQUIRE(r.has_value());
  // frozen reference: rotation angle arctan(-1/3)
  CHECK(spin_angle(*r) == Catch::Approx(-0.32175055439664219).margin(1e-15));
  // proper planar rotation
  CHECK(det(*r) == Catch::Approx(1.0).margin(1e-14));
  CHECK((*r)(0, 0) == (*r)(1, 1));
  CHECK((*r)(0, 1) == -(*r)(1, 0));

  CHECK_FALSE(polar2(Mat2{{1, 0, 0, -1}}).has_value());
  CHECK_FALSE(polar2(Mat2{{1, 0, 0, 0}}).has_value());
  CHECK_FALSE(polar2(Mat2{{0, 0, 0, 0}}).has_value());
}

TEST_CASE("polar factor of a rotation is that rotation") {
  for (double alpha = -3.1; alpha < 3.15; alpha += 0.37) {
    const Mat2 rot = Mat2::rotation(alpha);
    const std::optional<Mat2> r = polar2(rot);
    REQUIRE(r.has_value());
    CHECK(std::fabs((*r)(0, 0) - rot(0, 0)) < 1e-15);
    CHECK(std::fabs((*r)(1, 0) - rot(1, 0)) < 1e-15);
  }
}

TEST_CASE("spin angle conventions") {
  CHECK(spin_angle(Mat2::identity()) == 0.0);
  // the half-turn maps to +pi regardless of the sign of the zero below
  CHECK(spin_angle(Mat2{{-1, 0, 0, -1}}) == kPi);
  Mat2 neg_zero{{-1.0, 0.0, -0.0, -1.0}};
  CHECK(spin_angle(neg_zero) == kPi);

  // exact antisymmetry
  for (double alpha : {0.3, 1.0, 2.5}) {
    CHECK(spin_angle(Mat2::rotation(alpha)) == -spin_angle(Mat2::rotation(-alpha)));
  }

  // agreement with the arccos form sign(r21) * arccos(r11)
  for (double alpha = -3.1; alpha < 3.15; alpha += 0.0137) {
    const Mat2 r = Mat2::rotation(alpha);
    const double via_acos = sign_pos(r(1, 0)) * std::acos(clamp(r(0, 0), -1.0, 1.0));
    CHECK(spin_angle(r) == Catch::Approx(via_acos).margin(1e-8));
  }
}

TEST_CASE("planar spin recovers embedded rotation angles") {
  const std::array<Vec3, 3> normals{Vec3{0, 0, 1}, Vec3{0, 1, 0},
                                    normalized(Vec3{1.0, 2.0, 3.0})};
  for (const Vec3& n : normals) {
    const OrientedPlane plane = adapted_frame(n);
    for (double alpha = -3.14; alpha < 3.1415; alpha += 0.01) {
      const Spin spin = planar_spin(embedded_rotation(plane, alpha), plane);
      REQUIRE_FALSE(spin.degenerate);
      CHECK(spin.angle == Catch::Approx(alpha).margin(1e-12));
    }
  }
}

TEST_CASE("planar spin flags non-orientable blocks") {
  const OrientedPlane z = adapted_frame({0, 0, 1});
  const Mat3 reflect = Mat3::diagonal(1.0, -1.0, 1.0);
  const Spin spin = planar_spin(reflect, z);
  CHECK(spin.degenerate);
  CHECK(spin.angle == 0.0);
}

TEST_CASE("planar spin agrees with the planar brute-force distance") {
  std::mt19937_64 rng(502);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  const OrientedPlane z = adapted_frame({0, 0, 1});
  int tested = 0;
  while (tested < 100) {
    Mat2 l{{uni(rng), uni(rng), uni(rng), uni(rng)}};
    if (det(l) <= 0.0) continue;
    ++tested;

    Mat3 world = Mat3::identity();
    world(0, 0) = l(0, 0);
    world(0, 1) = l(0, 1);
    world(1, 0) = l(1, 0);
    world(1, 1) = l(1, 1);

    const Spin spin = planar_spin(world, z);
    REQUIRE_FALSE(spin.degenerate);
    const PlanarOracleResult oracle = min_planar_distance(l);
    CHECK(spin.angle == Catch::Approx(oracle.angle).margin(1e-8));
  }
}

TEST_CASE("misorientation") {
  std::mt19937_64 rng(503);
  const Rotation3 a = test_support::random_rotation(rng);
  const Rotation3 b = test_support::random_rotation(rng);
  const Rotation3 m = misorientation(a, b);
  CHECK(test_support::max_abs_diff((m * a).matrix(), b.matrix()) < 1e-14);
  CHECK(geodesic_distance(misorientation(a, a), Rotation3::from_matrix(Mat3::identity())) <
        1e-7);
}
