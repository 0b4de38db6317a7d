#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "rpolar/energy.hpp"
#include "test_support.hpp"

using namespace rpolar;

TEST_CASE("weights validation") {
  CHECK_NOTHROW(Weights(1.0, 0.0));
  CHECK_NOTHROW(Weights(2.0, 3.0));
  CHECK_THROWS_AS(Weights(0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Weights(-1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Weights(1.0, -0.5), std::invalid_argument);

  CHECK(Weights(1.0, 0.5).non_classical());
  CHECK_FALSE(Weights(1.0, 1.0).non_classical());
  CHECK_FALSE(Weights(1.0, 2.0).non_classical());
}

TEST_CASE("reduction data") {
  const ReductionData a = reduction_data(Weights(1.0, 0.0));
  CHECK(a.lambda == 1.0);
  CHECK(a.rho == 2.0);

  const ReductionData b = reduction_data(Weights(1.0, 0.5));
  CHECK(b.lambda == 2.0);
  CHECK(b.rho == 4.0);

  const ReductionData c = reduction_data(Weights(3.0, 1.0));
  CHECK(c.lambda == 1.5);
  CHECK(c.rho == 3.0);

  CHECK_THROWS_AS(reduction_data(Weights(1.0, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(reduction_data(Weights(1.0, 2.0)), std::invalid_argument);
}

TEST_CASE("rescale divides by lambda") {
  const Mat3 f = Mat3::diagonal(3.0, 2.0, 1.0);
  const Mat3 g = rescale(f, Weights(1.0, 0.5));  // lambda = 2
  CHECK(g(0, 0) == 1.5);
  CHECK(g(1, 1) == 1.0);
  CHECK(g(2, 2) == 0.5);
  // lambda = 1 must be the identity map, bitwise
  CHECK(test_support::max_abs_diff(rescale(f, Weights(1.0, 0.0)), f) == 0.0);
}

TEST_CASE("energy at reference states") {
  const Rotation3 id = Rotation3::from_matrix(Mat3::identity());
  const Mat3 f = Mat3::diagonal(3.0, 2.0, 1.0);

  // R^T F - 1 = diag(2, 1, 0), symmetric
  CHECK(shear_stretch_energy(id, f, Weights(1.0, 0.0)) == 5.0);
  CHECK(shear_stretch_energy(id, f, Weights(1.0, 0.5)) == 5.0);
  CHECK(shear_stretch_energy(id, f, Weights(2.0, 0.0)) == 10.0);

  // W(R; R) = 0 for any rotation
  std::mt19937_64 rng(201);
  const Rotation3 r = test_support::random_rotation(rng);
  CHECK(shear_stretch_energy(r, r.matrix(), Weights(1.5, 0.7)) < 1e-28);
}

TEST_CASE("energy is nonnegative and detects the sym/skew split") {
  std::mt19937_64 rng(202);
  const Weights w(2.0, 0.5);
  for (int k = 0; k < 50; ++k) {
    const Mat3 f = random_gradient(rng);
    const Rotation3 r = test_support::random_rotation(rng);
    const double e = shear_stretch_energy(r, f, w);
    CHECK(e >= 0.0);

    // direct evaluation of the definition
    const Mat3 m = transpose(r.matrix()) * f - Mat3::identity();
    const double want = w.mu * norm_sq(sym(m)) + w.mu_c * norm_sq(skew(m));
    CHECK(e == Catch::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("energy minimization commutes with the parameter reduction") {
  // argmin over a finite rotation sample is invariant under
  // (F, w) -> (F/lambda, (1,0)); the minimum values differ only affinely.
  std::mt19937_64 rng(203);
  const Weights w(2.0, 0.5);
  std::vector<Rotation3> sample;
  for (int k = 0; k < 200; ++k) sample.push_back(test_support::random_rotation(rng));

  for (int trial = 0; trial < 3; ++trial) {
    const Mat3 f = random_gradient(rng);
    const Mat3 g = rescale(f, w);
    int best_full = 0, best_reduced = 0;
    for (int k = 1; k < static_cast<int>(sample.size()); ++k) {
      if (shear_stretch_energy(sample[k], f, w) <
          shear_stretch_energy(sample[best_full], f, w))
        best_full = k;
      if (shear_stretch_energy(sample[k], g, Weights(1.0, 0.0)) <
          shear_stretch_energy(sample[best_reduced], g, Weights(1.0, 0.0)))
        best_reduced = k;
    }
    CHECK(best_full == best_reduced);
  }
}

TEST_CASE("mean planar stretch") {
  const MeanPlanarStretch mps = mean_planar_stretch(Mat3::diagonal(3.0, 2.0, 1.0));
  CHECK(mps.stretch == Catch::Approx(2.5).margin(1e-13));
  CHECK(mps.strain == Catch::Approx(1.5).margin(1e-13));

  std::mt19937_64 rng(204);
  const Rotation3 r = test_support::random_rotation(rng);
  const MeanPlanarStretch rigid = mean_planar_stretch(r.matrix());
  CHECK(rigid.stretch == Catch::Approx(1.0).margin(1e-9));
  CHECK(rigid.strain == Catch::Approx(0.0).margin(1e-9));
}

TEST_CASE("regime classification") {
  const Weights w(1.0, 0.0);  // rho = 2
  CHECK(classify(Mat3::diagonal(0.9, 0.8, 0.7), w) == Regime::Classical);
  CHECK(classify(Mat3::diagonal(3.0, 2.0, 1.0), w) == Regime::NonClassical);
  // sigma_1 + sigma_2 = 1.5 + 0.5 = 2 exactly
  CHECK(classify(Mat3::diagonal(1.5, 0.5, 0.3), w) == Regime::Boundary);

  // rho scales with the weights: same F, different verdict
  CHECK(classify(Mat3::diagonal(3.0, 2.0, 1.0), Weights(1.0, 0.5)) == Regime::NonClassical);
  CHECK(classify(Mat3::diagonal(3.0, 2.0, 1.0), Weights(1.0, 0.7)) == Regime::Classical);

  CHECK_THROWS_AS(classify(Mat3::identity(), Weights(1.0, 1.0)), std::invalid_argument);

  CHECK(regime_name(Regime::Classical) == std::string("classical"));
  CHECK(regime_name(Regime::NonClassical) == std::string("non-classical"));
  CHECK(regime_name(Regime::Boundary) == std::string("boundary"));
}

TEST_CASE("boundary band width") {
  // just inside the +-1e-12 * rho band
  CHECK(detail::classify_from_sum(2.0 * (1.0 + 5e-13), 2.0) == Regime::Boundary);
  CHECK(detail::classify_from_sum(2.0 * (1.0 - 5e-13), 2.0) == Regime::Boundary);
  // just outside
  CHECK(detail::classify_from_sum(2.0 * (1.0 + 5e-12), 2.0) == Regime::NonClassical);
  CHECK(detail::classify_from_sum(2.0 * (1.0 - 5e-12), 2.0) == Regime::Classical);
}
