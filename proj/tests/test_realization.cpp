#include <doctest.h>

#include <cmath>

#include "fan/cones.hpp"
#include "fan/kernels.hpp"
#include "fan/quadrature.hpp"
#include "fan/realization.hpp"
#include "fan/rng.hpp"
#include "fan/transforms.hpp"

using namespace fan;

TEST_CASE("resolvent evaluation in the one-variable unit case") {
  RealizationData r;
  r.form = RealizationForm::SchurF4;
  r.dim = 1;
  r.space_dim = 1;
  r.blocks.push_back({MultiIndex({1}), Eigen::MatrixXcd::Constant(1, 1, 1.0)});
  r.state = Eigen::VectorXcd::Constant(1, 1.0);
  r.validate();
  for (double x : {0.3, -0.5, 0.8}) {
    CHECK(realization_eval(r, {Complex(x)}).real() ==
          doctest::Approx((1.0 + x) / (1.0 - x)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(realization_eval(r, {Complex(1.0)}), std::domain_error);

  // Zero state vector leaves only the imaginary offset.
  r.state(0) = 0.0;
  r.t = 0.75;
  CHECK(realization_eval(r, {Complex(0.4)}).imag() == doctest::Approx(0.75));
  CHECK(realization_eval(r, {Complex(0.4)}).real() == doctest::Approx(0.0));
}

TEST_CASE("multiplication model reproduces the Herglotz transform") {
  Rng rng(61);
  for (int n : {1, 2, 3}) {
    DiscreteMeasure mu(n);
    const int atoms = 1 + static_cast<int>(rng.uniform(0.0, 9.0));
    for (int k = 0; k < atoms; ++k) mu.add_atom(rng.unit_vector(n), rng.uniform(0.1, 1.0));
    const RealizationData r = build_normal_h9(mu, 0.3);
    CHECK(r.form == RealizationForm::NormalH9);
    for (int trial = 0; trial < 50; ++trial) {
      const auto z = rng.ball_point(n, 0.6);
      const Complex expect = herglotz_measure(mu, z) + Complex(0.0, 0.3);
      CHECK(std::abs(realization_eval(r, z) - expect) < 1e-12);
    }
  }
}

TEST_CASE("kernel-transform resolvent model: single atom") {
  DiscreteMeasure mu(2);
  mu.add_atom({Complex(1.0), Complex(0.0)}, 1.0);
  const RealizationData r = build_f2_realization(mu, 0.0);
  CHECK(r.form == RealizationForm::OpF5);
  Rng rng(67);
  for (int trial = 0; trial < 50; ++trial) {
    const auto z = rng.ball_point(2, 0.8);
    const Complex expect = szego_herglotz_measure(mu, 0.0, z);
    CHECK(std::abs(realization_eval(r, z) - expect) < 1e-10);
  }
  // A lone boundary atom is not a representing measure for a positive
  // function, and the sampled factorization Gram records that.
  CHECK(r.isometry_defect > 1e-3);
}

TEST_CASE("kernel-transform resolvent model: random measures and dimensions") {
  Rng rng(71);
  for (int trial = 0; trial < 9; ++trial) {
    const int n = 1 + trial % 3;
    const int atoms = 1 + trial / 3;
    DiscreteMeasure mu(n);
    for (int k = 0; k < atoms; ++k) mu.add_atom(rng.unit_vector(n), rng.uniform(0.1, 1.0));
    const double t = rng.uniform(-1.0, 1.0);
    const RealizationData r = build_f2_realization(mu, t);
    double worst = 0.0;
    for (const auto& z : quasi_ball_points(n, 50, 0.8))
      worst = std::max(worst, std::abs(realization_eval(r, z) - szego_herglotz_measure(mu, t, z)));
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("empty measure gives the constant imaginary offset") {
  const DiscreteMeasure empty(2);
  const RealizationData r = build_f2_realization(empty, 0.6);
  CHECK(realization_eval(r, {Complex(0.2), Complex(0.1)}).imag() == doctest::Approx(0.6));
  CHECK(realization_eval(r, {Complex(0.2), Complex(0.1)}).real() == doctest::Approx(0.0));
}

TEST_CASE("one-variable measures factor exactly, and the Gram defect is tiny") {
  // On the circle every positive measure represents a positive-real-part
  // function, so the sampled factorization Gram must be PSD.
  Rng rng(73);
  DiscreteMeasure mu(1);
  for (int k = 0; k < 3; ++k) mu.add_atom(rng.unit_vector(1), rng.uniform(0.1, 1.0));
  const RealizationData r = build_f2_realization(mu, 0.0);
  CHECK(r.isometry_defect < 1e-10);
}

TEST_CASE("factorization defect separates representing-type measures from atoms") {
  // A boundary rule that nearly represents the constant has a tiny sampled
  // Gram defect; a lone atom does not (several orders of magnitude apart).
  const DiscreteMeasure sigma = sphere_quadrature(2, 4);
  const RealizationData good = build_f2_realization(sigma, 0.0);
  CHECK(good.isometry_defect < 1e-3);

  DiscreteMeasure atom(2);
  atom.add_atom({Complex(1.0), Complex(0.0)}, 1.0);
  const RealizationData bad = build_f2_realization(atom, 0.0);
  CHECK(bad.isometry_defect > 100.0 * good.isometry_defect);
}

TEST_CASE("truncated creation blocks are isometric below the cap") {
  const auto blocks = truncated_creation_blocks(2, 4);
  REQUIRE(blocks.size() == 2);
  const int total = word_space_dim(2, 4);
  CHECK(total == 31);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Eigen::MatrixXcd prod = blocks[static_cast<size_t>(i)].matrix.adjoint() *
                                    blocks[static_cast<size_t>(j)].matrix;
      if (i != j) {
        CHECK(prod.norm() < 1e-14);
      } else {
        // V_i* V_i = I - (projection onto the top word level).
        const int top_level = 16;
        CHECK((prod - Eigen::MatrixXcd::Identity(total, total)).norm() ==
              doctest::Approx(std::sqrt(static_cast<double>(top_level))).epsilon(1e-12));
      }
    }
  }

  // A creation-block realization produces a kernel-positive function.
  RealizationData r;
  r.form = RealizationForm::SchurF4;
  r.dim = 2;
  r.space_dim = total;
  r.blocks = blocks;
  r.state = Eigen::VectorXcd::Zero(total);
  r.state(0) = 0.8;
  r.state(1) = 0.4;
  r.validate();
  TruncatedSeries f(2, 4);
  // Sample the realization into a Gram test.
  std::vector<std::vector<Complex>> pts = quasi_ball_points(2, 15, 0.35);
  Eigen::MatrixXcd gram(15, 15);
  std::vector<Complex> values;
  for (const auto& z : pts) values.push_back(realization_eval(r, z));
  for (int i = 0; i < 15; ++i)
    for (int j = 0; j < 15; ++j)
      gram(i, j) = (values[static_cast<size_t>(i)] + std::conj(values[static_cast<size_t>(j)])) *
                   kernel_eval(KernelKind::Drury, pts[static_cast<size_t>(i)],
                               pts[static_cast<size_t>(j)]);
  CHECK(psd_check(gram, 1e-8).min_eigenvalue > -1e-7);
}

TEST_CASE("realization validation rejects malformed data") {
  RealizationData r;
  r.form = RealizationForm::NormalH9;
  r.dim = 2;
  r.space_dim = 2;
  r.state = Eigen::VectorXcd::Zero(2);
  Eigen::MatrixXcd not_diag(2, 2);
  not_diag << 1.0, 0.5, 0.0, 1.0;
  r.blocks.push_back({MultiIndex({1, 0}), not_diag});
  CHECK_THROWS_AS(r.validate(), std::invalid_argument);

  RealizationData s;
  s.form = RealizationForm::OpF5;
  s.dim = 2;
  s.space_dim = 1;
  s.state = Eigen::VectorXcd::Zero(1);
  s.blocks.push_back({MultiIndex({1, 1}), Eigen::MatrixXcd::Identity(1, 1)});
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);  // even degree
}
