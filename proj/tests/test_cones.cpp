#include <doctest.h>

#include <cmath>

#include "fan/cones.hpp"
#include "fan/kernels.hpp"
#include "fan/quadrature.hpp"
#include "fan/transforms.hpp"

using namespace fan;

TEST_CASE("kernel evaluation") {
  const std::vector<Complex> zero2 = {Complex(0.0), Complex(0.0)};
  CHECK(kernel_eval(KernelKind::Drury, zero2, zero2).real() == doctest::Approx(1.0));
  CHECK(kernel_eval(KernelKind::Szego, {Complex(0.5), Complex(0.0)},
                    {Complex(1.0), Complex(0.0)})
            .real() == doctest::Approx(4.0));
  CHECK(kernel_eval(KernelKind::Bergman, {Complex(0.5), Complex(0.0)},
                    {Complex(1.0), Complex(0.0)})
            .real() == doctest::Approx(8.0));
  // Invariant Poisson kernel is 1 at the center, positive elsewhere.
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto u = rng.unit_vector(2);
    CHECK(kernel_eval(KernelKind::InvariantPoisson, zero2, u).real() == doctest::Approx(1.0));
    const auto z = rng.ball_point(2, 0.7);
    CHECK(kernel_eval(KernelKind::InvariantPoisson, z, u).real() > 0.0);
    CHECK(std::abs(kernel_eval(KernelKind::InvariantPoisson, z, u).imag()) < 1e-14);
  }
  CHECK_THROWS_AS(kernel_eval(KernelKind::Drury, {Complex(1.0), Complex(0.0)},
                              {Complex(1.0), Complex(0.0)}),
                  std::domain_error);
}

TEST_CASE("kernel expansions match pointwise evaluation") {
  // Drury: coefficients are the inverse monomial norms; Szego: the raising
  // binomial times the multinomial weight.
  Rng rng(97);
  for (int n : {2, 3}) {
    const auto w = rng.ball_point(n, 0.5);
    const auto z = rng.ball_point(n, 0.5);
    Complex drury = 0.0, szego = 0.0;
    for (const auto& alpha : enumerate_upto(n, 40)) {
      Complex mono = 1.0;
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < alpha[i]; ++k)
          mono *= z[static_cast<size_t>(i)] * std::conj(w[static_cast<size_t>(i)]);
      }
      const double mult = to_double(Rational(multinomial_weight(alpha)));
      drury += mult * mono;
      szego += mult * to_double(Rational(binom(n + alpha.degree() - 1, n - 1))) * mono;
    }
    CHECK(std::abs(drury - kernel_eval(KernelKind::Drury, z, w)) < 1e-12);
    CHECK(std::abs(szego - kernel_eval(KernelKind::Szego, z, w)) < 1e-12);
  }
}

TEST_CASE("invariant Poisson averages are positive with the right mass at 0") {
  Rng rng(103);
  DiscreteMeasure nu(2);
  for (int k = 0; k < 4; ++k) nu.add_atom(rng.unit_vector(2), rng.uniform(0.1, 1.0));
  const std::vector<Complex> zero = {Complex(0.0), Complex(0.0)};
  double at_zero = 0.0;
  for (const auto& atom : nu.atoms())
    at_zero += atom.weight * kernel_eval(KernelKind::InvariantPoisson, zero, atom.point).real();
  CHECK(at_zero == doctest::Approx(nu.total_mass()).epsilon(1e-14));
  for (int trial = 0; trial < 25; ++trial) {
    const auto z = rng.ball_point(2, 0.9);
    double value = 0.0;
    for (const auto& atom : nu.atoms())
      value += atom.weight * kernel_eval(KernelKind::InvariantPoisson, z, atom.point).real();
    CHECK(value > 0.0);
  }
}

TEST_CASE("psd_check verdicts") {
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(5, 5);
  const PositivityReport ok = psd_check(id, 1e-9);
  CHECK(ok.passed());
  CHECK(ok.min_eigenvalue == doctest::Approx(1.0));

  Eigen::MatrixXcd indef = Eigen::MatrixXcd::Zero(2, 2);
  indef(0, 0) = 1.0;
  indef(1, 1) = -1.0;
  const PositivityReport bad = psd_check(indef, 1e-9);
  CHECK(!bad.passed());
  CHECK(bad.min_eigenvalue == doctest::Approx(-1.0));
  CHECK(std::abs(bad.witness_vector(1)) == doctest::Approx(1.0));

  // Gram of Drury kernel columns is PSD.
  Rng rng(17);
  std::vector<std::vector<Complex>> pts;
  for (int i = 0; i < 10; ++i) pts.push_back(rng.ball_point(2, 0.8));
  Eigen::MatrixXcd gram(10, 10);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      gram(i, j) = kernel_eval(KernelKind::Drury, pts[static_cast<size_t>(i)],
                               pts[static_cast<size_t>(j)]);
  CHECK(psd_check(gram, 1e-9).passed());

  CHECK_THROWS_AS(psd_check(Eigen::MatrixXcd::Zero(2, 3), 1e-9), std::invalid_argument);
}

TEST_CASE("schur_kernel_gram basics") {
  const TruncatedSeries one = TruncatedSeries::constant(2, 2, 1.0);
  const auto gram = schur_kernel_gram(one, {{Complex(0.0), Complex(0.0)}});
  CHECK(gram(0, 0).real() == doctest::Approx(2.0));

  // Truncated Herglotz transform of a single atom stays PSD on samples.
  DiscreteMeasure mu(2);
  mu.add_atom({Complex(1.0), Complex(0.0)}, 1.0);
  const TruncatedSeries h = herglotz_measure_series(mu, 40);
  const auto pts = quasi_ball_points(2, 30, 0.55);
  const PositivityReport rep = psd_check(schur_kernel_gram(h, pts), 1e-9);
  CHECK(rep.min_eigenvalue >= -1e-8);
}

TEST_CASE("op_positivity_sample") {
  const TruncatedSeries one = TruncatedSeries::constant(2, 2, 1.0);
  const auto pts = quasi_ball_points(2, 100, 0.9);
  CHECK(op_positivity_sample(one, pts).passed());
  CHECK(!op_positivity_sample(scale(one, -1.0), pts).passed());

  const TruncatedSeries p = cayley(TruncatedSeries::monomial(2, 120, MultiIndex({1, 1}), 2.0));
  CHECK(op_positivity_sample(p, quasi_ball_points(2, 2000, 0.85)).passed());
}

TEST_CASE("annihilation families") {
  const DiscreteMeasure sigma = sphere_quadrature(2, 4);
  CHECK(kp_annihilation_check(sigma, 4, 1e-12).passed());

  DiscreteMeasure atom(2);
  atom.add_atom({Complex(1.0), Complex(0.0)}, 1.0);
  const PositivityReport bad = kp_annihilation_check(atom, 4, 1e-12);
  CHECK(!bad.passed());
  // Predicted worst family value for a single coordinate atom.
  CHECK(1e-12 - bad.min_eigenvalue == doctest::Approx(1.0));

  const DiscreteMeasure empty(2);
  CHECK(kp_annihilation_check(empty, 4, 1e-12).passed());

  DiscreteMeasure inside(2);
  inside.add_atom({Complex(0.5), Complex(0.0)}, 1.0);
  CHECK_THROWS_AS(kp_annihilation_check(inside, 4, 1e-12), std::invalid_argument);
}

TEST_CASE("ef_functional") {
  const DiscreteMeasure sigma = sphere_quadrature(2, 6);
  const TruncatedSeries one = TruncatedSeries::constant(2, 4, 1.0);
  CHECK(ef_functional(one, sigma).real() == doctest::Approx(1.0).epsilon(1e-13));
  const TruncatedSeries z1 = TruncatedSeries::monomial(2, 4, MultiIndex({1, 0}));
  CHECK(std::abs(ef_functional(z1, sigma)) < 1e-13);
  TruncatedSeries mixed = TruncatedSeries::constant(2, 4, 1.0);
  mixed.set_coeff(MultiIndex({1, 0}), 0.01);
  CHECK(ef_functional(mixed, sigma).real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("necessary moment bounds for the Herglotz cone") {
  DiscreteMeasure mu(2);
  mu.add_atom({Complex(1.0), Complex(0.0)}, 1.0);
  const TruncatedSeries h = herglotz_measure_series(mu, 20);
  CHECK(mp_necessary_check(h).passed());

  TruncatedSeries bad = TruncatedSeries::constant(2, 3, 1.0);
  bad.set_coeff(MultiIndex({1, 0}), 10.0);
  const PositivityReport rep = mp_necessary_check(bad);
  CHECK(!rep.passed());
  CHECK(rep.min_eigenvalue == doctest::Approx(-4.0));  // m_alpha = 5 > m_0 = 1

  CHECK(mp_necessary_check(TruncatedSeries::constant(2, 2, 1.0)).passed());
  CHECK(!mp_necessary_check(TruncatedSeries::constant(2, 2, -1.0)).passed());
}

TEST_CASE("q-form duality pairing") {
  DiscreteMeasure mu(2);
  mu.add_atom({Complex(1.0), Complex(0.0)}, 1.0);
  const TruncatedSeries h = herglotz_measure_series(mu, 20);
  const TruncatedSeries one = TruncatedSeries::constant(2, 20, 1.0);
  CHECK(dual_pair_check(h, one) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(dual_pair_check(one, one) == doctest::Approx(2.0));

  // Herglotz transforms pair non-negatively with positive-real-part probes.
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    DiscreteMeasure nu(2);
    const int atoms = 1 + static_cast<int>(rng.uniform(0.0, 5.0));
    for (int k = 0; k < atoms; ++k) nu.add_atom(rng.unit_vector(2), rng.uniform(0.0, 1.0));
    const TruncatedSeries f = herglotz_measure_series(nu, 24);
    TruncatedSeries g = TruncatedSeries::constant(2, 24, 1.0);
    g.set_coeff(MultiIndex({1, 0}), 0.5 * rng.uniform());
    g.set_coeff(MultiIndex({0, 1}), Complex(0.0, 0.3 * rng.uniform()));
    CHECK(dual_pair_check(f, g) >= -1e-8);
  }
}

TEST_CASE("positive-calculus shift") {
  const TruncatedSeries one = TruncatedSeries::constant(2, 2, 1.0);
  CHECK(herglotz_shift(one).at_origin().real() == doctest::Approx(0.5));
  CHECK(std::abs(herglotz_shift(TruncatedSeries::constant(2, 2, Complex(0.0, 1.0))).at_origin()) <
        1e-15);
  // Shifting the doubled Drury column leaves the Herglotz transform of the
  // point mass.
  DiscreteMeasure mu(2);
  mu.add_atom({Complex(1.0), Complex(0.0)}, 1.0);
  TruncatedSeries p = scale(fantappie_measure_series(mu, 12), 2.0);
  const TruncatedSeries shifted = herglotz_shift(p);
  const TruncatedSeries h = herglotz_measure_series(mu, 12);
  for (const auto& [alpha, c] : h.coeffs()) CHECK(std::abs(shifted.coeff(alpha) - c) < 1e-13);
}

TEST_CASE("mharmonic link for measures on the sphere") {
  DiscreteMeasure single(2);
  single.add_atom({Complex(1.0), Complex(0.0)}, 1.0);
  CHECK(mharmonic_link_check(single, 8, 1e-10).passed());
  CHECK(mharmonic_link_check(DiscreteMeasure(2), 8, 1e-10).passed());
  Rng rng(53);
  DiscreteMeasure three(3);
  for (int k = 0; k < 3; ++k) three.add_atom(rng.unit_vector(3), rng.uniform(0.1, 1.0));
  CHECK(mharmonic_link_check(three, 8, 1e-10).passed());
}

TEST_CASE("indefinite gram search finds the multiplier-norm witness") {
  // The Cayley transform of the balanced degree-2 monomial passes sampled
  // positivity yet its kernel Gram is indefinite on some finite set.
  const TruncatedSeries p = cayley(TruncatedSeries::monomial(2, 240, MultiIndex({1, 1}), 2.0));
  const auto witness = search_schur_violation(p, kDefaultSeed, 100000);
  REQUIRE(witness.has_value());
  CHECK(witness->min_eigenvalue < 0.0);
  // The witness set certifies: recompute its Gram and confirm indefiniteness.
  const PositivityReport rep = psd_check(schur_kernel_gram(p, witness->points), 1e-9);
  CHECK(!rep.passed());
}
