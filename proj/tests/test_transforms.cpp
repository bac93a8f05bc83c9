#include <doctest.h>

#include <cmath>

#include "fan/quadrature.hpp"
#include "fan/rng.hpp"
#include "fan/transforms.hpp"

using namespace fan;

TEST_CASE("coefficient transform eigenvalues") {
  // n=2: divisor (|a|+1)(|a|+2).
  CHECK(fantappie_op(2).eigenvalue(MultiIndex({1, 0})) == Rational(1, 6));
  CHECK(fantappie_op(2).eigenvalue(MultiIndex({0, 0})) == Rational(1, 2));
  for (int k = 0; k <= 8; ++k)
    CHECK(fantappie_op(1).eigenvalue(MultiIndex({k})) == Rational(1, k + 1));

  CHECK(euler_L_op(2).eigenvalue(MultiIndex({1, 0})) == 6);
  CHECK(hardy_euler_E_op(2).eigenvalue(MultiIndex({1, 1})) == 3);
  CHECK(hardy_euler_E_op(1).eigenvalue(MultiIndex({5})) == 1);
  CHECK(hardy_euler_E_op(3).eigenvalue(MultiIndex({0, 0, 0})) == 1);

  CHECK(lambda_op(2).eigenvalue(MultiIndex({1, 0})) == Rational(1, 4));
  CHECK(lambda_op(2).eigenvalue(MultiIndex({0, 0})) == 1);
  CHECK(lambda_op(1).eigenvalue(MultiIndex({3})) == Rational(1, 2));

  CHECK(gamma_op(2).eigenvalue(MultiIndex({1, 0})) == 4);
  CHECK(gamma_op(3).eigenvalue(MultiIndex({0, 0, 0})) == 1);
  CHECK(gamma_op(2).eigenvalue(MultiIndex({2, 2})) == 10);
}

TEST_CASE("transform inverses are exact as rationals") {
  for (int n = 1; n <= 4; ++n) {
    const auto lf = compose(euler_L_op(n), fantappie_op(n));
    const auto gl = compose(gamma_op(n), lambda_op(n));
    const auto lg = compose(lambda_op(n), gamma_op(n));
    for (const auto& alpha : enumerate_upto(n, 12)) {
      CHECK(lf.eigenvalue(alpha) == 1);
      CHECK(gl.eigenvalue(alpha) == 1);
      CHECK(lg.eigenvalue(alpha) == 1);
    }
  }
}

TEST_CASE("transform series round trip") {
  Rng rng(5);
  for (int n = 1; n <= 3; ++n) {
    TruncatedSeries f(n, 6);
    for (const auto& alpha : enumerate_upto(n, 6)) f.set_coeff(alpha, rng.complex_gaussian());
    const TruncatedSeries ff = fantappie_series(f);
    const TruncatedSeries back = euler_L(ff);
    for (const auto& [alpha, c] : f.coeffs()) CHECK(std::abs(back.coeff(alpha) - c) < 1e-13);
    CHECK(euler_L(TruncatedSeries(n, 4)).coeffs().empty());
  }
  // n=1 specialization: gamma p = 2p - p(0).
  TruncatedSeries p(1, 5);
  p.set_coeff(MultiIndex({0}), Complex(0.7, -0.2));
  p.set_coeff(MultiIndex({3}), Complex(-1.5, 0.4));
  const TruncatedSeries gp = gamma_apply(p);
  CHECK(std::abs(gp.coeff(MultiIndex({0})) - p.at_origin()) < 1e-15);
  CHECK(std::abs(gp.coeff(MultiIndex({3})) - 2.0 * p.coeff(MultiIndex({3}))) < 1e-15);
}

TEST_CASE("fantappie eigenvalues strictly decrease in degree") {
  for (int n = 1; n <= 4; ++n) {
    const auto op = fantappie_op(n);
    Rational prev = op.eigenvalue(MultiIndex::zero(n));
    for (int d = 1; d <= 12; ++d) {
      MultiIndex alpha = MultiIndex::zero(n).plus(0, d);
      const Rational cur = op.eigenvalue(alpha);
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("drury norm through the raising factors equals the direct norm") {
  Rng rng(29);
  for (int n = 2; n <= 3; ++n) {
    TruncatedSeries f(n, 7);
    for (const auto& alpha : enumerate_upto(n, 7)) f.set_coeff(alpha, rng.complex_gaussian());
    double via_bergman = 0.0;
    for (const auto& [alpha, c] : f.coeffs()) {
      via_bergman += to_double(Rational(rising_product(alpha.degree(), n))) * std::norm(c) *
                     to_double(monomial_norm_sq(SpaceTag::Bergman, alpha));
    }
    const double direct = inner_product(SpaceTag::Drury, f, f).real();
    CHECK(via_bergman == doctest::Approx(direct).epsilon(1e-13));
  }
}

TEST_CASE("measure transforms at points") {
  DiscreteMeasure delta0(2);
  delta0.add_atom({Complex(0.0), Complex(0.0)}, 1.0);
  CHECK(fantappie_measure(delta0, {Complex(0.3, 0.1), Complex(-0.2, 0.0)}).real() ==
        doctest::Approx(1.0));

  DiscreteMeasure delta_e1(2);
  delta_e1.add_atom({Complex(1.0), Complex(0.0)}, 1.0);
  CHECK(fantappie_measure(delta_e1, {Complex(0.5), Complex(0.0)}).real() == doctest::Approx(2.0));

  DiscreteMeasure pm(1);
  pm.add_atom({Complex(1.0)}, 0.5);
  pm.add_atom({Complex(-1.0)}, 0.5);
  for (double t : {0.3, -0.6, 0.9}) {
    CHECK(fantappie_measure(pm, {Complex(t)}).real() ==
          doctest::Approx(1.0 / (1.0 - t * t)).epsilon(1e-14));
  }

  CHECK_THROWS_AS(fantappie_measure(delta_e1, {Complex(1.0), Complex(0.0)}), std::domain_error);

  // Herglotz single atom: (1+z)/(1-z) pattern.
  CHECK(herglotz_measure(delta_e1, {Complex(0.5), Complex(0.0)}).real() == doctest::Approx(3.0));
  CHECK(herglotz_measure(delta_e1, {Complex(0.0), Complex(0.0)}).real() == doctest::Approx(1.0));

  // Szego-Herglotz: n=1 atom reduces to (1+z)/(1-z); n=2 example value 7.
  DiscreteMeasure d1(1);
  d1.add_atom({Complex(1.0)}, 1.0);
  CHECK(szego_herglotz_measure(d1, 0.0, {Complex(0.5)}).real() == doctest::Approx(3.0));
  CHECK(szego_herglotz_measure(delta_e1, 0.0, {Complex(0.5), Complex(0.0)}).real() ==
        doctest::Approx(7.0));
  CHECK(szego_herglotz_measure(delta_e1, 1.5, {Complex(0.0), Complex(0.0)}).imag() ==
        doctest::Approx(1.5));
}

TEST_CASE("herglotz and fantappie agree through the algebraic identity") {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 3;
    DiscreteMeasure mu(n);
    const int atoms = 1 + static_cast<int>(rng.uniform(0.0, 4.0));
    for (int k = 0; k < atoms; ++k) mu.add_atom(rng.unit_vector(n), rng.uniform(0.0, 1.0));
    const auto z = rng.ball_point(n, 0.8);
    const Complex h = herglotz_measure(mu, z);
    const Complex f = fantappie_measure(mu, z);
    CHECK(std::abs(h - (2.0 * f - mu.total_mass())) < 1e-12);
  }
}

TEST_CASE("measure series expansion matches pointwise evaluation") {
  Rng rng(37);
  DiscreteMeasure mu(2);
  for (int k = 0; k < 3; ++k) mu.add_atom(rng.unit_vector(2), rng.uniform(0.2, 1.0));
  const TruncatedSeries fs = fantappie_measure_series(mu, 40);
  const TruncatedSeries hs = herglotz_measure_series(mu, 40);
  for (int trial = 0; trial < 20; ++trial) {
    const auto z = rng.ball_point(2, 0.45);
    CHECK(std::abs(fs.evaluate(z) - fantappie_measure(mu, z)) < 1e-11);
    CHECK(std::abs(hs.evaluate(z) - herglotz_measure(mu, z)) < 1e-11);
  }
}

TEST_CASE("general smoothing pair from quadrature moments") {
  // Sphere moments in the Hardy normalization with unit mass reproduce the
  // ball pair identically in every dimension.
  for (int n = 2; n <= 3; ++n) {
    std::map<MultiIndex, Rational, CanonicalLess> moments;
    for (const auto& alpha : enumerate_upto(n, 10)) {
      moments.emplace(alpha, alpha.degree() == 0
                                 ? Rational(1)
                                 : Rational(alpha_factorial(alpha),
                                            factorial(alpha.degree() + n - 1)));
    }
    const auto [lambda, gamma] = general_lambda_gamma(moments, n);
    for (const auto& alpha : enumerate_upto(n, 10)) {
      CHECK(lambda.eigenvalue(alpha) == lambda_op(n).eigenvalue(alpha));
      CHECK(gamma.eigenvalue(alpha) == gamma_op(n).eigenvalue(alpha));
    }
  }
  // n=2 with the mass-one surface moments: (n-1)! = 1 so the same pair again.
  {
    const int n = 2;
    std::map<MultiIndex, Rational, CanonicalLess> moments;
    for (const auto& alpha : enumerate_upto(n, 6)) {
      moments.emplace(alpha, alpha.degree() == 0
                                 ? Rational(1)
                                 : Rational(alpha_factorial(alpha) * factorial(n - 1),
                                            factorial(alpha.degree() + n - 1)));
    }
    const auto [lambda, gamma] = general_lambda_gamma(moments, n);
    for (const auto& alpha : enumerate_upto(n, 6))
      CHECK(lambda.eigenvalue(alpha) == lambda_op(n).eigenvalue(alpha));
  }
  // Circle with unit moments: z^k / 2 for k >= 1, Lambda 1 = 1.
  {
    std::map<MultiIndex, Rational, CanonicalLess> moments;
    for (int k = 0; k <= 6; ++k) moments.emplace(MultiIndex({k}), Rational(1));
    const auto [lambda, gamma] = general_lambda_gamma(moments, 1);
    CHECK(lambda.eigenvalue(MultiIndex({0})) == 1);
    for (int k = 1; k <= 6; ++k) {
      CHECK(lambda.eigenvalue(MultiIndex({k})) == Rational(1, 2));
      CHECK(gamma.eigenvalue(MultiIndex({k})) == 2);
    }
  }
  // Missing or non-positive moments are rejected.
  std::map<MultiIndex, Rational, CanonicalLess> bad;
  bad.emplace(MultiIndex({0, 0}), Rational(-1));
  CHECK_THROWS_AS(general_lambda_gamma(bad, 2), std::invalid_argument);
  std::map<MultiIndex, Rational, CanonicalLess> sparse;
  sparse.emplace(MultiIndex({0, 0}), Rational(1));
  const auto [lambda, gamma] = general_lambda_gamma(sparse, 2);
  CHECK_THROWS_AS(lambda.eigenvalue(MultiIndex({1, 0})), std::invalid_argument);
}

TEST_CASE("half-smoothing operator agrees with its boundary-integral route at n=2") {
  // At n=2 the mass-one sphere rule realizes the integral definition
  // Lambda p = F(p sigma)/2 + p(0)/2 coefficientwise.
  const DiscreteMeasure sigma = sphere_quadrature(2, 6);
  Rng rng(101);
  TruncatedSeries p(2, 4);
  for (const auto& alpha : enumerate_upto(2, 4)) p.set_coeff(alpha, rng.complex_gaussian());
  // Expand F(p sigma): coefficient beta = mult(beta) * sum_atoms w p(u) conj(u)^beta.
  TruncatedSeries integral(2, 4);
  for (const auto& beta : enumerate_upto(2, 4)) {
    Complex moment = 0.0;
    for (const auto& atom : sigma.atoms()) {
      Complex term = atom.weight * p.evaluate(atom.point);
      for (int i = 0; i < 2; ++i)
        for (int k = 0; k < beta[i]; ++k) term *= std::conj(atom.point[static_cast<size_t>(i)]);
      moment += term;
    }
    integral.set_coeff(beta, 0.5 * moment * to_double(Rational(multinomial_weight(beta))));
  }
  integral.add_coeff(MultiIndex::zero(2), 0.5 * p.at_origin());
  const TruncatedSeries diagonal = lambda_apply(p);
  for (const auto& [alpha, c] : diagonal.coeffs())
    CHECK(std::abs(integral.coeff(alpha) - c) < 1e-13);
}
