#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "fan/rng.hpp"
#include "fan/series.hpp"

using namespace fan;

TEST_CASE("monomial norms in the three spaces") {
  CHECK(monomial_norm_sq(SpaceTag::Drury, MultiIndex({1, 1})) == Rational(1, 2));
  CHECK(monomial_norm_sq(SpaceTag::Drury, MultiIndex({0, 0})) == 1);
  CHECK(monomial_norm_sq(SpaceTag::Bergman, MultiIndex({1, 0})) == Rational(1, 6));
  // Chain ordering on every index.
  for (int n = 1; n <= 4; ++n) {
    for (const auto& alpha : enumerate_upto(n, 12)) {
      const auto h = monomial_norm_sq(SpaceTag::Drury, alpha);
      const auto h2 = monomial_norm_sq(SpaceTag::Hardy, alpha);
      const auto a2 = monomial_norm_sq(SpaceTag::Bergman, alpha);
      CHECK(h >= h2);
      CHECK(h2 >= a2);
    }
  }
}

TEST_CASE("inner products pair coefficients against exact norms") {
  TruncatedSeries z1 = TruncatedSeries::monomial(2, 4, MultiIndex({1, 0}));
  TruncatedSeries z2 = TruncatedSeries::monomial(2, 4, MultiIndex({0, 1}));
  TruncatedSeries z1z2 = TruncatedSeries::monomial(2, 4, MultiIndex({1, 1}));
  CHECK(inner_product(SpaceTag::Drury, z1, z1).real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(inner_product(SpaceTag::Drury, z1z2, z1z2).real() ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(inner_product(SpaceTag::Bergman, z1, z2)) == 0.0);
  CHECK_THROWS_AS(inner_product(SpaceTag::Drury, z1, TruncatedSeries::constant(3, 1, 1.0)),
                  std::invalid_argument);
}

TEST_CASE("inner product is conjugate symmetric and positive definite") {
  Rng rng(123);
  for (int trial = 0; trial < 5; ++trial) {
    TruncatedSeries f(2, 6), g(2, 6);
    for (const auto& alpha : enumerate_upto(2, 6)) {
      f.set_coeff(alpha, rng.complex_gaussian());
      g.set_coeff(alpha, rng.complex_gaussian());
    }
    const Complex fg = inner_product(SpaceTag::Hardy, f, g);
    const Complex gf = inner_product(SpaceTag::Hardy, g, f);
    CHECK(std::abs(fg - std::conj(gf)) < 1e-12);
    CHECK(inner_product(SpaceTag::Hardy, f, f).real() > 0.0);
    CHECK(std::abs(inner_product(SpaceTag::Hardy, f, f).imag()) < 1e-14);
  }
}

TEST_CASE("random Gram matrices of the pairing are PSD") {
  // 20 random series; their pairing Gram must be PSD up to roundoff.
  Rng rng(211);
  std::vector<TruncatedSeries> family;
  for (int k = 0; k < 20; ++k) {
    TruncatedSeries f(2, 5);
    for (const auto& alpha : enumerate_upto(2, 5))
      if (rng.uniform() < 0.6) f.set_coeff(alpha, rng.complex_gaussian());
    family.push_back(std::move(f));
  }
  for (SpaceTag space : {SpaceTag::Drury, SpaceTag::Hardy, SpaceTag::Bergman}) {
    Eigen::MatrixXcd gram(20, 20);
    for (int i = 0; i < 20; ++i)
      for (int j = 0; j < 20; ++j)
        gram(i, j) = inner_product(space, family[static_cast<size_t>(i)],
                                   family[static_cast<size_t>(j)]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(0.5 * (gram + gram.adjoint()));
    CHECK(eig.eigenvalues().minCoeff() >= -1e-12);
  }
}

TEST_CASE("q_form matches the displayed coefficient formula") {
  TruncatedSeries one = TruncatedSeries::constant(2, 4, 1.0);
  CHECK(q_form(one, one).real() == doctest::Approx(2.0));
  TruncatedSeries z1 = TruncatedSeries::monomial(2, 4, MultiIndex({1, 0}));
  // Q(z1, z1) = 1!/1! + 0 = 1 by the coefficient formula.
  CHECK(q_form(z1, z1).real() == doctest::Approx(1.0));
  CHECK(q_form(add(one, z1), one).real() == doctest::Approx(2.0));
  CHECK_THROWS_AS(q_form(one, one, true), std::domain_error);
}

TEST_CASE("evaluate") {
  TruncatedSeries f = TruncatedSeries::constant(2, 3, 1.0);
  f.set_coeff(MultiIndex({1, 0}), 1.0);
  CHECK(f.evaluate({0.5, 0.0}).real() == doctest::Approx(1.5));

  TruncatedSeries g = TruncatedSeries::monomial(2, 3, MultiIndex({1, 1}));
  CHECK(g.evaluate({Complex(0, 1), Complex(0, 1)}).real() == doctest::Approx(-1.0));

  const int cap = 9;
  TruncatedSeries geo(1, cap);
  for (int k = 0; k <= cap; ++k) geo.set_coeff(MultiIndex({k}), 1.0);
  CHECK(geo.evaluate({0.5}).real() ==
        doctest::Approx(2.0 - std::pow(2.0, -cap)).epsilon(1e-14));
}

TEST_CASE("reciprocal and cayley") {
  TruncatedSeries f(1, 6);
  f.set_coeff(MultiIndex({0}), 1.0);
  f.set_coeff(MultiIndex({1}), -1.0);
  const TruncatedSeries inv = reciprocal(f);
  for (int k = 0; k <= 6; ++k) CHECK(inv.coeff(MultiIndex({k})).real() == doctest::Approx(1.0));

  CHECK(reciprocal(TruncatedSeries::constant(2, 3, 2.0)).at_origin().real() ==
        doctest::Approx(0.5));
  CHECK_THROWS_AS(reciprocal(TruncatedSeries::monomial(2, 3, MultiIndex({1, 0}))),
                  std::domain_error);

  // 1/(1 - 2 z1 z2) = 1 + 2 z1 z2 + 4 z1^2 z2^2 at cap 4.
  TruncatedSeries h(2, 4);
  h.set_coeff(MultiIndex({0, 0}), 1.0);
  h.set_coeff(MultiIndex({1, 1}), -2.0);
  const TruncatedSeries hinv = reciprocal(h);
  CHECK(hinv.coeff(MultiIndex({0, 0})).real() == doctest::Approx(1.0));
  CHECK(hinv.coeff(MultiIndex({1, 1})).real() == doctest::Approx(2.0));
  CHECK(hinv.coeff(MultiIndex({2, 2})).real() == doctest::Approx(4.0));

  const TruncatedSeries c0 = cayley(TruncatedSeries::constant(1, 4, 0.0));
  CHECK(c0.at_origin().real() == doctest::Approx(1.0));
  CHECK(c0.coeffs().size() == 1);

  const TruncatedSeries cz = cayley(TruncatedSeries::monomial(1, 3, MultiIndex({1})));
  CHECK(cz.coeff(MultiIndex({0})).real() == doctest::Approx(1.0));
  for (int k = 1; k <= 3; ++k) CHECK(cz.coeff(MultiIndex({k})).real() == doctest::Approx(2.0));

  const TruncatedSeries cq = cayley(TruncatedSeries::monomial(2, 2, MultiIndex({1, 1}), 2.0));
  CHECK(cq.coeff(MultiIndex({0, 0})).real() == doctest::Approx(1.0));
  CHECK(cq.coeff(MultiIndex({1, 1})).real() == doctest::Approx(4.0));

  CHECK_THROWS_AS(cayley(TruncatedSeries::constant(1, 2, 1.0)), std::domain_error);
}

TEST_CASE("cayley round trip on random small inputs") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    TruncatedSeries q(2, 8);
    q.set_coeff(MultiIndex({0, 0}), 0.4 * rng.complex_gaussian());
    for (const auto& alpha : enumerate_upto(2, 8)) {
      if (alpha.degree() > 0 && rng.uniform() < 0.3)
        q.set_coeff(alpha, 0.2 * rng.complex_gaussian());
    }
    const TruncatedSeries back = cayley_inverse(cayley(q));
    for (const auto& [alpha, c] : q.coeffs())
      CHECK(std::abs(back.coeff(alpha) - c) < 1e-10);
  }
}

TEST_CASE("multiplier lower bound") {
  const TruncatedSeries one2 = TruncatedSeries::constant(2, 4, 1.0);
  const TruncatedSeries q = TruncatedSeries::monomial(2, 4, MultiIndex({1, 1}), 2.0);
  CHECK(multiplier_lower_bound(q, one2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

  const TruncatedSeries z1 = TruncatedSeries::monomial(2, 4, MultiIndex({1, 0}));
  CHECK(multiplier_lower_bound(z1, one2) == doctest::Approx(1.0).epsilon(1e-14));

  Rng rng(11);
  TruncatedSeries h(2, 8);
  for (const auto& alpha : enumerate_upto(2, 4)) h.set_coeff(alpha, rng.complex_gaussian());
  CHECK(multiplier_lower_bound(TruncatedSeries::constant(2, 8, Complex(0.0, -3.0)), h) ==
        doctest::Approx(3.0).epsilon(1e-12));

  CHECK_THROWS_AS(multiplier_lower_bound(q, TruncatedSeries(2, 4)), std::invalid_argument);
  // Cap too small for an exact product is refused.
  const TruncatedSeries high = TruncatedSeries::monomial(2, 3, MultiIndex({2, 1}));
  CHECK_THROWS_AS(multiplier_lower_bound(high, high), std::domain_error);
}

TEST_CASE("multiplier bound is monotone under h optimization") {
  Rng rng(13);
  const TruncatedSeries q = TruncatedSeries::monomial(2, 12, MultiIndex({1, 1}), 2.0);
  double best = 0.0;
  for (int trial = 0; trial < 12; ++trial) {
    TruncatedSeries h(2, 12);
    for (const auto& alpha : enumerate_upto(2, 3)) h.set_coeff(alpha, rng.complex_gaussian());
    const double bound = multiplier_lower_bound(q, h);
    best = std::max(best, bound);
    CHECK(best >= bound);  // running max never decreases
  }
  CHECK(best >= std::sqrt(2.0) - 0.5);
}
