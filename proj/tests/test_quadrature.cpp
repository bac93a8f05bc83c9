#include <doctest.h>

#include <cmath>

#include "fan/quadrature.hpp"

using namespace fan;

namespace {

// Compensated accumulation keeps the oracle's own summation noise below the
// tolerance being verified.
Complex quad_moment(const DiscreteMeasure& mu, const MultiIndex& hol, const MultiIndex& anti) {
  std::complex<long double> sum = 0.0;
  for (const auto& atom : mu.atoms()) {
    Complex term = atom.weight;
    for (int i = 0; i < mu.dim(); ++i) {
      for (int k = 0; k < hol[i]; ++k) term *= atom.point[static_cast<size_t>(i)];
      for (int k = 0; k < anti[i]; ++k) term *= std::conj(atom.point[static_cast<size_t>(i)]);
    }
    sum += std::complex<long double>(term);
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

}  // namespace

TEST_CASE("gauss rule integrates polynomials exactly") {
  const GaussRule g = gauss_legendre_01(6);
  for (int d = 0; d <= 11; ++d) {
    double sum = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
      sum += g.weights[i] * std::pow(g.nodes[i], d);
    CHECK(sum == doctest::Approx(1.0 / (d + 1)).epsilon(1e-13));
  }
}

TEST_CASE("sphere rule: normalization, diagonal moments, mixed moments") {
  for (int n : {2, 3}) {
    const int cap = (n == 2) ? 6 : 4;
    const DiscreteMeasure sigma = sphere_quadrature(n, cap);
    for (const auto& atom : sigma.atoms()) CHECK(atom.weight > 0.0);
    CHECK(sigma.all_on_sphere(1e-12));
    CHECK(sigma.total_mass() == doctest::Approx(1.0).epsilon(1e-13));

    const MultiIndex zero = MultiIndex::zero(n);
    CHECK(quad_moment(sigma, zero, zero).real() == doctest::Approx(1.0).epsilon(1e-13));

    // Diagonal moments against the closed form, slightly past the cap.
    for (const auto& alpha : enumerate_upto(n, cap + 1)) {
      const Complex m = quad_moment(sigma, alpha, alpha);
      CHECK(std::abs(m - to_double(sphere_moment(alpha))) < 1e-13);
    }
    // Mixed moments vanish.
    const auto indices = enumerate_upto(n, cap / 2 + 1);
    for (const auto& a : indices) {
      for (const auto& b : indices) {
        if (a == b) continue;
        CHECK(std::abs(quad_moment(sigma, a, b)) < 1e-13);
      }
    }
  }
  CHECK_THROWS_AS(sphere_quadrature(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(sphere_quadrature(2, 13), std::invalid_argument);
}

TEST_CASE("specific sphere moments") {
  const DiscreteMeasure sigma = sphere_quadrature(2, 6);
  // |u1|^2 integrates to 1/2 on the 3-sphere.
  CHECK(quad_moment(sigma, MultiIndex({1, 0}), MultiIndex({1, 0})).real() ==
        doctest::Approx(0.5).epsilon(1e-13));
  CHECK(std::abs(quad_moment(sigma, MultiIndex({1, 0}), MultiIndex({0, 1}))) < 1e-14);
  CHECK(sphere_moment(MultiIndex({1, 0})) == Rational(1, 2));
  CHECK(sphere_moment(MultiIndex({2, 1})) == Rational(2 * 1, 24));
}
