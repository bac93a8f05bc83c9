#include "fan/restriction.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fan/quadrature.hpp"

namespace fan {

ReinhardtDomain::ReinhardtDomain(Kind kind, std::vector<double> radii)
    : kind_(kind), radii_(std::move(radii)) {
  if (radii_.empty()) throw std::invalid_argument("domain needs dimension >= 1");
  for (double r : radii_) {
    if (!(r > 0.0) || !(r < 1.0))
      throw std::invalid_argument("domain radii must lie strictly between 0 and 1");
  }
}

ReinhardtDomain ReinhardtDomain::scaled_ball(int dim, double r) {
  if (dim < 1) throw std::invalid_argument("domain needs dimension >= 1");
  return ReinhardtDomain(Kind::ScaledBall, std::vector<double>(static_cast<size_t>(dim), r));
}

ReinhardtDomain ReinhardtDomain::ellipsoid(std::vector<double> radii) {
  return ReinhardtDomain(Kind::Ellipsoid, std::move(radii));
}

namespace {

// Independent route: ||z^alpha||^2 over Omega as a radial Gauss integral of
// the sphere moment, against the volume of total mass 1/n!.
double bergman_norm_sq_quadrature(const ReinhardtDomain& domain, const MultiIndex& alpha) {
  const int n = domain.dim();
  if (n != 2 && n != 3)
    throw std::invalid_argument("norm cross-check quadrature supports dim 2 and 3");
  const int d = alpha.degree();
  const GaussRule radial = gauss_legendre_01(d + n + 2);
  double radial_moment = 0.0;
  for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
    radial_moment += radial.weights[i] * 2.0 * n * std::pow(radial.nodes[i], 2 * n - 1 + 2 * d);
  }
  radial_moment /= to_double(Rational(factorial(n)));
  const SphereProfile sphere = sphere_profile(n, std::min(12, d + 1));
  double sphere_moment_quad = 0.0;
  for (std::size_t node = 0; node < sphere.weights.size(); ++node) {
    double term = sphere.weights[node];
    for (int i = 0; i < n; ++i)
      term *= std::pow(sphere.radii[node][static_cast<size_t>(i)], 2 * alpha[i]);
    sphere_moment_quad += term;
  }
  double scaling = 1.0;
  for (int i = 0; i < n; ++i) scaling *= std::pow(domain.radius(i), 2 * alpha[i] + 2);
  return scaling * radial_moment * sphere_moment_quad;
}

}  // namespace

double bergman_norm_sq_domain(const ReinhardtDomain& domain, const MultiIndex& alpha,
                              bool cross_check) {
  if (alpha.dim() != domain.dim()) throw std::invalid_argument("domain/index dimension mismatch");
  const int n = domain.dim();
  double scaling = 1.0;
  for (int i = 0; i < n; ++i)
    scaling *= std::pow(domain.radius(i), 2 * alpha[i] + 2);
  const double closed =
      scaling * to_double(Rational(alpha_factorial(alpha), factorial(alpha.degree() + n)));
  if (cross_check) {
    const double quad = bergman_norm_sq_quadrature(domain, alpha);
    if (std::abs(quad - closed) > 1e-10 * std::abs(closed))
      throw std::runtime_error("domain norm cross-check failed");
  }
  return closed;
}

double restriction_eigenvalue(const ReinhardtDomain& domain, const MultiIndex& alpha,
                              SpectrumNormalization norm) {
  const double raw = to_double(Rational(multinomial_weight(alpha))) *
                     bergman_norm_sq_domain(domain, alpha);
  if (norm == SpectrumNormalization::Raw) return raw;
  return raw / restriction_eigenvalue(domain, MultiIndex::zero(domain.dim()),
                                       SpectrumNormalization::Raw);
}

SpectralData spectral_data(const ReinhardtDomain& domain, int max_degree,
                           SpectrumNormalization norm) {
  SpectralData data;
  data.normalization = norm;
  for (const auto& alpha : enumerate_upto(domain.dim(), max_degree))
    data.eigenvalues.emplace(alpha, restriction_eigenvalue(domain, alpha, norm));
  return data;
}

bool polar_membership(const ReinhardtDomain& domain, const std::vector<Complex>& z) {
  if (static_cast<int>(z.size()) != domain.dim())
    throw std::invalid_argument("point dimension mismatch");
  // sup over Omega of |<z,w>| equals the scaled norm, so <z,w> misses 1
  // exactly when that norm is <= 1.
  double s = 0.0;
  for (int i = 0; i < domain.dim(); ++i)
    s += domain.radius(i) * domain.radius(i) * std::norm(z[static_cast<size_t>(i)]);
  return s <= 1.0;
}

double polar_ball_radius(double r) {
  if (!(r > 0.0)) throw std::invalid_argument("polar radius needs r > 0");
  return 1.0 / r;
}

DiagonalizationReport verify_fant_diag(const ReinhardtDomain& domain, const MultiIndex& alpha,
                                       int quad_resolution, double tol) {
  const int n = domain.dim();
  if (n != 2 && n != 3)
    throw std::invalid_argument("verify_fant_diag: quadrature supports dim 2 and 3");
  DiagonalizationReport report;
  const int degree_scan = alpha.degree() + 2;
  report.resolution_sufficient = quad_resolution >= degree_scan;
  if (!report.resolution_sufficient) return report;

  // Integrals over Omega factor through the unit ball: coordinates scale out
  // exactly, and the ball splits into radial Gauss nodes times the sphere
  // rule, whose per-coordinate trapezoid phase sums select the diagonal.
  const SphereProfile sphere = sphere_profile(n, quad_resolution);
  const GaussRule radial = gauss_legendre_01(quad_resolution + n + 2);

  // radial_moment[d] = (2n/n!) int_0^1 rho^{2n-1+d} drho via Gauss nodes; the
  // 1/n! carries the volume normalization under which the monomial norm
  // closed forms are stated.
  const double volume_mass = 1.0 / to_double(Rational(factorial(n)));
  std::vector<double> radial_moment(static_cast<size_t>(2 * degree_scan) + 1, 0.0);
  for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
    const double rho = radial.nodes[i];
    double base = 2.0 * n * volume_mass * radial.weights[i] * std::pow(rho, 2 * n - 1);
    for (int d = 0; d <= 2 * degree_scan; ++d) {
      radial_moment[static_cast<size_t>(d)] += base;
      base *= rho;
    }
  }

  // phase_sum[k] = (1/M) sum_l e^{i k 2 pi l / M}, the trapezoid rule that
  // annihilates every angular harmonic the scan can produce.
  std::vector<Complex> phase_sum(static_cast<size_t>(2 * degree_scan) + 1, Complex(0.0));
  for (int k = 0; k <= 2 * degree_scan; ++k) {
    Complex s = 0.0;
    for (int l = 0; l < sphere.phases; ++l)
      s += std::polar(1.0, 2.0 * std::numbers::pi * k * l / sphere.phases);
    phase_sum[static_cast<size_t>(k)] = s / static_cast<double>(sphere.phases);
  }

  double lambda_quad = 0.0;
  double max_offdiag = 0.0;
  for (const MultiIndex& beta : enumerate_upto(n, degree_scan)) {
    Complex angular = 1.0;
    for (int i = 0; i < n; ++i)
      angular *= phase_sum[static_cast<size_t>(std::abs(alpha[i] - beta[i]))];
    double profile_part = 0.0;
    for (std::size_t node = 0; node < sphere.weights.size(); ++node) {
      double term = sphere.weights[node];
      for (int i = 0; i < n; ++i)
        term *= std::pow(sphere.radii[node][static_cast<size_t>(i)], alpha[i] + beta[i]);
      profile_part += term;
    }
    Complex ball_integral =
        angular * profile_part * radial_moment[static_cast<size_t>(alpha.degree() + beta.degree())];
    // Coordinate scaling from the unit ball to Omega.
    double scaling = 1.0;
    for (int i = 0; i < n; ++i)
      scaling *= std::pow(domain.radius(i), alpha[i] + beta[i] + 2);
    ball_integral *= scaling;
    const Complex coeff = ball_integral * to_double(Rational(multinomial_weight(beta)));
    if (beta == alpha) {
      lambda_quad = coeff.real();
    } else {
      max_offdiag = std::max(max_offdiag, std::abs(coeff));
    }
  }

  report.lambda_quadrature = lambda_quad;
  report.lambda_closed = restriction_eigenvalue(domain, alpha);
  report.relative_error =
      std::abs(lambda_quad - report.lambda_closed) / std::abs(report.lambda_closed);
  report.max_offdiagonal = max_offdiag;
  report.pass = report.relative_error <= tol && max_offdiag <= 1e-10;
  return report;
}

IsometryReport gelfand_isometry_check(const ReinhardtDomain& domain, const TruncatedSeries& f,
                                      double tol) {
  if (f.dim() != domain.dim()) throw std::invalid_argument("domain/series dimension mismatch");
  IsometryReport report;
  double lhs_sq = 0.0, rhs_sq = 0.0;
  for (const auto& [alpha, c] : f.coeffs()) {
    const double lambda = restriction_eigenvalue(domain, alpha);
    const double drury = to_double(monomial_norm_sq(SpaceTag::Drury, alpha));
    // F acts diagonally by lambda_alpha; the polar-domain norm divides by it.
    const double f_coeff_sq = std::norm(c * lambda);
    lhs_sq += f_coeff_sq * drury / lambda;
    rhs_sq += std::norm(c) * bergman_norm_sq_domain(domain, alpha);
  }
  report.lhs = std::sqrt(lhs_sq);
  report.rhs = std::sqrt(rhs_sq);
  const double scale = std::max({1e-300, report.lhs, report.rhs});
  report.relative_deviation = std::abs(report.lhs - report.rhs) / scale;
  if (f.coeffs().empty()) report.relative_deviation = 0.0;
  report.pass = report.relative_deviation <= tol;
  return report;
}

}  // namespace fan
