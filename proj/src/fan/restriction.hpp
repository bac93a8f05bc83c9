#ifndef FAN_RESTRICTION_HPP
#define FAN_RESTRICTION_HPP

#include <string>
#include <vector>

#include "fan/series.hpp"

namespace fan {

/// Scaled ball or Reinhardt ellipsoid strictly inside the unit ball.
class ReinhardtDomain {
 public:
  enum class Kind { ScaledBall, Ellipsoid };

  static ReinhardtDomain scaled_ball(int dim, double r);
  static ReinhardtDomain ellipsoid(std::vector<double> radii);

  Kind kind() const { return kind_; }
  int dim() const { return static_cast<int>(radii_.size()); }
  double radius(int i) const { return radii_[static_cast<size_t>(i)]; }
  const std::vector<double>& radii() const { return radii_; }

 private:
  ReinhardtDomain(Kind kind, std::vector<double> radii);
  Kind kind_;
  std::vector<double> radii_;
};

/// Raw uses the ball-normalized volume directly; Rescaled divides by the
/// degree-zero eigenvalue so lambda_0 = 1.
enum class SpectrumNormalization { Raw, Rescaled };

/// ||z^alpha||^2 in A^2(Omega): r^{2|alpha|+2n} alpha!/(|alpha|+n)! for the
/// scaled ball, prod r_i^{2 alpha_i + 2} alpha!/(|alpha|+n)! for ellipsoids.
/// With cross_check set, the closed form is verified against an independent
/// radial-times-sphere quadrature before returning.
double bergman_norm_sq_domain(const ReinhardtDomain& domain, const MultiIndex& alpha,
                              bool cross_check = false);

/// Eigenvalue of R*R on the monomial eigenfunctions:
/// lambda_alpha = ||z^alpha||^2_{A^2(Omega)} / ||z^alpha||^2_Drury.
double restriction_eigenvalue(const ReinhardtDomain& domain, const MultiIndex& alpha,
                              SpectrumNormalization norm = SpectrumNormalization::Raw);

/// Eigenvalue table of the restriction operator up to a degree cap.
struct SpectralData {
  std::map<MultiIndex, double, CanonicalLess> eigenvalues;
  SpectrumNormalization normalization = SpectrumNormalization::Raw;
};
SpectralData spectral_data(const ReinhardtDomain& domain, int max_degree,
                           SpectrumNormalization norm = SpectrumNormalization::Raw);

/// Polar set membership (component of the origin), by the closed forms
/// |z| <= 1/r and sum r_i^2 |z_i|^2 <= 1.
bool polar_membership(const ReinhardtDomain& domain, const std::vector<Complex>& z);

/// Closed-form polar radius round trip for scaled balls: r -> 1/r.
double polar_ball_radius(double r);

struct DiagonalizationReport {
  double lambda_closed = 0.0;
  double lambda_quadrature = 0.0;
  double relative_error = 0.0;
  double max_offdiagonal = 0.0;
  bool resolution_sufficient = true;
  bool pass = false;
};

/// Independent quadrature check that the Fantappie transform of z^alpha
/// restricted to Omega is lambda_alpha z^alpha: radial Gauss nodes times
/// per-coordinate phase sums (exact angular selection of the diagonal).
DiagonalizationReport verify_fant_diag(const ReinhardtDomain& domain, const MultiIndex& alpha,
                                       int quad_resolution, double tol = 1e-8);

struct IsometryReport {
  double lhs = 0.0;  // ||F f|| in the polar-domain norm
  double rhs = 0.0;  // ||f|| in A^2(Omega)
  double relative_deviation = 0.0;
  bool pass = false;
};

/// ||F f||_{H(polar)} = ||f||_{A^2(Omega)} with the diagonal F and the norm
/// ||z^alpha||^2_{H(polar)} = ||z^alpha||^2_Drury / lambda_alpha.
IsometryReport gelfand_isometry_check(const ReinhardtDomain& domain, const TruncatedSeries& f,
                                      double tol = 1e-10);

}  // namespace fan

#endif
