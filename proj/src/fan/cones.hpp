#ifndef FAN_CONES_HPP
#define FAN_CONES_HPP

#include <Eigen/Dense>
#include <optional>
#include <string>

#include "fan/measure.hpp"
#include "fan/rng.hpp"
#include "fan/series.hpp"

namespace fan {

enum class Verdict { Pass, Fail, Inconclusive };

struct PositivityReport {
  Verdict verdict = Verdict::Inconclusive;
  /// Worst value observed: smallest eigenvalue, smallest sampled real part,
  /// or (for annihilation/moment checks) tolerance minus the worst modulus.
  double min_eigenvalue = 0.0;
  std::string worst_label;
  std::vector<std::vector<Complex>> witness_points;
  Eigen::VectorXcd witness_vector;

  bool passed() const { return verdict == Verdict::Pass; }
};

/// Gram of the positive-real-part kernel against the Drury kernel:
/// G_ij = [f(z_i) + conj(f(z_j))] / (1 - <z_i, z_j>).
Eigen::MatrixXcd schur_kernel_gram(const TruncatedSeries& f,
                                   const std::vector<std::vector<Complex>>& points);

/// Pass iff lambda_min(G) >= -tol (1 + ||G||) after Hermitian symmetrization.
PositivityReport psd_check(const Eigen::MatrixXcd& gram, double tol = 1e-9);

/// Sampled necessary condition for positive real part: Re f(z_i) >= -tol.
PositivityReport op_positivity_sample(const TruncatedSeries& f,
                                      const std::vector<std::vector<Complex>>& points,
                                      double tol = 1e-8);

/// Annihilation test for the three monomial families that characterize
/// representing measures of positive pluriharmonic functions. Atoms must lie
/// on the sphere; families run over |alpha|+|beta| <= max_degree.
PositivityReport kp_annihilation_check(const DiscreteMeasure& mu, int max_degree, double tol);

/// sum_k w_k (E f)(u_k) for sphere-supported mu.
Complex ef_functional(const TruncatedSeries& f, const DiscreteMeasure& mu);

/// Necessary moment conditions for membership in the Herglotz-transform cone:
/// candidate moments m_alpha = (alpha!/|alpha|!) coeff of z^alpha in
/// (f + conj(f(0)))/2 must satisfy m_0 >= 0 and |m_alpha| <= m_0.
PositivityReport mp_necessary_check(const TruncatedSeries& f, double tol = 1e-12);

/// Re Q(f, g); non-negative when f is a Herglotz transform and Re g >= 0.
double dual_pair_check(const TruncatedSeries& f, const TruncatedSeries& g);

/// p - Re(p(0))/2 - i Im(p(0)): the shift whose Herglotz-cone membership makes
/// the positive functional calculus hypothesis hold.
TruncatedSeries herglotz_shift(const TruncatedSeries& p);

/// Coefficientwise check that E[f + conj(f(0))] = 2 v(z,0) where f is the
/// Herglotz transform of mu and v(z,0) = sum_k w_k S(z,u_k).
PositivityReport mharmonic_link_check(const DiscreteMeasure& mu, int max_degree, double tol);

struct SchurViolationWitness {
  std::vector<std::vector<Complex>> points;
  Eigen::VectorXcd vector;
  double min_eigenvalue = 0.0;
};

/// Best-effort randomized search for a point set whose Gram is indefinite.
/// Point-set sizes 2..40, radius sweep 0.5..0.95, budget counts Gram entries.
std::optional<SchurViolationWitness> search_schur_violation(
    const TruncatedSeries& f, std::uint64_t seed = kDefaultSeed,
    std::size_t entry_budget = 100000);

/// Random positive measure with the given number of atoms on the unit sphere.
DiscreteMeasure random_sphere_measure(Rng& rng, int dim, int atoms);

}  // namespace fan

#endif
