#ifndef FAN_SERIES_HPP
#define FAN_SERIES_HPP

#include <complex>
#include <map>
#include <vector>

#include "fan/mindex.hpp"

namespace fan {

using Complex = std::complex<double>;

enum class SpaceTag { Drury, Hardy, Bergman };

/// Holomorphic polynomial on the ball: complex coefficients keyed by
/// multi-index, all of degree <= max_degree. Absent keys are zero.
class TruncatedSeries {
 public:
  using CoeffMap = std::map<MultiIndex, Complex, CanonicalLess>;

  TruncatedSeries(int dim, int max_degree);
  static TruncatedSeries constant(int dim, int max_degree, Complex value);
  static TruncatedSeries monomial(int dim, int max_degree, const MultiIndex& alpha,
                                  Complex value = 1.0);

  int dim() const { return dim_; }
  int max_degree() const { return max_degree_; }
  const CoeffMap& coeffs() const { return coeffs_; }

  Complex coeff(const MultiIndex& alpha) const;
  void set_coeff(const MultiIndex& alpha, Complex value);
  void add_coeff(const MultiIndex& alpha, Complex value);

  Complex at_origin() const { return coeff(MultiIndex::zero(dim_)); }
  /// Largest degree with a stored coefficient (0 for the zero series).
  int support_degree() const;

  Complex evaluate(const std::vector<Complex>& z) const;

  /// Drops stored coefficients of modulus < threshold. Never implicit.
  void canonicalize(double threshold = 1e-30);

  /// Copy re-truncated to a new cap (coefficients beyond it are dropped).
  TruncatedSeries truncated(int new_max_degree) const;

 private:
  int dim_;
  int max_degree_;
  CoeffMap coeffs_;
};

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries scale(const TruncatedSeries& f, Complex c);
/// Product truncated to the given cap. Exact when deg f + deg g <= cap.
TruncatedSeries multiply(const TruncatedSeries& f, const TruncatedSeries& g, int cap);

/// Squared monomial norm in the named space, exact:
///   Drury alpha!/|alpha|!, Hardy alpha!/(|alpha|+n-1)!, Bergman alpha!/(|alpha|+n)!.
Rational monomial_norm_sq(SpaceTag space, const MultiIndex& alpha);

/// sum_alpha f_alpha conj(g_alpha) ||z^alpha||^2, over the union of supports.
Complex inner_product(SpaceTag space, const TruncatedSeries& f, const TruncatedSeries& g);
double norm(SpaceTag space, const TruncatedSeries& f);

/// Q(f,g) = sum f_alpha conj(g_alpha) alpha!/|alpha|! + conj(f(0)) g(0).
/// Declared undefined when the caller flags a truncation-support overflow.
Complex q_form(const TruncatedSeries& f, const TruncatedSeries& g,
               bool truncation_suspect = false);

/// Multiplicative inverse up to the cap (Neumann series); needs f(0) != 0.
TruncatedSeries reciprocal(const TruncatedSeries& f);

/// (1+q) / (1-q) truncated; needs q(0) != 1.
TruncatedSeries cayley(const TruncatedSeries& q);
/// (p-1) / (p+1), inverse of cayley; needs p(0) != -1.
TruncatedSeries cayley_inverse(const TruncatedSeries& p);

/// ||q h||_Drury / ||h||_Drury with the product computed exactly; a certified
/// lower bound for the Drury multiplier norm of q.
double multiplier_lower_bound(const TruncatedSeries& q, const TruncatedSeries& h);

}  // namespace fan

#endif
