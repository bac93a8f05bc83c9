#ifndef FAN_TRANSFORMS_HPP
#define FAN_TRANSFORMS_HPP

#include <functional>
#include <map>
#include <string>

#include "fan/measure.hpp"
#include "fan/series.hpp"

namespace fan {

/// Coefficient-diagonal operator: multiplies f_alpha by an eigenvalue that
/// depends only on alpha. Eigenvalues are exact rationals so compositions
/// (e.g. an operator against its inverse) stay exact.
class DiagonalOperator {
 public:
  using Rule = std::function<Rational(const MultiIndex&)>;

  DiagonalOperator(int dim, std::string name, Rule rule);

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }

  Rational eigenvalue(const MultiIndex& alpha) const;
  TruncatedSeries apply(const TruncatedSeries& f) const;

 private:
  int dim_;
  std::string name_;
  Rule rule_;
};

DiagonalOperator compose(const DiagonalOperator& a, const DiagonalOperator& b);

/// (F f)_alpha = f_alpha / ((|alpha|+1)...(|alpha|+n)).
DiagonalOperator fantappie_op(int dim);
/// L z^alpha = (|alpha|+1)...(|alpha|+n) z^alpha; exact inverse of F.
DiagonalOperator euler_L_op(int dim);
/// E z^alpha = C(n+|alpha|-1, n-1) z^alpha (Hardy-adapted Euler operator).
DiagonalOperator hardy_euler_E_op(int dim);
/// Lambda z^alpha = z^alpha / (2 (|alpha|+1)...(|alpha|+n-1)) for alpha != 0,
/// Lambda 1 = 1.
DiagonalOperator lambda_op(int dim);
/// Gamma p = 2 (n-1)! E[p - p(0)] + p(0); diagonal inverse of Lambda.
DiagonalOperator gamma_op(int dim);

TruncatedSeries fantappie_series(const TruncatedSeries& f);
TruncatedSeries euler_L(const TruncatedSeries& f);
TruncatedSeries hardy_euler_E(const TruncatedSeries& f);
TruncatedSeries lambda_apply(const TruncatedSeries& f);
TruncatedSeries gamma_apply(const TruncatedSeries& f);

/// Lambda/Gamma pair for a circularly invariant boundary quadrature with
/// monomial moments M_alpha = int |u^alpha|^2 d omega:
///   Lambda z^alpha = (1/2)(|alpha|!/alpha!) M_alpha z^alpha (alpha != 0),
///   Lambda 1 = M_0/2 + 1/2, and Gamma the diagonal inverse.
/// Moments must be supplied for every index the operators will touch.
std::pair<DiagonalOperator, DiagonalOperator> general_lambda_gamma(
    const std::map<MultiIndex, Rational, CanonicalLess>& moments, int dim);

/// Convenience overload for floating moments (eigenvalues exact in the given
/// values, but compositions then round like any double arithmetic).
std::pair<DiagonalOperator, DiagonalOperator> general_lambda_gamma(
    const std::map<MultiIndex, double, CanonicalLess>& moments, int dim);

/// sum_k w_k / (1 - <z, u_k>); pole when some <z,u_k> = 1.
Complex fantappie_measure(const DiscreteMeasure& mu, const std::vector<Complex>& z);
/// sum_k w_k (1 + <z,u_k>) / (1 - <z,u_k>).
Complex herglotz_measure(const DiscreteMeasure& mu, const std::vector<Complex>& z);
/// sum_k w_k [2 (1 - <z,u_k>)^{-n} - 1] + i t.
Complex szego_herglotz_measure(const DiscreteMeasure& mu, double t, const std::vector<Complex>& z);

/// Taylor expansion of F mu up to the cap: (F mu)_alpha = (|alpha|!/alpha!)
/// sum_k w_k conj(u_k)^alpha.
TruncatedSeries fantappie_measure_series(const DiscreteMeasure& mu, int max_degree);
/// Taylor expansion of the Herglotz transform: 2 F mu - mass.
TruncatedSeries herglotz_measure_series(const DiscreteMeasure& mu, int max_degree);

}  // namespace fan

#endif
