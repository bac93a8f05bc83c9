#ifndef FAN_QUADRATURE_HPP
#define FAN_QUADRATURE_HPP

#include <vector>

#include "fan/measure.hpp"
#include "fan/mindex.hpp"

namespace fan {

/// Gauss-Legendre nodes/weights on [0,1]; exact for polynomial degree 2m-1.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre_01(int m);

/// Modulus profile of the sphere rule: nodes on the simplex {sum |u_i|^2 = 1}
/// with positive weights summing to 1, plus the phase-grid size per
/// coordinate.
struct SphereProfile {
  std::vector<std::vector<double>> radii;  // per node, |u_i| per coordinate
  std::vector<double> weights;
  int phases = 1;
};
SphereProfile sphere_profile(int dim, int max_degree);

/// Positive quadrature on the unit sphere of C^n (n = 2 or 3), normalized to
/// total mass 1, exact for all monomial integrals int u^gamma conj(u)^delta
/// with |gamma| <= D+1 and |delta| <= D+1 (covers |gamma|+|delta| <= 2D and
/// the annihilation families at cap D). Tensor of per-coordinate phase grids
/// with Gauss radial profiles on the modulus simplex.
DiscreteMeasure sphere_quadrature(int dim, int max_degree);

/// Closed-form sphere moment: int |u^alpha|^2 dsigma = alpha!(n-1)!/(|alpha|+n-1)!
/// for the mass-1 surface measure.
Rational sphere_moment(const MultiIndex& alpha);

}  // namespace fan

#endif
