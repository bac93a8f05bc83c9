#ifndef FAN_REALIZATION_HPP
#define FAN_REALIZATION_HPP

#include <Eigen/Dense>
#include <limits>
#include <vector>

#include "fan/measure.hpp"
#include "fan/mindex.hpp"

namespace fan {

enum class RealizationForm { SchurF4, OpF5, NormalH9 };

struct RealizationBlock {
  MultiIndex alpha;        // SchurF4/NormalH9: a coordinate unit e_i
  Eigen::MatrixXcd matrix; // square, on the common state space L
};

/// Finite-dimensional resolvent model f(z) = <[2(I - A(z))^{-1} - I] xi, xi> + it
/// where A(z) sums the blocks against z:
///   SchurF4, NormalH9:  A(z) = sum_i z_i V_i,
///   OpF5:               A(z) = sum_alpha sqrt(C(n,|alpha|)) z^alpha V_alpha
///                       over stored odd-degree indices |alpha| <= n.
/// Finite blocks are row contractions in general, not isometries; any isometry
/// property is a measured quantity (see isometry_defect).
struct RealizationData {
  RealizationForm form = RealizationForm::SchurF4;
  int dim = 1;        // ambient variable count n
  int space_dim = 0;  // dim of the state space L
  std::vector<RealizationBlock> blocks;
  Eigen::VectorXcd state;
  double t = 0.0;
  /// Sampled Gram defect of the factorization map (zero iff the kernel
  /// factorization behind the construction is exact on the samples).
  double isometry_defect = std::numeric_limits<double>::quiet_NaN();

  void validate() const;
};

Complex realization_eval(const RealizationData& r, const std::vector<Complex>& z);

/// Multiplication model on L^2(mu): diagonal blocks carrying conj(u_{k,i}) so
/// that A(z) is multiplication by <z, u_k>; state = sqrt(weights).
RealizationData build_normal_h9(const DiscreteMeasure& mu, double t = 0.0);

/// Resolvent model reproducing sum_k w_k [2 S(z,u_k) - 1] + it with degree-one
/// blocks built from per-atom Jordan-type cells whose moment sequence matches
/// the Szego expansion. isometry_defect reports the sampled Gram defect of the
/// factorization map (near zero exactly when the measure annihilates the
/// pluriharmonic families).
RealizationData build_f2_realization(const DiscreteMeasure& mu, double t = 0.0);

/// Truncated creation-operator blocks on the word space with length <= max_len:
/// V_i xi_w = xi_{iw} (dropped at the cap). V_i^* V_j = delta_ij off the top
/// level, so these approximate an exact row isometry.
std::vector<RealizationBlock> truncated_creation_blocks(int dim, int max_len);

/// State-space dimension of the truncated word space.
int word_space_dim(int dim, int max_len);

}  // namespace fan

#endif
