#ifndef FAN_RNG_HPP
#define FAN_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace fan {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Deterministic random source. Gaussian variates are produced by an explicit
/// Box-Muller transform on top of mt19937_64 so streams are identical across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : eng_(seed) {}

  double uniform();                       // [0, 1)
  double uniform(double lo, double hi);
  double gaussian();
  std::complex<double> complex_gaussian();

  /// Haar-uniform point on the unit sphere of C^n.
  std::vector<std::complex<double>> unit_vector(int dim);
  /// Uniform point in the ball of the given radius.
  std::vector<std::complex<double>> ball_point(int dim, double radius = 1.0);

  Rng fork(std::uint64_t stream) const { return Rng(base_seed_mix(stream)); }

 private:
  std::uint64_t base_seed_mix(std::uint64_t stream) const;
  std::mt19937_64 eng_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

/// Halton low-discrepancy sequence in [0,1)^dim (index starts at 1).
class Halton {
 public:
  explicit Halton(int dim);
  std::vector<double> next();

 private:
  int dim_;
  std::uint64_t index_ = 0;
};

/// Deterministic quasi-random points in the closed ball of radius rmax
/// (Halton driven; Box-Muller direction, radius by inverse cdf).
std::vector<std::vector<std::complex<double>>> quasi_ball_points(int dim, int count,
                                                                 double rmax);
/// Deterministic quasi-random points on the unit sphere of C^n.
std::vector<std::vector<std::complex<double>>> quasi_sphere_points(int dim, int count);

}  // namespace fan

#endif
