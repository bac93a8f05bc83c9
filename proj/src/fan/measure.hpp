#ifndef FAN_MEASURE_HPP
#define FAN_MEASURE_HPP

#include <complex>
#include <vector>

namespace fan {

using Complex = std::complex<double>;

struct Atom {
  std::vector<Complex> point;  // |point| <= 1
  double weight = 0.0;
};

/// Finitely many weighted atoms in the closed ball; stands in for every
/// measure on the ball or sphere.
class DiscreteMeasure {
 public:
  explicit DiscreteMeasure(int dim);
  DiscreteMeasure(int dim, std::vector<Atom> atoms);

  int dim() const { return dim_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  /// Weights may be negative only where an operation explicitly allows it;
  /// add_atom enforces the default non-negative convention.
  void add_atom(std::vector<Complex> point, double weight);

  double total_mass() const;
  bool all_on_sphere(double tol = 1e-12) const;
  void require_on_sphere(double tol = 1e-12) const;

 private:
  int dim_;
  std::vector<Atom> atoms_;
};

Complex hermitian_inner(const std::vector<Complex>& z, const std::vector<Complex>& w);
double norm2(const std::vector<Complex>& z);

}  // namespace fan

#endif
