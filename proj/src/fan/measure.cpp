#include "fan/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace fan {

DiscreteMeasure::DiscreteMeasure(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("measure dimension must be >= 1");
}

DiscreteMeasure::DiscreteMeasure(int dim, std::vector<Atom> atoms) : DiscreteMeasure(dim) {
  for (auto& a : atoms) add_atom(std::move(a.point), a.weight);
}

void DiscreteMeasure::add_atom(std::vector<Complex> point, double weight) {
  if (static_cast<int>(point.size()) != dim_)
    throw std::invalid_argument("atom dimension mismatch");
  if (!std::isfinite(weight) || weight < 0.0)
    throw std::invalid_argument("atom weight must be finite and >= 0");
  if (norm2(point) > 1.0 + 1e-12)
    throw std::invalid_argument("atom lies outside the closed ball");
  atoms_.push_back(Atom{std::move(point), weight});
}

double DiscreteMeasure::total_mass() const {
  double m = 0.0;
  for (const auto& a : atoms_) m += a.weight;
  return m;
}

bool DiscreteMeasure::all_on_sphere(double tol) const {
  for (const auto& a : atoms_) {
    if (std::abs(norm2(a.point) - 1.0) > tol) return false;
  }
  return true;
}

void DiscreteMeasure::require_on_sphere(double tol) const {
  if (!all_on_sphere(tol)) throw std::invalid_argument("measure atom off the unit sphere");
}

Complex hermitian_inner(const std::vector<Complex>& z, const std::vector<Complex>& w) {
  if (z.size() != w.size()) throw std::invalid_argument("point dimension mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) s += z[i] * std::conj(w[i]);
  return s;
}

double norm2(const std::vector<Complex>& z) {
  double s = 0.0;
  for (const auto& zi : z) s += std::norm(zi);
  return std::sqrt(s);
}

}  // namespace fan
