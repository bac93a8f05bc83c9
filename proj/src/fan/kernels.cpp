#include "fan/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace fan {

namespace {

Complex inv_power(const Complex& base, int exponent) {
  if (std::abs(base) == 0.0) throw std::domain_error("kernel pole: <z,w> = 1");
  Complex out = 1.0;
  for (int j = 0; j < exponent; ++j) out /= base;
  return out;
}

}  // namespace

Complex kernel_eval(KernelKind kind, const std::vector<Complex>& z,
                    const std::vector<Complex>& w) {
  const int n = static_cast<int>(z.size());
  const Complex d = 1.0 - hermitian_inner(z, w);
  switch (kind) {
    case KernelKind::Drury:
      return inv_power(d, 1);
    case KernelKind::Szego:
      return inv_power(d, n);
    case KernelKind::Bergman:
      return inv_power(d, n + 1);
    case KernelKind::InvariantPoisson: {
      if (norm2(z) >= 1.0) throw std::domain_error("invariant Poisson kernel needs |z| < 1");
      const Complex szw = inv_power(d, n);
      const Complex szz = inv_power(1.0 - hermitian_inner(z, z), n);
      return std::norm(szw) / szz.real();
    }
  }
  throw std::logic_error("unknown kernel kind");
}

}  // namespace fan
