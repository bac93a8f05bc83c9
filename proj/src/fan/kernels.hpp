#ifndef FAN_KERNELS_HPP
#define FAN_KERNELS_HPP

#include "fan/measure.hpp"

namespace fan {

enum class KernelKind { Drury, Szego, Bergman, InvariantPoisson };

/// Reproducing kernels of the ball: 1/(1-<z,w>) with exponents 1, n, n+1,
/// and the invariant Poisson kernel |S(z,u)|^2 / S(z,z) (real-valued).
Complex kernel_eval(KernelKind kind, const std::vector<Complex>& z,
                    const std::vector<Complex>& w);

}  // namespace fan

#endif
