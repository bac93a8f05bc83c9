#include "fan/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fan {

double Rng::uniform() {
  // 53-bit mantissa from the top bits; value in [0,1).
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::gaussian() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(a);
  have_cached_ = true;
  return r * std::cos(a);
}

std::complex<double> Rng::complex_gaussian() {
  return {gaussian() * std::numbers::sqrt2 / 2.0, gaussian() * std::numbers::sqrt2 / 2.0};
}

std::vector<std::complex<double>> Rng::unit_vector(int dim) {
  std::vector<std::complex<double>> v(static_cast<size_t>(dim));
  double s = 0.0;
  do {
    s = 0.0;
    for (auto& vi : v) {
      vi = complex_gaussian();
      s += std::norm(vi);
    }
    s = std::sqrt(s);
  } while (s == 0.0);
  for (auto& vi : v) vi /= s;
  return v;
}

std::vector<std::complex<double>> Rng::ball_point(int dim, double radius) {
  auto v = unit_vector(dim);
  const double r = radius * std::pow(uniform(), 1.0 / (2.0 * dim));
  for (auto& vi : v) vi *= r;
  return v;
}

std::uint64_t Rng::base_seed_mix(std::uint64_t stream) const {
  // splitmix64 step on the stream id; independent of internal engine state.
  std::uint64_t z = stream + 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

constexpr int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                           31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

double radical_inverse(std::uint64_t i, int base) {
  double inv = 1.0 / base;
  double f = inv;
  double x = 0.0;
  while (i > 0) {
    x += static_cast<double>(i % static_cast<std::uint64_t>(base)) * f;
    i /= static_cast<std::uint64_t>(base);
    f *= inv;
  }
  return x;
}

double inverse_normal_cdf(double p) {
  // Acklam's rational approximation; plenty for sampling directions.
  if (p <= 0.0 || p >= 1.0) throw std::invalid_argument("inverse_normal_cdf domain");
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) return -inverse_normal_cdf(1.0 - p);
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

std::vector<std::complex<double>> direction_from_uniforms(const std::vector<double>& u, int dim) {
  std::vector<std::complex<double>> v(static_cast<size_t>(dim));
  double s = 0.0;
  for (int i = 0; i < dim; ++i) {
    const double re = inverse_normal_cdf(std::min(std::max(u[static_cast<size_t>(2 * i)], 1e-12), 1.0 - 1e-12));
    const double im = inverse_normal_cdf(std::min(std::max(u[static_cast<size_t>(2 * i + 1)], 1e-12), 1.0 - 1e-12));
    v[static_cast<size_t>(i)] = {re, im};
    s += re * re + im * im;
  }
  s = std::sqrt(s);
  if (s == 0.0) {
    v[0] = 1.0;
    return v;
  }
  for (auto& vi : v) vi /= s;
  return v;
}

}  // namespace

Halton::Halton(int dim) : dim_(dim) {
  if (dim < 1 || dim > 20) throw std::invalid_argument("Halton dimension out of range");
}

std::vector<double> Halton::next() {
  ++index_;
  std::vector<double> u(static_cast<size_t>(dim_));
  for (int i = 0; i < dim_; ++i) u[static_cast<size_t>(i)] = radical_inverse(index_, kPrimes[i]);
  return u;
}

std::vector<std::vector<std::complex<double>>> quasi_ball_points(int dim, int count,
                                                                 double rmax) {
  Halton seq(2 * dim + 1);
  std::vector<std::vector<std::complex<double>>> pts;
  pts.reserve(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k) {
    const auto u = seq.next();
    auto v = direction_from_uniforms(u, dim);
    const double r = rmax * std::pow(u[static_cast<size_t>(2 * dim)], 1.0 / (2.0 * dim));
    for (auto& vi : v) vi *= r;
    pts.push_back(std::move(v));
  }
  return pts;
}

std::vector<std::vector<std::complex<double>>> quasi_sphere_points(int dim, int count) {
  Halton seq(2 * dim);
  std::vector<std::vector<std::complex<double>>> pts;
  pts.reserve(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k) {
    pts.push_back(direction_from_uniforms(seq.next(), dim));
  }
  return pts;
}

}  // namespace fan
