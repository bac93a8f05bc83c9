#include "fan/series.hpp"

#include <cmath>
#include <stdexcept>

namespace fan {

TruncatedSeries::TruncatedSeries(int dim, int max_degree) : dim_(dim), max_degree_(max_degree) {
  if (dim < 1) throw std::invalid_argument("series dimension must be >= 1");
  if (max_degree < 0) throw std::invalid_argument("series degree cap must be >= 0");
}

TruncatedSeries TruncatedSeries::constant(int dim, int max_degree, Complex value) {
  TruncatedSeries f(dim, max_degree);
  if (value != 0.0) f.set_coeff(MultiIndex::zero(dim), value);
  return f;
}

TruncatedSeries TruncatedSeries::monomial(int dim, int max_degree, const MultiIndex& alpha,
                                          Complex value) {
  TruncatedSeries f(dim, max_degree);
  f.set_coeff(alpha, value);
  return f;
}

Complex TruncatedSeries::coeff(const MultiIndex& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? Complex(0.0) : it->second;
}

void TruncatedSeries::set_coeff(const MultiIndex& alpha, Complex value) {
  if (alpha.dim() != dim_) throw std::invalid_argument("coefficient index dimension mismatch");
  if (alpha.degree() > max_degree_)
    throw std::invalid_argument("coefficient index exceeds the series degree cap");
  if (value == 0.0) {
    coeffs_.erase(alpha);
  } else {
    coeffs_[alpha] = value;
  }
}

void TruncatedSeries::add_coeff(const MultiIndex& alpha, Complex value) {
  set_coeff(alpha, coeff(alpha) + value);
}

int TruncatedSeries::support_degree() const {
  int d = 0;
  for (const auto& [alpha, c] : coeffs_) d = std::max(d, alpha.degree());
  return d;
}

Complex TruncatedSeries::evaluate(const std::vector<Complex>& z) const {
  if (static_cast<int>(z.size()) != dim_)
    throw std::invalid_argument("evaluation point dimension mismatch");
  // Power tables per coordinate; the support degree bounds every exponent.
  const int dmax = support_degree();
  std::vector<std::vector<Complex>> pow(static_cast<size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    auto& p = pow[static_cast<size_t>(i)];
    p.resize(static_cast<size_t>(dmax) + 1);
    p[0] = 1.0;
    for (int k = 1; k <= dmax; ++k) p[static_cast<size_t>(k)] = p[static_cast<size_t>(k - 1)] * z[static_cast<size_t>(i)];
  }
  Complex sum = 0.0;
  for (const auto& [alpha, c] : coeffs_) {
    Complex term = c;
    for (int i = 0; i < dim_; ++i) term *= pow[static_cast<size_t>(i)][static_cast<size_t>(alpha[i])];
    sum += term;
  }
  return sum;
}

void TruncatedSeries::canonicalize(double threshold) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (std::abs(it->second) < threshold) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
}

TruncatedSeries TruncatedSeries::truncated(int new_max_degree) const {
  TruncatedSeries out(dim_, new_max_degree);
  for (const auto& [alpha, c] : coeffs_) {
    if (alpha.degree() <= new_max_degree) out.set_coeff(alpha, c);
  }
  return out;
}

namespace {

void require_same_dim(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("series dimension mismatch");
}

}  // namespace

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_dim(f, g);
  TruncatedSeries out(f.dim(), std::max(f.max_degree(), g.max_degree()));
  for (const auto& [alpha, c] : f.coeffs()) out.add_coeff(alpha, c);
  for (const auto& [alpha, c] : g.coeffs()) out.add_coeff(alpha, c);
  return out;
}

TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g) {
  return add(f, scale(g, -1.0));
}

TruncatedSeries scale(const TruncatedSeries& f, Complex c) {
  TruncatedSeries out(f.dim(), f.max_degree());
  if (c == 0.0) return out;
  for (const auto& [alpha, v] : f.coeffs()) out.set_coeff(alpha, c * v);
  return out;
}

TruncatedSeries multiply(const TruncatedSeries& f, const TruncatedSeries& g, int cap) {
  require_same_dim(f, g);
  TruncatedSeries out(f.dim(), cap);
  for (const auto& [a, ca] : f.coeffs()) {
    const int da = a.degree();
    if (da > cap) continue;
    for (const auto& [b, cb] : g.coeffs()) {
      if (da + b.degree() > cap) continue;
      out.add_coeff(a.plus(b), ca * cb);
    }
  }
  return out;
}

Rational monomial_norm_sq(SpaceTag space, const MultiIndex& alpha) {
  BigInt alpha_fact = 1;
  for (int i = 0; i < alpha.dim(); ++i) alpha_fact *= factorial(alpha[i]);
  const int d = alpha.degree();
  const int n = alpha.dim();
  switch (space) {
    case SpaceTag::Drury:
      return Rational(alpha_fact, factorial(d));
    case SpaceTag::Hardy:
      return Rational(alpha_fact, factorial(d + n - 1));
    case SpaceTag::Bergman:
      return Rational(alpha_fact, factorial(d + n));
  }
  throw std::logic_error("unknown space tag");
}

Complex inner_product(SpaceTag space, const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_dim(f, g);
  Complex sum = 0.0;
  for (const auto& [alpha, cf] : f.coeffs()) {
    const Complex cg = g.coeff(alpha);
    if (cg == 0.0) continue;
    sum += cf * std::conj(cg) * to_double(monomial_norm_sq(space, alpha));
  }
  return sum;
}

double norm(SpaceTag space, const TruncatedSeries& f) {
  return std::sqrt(std::max(0.0, inner_product(space, f, f).real()));
}

Complex q_form(const TruncatedSeries& f, const TruncatedSeries& g, bool truncation_suspect) {
  require_same_dim(f, g);
  if (truncation_suspect)
    throw std::domain_error("q_form undefined: input exceeds its truncation support");
  Complex sum = std::conj(f.at_origin()) * g.at_origin();
  for (const auto& [alpha, cf] : f.coeffs()) {
    const Complex cg = g.coeff(alpha);
    if (cg == 0.0) continue;
    sum += cf * std::conj(cg) * to_double(monomial_norm_sq(SpaceTag::Drury, alpha));
  }
  return sum;
}

TruncatedSeries reciprocal(const TruncatedSeries& f) {
  const Complex c0 = f.at_origin();
  if (c0 == 0.0) throw std::domain_error("reciprocal: vanishing constant term");
  const int cap = f.max_degree();
  // f = c0 (1 - u) with u(0) = 0, so 1/f = (1/c0) sum u^k; u^k has order >= k.
  TruncatedSeries u = scale(f, -1.0 / c0);
  u.add_coeff(MultiIndex::zero(f.dim()), 1.0);
  TruncatedSeries out = TruncatedSeries::constant(f.dim(), cap, 1.0);
  TruncatedSeries upow = TruncatedSeries::constant(f.dim(), cap, 1.0);
  for (int k = 1; k <= cap; ++k) {
    upow = multiply(upow, u, cap);
    if (upow.coeffs().empty()) break;
    out = add(out, upow);
  }
  return scale(out, 1.0 / c0);
}

TruncatedSeries cayley(const TruncatedSeries& q) {
  if (q.at_origin() == 1.0) throw std::domain_error("cayley: q(0) = 1");
  TruncatedSeries one = TruncatedSeries::constant(q.dim(), q.max_degree(), 1.0);
  return multiply(add(one, q), reciprocal(sub(one, q)), q.max_degree());
}

TruncatedSeries cayley_inverse(const TruncatedSeries& p) {
  if (p.at_origin() == -1.0) throw std::domain_error("cayley_inverse: p(0) = -1");
  TruncatedSeries one = TruncatedSeries::constant(p.dim(), p.max_degree(), 1.0);
  return multiply(sub(p, one), reciprocal(add(p, one)), p.max_degree());
}

double multiplier_lower_bound(const TruncatedSeries& q, const TruncatedSeries& h) {
  if (h.coeffs().empty()) throw std::invalid_argument("multiplier_lower_bound: h = 0");
  const int product_degree = q.support_degree() + h.support_degree();
  // The bound is only certified when the product is exact, i.e. the caller
  // raised the cap far enough to hold deg q + deg h.
  if (product_degree > std::max(q.max_degree(), h.max_degree()))
    throw std::domain_error("multiplier_lower_bound: degree overflow, raise the cap");
  const TruncatedSeries qh = multiply(q, h, product_degree);
  return norm(SpaceTag::Drury, qh) / norm(SpaceTag::Drury, h);
}

}  // namespace fan
