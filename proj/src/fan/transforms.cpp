#include "fan/transforms.hpp"

#include <stdexcept>

namespace fan {

DiagonalOperator::DiagonalOperator(int dim, std::string name, Rule rule)
    : dim_(dim), name_(std::move(name)), rule_(std::move(rule)) {
  if (dim < 1) throw std::invalid_argument("operator dimension must be >= 1");
}

Rational DiagonalOperator::eigenvalue(const MultiIndex& alpha) const {
  if (alpha.dim() != dim_) throw std::invalid_argument("eigenvalue index dimension mismatch");
  return rule_(alpha);
}

TruncatedSeries DiagonalOperator::apply(const TruncatedSeries& f) const {
  if (f.dim() != dim_) throw std::invalid_argument("operator/series dimension mismatch");
  TruncatedSeries out(f.dim(), f.max_degree());
  for (const auto& [alpha, c] : f.coeffs()) {
    out.set_coeff(alpha, c * to_double(rule_(alpha)));
  }
  return out;
}

DiagonalOperator compose(const DiagonalOperator& a, const DiagonalOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operator dimension mismatch");
  return DiagonalOperator(a.dim(), a.name() + "*" + b.name(),
                          [a, b](const MultiIndex& alpha) {
                            return a.eigenvalue(alpha) * b.eigenvalue(alpha);
                          });
}

DiagonalOperator fantappie_op(int dim) {
  return DiagonalOperator(dim, "F", [dim](const MultiIndex& alpha) {
    return Rational(1, rising_product(alpha.degree(), dim));
  });
}

DiagonalOperator euler_L_op(int dim) {
  return DiagonalOperator(dim, "L", [dim](const MultiIndex& alpha) {
    return Rational(rising_product(alpha.degree(), dim));
  });
}

DiagonalOperator hardy_euler_E_op(int dim) {
  return DiagonalOperator(dim, "E", [dim](const MultiIndex& alpha) {
    return Rational(binom(dim + alpha.degree() - 1, dim - 1));
  });
}

DiagonalOperator lambda_op(int dim) {
  return DiagonalOperator(dim, "lambda", [dim](const MultiIndex& alpha) {
    if (alpha.degree() == 0) return Rational(1);
    return Rational(1, 2 * rising_product(alpha.degree(), dim - 1));
  });
}

DiagonalOperator gamma_op(int dim) {
  return DiagonalOperator(dim, "gamma", [dim](const MultiIndex& alpha) {
    if (alpha.degree() == 0) return Rational(1);
    return Rational(2 * rising_product(alpha.degree(), dim - 1));
  });
}

TruncatedSeries fantappie_series(const TruncatedSeries& f) { return fantappie_op(f.dim()).apply(f); }
TruncatedSeries euler_L(const TruncatedSeries& f) { return euler_L_op(f.dim()).apply(f); }
TruncatedSeries hardy_euler_E(const TruncatedSeries& f) { return hardy_euler_E_op(f.dim()).apply(f); }
TruncatedSeries lambda_apply(const TruncatedSeries& f) { return lambda_op(f.dim()).apply(f); }
TruncatedSeries gamma_apply(const TruncatedSeries& f) { return gamma_op(f.dim()).apply(f); }

std::pair<DiagonalOperator, DiagonalOperator> general_lambda_gamma(
    const std::map<MultiIndex, Rational, CanonicalLess>& moments, int dim) {
  for (const auto& [alpha, m] : moments) {
    if (alpha.dim() != dim) throw std::invalid_argument("moment index dimension mismatch");
    if (m <= 0) throw std::invalid_argument("moments must be positive");
  }
  auto lambda_rule = [moments, dim](const MultiIndex& alpha) {
    auto it = moments.find(alpha);
    if (it == moments.end()) throw std::invalid_argument("missing quadrature moment");
    if (alpha.degree() == 0) return it->second / 2 + Rational(1, 2);
    return Rational(multinomial_weight(alpha)) * it->second / 2;
  };
  DiagonalOperator lambda(dim, "lambda[omega]", lambda_rule);
  DiagonalOperator gamma(dim, "gamma[omega]", [lambda_rule](const MultiIndex& alpha) {
    return Rational(1) / lambda_rule(alpha);
  });
  return {lambda, gamma};
}

std::pair<DiagonalOperator, DiagonalOperator> general_lambda_gamma(
    const std::map<MultiIndex, double, CanonicalLess>& moments, int dim) {
  std::map<MultiIndex, Rational, CanonicalLess> exact;
  for (const auto& [alpha, m] : moments) {
    if (!(m > 0.0)) throw std::invalid_argument("moments must be positive");
    exact.emplace(alpha, Rational(m));
  }
  return general_lambda_gamma(exact, dim);
}

namespace {

Complex resolvent_factor(const std::vector<Complex>& z, const std::vector<Complex>& u) {
  const Complex denom = 1.0 - hermitian_inner(z, u);
  if (std::abs(denom) == 0.0) throw std::domain_error("pole: <z,u> = 1 at an atom");
  return 1.0 / denom;
}

}  // namespace

Complex fantappie_measure(const DiscreteMeasure& mu, const std::vector<Complex>& z) {
  Complex sum = 0.0;
  for (const auto& a : mu.atoms()) sum += a.weight * resolvent_factor(z, a.point);
  return sum;
}

Complex herglotz_measure(const DiscreteMeasure& mu, const std::vector<Complex>& z) {
  Complex sum = 0.0;
  for (const auto& a : mu.atoms()) {
    const Complex s = hermitian_inner(z, a.point);
    if (std::abs(1.0 - s) == 0.0) throw std::domain_error("pole: <z,u> = 1 at an atom");
    sum += a.weight * (1.0 + s) / (1.0 - s);
  }
  return sum;
}

Complex szego_herglotz_measure(const DiscreteMeasure& mu, double t, const std::vector<Complex>& z) {
  Complex sum(0.0, t);
  for (const auto& a : mu.atoms()) {
    Complex szego = 1.0;
    const Complex r = resolvent_factor(z, a.point);
    for (int j = 0; j < mu.dim(); ++j) szego *= r;
    sum += a.weight * (2.0 * szego - 1.0);
  }
  return sum;
}

TruncatedSeries fantappie_measure_series(const DiscreteMeasure& mu, int max_degree) {
  TruncatedSeries out(mu.dim(), max_degree);
  // Per-atom tables of conj(u_i)^k avoid recomputing powers per index.
  std::vector<std::vector<std::vector<Complex>>> pows(mu.size());
  for (std::size_t k = 0; k < mu.size(); ++k) {
    pows[k].resize(static_cast<size_t>(mu.dim()));
    for (int i = 0; i < mu.dim(); ++i) {
      auto& p = pows[k][static_cast<size_t>(i)];
      p.resize(static_cast<size_t>(max_degree) + 1);
      p[0] = 1.0;
      for (int d = 1; d <= max_degree; ++d)
        p[static_cast<size_t>(d)] = p[static_cast<size_t>(d - 1)] * std::conj(mu.atoms()[k].point[static_cast<size_t>(i)]);
    }
  }
  for (const MultiIndex& alpha : enumerate_upto(mu.dim(), max_degree)) {
    Complex moment = 0.0;
    for (std::size_t k = 0; k < mu.size(); ++k) {
      Complex term = mu.atoms()[k].weight;
      for (int i = 0; i < mu.dim(); ++i) term *= pows[k][static_cast<size_t>(i)][static_cast<size_t>(alpha[i])];
      moment += term;
    }
    const Complex c = moment * to_double(Rational(multinomial_weight(alpha)));
    if (c != 0.0) out.set_coeff(alpha, c);
  }
  return out;
}

TruncatedSeries herglotz_measure_series(const DiscreteMeasure& mu, int max_degree) {
  TruncatedSeries out = scale(fantappie_measure_series(mu, max_degree), 2.0);
  out.add_coeff(MultiIndex::zero(mu.dim()), -mu.total_mass());
  return out;
}

}  // namespace fan
