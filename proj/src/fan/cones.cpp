#include "fan/cones.hpp"

#include <cmath>
#include <stdexcept>

#include "fan/kernels.hpp"
#include "fan/transforms.hpp"

namespace fan {

Eigen::MatrixXcd schur_kernel_gram(const TruncatedSeries& f,
                                   const std::vector<std::vector<Complex>>& points) {
  const auto m = static_cast<Eigen::Index>(points.size());
  std::vector<Complex> values(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (norm2(points[i]) >= 1.0)
      throw std::invalid_argument("schur_kernel_gram: points must lie in the open ball");
    values[i] = f.evaluate(points[i]);
  }
  Eigen::MatrixXcd gram(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const Complex k = kernel_eval(KernelKind::Drury, points[static_cast<size_t>(i)],
                                    points[static_cast<size_t>(j)]);
      gram(i, j) = (values[static_cast<size_t>(i)] + std::conj(values[static_cast<size_t>(j)])) * k;
    }
  }
  return gram;
}

PositivityReport psd_check(const Eigen::MatrixXcd& gram, double tol) {
  if (gram.rows() != gram.cols()) throw std::invalid_argument("psd_check: matrix must be square");
  PositivityReport report;
  const Eigen::MatrixXcd herm = 0.5 * (gram + gram.adjoint());
  const double asym = (gram - gram.adjoint()).norm() * 0.5;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(herm);
  const double scale = std::max(std::abs(eig.eigenvalues().minCoeff()),
                                std::abs(eig.eigenvalues().maxCoeff()));
  if (asym > 1e-12 * (1.0 + scale)) {
    report.verdict = Verdict::Inconclusive;
    report.worst_label = "input not Hermitian within tolerance";
    report.min_eigenvalue = eig.eigenvalues().minCoeff();
    return report;
  }
  report.min_eigenvalue = eig.eigenvalues().minCoeff();
  if (report.min_eigenvalue >= -tol * (1.0 + scale)) {
    report.verdict = Verdict::Pass;
  } else {
    report.verdict = Verdict::Fail;
    report.witness_vector = eig.eigenvectors().col(0);
    report.worst_label = "negative eigenvalue";
  }
  return report;
}

PositivityReport op_positivity_sample(const TruncatedSeries& f,
                                      const std::vector<std::vector<Complex>>& points,
                                      double tol) {
  PositivityReport report;
  report.verdict = Verdict::Pass;
  report.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (const auto& z : points) {
    if (norm2(z) >= 1.0)
      throw std::invalid_argument("op_positivity_sample: points must lie in the open ball");
    const double re = f.evaluate(z).real();
    if (re < report.min_eigenvalue) {
      report.min_eigenvalue = re;
      report.witness_points = {z};
    }
  }
  if (points.empty()) report.min_eigenvalue = 0.0;
  if (report.min_eigenvalue < -tol) {
    report.verdict = Verdict::Fail;
    report.worst_label = "negative sampled real part";
  } else {
    report.witness_points.clear();
  }
  return report;
}

namespace {

struct AtomPowers {
  // pow[i][p] = u_i^p, cpow[i][p] = conj(u_i)^p
  std::vector<std::vector<Complex>> pow, cpow;
  double weight = 0.0;
  std::vector<double> abs2;  // |u_i|^2
};

std::vector<AtomPowers> atom_power_tables(const DiscreteMeasure& mu, int max_power) {
  std::vector<AtomPowers> tables;
  tables.reserve(mu.size());
  for (const auto& atom : mu.atoms()) {
    AtomPowers t;
    t.weight = atom.weight;
    t.pow.resize(static_cast<size_t>(mu.dim()));
    t.cpow.resize(static_cast<size_t>(mu.dim()));
    t.abs2.resize(static_cast<size_t>(mu.dim()));
    for (int i = 0; i < mu.dim(); ++i) {
      auto& p = t.pow[static_cast<size_t>(i)];
      auto& c = t.cpow[static_cast<size_t>(i)];
      p.resize(static_cast<size_t>(max_power) + 1);
      c.resize(static_cast<size_t>(max_power) + 1);
      p[0] = c[0] = 1.0;
      for (int k = 1; k <= max_power; ++k) {
        p[static_cast<size_t>(k)] = p[static_cast<size_t>(k - 1)] * atom.point[static_cast<size_t>(i)];
        c[static_cast<size_t>(k)] = c[static_cast<size_t>(k - 1)] * std::conj(atom.point[static_cast<size_t>(i)]);
      }
      t.abs2[static_cast<size_t>(i)] = std::norm(atom.point[static_cast<size_t>(i)]);
    }
    tables.push_back(std::move(t));
  }
  return tables;
}

Complex monomial_at(const AtomPowers& t, const MultiIndex& hol, const MultiIndex& antihol) {
  Complex v = 1.0;
  for (int i = 0; i < hol.dim(); ++i) {
    v *= t.pow[static_cast<size_t>(i)][static_cast<size_t>(hol[i])];
    v *= t.cpow[static_cast<size_t>(i)][static_cast<size_t>(antihol[i])];
  }
  return v;
}

bool leq(const MultiIndex& a, const MultiIndex& b) {
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::string index_string(const MultiIndex& a) {
  std::string s = "(";
  for (int i = 0; i < a.dim(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

}  // namespace

PositivityReport kp_annihilation_check(const DiscreteMeasure& mu, int max_degree, double tol) {
  mu.require_on_sphere();
  const int n = mu.dim();
  const auto tables = atom_power_tables(mu, max_degree + 1);
  const auto indices = enumerate_upto(n, max_degree);

  PositivityReport report;
  double worst = 0.0;
  auto consider = [&](Complex sum, const std::string& label) {
    const double v = std::abs(sum);
    if (v > worst) {
      worst = v;
      report.worst_label = label;
    }
  };

  for (const auto& alpha : indices) {
    for (const auto& beta : indices) {
      if (alpha.degree() + beta.degree() > max_degree) continue;
      // Family 1: u^alpha conj(u)^beta for incomparable (alpha, beta).
      if (!leq(alpha, beta) && !leq(beta, alpha)) {
        Complex sum = 0.0;
        for (const auto& t : tables) sum += t.weight * monomial_at(t, alpha, beta);
        consider(sum, "family1 alpha=" + index_string(alpha) + " beta=" + index_string(beta));
      }
      // Families 2 and 3: bracket factor alpha_j + beta_j + 1 -
      // (|alpha|+|beta|+n)|u_j|^2 against u^alpha conj(u)^{alpha+beta} and its
      // mirror.
      const int degree_sum = alpha.degree() + beta.degree();
      const MultiIndex shifted = alpha.plus(beta);
      for (int j = 0; j < n; ++j) {
        const double constant = alpha[j] + beta[j] + 1;
        const double slope = degree_sum + n;
        Complex sum2 = 0.0, sum3 = 0.0;
        for (const auto& t : tables) {
          const double bracket = constant - slope * t.abs2[static_cast<size_t>(j)];
          sum2 += t.weight * bracket * monomial_at(t, alpha, shifted);
          sum3 += t.weight * bracket * monomial_at(t, shifted, alpha);
        }
        consider(sum2, "family2 alpha=" + index_string(alpha) + " beta=" + index_string(beta) +
                           " j=" + std::to_string(j + 1));
        consider(sum3, "family3 alpha=" + index_string(alpha) + " beta=" + index_string(beta) +
                           " j=" + std::to_string(j + 1));
      }
    }
  }
  report.min_eigenvalue = tol - worst;
  report.verdict = worst <= tol ? Verdict::Pass : Verdict::Fail;
  return report;
}

Complex ef_functional(const TruncatedSeries& f, const DiscreteMeasure& mu) {
  mu.require_on_sphere();
  const TruncatedSeries ef = hardy_euler_E(f);
  Complex sum = 0.0;
  for (const auto& atom : mu.atoms()) sum += atom.weight * ef.evaluate(atom.point);
  return sum;
}

PositivityReport mp_necessary_check(const TruncatedSeries& f, double tol) {
  PositivityReport report;
  const double m0 = f.at_origin().real();
  double worst = 0.0;
  std::string worst_label = "m0";
  for (const auto& [alpha, c] : f.coeffs()) {
    if (alpha.degree() == 0) continue;
    const double m_alpha =
        std::abs(0.5 * c * to_double(Rational(1, multinomial_weight(alpha))));
    if (m_alpha - m0 > worst) {
      worst = m_alpha - m0;
      worst_label = "|m_alpha| > m0 at alpha=" + index_string(alpha);
    }
  }
  if (m0 < -tol) {
    report.verdict = Verdict::Fail;
    report.worst_label = "m0 negative";
    report.min_eigenvalue = m0;
    return report;
  }
  report.min_eigenvalue = -worst;
  if (worst > tol) {
    report.verdict = Verdict::Fail;
    report.worst_label = worst_label;
  } else {
    report.verdict = Verdict::Pass;
  }
  return report;
}

double dual_pair_check(const TruncatedSeries& f, const TruncatedSeries& g) {
  return q_form(f, g).real();
}

TruncatedSeries herglotz_shift(const TruncatedSeries& p) {
  const Complex p0 = p.at_origin();
  TruncatedSeries out = p;
  out.add_coeff(MultiIndex::zero(p.dim()),
                Complex(-0.5 * p0.real(), -p0.imag()));
  return out;
}

PositivityReport mharmonic_link_check(const DiscreteMeasure& mu, int max_degree, double tol) {
  mu.require_on_sphere();
  const int n = mu.dim();
  // Left side: E applied to f + conj(f(0)) with f the Herglotz transform.
  TruncatedSeries f = herglotz_measure_series(mu, max_degree);
  f.add_coeff(MultiIndex::zero(n), std::conj(f.at_origin()));
  const TruncatedSeries lhs = hardy_euler_E(f);

  // Right side: 2 v(z,0) = 2 sum_k w_k S(z,u_k), expanded coefficientwise.
  const auto tables = atom_power_tables(mu, max_degree);
  PositivityReport report;
  double worst = 0.0;
  const MultiIndex zero = MultiIndex::zero(n);
  for (const auto& alpha : enumerate_upto(n, max_degree)) {
    Complex moment = 0.0;
    for (const auto& t : tables) moment += t.weight * monomial_at(t, zero, alpha);
    const Rational szego_coeff = Rational(factorial(alpha.degree() + n - 1),
                                          factorial(n - 1) * alpha_factorial(alpha));
    const Complex rhs = 2.0 * moment * to_double(szego_coeff);
    const double dev = std::abs(lhs.coeff(alpha) - rhs);
    if (dev > worst) {
      worst = dev;
      report.worst_label = "alpha=" + index_string(alpha);
    }
  }
  report.min_eigenvalue = tol - worst;
  report.verdict = worst <= tol ? Verdict::Pass : Verdict::Fail;
  return report;
}

std::optional<SchurViolationWitness> search_schur_violation(const TruncatedSeries& f,
                                                            std::uint64_t seed,
                                                            std::size_t entry_budget) {
  Rng rng(seed);
  std::optional<SchurViolationWitness> best;
  std::size_t spent = 0;
  int size = 2;
  double radius = 0.5;
  while (spent + static_cast<std::size_t>(size) * static_cast<std::size_t>(size) <= entry_budget) {
    std::vector<std::vector<Complex>> points;
    points.reserve(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) points.push_back(rng.ball_point(f.dim(), radius));
    const Eigen::MatrixXcd gram = schur_kernel_gram(f, points);
    spent += static_cast<std::size_t>(size) * static_cast<std::size_t>(size);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(0.5 * (gram + gram.adjoint()));
    const double min_eig = eig.eigenvalues().minCoeff();
    const double scale = std::max(1.0, std::abs(eig.eigenvalues().maxCoeff()));
    if (min_eig < -1e-9 * scale && (!best || min_eig < best->min_eigenvalue)) {
      best = SchurViolationWitness{points, eig.eigenvectors().col(0), min_eig};
    }
    size = (size >= 40) ? 2 : size + 2;
    radius += 0.03;
    if (radius > 0.95) radius = 0.5;
  }
  return best;
}

DiscreteMeasure random_sphere_measure(Rng& rng, int dim, int atoms) {
  DiscreteMeasure mu(dim);
  for (int k = 0; k < atoms; ++k) mu.add_atom(rng.unit_vector(dim), rng.uniform(0.1, 1.0));
  return mu;
}

}  // namespace fan
