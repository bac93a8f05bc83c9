#include "fan/realization.hpp"

#include <cmath>
#include <stdexcept>

#include "fan/kernels.hpp"
#include "fan/rng.hpp"
#include "fan/transforms.hpp"

namespace fan {

void RealizationData::validate() const {
  if (dim < 1) throw std::invalid_argument("realization: dimension must be >= 1");
  if (state.size() != space_dim) throw std::invalid_argument("realization: state size mismatch");
  for (const auto& b : blocks) {
    if (b.matrix.rows() != space_dim || b.matrix.cols() != space_dim)
      throw std::invalid_argument("realization: block size mismatch");
    if (b.alpha.dim() != dim) throw std::invalid_argument("realization: block index mismatch");
    if (form == RealizationForm::OpF5) {
      if (b.alpha.degree() % 2 == 0 || b.alpha.degree() > dim)
        throw std::invalid_argument("realization: blocks must have odd degree <= n");
    } else {
      if (b.alpha.degree() != 1)
        throw std::invalid_argument("realization: blocks must be indexed by coordinates");
      if (form == RealizationForm::NormalH9 && !b.matrix.isDiagonal(1e-14))
        throw std::invalid_argument("realization: normal form blocks must be diagonal");
    }
  }
}

namespace {

Eigen::MatrixXcd assemble(const RealizationData& r, const std::vector<Complex>& z) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(r.space_dim, r.space_dim);
  for (const auto& b : r.blocks) {
    Complex factor = 1.0;
    for (int i = 0; i < r.dim; ++i) {
      for (int p = 0; p < b.alpha[i]; ++p) factor *= z[static_cast<size_t>(i)];
    }
    if (r.form == RealizationForm::OpF5) {
      factor *= std::sqrt(to_double(binom(r.dim, b.alpha.degree())));
    }
    a += factor * b.matrix;
  }
  return a;
}

}  // namespace

Complex realization_eval(const RealizationData& r, const std::vector<Complex>& z) {
  if (static_cast<int>(z.size()) != r.dim)
    throw std::invalid_argument("realization_eval: point dimension mismatch");
  if (r.space_dim == 0) return Complex(0.0, r.t);
  const Eigen::MatrixXcd a = assemble(r, z);
  const Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(r.space_dim, r.space_dim) - a;
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(m);
  if (!lu.isInvertible()) throw std::domain_error("realization_eval: singular resolvent");
  const Eigen::VectorXcd x = lu.solve(r.state);
  // <(2x - xi), xi> with the Hermitian pairing linear in the first slot.
  return r.state.dot(2.0 * x - r.state) + Complex(0.0, r.t);
}

RealizationData build_normal_h9(const DiscreteMeasure& mu, double t) {
  const auto m = static_cast<Eigen::Index>(mu.size());
  RealizationData r;
  r.form = RealizationForm::NormalH9;
  r.dim = mu.dim();
  r.space_dim = static_cast<int>(m);
  r.state.resize(m);
  for (Eigen::Index k = 0; k < m; ++k) r.state(k) = std::sqrt(mu.atoms()[static_cast<size_t>(k)].weight);
  for (int i = 0; i < mu.dim(); ++i) {
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(m, m);
    for (Eigen::Index k = 0; k < m; ++k)
      v(k, k) = std::conj(mu.atoms()[static_cast<size_t>(k)].point[static_cast<size_t>(i)]);
    r.blocks.push_back({MultiIndex::unit(mu.dim(), i), std::move(v)});
  }
  r.t = t;
  r.validate();
  return r;
}

namespace {

// Weighted-shift cell: C = I + A with A the superdiagonal shift carrying
// weights beta, chosen so that <C^j xi, xi> = C(j+n-1, n-1) for the uniform
// unit vector xi. Then <(I - s C)^{-1} xi, xi> = (1-s)^{-n}.
struct SzegoCell {
  Eigen::MatrixXcd c;
  Eigen::VectorXcd xi;
};

// Moment equations: (1/n) sum_j prod_{l=j}^{j+i-1} beta_l = C(n-1, i).
Eigen::VectorXd cell_equations(const Eigen::VectorXd& beta, int n) {
  Eigen::VectorXd g(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    double s = 0.0;
    for (int j = 0; j + i <= n - 1; ++j) {
      double prod = 1.0;
      for (int l = j; l < j + i; ++l) prod *= beta(l);
      s += prod;
    }
    g(i - 1) = s / n - to_double(binom(n - 1, i));
  }
  return g;
}

SzegoCell szego_cell(int n) {
  SzegoCell cell;
  cell.xi = Eigen::VectorXcd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  cell.c = Eigen::MatrixXcd::Identity(n, n);
  if (n == 1) return cell;
  Eigen::VectorXd beta(n - 1);
  // Asymmetric start keeps the Jacobian nonsingular.
  for (int l = 0; l < n - 1; ++l) beta(l) = n + 0.7 * (l + 1);
  bool converged = false;
  for (int attempt = 0; attempt < 8 && !converged; ++attempt) {
    for (int iter = 0; iter < 200; ++iter) {
      const Eigen::VectorXd g = cell_equations(beta, n);
      if (g.norm() < 1e-14) {
        converged = true;
        break;
      }
      Eigen::MatrixXd jac(n - 1, n - 1);
      const double h = 1e-7;
      for (int c = 0; c < n - 1; ++c) {
        Eigen::VectorXd bp = beta;
        bp(c) += h;
        jac.col(c) = (cell_equations(bp, n) - g) / h;
      }
      const Eigen::VectorXd step = jac.fullPivLu().solve(g);
      beta -= step;
      if (!beta.allFinite()) break;
    }
    if (!converged) {
      Rng jitter(kDefaultSeed + static_cast<std::uint64_t>(attempt));
      for (int l = 0; l < n - 1; ++l) beta(l) = n * (1.0 + jitter.uniform(0.1, 1.5) * (l + 1));
    }
  }
  if (!converged) throw std::runtime_error("szego cell: moment solve did not converge");
  for (int l = 0; l < n - 1; ++l) cell.c(l, l + 1) = beta(l);
  return cell;
}

// Sampled Gram defect of the factorization map behind the construction. The
// map carrying the odd components sqrt(C(n,j)) z^alpha k(z) to
// (k(z)-k(0)) (+) even components is isometric on the sampled span exactly
// when [f(z)+conj(f(w))] S(z,w) is a genuine (positive) Gram there, so the
// defect is the relative amount by which that kernel matrix fails PSD.
double sampled_isometry_defect(const DiscreteMeasure& mu, double t, int n) {
  auto points = quasi_ball_points(n, 24, 0.55);
  points.push_back(std::vector<Complex>(static_cast<size_t>(n), Complex(0.0)));
  const auto m = static_cast<Eigen::Index>(points.size());
  std::vector<Complex> fv(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    fv[i] = szego_herglotz_measure(mu, t, points[i]);
  Eigen::MatrixXcd gram(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      gram(i, j) = (fv[static_cast<size_t>(i)] + std::conj(fv[static_cast<size_t>(j)])) *
                   kernel_eval(KernelKind::Szego, points[static_cast<size_t>(i)],
                               points[static_cast<size_t>(j)]);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(0.5 * (gram + gram.adjoint()));
  const double scale = std::max(1.0, std::abs(eig.eigenvalues().maxCoeff()));
  return std::max(0.0, -eig.eigenvalues().minCoeff()) / scale;
}

}  // namespace

RealizationData build_f2_realization(const DiscreteMeasure& mu, double t) {
  const int n = mu.dim();
  mu.require_on_sphere();
  const auto m = static_cast<int>(mu.size());

  RealizationData r;
  r.form = RealizationForm::OpF5;
  r.dim = n;
  r.space_dim = n * m;
  r.state = Eigen::VectorXcd::Zero(r.space_dim);
  if (m > 0) {
    const SzegoCell cell = szego_cell(n);
    const double unit_weight = std::sqrt(to_double(binom(n, 1)));
    for (int i = 0; i < n; ++i) {
      Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(r.space_dim, r.space_dim);
      for (int k = 0; k < m; ++k) {
        const Complex coeff = std::conj(mu.atoms()[static_cast<size_t>(k)].point[static_cast<size_t>(i)]) / unit_weight;
        v.block(n * k, n * k, n, n) = coeff * cell.c;
      }
      r.blocks.push_back({MultiIndex::unit(n, i), std::move(v)});
    }
    for (int k = 0; k < m; ++k) {
      r.state.segment(n * k, n) =
          std::sqrt(mu.atoms()[static_cast<size_t>(k)].weight) * cell.xi;
    }
  }
  r.t = t;
  r.isometry_defect = sampled_isometry_defect(mu, t, n);
  r.validate();
  return r;
}

int word_space_dim(int dim, int max_len) {
  int total = 0, level = 1;
  for (int k = 0; k <= max_len; ++k) {
    total += level;
    level *= dim;
  }
  return total;
}

std::vector<RealizationBlock> truncated_creation_blocks(int dim, int max_len) {
  if (dim < 1 || max_len < 0) throw std::invalid_argument("word space parameters out of range");
  const int total = word_space_dim(dim, max_len);
  // Words indexed level by level; within a level, index = sum digit * dim^pos
  // reading the word left to right.
  std::vector<int> level_offset(static_cast<size_t>(max_len) + 2, 0);
  int level_size = 1;
  for (int k = 0; k <= max_len; ++k) {
    level_offset[static_cast<size_t>(k) + 1] = level_offset[static_cast<size_t>(k)] + level_size;
    level_size *= dim;
  }
  std::vector<RealizationBlock> blocks;
  for (int i = 0; i < dim; ++i) {
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(total, total);
    level_size = 1;
    for (int k = 0; k < max_len; ++k) {
      for (int w = 0; w < level_size; ++w) {
        // Prepending letter i: new index within level k+1 is i*dim^k + w.
        const int src = level_offset[static_cast<size_t>(k)] + w;
        const int dst = level_offset[static_cast<size_t>(k) + 1] + i * level_size + w;
        v(dst, src) = 1.0;
      }
      level_size *= dim;
    }
    blocks.push_back({MultiIndex::unit(dim, i), std::move(v)});
  }
  return blocks;
}

}  // namespace fan
