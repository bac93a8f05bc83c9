#include "fan/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fan {

GaussRule gauss_legendre_01(int m) {
  if (m < 1) throw std::invalid_argument("gauss rule needs >= 1 node");
  // Newton on P_m over [-1,1] from the Chebyshev-like initial guess, then
  // map to [0,1].
  GaussRule rule;
  rule.nodes.resize(static_cast<size_t>(m));
  rule.weights.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      if (m == 1) p1 = x;
      for (int k = 2; k <= m; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double pm = (m == 1) ? x : p1;
      const double pm1 = (m == 1) ? 1.0 : p0;
      dp = m * (x * pm - pm1) / (x * x - 1.0);
      const double dx = pm / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[static_cast<size_t>(i)] = 0.5 * (1.0 + x);
    rule.weights[static_cast<size_t>(i)] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

namespace {

// Simplex profile nodes for |u_i|^2: dim 2 uses x in [0,1]; dim 3 uses the
// triangle {x+y<=1} split as x = xi, y = (1-xi) eta with Jacobian (1-xi).
struct ProfileNode {
  std::vector<double> radii;  // |u_i| per coordinate
  double weight;
};

std::vector<ProfileNode> profile_nodes_dim2(int max_degree) {
  const int m = (max_degree + 3) / 2;  // exact for x-degree <= D+1
  const GaussRule g = gauss_legendre_01(m);
  std::vector<ProfileNode> out;
  for (int i = 0; i < m; ++i) {
    const double x = g.nodes[static_cast<size_t>(i)];
    out.push_back({{std::sqrt(x), std::sqrt(1.0 - x)}, g.weights[static_cast<size_t>(i)]});
  }
  return out;
}

std::vector<ProfileNode> profile_nodes_dim3(int max_degree) {
  // Integrand degree in xi is at most (D+1)+1 after the Jacobian, in eta at
  // most D+1.
  const int mxi = (max_degree + 4) / 2;
  const int meta = (max_degree + 3) / 2;
  const GaussRule gxi = gauss_legendre_01(mxi);
  const GaussRule geta = gauss_legendre_01(meta);
  std::vector<ProfileNode> out;
  for (int i = 0; i < mxi; ++i) {
    for (int j = 0; j < meta; ++j) {
      const double xi = gxi.nodes[static_cast<size_t>(i)];
      const double eta = geta.nodes[static_cast<size_t>(j)];
      const double x = xi;
      const double y = (1.0 - xi) * eta;
      const double z = (1.0 - xi) * (1.0 - eta);
      const double w = 2.0 * gxi.weights[static_cast<size_t>(i)] * geta.weights[static_cast<size_t>(j)] * (1.0 - xi);
      out.push_back({{std::sqrt(x), std::sqrt(y), std::sqrt(z)}, w});
    }
  }
  return out;
}

}  // namespace

SphereProfile sphere_profile(int dim, int max_degree) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("sphere rule: dim must be 2 or 3");
  if (max_degree < 0 || max_degree > 12)
    throw std::invalid_argument("sphere rule: degree cap out of range [0,12]");
  const std::vector<ProfileNode> nodes =
      (dim == 2) ? profile_nodes_dim2(max_degree) : profile_nodes_dim3(max_degree);
  SphereProfile profile;
  profile.phases = 2 * max_degree + 3;  // kills e^{ik theta} for 0 < |k| <= 2D+2
  for (const auto& node : nodes) {
    profile.radii.push_back(node.radii);
    profile.weights.push_back(node.weight);
  }
  return profile;
}

DiscreteMeasure sphere_quadrature(int dim, int max_degree) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("sphere_quadrature: dim must be 2 or 3");
  if (max_degree < 0 || max_degree > 12)
    throw std::invalid_argument("sphere_quadrature: degree cap out of range [0,12]");

  const std::vector<ProfileNode> profile =
      (dim == 2) ? profile_nodes_dim2(max_degree) : profile_nodes_dim3(max_degree);
  const int phases = 2 * max_degree + 3;  // kills e^{ik theta} for 0 < |k| <= 2D+2

  DiscreteMeasure mu(dim);
  std::vector<int> idx(static_cast<size_t>(dim), 0);
  const double phase_weight = 1.0 / std::pow(static_cast<double>(phases), dim);
  for (const auto& node : profile) {
    // Tensor over per-coordinate phase grids.
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<Complex> u(static_cast<size_t>(dim));
      for (int i = 0; i < dim; ++i) {
        const double theta = 2.0 * std::numbers::pi * idx[static_cast<size_t>(i)] / phases;
        u[static_cast<size_t>(i)] = std::polar(node.radii[static_cast<size_t>(i)], theta);
      }
      mu.add_atom(std::move(u), node.weight * phase_weight);
      int c = dim - 1;
      while (c >= 0 && ++idx[static_cast<size_t>(c)] == phases) {
        idx[static_cast<size_t>(c)] = 0;
        --c;
      }
      if (c < 0) break;
    }
  }
  return mu;
}

Rational sphere_moment(const MultiIndex& alpha) {
  BigInt alpha_fact = 1;
  for (int i = 0; i < alpha.dim(); ++i) alpha_fact *= factorial(alpha[i]);
  return Rational(alpha_fact * factorial(alpha.dim() - 1),
                  factorial(alpha.degree() + alpha.dim() - 1));
}

}  // namespace fan
