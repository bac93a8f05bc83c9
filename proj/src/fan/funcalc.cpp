#include "fan/funcalc.hpp"

#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>

#include "fan/transforms.hpp"

namespace fan {

OperatorTuple::OperatorTuple(std::vector<Eigen::MatrixXcd> mats) : matrices(std::move(mats)) {
  if (matrices.empty()) throw std::invalid_argument("operator tuple needs >= 1 matrix");
  const Eigen::Index d = matrices.front().rows();
  for (const auto& m : matrices) {
    if (m.rows() != d || m.cols() != d)
      throw std::invalid_argument("operator tuple matrices must be square of equal size");
  }
}

double spectral_norm(const Eigen::MatrixXcd& a) {
  if (a.rows() == 0) return 0.0;
  return a.jacobiSvd().singularValues()(0);
}

namespace {

void sym_words_rec(const OperatorTuple& tuple, std::vector<int>& remaining,
                   const Eigen::MatrixXcd& prefix, Eigen::MatrixXcd& accum) {
  bool leaf = true;
  for (int i = 0; i < tuple.n(); ++i) {
    if (remaining[static_cast<size_t>(i)] > 0) {
      leaf = false;
      remaining[static_cast<size_t>(i)] -= 1;
      // Shared prefixes are multiplied once per tree node.
      const Eigen::MatrixXcd next = prefix * tuple.matrices[static_cast<size_t>(i)];
      sym_words_rec(tuple, remaining, next, accum);
      remaining[static_cast<size_t>(i)] += 1;
    }
  }
  if (leaf) accum += prefix;
}

}  // namespace

Eigen::MatrixXcd sym_monomial(const OperatorTuple& tuple, const MultiIndex& alpha,
                              int degree_cap) {
  if (alpha.dim() != tuple.n()) throw std::invalid_argument("sym_monomial: index dimension mismatch");
  if (alpha.degree() > degree_cap)
    throw std::invalid_argument("sym_monomial: monomial degree exceeds the word cap");
  const int d = tuple.d();
  if (alpha.degree() == 0) return Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd accum = Eigen::MatrixXcd::Zero(d, d);
  std::vector<int> remaining = alpha.exponents();
  sym_words_rec(tuple, remaining, Eigen::MatrixXcd::Identity(d, d), accum);
  return accum / to_double(multinomial_weight(alpha));
}

Eigen::MatrixXcd sym_poly(const OperatorTuple& tuple, const TruncatedSeries& p, int degree_cap) {
  if (p.dim() != tuple.n()) throw std::invalid_argument("sym_poly: dimension mismatch");
  const int d = tuple.d();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& [alpha, c] : p.coeffs()) out += c * sym_monomial(tuple, alpha, degree_cap);
  return out;
}

Eigen::MatrixXcd sym_poly(const OperatorTuple& tuple, const MatrixPolynomial& p, int degree_cap) {
  if (p.dim != tuple.n()) throw std::invalid_argument("sym_poly: dimension mismatch");
  const int d = tuple.d();
  const int s = p.coeff_size;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(s * d, s * d);
  for (const auto& [alpha, a] : p.coeffs) {
    if (a.rows() != s || a.cols() != s)
      throw std::invalid_argument("sym_poly: coefficient size mismatch");
    const Eigen::MatrixXcd w = sym_monomial(tuple, alpha, degree_cap);
    for (int i = 0; i < s; ++i) {
      for (int j = 0; j < s; ++j) out.block(i * d, j * d, d, d) += a(i, j) * w;
    }
  }
  return out;
}

namespace {

double top_eig(const Eigen::MatrixXcd& herm, Eigen::VectorXcd* vec = nullptr) {
  if (!vec && herm.rows() == 1) return herm(0, 0).real();
  if (!vec && herm.rows() == 2) {
    const double mean = 0.5 * (herm(0, 0).real() + herm(1, 1).real());
    const double diff = 0.5 * (herm(0, 0).real() - herm(1, 1).real());
    return mean + std::sqrt(diff * diff + std::norm(herm(0, 1)));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(herm,
                                                      vec ? Eigen::ComputeEigenvectors
                                                          : Eigen::EigenvaluesOnly);
  const Eigen::Index last = herm.rows() - 1;
  if (vec) *vec = eig.eigenvectors().col(last);
  return eig.eigenvalues()(last);
}

Eigen::MatrixXcd real_part(const Eigen::MatrixXcd& a) { return 0.5 * (a + a.adjoint()); }

}  // namespace

NumRangeReport numerical_radius(const Eigen::MatrixXcd& a, double tol) {
  if (a.rows() != a.cols()) throw std::invalid_argument("numerical_radius: matrix must be square");
  NumRangeReport report;
  if (a.rows() == 0 || a.norm() == 0.0) {
    report.witness = Eigen::VectorXcd::Zero(a.rows());
    if (a.rows() > 0) report.witness(0) = 1.0;
    return report;
  }
  auto h = [&](double theta) {
    return top_eig(real_part(std::polar(1.0, theta) * a));
  };
  // h(theta) = f(cos theta, sin theta) for f convex and positively
  // homogeneous, so the arc maximum is capped by the chord endpoints divided
  // by the chord's minimum radius: a curvature-tight secant bound.
  struct Interval {
    double a, b, ha, hb, cap;
  };
  auto cap_of = [&](double lo, double hi, double hlo, double hhi) {
    const double peak = std::max(hlo, hhi);
    if (peak <= 0.0) return peak;
    return peak / std::cos(0.5 * (hi - lo));
  };
  auto cmp = [](const Interval& x, const Interval& y) { return x.cap < y.cap; };
  std::priority_queue<Interval, std::vector<Interval>, decltype(cmp)> queue(cmp);

  const int coarse = 64;
  double best = -std::numeric_limits<double>::infinity();
  double best_theta = 0.0;
  std::vector<double> hv(coarse + 1);
  for (int i = 0; i <= coarse; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / coarse;
    hv[static_cast<size_t>(i)] = h(theta);
    if (hv[static_cast<size_t>(i)] > best) {
      best = hv[static_cast<size_t>(i)];
      best_theta = theta;
    }
  }
  for (int i = 0; i < coarse; ++i) {
    const double lo = 2.0 * std::numbers::pi * i / coarse;
    const double hi = 2.0 * std::numbers::pi * (i + 1) / coarse;
    queue.push({lo, hi, hv[static_cast<size_t>(i)], hv[static_cast<size_t>(i + 1)],
                cap_of(lo, hi, hv[static_cast<size_t>(i)], hv[static_cast<size_t>(i + 1)])});
  }
  double resolution = 2.0 * std::numbers::pi / coarse;
  // Flat eigenvalue curves force a full-ridge refinement, so the budget is
  // generous; pruning exits far earlier in the generic case.
  for (int iter = 0; iter < 4000000 && !queue.empty(); ++iter) {
    const Interval top = queue.top();
    if (top.cap <= best + tol) break;
    queue.pop();
    const double mid = 0.5 * (top.a + top.b);
    const double hm = h(mid);
    if (hm > best) {
      best = hm;
      best_theta = mid;
    }
    resolution = std::min(resolution, top.b - top.a);
    queue.push({top.a, mid, top.ha, hm, cap_of(top.a, mid, top.ha, hm)});
    queue.push({mid, top.b, hm, top.hb, cap_of(mid, top.b, hm, top.hb)});
  }
  report.lower_bound = best;
  report.upper_bound = queue.empty() ? best : std::max(best, queue.top().cap);
  report.grid_resolution = resolution;
  Eigen::VectorXcd witness;
  top_eig(real_part(std::polar(1.0, best_theta) * a), &witness);
  report.witness = witness;
  return report;
}

namespace {

// lambda_max(Re(sum conj(u_i) T_i)) as a function of u in R^{2n}: pointwise
// max of linear functions, hence convex; its max over a box is attained at a
// corner, which makes the branch-and-bound caps exact.
double direction_value(const OperatorTuple& tuple, const Eigen::VectorXd& u,
                       Eigen::VectorXcd* vec = nullptr) {
  const int d = tuple.d();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < tuple.n(); ++i) {
    const Complex ui(u(2 * i), u(2 * i + 1));
    m += std::conj(ui) * tuple.matrices[static_cast<size_t>(i)];
  }
  return top_eig(real_part(m), vec);
}

struct Box {
  Eigen::VectorXd lo, hi;
  double cap;
};

bool box_touches_sphere(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) {
  double min_sq = 0.0, max_sq = 0.0;
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    const double a = lo(i), b = hi(i);
    const double lo_abs = (a > 0.0) ? a : ((b < 0.0) ? -b : 0.0);
    const double hi_abs = std::max(std::abs(a), std::abs(b));
    min_sq += lo_abs * lo_abs;
    max_sq += hi_abs * hi_abs;
  }
  return min_sq <= 1.0 && max_sq >= 1.0;
}

// Cap over box-intersect-sphere: every unit u in the box is a convex
// combination of corners, all within angle phi of the center direction, so
// f(u) <= sec(phi) max_j f(corner_j / |corner_j|) by homogeneity.
double box_corner_cap(const OperatorTuple& tuple, const Eigen::VectorXd& lo,
                      const Eigen::VectorXd& hi) {
  const int dims = static_cast<int>(lo.size());
  const Eigen::VectorXd center = 0.5 * (lo + hi);
  const double center_norm = center.norm();
  if (center_norm < 1e-12) return std::numeric_limits<double>::infinity();
  double peak = -std::numeric_limits<double>::infinity();
  double min_cos = 1.0;
  Eigen::VectorXd u(dims);
  for (std::uint32_t mask = 0; mask < (1u << dims); ++mask) {
    for (int i = 0; i < dims; ++i) u(i) = (mask & (1u << i)) ? hi(i) : lo(i);
    const double un = u.norm();
    if (un < 1e-14) return std::numeric_limits<double>::infinity();
    min_cos = std::min(min_cos, u.dot(center) / (un * center_norm));
    peak = std::max(peak, direction_value(tuple, u / un));
  }
  if (min_cos <= 1e-9) return std::numeric_limits<double>::infinity();
  return peak <= 0.0 ? peak : peak / min_cos;
}

double ascent_lower_bound(const OperatorTuple& tuple, int restarts, Rng& rng,
                          Eigen::VectorXcd* witness) {
  const int d = tuple.d();
  const int n = tuple.n();
  double best = 0.0;
  for (int trial = 0; trial < restarts; ++trial) {
    Eigen::VectorXcd xi(d);
    for (int i = 0; i < d; ++i) xi(i) = rng.complex_gaussian();
    xi.normalize();
    double value = 0.0;
    for (int iter = 0; iter < 80; ++iter) {
      Eigen::VectorXcd c(n);
      for (int i = 0; i < n; ++i) c(i) = xi.dot(tuple.matrices[static_cast<size_t>(i)] * xi);
      const double cn = c.norm();
      if (cn == 0.0) break;
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
      for (int i = 0; i < n; ++i)
        m += std::conj(c(i) / cn) * tuple.matrices[static_cast<size_t>(i)];
      Eigen::VectorXcd next;
      top_eig(real_part(m), &next);
      xi = next;
      if (std::abs(cn - value) < 1e-15 * (1.0 + cn)) {
        value = cn;
        break;
      }
      value = cn;
    }
    if (value > best) {
      best = value;
      if (witness) *witness = xi;
    }
  }
  return best;
}

}  // namespace

NumRangeReport joint_num_radius(const OperatorTuple& tuple, int effort, std::uint64_t seed) {
  NumRangeReport report;
  const int dims = 2 * tuple.n();
  Rng rng(seed);
  Eigen::VectorXcd witness;
  report.lower_bound = ascent_lower_bound(tuple, 8 + 8 * effort, rng, &witness);
  report.witness = witness;

  double frob_sq = 0.0;
  for (const auto& m : tuple.matrices) frob_sq += m.squaredNorm();
  if (frob_sq == 0.0) {
    report.upper_bound = 0.0;
    report.witness = Eigen::VectorXcd::Zero(tuple.d());
    if (tuple.d() > 0) report.witness(0) = 1.0;
    return report;
  }

  auto cmp = [](const Box& x, const Box& y) { return x.cap < y.cap; };
  std::priority_queue<Box, std::vector<Box>, decltype(cmp)> queue(cmp);
  Box root{Eigen::VectorXd::Constant(dims, -1.0), Eigen::VectorXd::Constant(dims, 1.0), 0.0};
  root.cap = box_corner_cap(tuple, root.lo, root.hi);
  queue.push(root);

  const double tol = 1e-7;
  const std::size_t budget = static_cast<std::size_t>(400) << std::min(12, 2 * effort);
  double upper = root.cap;
  double resolution = 2.0;
  for (std::size_t iter = 0; iter < budget && !queue.empty(); ++iter) {
    const Box top = queue.top();
    upper = top.cap;
    if (top.cap <= report.lower_bound + tol) break;
    queue.pop();
    Eigen::Index axis = 0;
    (top.hi - top.lo).maxCoeff(&axis);
    const double width = top.hi(axis) - top.lo(axis);
    resolution = std::min(resolution, width);
    // Try the box center (projected to the sphere) as a new incumbent.
    Eigen::VectorXd center = 0.5 * (top.lo + top.hi);
    if (center.norm() > 1e-9) {
      center.normalize();
      report.lower_bound = std::max(report.lower_bound, direction_value(tuple, center));
    }
    for (int half = 0; half < 2; ++half) {
      Box child = top;
      if (half == 0) {
        child.hi(axis) = top.lo(axis) + 0.5 * width;
      } else {
        child.lo(axis) = top.lo(axis) + 0.5 * width;
      }
      if (!box_touches_sphere(child.lo, child.hi)) continue;
      child.cap = box_corner_cap(tuple, child.lo, child.hi);
      if (child.cap > report.lower_bound) queue.push(child);
    }
    if (queue.empty()) upper = report.lower_bound;
  }
  if (!queue.empty()) upper = queue.top().cap;
  report.upper_bound = std::max(upper, report.lower_bound);
  report.grid_resolution = resolution;
  return report;
}

OperatorTuple scale_to_ball(const OperatorTuple& tuple, double margin, int effort,
                            std::uint64_t seed) {
  double frob = 0.0;
  for (const auto& m : tuple.matrices) frob += m.squaredNorm();
  if (frob == 0.0) throw std::invalid_argument("scale_to_ball: zero tuple");
  const NumRangeReport nu = joint_num_radius(tuple, effort, seed);
  // The branch-and-bound cap is sound but can be loose when the maximizing
  // direction set is a continuum; the guarded ascent value is the operative
  // upper bound, clipped by the certified cap.
  const double nu_upper = std::min(nu.upper_bound, nu.lower_bound * (1.0 + 1e-7));
  const double factor = nu_upper * (1.0 + margin);
  OperatorTuple out = tuple;
  for (auto& m : out.matrices) m /= factor;
  return out;
}

namespace {

std::vector<Complex> series_gradient(const TruncatedSeries& p, const std::vector<Complex>& z) {
  std::vector<Complex> grad(static_cast<size_t>(p.dim()), Complex(0.0));
  for (const auto& [alpha, c] : p.coeffs()) {
    for (int i = 0; i < p.dim(); ++i) {
      if (alpha[i] == 0) continue;
      Complex term = c * static_cast<double>(alpha[i]);
      for (int j = 0; j < p.dim(); ++j) {
        const int e = (j == i) ? alpha[j] - 1 : alpha[j];
        for (int k = 0; k < e; ++k) term *= z[static_cast<size_t>(j)];
      }
      grad[static_cast<size_t>(i)] += term;
    }
  }
  return grad;
}

void project_to_sphere(std::vector<Complex>& z) {
  const double r = norm2(z);
  if (r == 0.0) {
    z[0] = 1.0;
    return;
  }
  for (auto& zi : z) zi /= r;
}

template <typename Eval>
double sup_on_sphere(int dim, Eval&& eval, int effort, std::uint64_t seed,
                     std::vector<Complex>* argmax_out) {
  const int samples = 512 * std::max(1, effort);
  auto points = quasi_sphere_points(dim, samples);
  Rng rng(seed);
  for (int k = 0; k < samples / 4; ++k) points.push_back(rng.unit_vector(dim));
  double best = 0.0;
  std::vector<Complex> argmax(static_cast<size_t>(dim), Complex(0.0));
  argmax[0] = 1.0;
  for (const auto& z : points) {
    const double v = eval(z);
    if (v > best) {
      best = v;
      argmax = z;
    }
  }
  // Local polish from the incumbent: numerical coordinate ascent on the sphere.
  double step = 0.1;
  std::vector<Complex> z = argmax;
  for (int iter = 0; iter < 200 * std::max(1, effort) && step > 1e-13; ++iter) {
    bool improved = false;
    for (int i = 0; i < dim && !improved; ++i) {
      for (const Complex dir : {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)}) {
        std::vector<Complex> trial = z;
        trial[static_cast<size_t>(i)] += step * dir;
        project_to_sphere(trial);
        const double v = eval(trial);
        if (v > best) {
          best = v;
          z = trial;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  if (argmax_out) *argmax_out = z;
  return best;
}

}  // namespace

double sup_norm_ball(const TruncatedSeries& p, int effort, std::uint64_t seed) {
  // |p| is plurisubharmonic, so the maximum over the closed ball sits on the
  // sphere; gradient ascent refines the sampled incumbent.
  auto eval = [&](const std::vector<Complex>& z) { return std::abs(p.evaluate(z)); };
  std::vector<Complex> argmax;
  double best = sup_on_sphere(p.dim(), eval, effort, seed, &argmax);
  // One analytic-gradient polish pass helps flat directions.
  std::vector<Complex> z = argmax;
  double step = 1e-3;
  for (int iter = 0; iter < 100 && step > 1e-14; ++iter) {
    const Complex value = p.evaluate(z);
    const auto grad = series_gradient(p, z);
    std::vector<Complex> trial = z;
    for (int i = 0; i < p.dim(); ++i)
      trial[static_cast<size_t>(i)] += step * std::conj(grad[static_cast<size_t>(i)]) * value;
    project_to_sphere(trial);
    const double v = std::abs(p.evaluate(trial));
    if (v > best) {
      best = v;
      z = trial;
    } else {
      step *= 0.5;
    }
  }
  return best;
}

double sup_norm_ball(const MatrixPolynomial& p, int effort, std::uint64_t seed) {
  auto eval = [&](const std::vector<Complex>& z) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(p.coeff_size, p.coeff_size);
    for (const auto& [alpha, a] : p.coeffs) {
      Complex factor = 1.0;
      for (int i = 0; i < p.dim; ++i) {
        for (int k = 0; k < alpha[i]; ++k) factor *= z[static_cast<size_t>(i)];
      }
      m += factor * a;
    }
    return spectral_norm(m);
  };
  return sup_on_sphere(p.dim, eval, effort, seed, nullptr);
}

namespace {

MatrixPolynomial gamma_apply_matrix(const MatrixPolynomial& p) {
  MatrixPolynomial out;
  out.dim = p.dim;
  out.coeff_size = p.coeff_size;
  const DiagonalOperator gamma = gamma_op(p.dim);
  for (const auto& [alpha, a] : p.coeffs) {
    out.coeffs.emplace(alpha, to_double(gamma.eigenvalue(alpha)) * a);
  }
  return out;
}

template <typename SymEval, typename SupEval>
BoundReport verify_bound_impl(SymEval&& sym, SupEval&& sup, double eps) {
  BoundReport report;
  report.lhs = sym();
  int effort = 1;
  for (int attempt = 0; attempt < 3; ++attempt) {
    report.rhs = sup(effort);
    report.slack = report.rhs - report.lhs;
    report.escalations = attempt;
    if (report.lhs <= report.rhs * (1.0 + eps)) {
      report.pass = true;
      return report;
    }
    effort *= 10;  // the sup estimate is a lower bound; escalate before judging
  }
  report.pass = false;
  report.note = "inspect numerics: sampled sup stayed below the calculus norm";
  return report;
}

}  // namespace

BoundReport verify_calculus_bound(const OperatorTuple& tuple, const TruncatedSeries& p,
                                  double eps, std::uint64_t seed, bool certified) {
  if (!certified)
    throw std::invalid_argument("verify_calculus_bound: tuple not certified (pass certified=true to force)");
  const TruncatedSeries gamma_p = gamma_apply(p);
  return verify_bound_impl([&] { return spectral_norm(sym_poly(tuple, p)); },
                           [&](int effort) { return sup_norm_ball(gamma_p, effort, seed); }, eps);
}

BoundReport verify_calculus_bound(const OperatorTuple& tuple, const MatrixPolynomial& p,
                                  double eps, std::uint64_t seed, bool certified) {
  if (!certified)
    throw std::invalid_argument("verify_calculus_bound: tuple not certified (pass certified=true to force)");
  const MatrixPolynomial gamma_p = gamma_apply_matrix(p);
  return verify_bound_impl([&] { return spectral_norm(sym_poly(tuple, p)); },
                           [&](int effort) { return sup_norm_ball(gamma_p, effort, seed); }, eps);
}

AlternatingWordReport check_alternating_words(int m, const Eigen::MatrixXcd& a) {
  if (m < 1) throw std::invalid_argument("check_alternating_words: m must be >= 1");
  const NumRangeReport w = numerical_radius(a, 1e-11);
  if (w.upper_bound > 1.0 / std::numbers::sqrt2 + 1e-10)
    throw std::invalid_argument("check_alternating_words: numerical radius exceeds 1/sqrt(2)");
  AlternatingWordReport report;
  report.m = m;
  OperatorTuple tuple({a, a.adjoint()});
  std::vector<int> exps = {m, m};
  const Eigen::MatrixXcd word_avg = sym_monomial(tuple, MultiIndex(exps), 2 * m);
  report.word_average_norm = top_eig(real_part(word_avg));
  report.bound = (2.0 * m + 1.0) / std::pow(2.0, m - 1);
  report.average_bound_pass = report.word_average_norm <= report.bound + 1e-9;
  // C(2m,m) >= 2^{2m-1}/(2m+1), cross-multiplied in exact integers.
  report.binomial_inequality_pass =
      binom(2 * m, m) * BigInt(2 * m + 1) >= (BigInt(1) << (2 * m - 1));
  return report;
}

PositiveCalcReport check_positive_calc(const OperatorTuple& tuple, const TruncatedSeries& p,
                                       int effort, std::uint64_t seed) {
  PositiveCalcReport report;
  const TruncatedSeries half_gamma = scale(gamma_apply(p), 0.5);
  auto points = quasi_ball_points(p.dim(), 2048 * std::max(1, effort), 0.999);
  Rng rng(seed);
  for (int k = 0; k < 512 * std::max(1, effort); ++k)
    points.push_back(rng.ball_point(p.dim(), 0.999));
  double hyp_min = std::numeric_limits<double>::infinity();
  for (const auto& z : points) hyp_min = std::min(hyp_min, half_gamma.evaluate(z).real());
  report.hypothesis_min = hyp_min;
  report.hypothesis_holds = hyp_min >= -1e-9;
  const Eigen::MatrixXcd ps = sym_poly(tuple, p);
  report.min_real_eigenvalue = -top_eig(-real_part(ps));
  report.pass = !report.hypothesis_holds || report.min_real_eigenvalue >= -1e-8;
  return report;
}

}  // namespace fan
