#include "fan/mindex.hpp"

#include <stdexcept>

namespace fan {

double to_double(const Rational& q) { return q.convert_to<double>(); }
double to_double(const BigInt& n) { return n.convert_to<double>(); }

MultiIndex::MultiIndex(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty()) throw std::invalid_argument("multi-index needs dimension >= 1");
  for (int e : exponents_) {
    if (e < 0) throw std::invalid_argument("multi-index entries must be non-negative");
  }
}

MultiIndex MultiIndex::zero(int dim) {
  if (dim < 1) throw std::invalid_argument("multi-index needs dimension >= 1");
  return MultiIndex(std::vector<int>(static_cast<size_t>(dim), 0));
}

MultiIndex MultiIndex::unit(int dim, int coordinate) {
  MultiIndex a = zero(dim);
  if (coordinate < 0 || coordinate >= dim) throw std::invalid_argument("coordinate out of range");
  a.exponents_[static_cast<size_t>(coordinate)] = 1;
  return a;
}

int MultiIndex::degree() const {
  int d = 0;
  for (int e : exponents_) d += e;
  return d;
}

MultiIndex MultiIndex::plus(int coordinate, int amount) const {
  MultiIndex a = *this;
  a.exponents_[static_cast<size_t>(coordinate)] += amount;
  if (a.exponents_[static_cast<size_t>(coordinate)] < 0)
    throw std::invalid_argument("multi-index entries must be non-negative");
  return a;
}

MultiIndex MultiIndex::plus(const MultiIndex& other) const {
  if (other.dim() != dim()) throw std::invalid_argument("multi-index dimension mismatch");
  MultiIndex a = *this;
  for (int i = 0; i < dim(); ++i) a.exponents_[static_cast<size_t>(i)] += other[i];
  return a;
}

bool CanonicalLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  // z1-major: larger leading exponent comes first.
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

namespace {

void enumerate_rec(int dim, int pos, int remaining, std::vector<int>& cur,
                   std::vector<MultiIndex>& out) {
  if (pos == dim - 1) {
    cur[static_cast<size_t>(pos)] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[static_cast<size_t>(pos)] = e;
    enumerate_rec(dim, pos + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_upto(int dim, int max_degree) {
  if (dim < 1) throw std::invalid_argument("enumerate_upto: dimension must be >= 1");
  if (max_degree < 0) throw std::invalid_argument("enumerate_upto: degree cap must be >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<size_t>(dim), 0);
  for (int d = 0; d <= max_degree; ++d) enumerate_rec(dim, 0, d, cur, out);
  return out;
}

BigInt multinomial_weight(const MultiIndex& alpha) {
  // |alpha|!/alpha! built as a product of binomials so every partial value
  // stays integral.
  BigInt result = 1;
  std::int64_t placed = 0;
  for (int i = 0; i < alpha.dim(); ++i) {
    placed += alpha[i];
    result *= binom(placed, alpha[i]);
  }
  return result;
}

BigInt rising_product(std::int64_t d, int k) {
  if (k < 0) throw std::invalid_argument("rising_product: length must be >= 0");
  BigInt result = 1;
  for (int j = 1; j <= k; ++j) result *= BigInt(d + j);
  return result;
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  return rising_product(0, n);
}

BigInt alpha_factorial(const MultiIndex& alpha) {
  BigInt f = 1;
  for (int i = 0; i < alpha.dim(); ++i) f *= factorial(alpha[i]);
  return f;
}

BigInt binom(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) throw std::invalid_argument("binom: need 0 <= b <= a");
  if (b > a - b) b = a - b;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= BigInt(a - b + i);
    result /= BigInt(i);  // exact: product of i consecutive integers is divisible by i!
  }
  return result;
}

}  // namespace fan
