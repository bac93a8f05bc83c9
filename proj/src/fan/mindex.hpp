#ifndef FAN_MINDEX_HPP
#define FAN_MINDEX_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& q);
double to_double(const BigInt& n);

/// Exponent tuple of a monomial in n complex variables.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);
  static MultiIndex zero(int dim);
  static MultiIndex unit(int dim, int coordinate);

  int dim() const { return static_cast<int>(exponents_.size()); }
  int degree() const;
  int operator[](int i) const { return exponents_[static_cast<size_t>(i)]; }
  const std::vector<int>& exponents() const { return exponents_; }

  MultiIndex plus(int coordinate, int amount = 1) const;
  MultiIndex plus(const MultiIndex& other) const;

  bool operator==(const MultiIndex& other) const = default;

 private:
  std::vector<int> exponents_;
};

// Canonical order: total degree first, then z1-major within a degree, so
// (1,0) precedes (0,1). Every coefficient container iterates in this order.
struct CanonicalLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All alpha with |alpha| <= max_degree in canonical order; count C(D+n, n).
std::vector<MultiIndex> enumerate_upto(int dim, int max_degree);

/// |alpha|! / alpha!  (number of distinct arrangements of the letter multiset).
BigInt multinomial_weight(const MultiIndex& alpha);

/// (d+1)(d+2)...(d+k); k = 0 gives 1.
BigInt rising_product(std::int64_t d, int k);

BigInt factorial(int n);

/// alpha! = alpha_1! ... alpha_n!
BigInt alpha_factorial(const MultiIndex& alpha);

/// Binomial coefficient; rejects b > a or negative arguments.
BigInt binom(std::int64_t a, std::int64_t b);

}  // namespace fan

#endif
