#pragma once

// Multi-index bookkeeping shared by every flattening builder.
//
// Degree-d monomials in n+1 variables are identified with sorted index
// tuples (i1 <= ... <= id). The global order is lexicographic on sorted
// tuples, which for a fixed degree is graded-lex with x0 largest:
//   x0^2, x0x1, x0x2, x1^2, x1x2, x2^2.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "waring/exactla.hpp"

namespace waring {

using Exponents = std::vector<int>;
using IndexTuple = std::vector<int>;

std::uint64_t binomial(int n, int k);
BigInt big_binomial(int n, int k);
BigInt factorial(int n);

/// Number of degree-d monomials in `nvars` variables, C(nvars-1+d, d).
std::size_t monomial_count(int nvars, int degree);

/// d! / (e0! ... en!)
BigInt multinomial(std::span<const int> exponents);

IndexTuple to_tuple(std::span<const int> exponents);
Exponents to_exponents(std::span<const int> tuple, int nvars);

/// All degree-d exponent vectors in `nvars` variables in the global order.
class MonomialBasis {
 public:
  MonomialBasis(int nvars, int degree);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return exps_.size(); }
  const Exponents& operator[](std::size_t k) const { return exps_[k]; }
  const std::vector<Exponents>& all() const { return exps_; }

  /// Position of an exponent vector (must have this basis' degree).
  std::size_t index_of(std::span<const int> exponents) const;

 private:
  int nvars_;
  int degree_;
  std::vector<Exponents> exps_;
};

/// Position of `exponents` among all monomials of the same total degree.
std::size_t monomial_index(std::span<const int> exponents);

/// k-subsets of {0..n-1}, lexicographic.
std::vector<std::vector<int>> subsets(int n, int k);
std::size_t subset_index(std::span<const int> subset, int n);

/// Sign of the permutation that sorts `seq` (entries distinct).
int permutation_sign(std::span<const int> seq);

}  // namespace waring
