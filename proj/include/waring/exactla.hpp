#pragma once

// Exact rational scalars and dense exact linear algebra.
//
// Every matrix in the library (catalecticants, Young flattenings, Koszul
// instantiations, skew-flattenings) is an ExactMatrix of GMP rationals.
// Nothing in this header touches floating point.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace waring {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised for violated preconditions (bad shapes, out-of-range parameters).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical text form "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Parses "p/q", "p" or "-p/q" (decimal integers). Throws DomainError on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical form of an mpq value built from raw parts.
inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// num / den in lowest terms. Throws DomainError on a zero denominator.
inline Rational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

using ExactVector = std::vector<Rational>;

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(std::span<const Rational> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Rational> entries() const { return entries_; }
  std::span<const Rational> row(std::size_t i) const {
    return std::span<const Rational>(entries_).subspan(i * cols_, cols_);
  }

  ExactMatrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew_symmetric() const;

  /// Writes `block` with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const ExactMatrix& block,
                 const Rational& scale = 1);

  ExactMatrix& operator+=(const ExactMatrix& other);
  ExactMatrix& operator-=(const ExactMatrix& other);
  ExactMatrix& operator*=(const Rational& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const Rational& s) { return a *= s; }
  friend ExactMatrix operator*(const Rational& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactVector operator*(const ExactMatrix& a, std::span<const Rational> v);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact rank by fraction-free (Bareiss) elimination on the integer matrix
/// obtained by clearing row denominators.
std::size_t rank(const ExactMatrix& m);

/// cols - rank(m) independent vectors spanning the right kernel, read off the
/// reduced row echelon form (one vector per free column, free entry 1).
std::vector<ExactVector> kernel_basis(const ExactMatrix& m);

Rational determinant(const ExactMatrix& m);

/// Pfaffian by skew-preserving (Parlett-Reid) elimination. Pivot rule: the
/// first nonzero entry of the trailing block in row-major order.
/// Pf([[0,1],[-1,0]]) = 1. Odd dimension gives 0.
Rational pfaffian(const ExactMatrix& m);

ExactMatrix principal_submatrix(const ExactMatrix& m, std::span<const std::size_t> keep);

/// Gauss-Jordan inverse; throws DomainError if singular or non-square.
ExactMatrix inverse(const ExactMatrix& m);

/// Reduced row echelon form. `pivots` receives the pivot column of each
/// nonzero row.
ExactMatrix rref(const ExactMatrix& m, std::vector<std::size_t>* pivots = nullptr);

}  // namespace waring
