#pragma once

// Univariate polynomials: exact arithmetic over Q, plus the one numeric step
// of the library (complex roots of a polynomial).

#include <complex>
#include <span>
#include <vector>

#include "waring/exactla.hpp"

namespace waring {

using Complex = std::complex<double>;

/// Coefficients from the constant term up; never has a zero leading
/// coefficient (the zero polynomial is empty).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const { return k < 0 || k > degree() ? Rational(0) : c_[k]; }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;

  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// Coefficients divided by the largest absolute value, as doubles.
  std::vector<Complex> normalized_complex() const;

 private:
  std::vector<Rational> c_;
  void trim();
};

/// Quotient and remainder; throws DomainError when dividing by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

/// Monic greatest common divisor (zero if both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

/// Unique polynomial of degree < xs.size() through the points (distinct xs).
UPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

/// Value of a complex-coefficient polynomial (constant term first).
Complex evaluate(std::span<const Complex> coeffs, Complex x);

/// All complex roots (with multiplicity) of a polynomial given constant term
/// first; leading zeros are stripped. Eigenvalues of the companion matrix,
/// each polished by a few Newton steps.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs);

/// Best rational approximation with denominator <= max_den (continued fractions).
Rational rationalize(double x, long max_den);

}  // namespace waring
