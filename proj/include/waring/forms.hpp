#pragma once

// Homogeneous forms stored as symmetric-tensor components.
//
// A degree-d form in n+1 variables is
//   phi = sum over sorted tuples (i1<=...<=id) of  m(i) * phi_{i1...id} * x_{i1}...x_{id}
// with m(i) the multinomial coefficient of the tuple. The phi_{i...} are the
// stored coefficients ("tensor convention"); the products m(i)*phi_{i...} are
// the ordinary monomial coefficients ("monomial convention"). Catalecticant
// entries are tensor components, so flattening builders read them directly.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "waring/exactla.hpp"
#include "waring/multiindex.hpp"

namespace waring {

using Monomial = Exponents;

class LinearForm {
 public:
  explicit LinearForm(std::vector<Rational> coeffs);
  LinearForm(std::initializer_list<Rational> coeffs) : LinearForm(std::vector<Rational>(coeffs)) {}

  int nvars() const { return static_cast<int>(coeffs_.size()); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Product l_{t1} ... l_{tk} over an index tuple.
  Rational tuple_product(std::span<const int> tuple) const;
  /// Product prod_i l_i^{e_i}.
  Rational power_product(std::span<const int> exponents) const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  std::vector<Rational> coeffs_;
};

class HomogForm {
 public:
  /// Zero form.
  HomogForm(int nvars, int degree);
  /// Tensor components in MonomialBasis(nvars, degree) order.
  HomogForm(int nvars, int degree, std::vector<Rational> tensor_coeffs);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return coeffs_.size(); }

  std::span<const Rational> tensor_coeffs() const { return coeffs_; }
  const Rational& tensor(std::size_t k) const { return coeffs_[k]; }
  /// Tensor component at an exponent vector.
  const Rational& tensor_at(std::span<const int> exponents) const;
  /// Tensor component at a (not necessarily sorted) index tuple.
  Rational tensor_at_tuple(std::span<const int> tuple) const;

  /// Ordinary monomial coefficients in basis order.
  std::vector<Rational> monomial_coeffs() const;

  bool is_zero() const;

  HomogForm& operator+=(const HomogForm& other);
  HomogForm& operator-=(const HomogForm& other);
  HomogForm& operator*=(const Rational& s);
  friend HomogForm operator+(HomogForm a, const HomogForm& b) { return a += b; }
  friend HomogForm operator-(HomogForm a, const HomogForm& b) { return a -= b; }
  friend HomogForm operator*(const Rational& s, HomogForm a) { return a *= s; }
  friend bool operator==(const HomogForm&, const HomogForm&) = default;

 private:
  int nvars_;
  int degree_;
  std::vector<Rational> coeffs_;
};

/// Builds a form from monomial-convention terms. Repeated monomials add up.
/// Throws DomainError when a monomial has the wrong degree or length.
HomogForm from_monomial_coeffs(int nvars, int degree,
                               std::span<const std::pair<Monomial, Rational>> terms);

/// Same, from tensor-convention terms (coefficient is the tensor component).
HomogForm from_tensor_coeffs(int nvars, int degree,
                             std::span<const std::pair<Monomial, Rational>> terms);

/// d/dx_i. In tensor convention (d phi/dx_i)_J = d * phi_{J+i}.
HomogForm partial_derivative(const HomogForm& phi, int i);

/// l^d; tensor component at (i1..id) is l_{i1}...l_{id}.
HomogForm power_form(const LinearForm& l, int degree);

/// Value of the polynomial at a point.
Rational evaluate(const HomogForm& phi, std::span<const Rational> point);

/// Value of a linear form at a point.
Rational evaluate(const LinearForm& l, std::span<const Rational> point);

struct PowerSum {
  HomogForm form;
  std::vector<LinearForm> summands;
};

constexpr std::int64_t kDefaultHeight = 10;

/// Sum of r d-th powers of linear forms with integer coordinates drawn
/// uniformly from [-height, height]; zero forms are redrawn. Deterministic in
/// the seed. Proportional or otherwise degenerate draws are kept.
PowerSum random_power_sum(int nvars, int degree, int r, std::uint64_t seed,
                          std::int64_t height = kDefaultHeight);

/// Uniformly random integer tensor components in [-height, height].
HomogForm random_form(int nvars, int degree, std::uint64_t seed,
                      std::int64_t height = kDefaultHeight);

/// Sum of c_i * l_i^d.
HomogForm power_combination(std::span<const Rational> coeffs, std::span<const LinearForm> forms,
                            int degree);

}  // namespace waring
