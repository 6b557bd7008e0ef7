#include "waring/forms.hpp"

#include <algorithm>
#include <numeric>

#include "waring/random.hpp"

namespace waring {

LinearForm::LinearForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("LinearForm: no coordinates");
  if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; }))
    throw DomainError("LinearForm: all coordinates are zero");
}

Rational LinearForm::tuple_product(std::span<const int> tuple) const {
  Rational p = 1;
  for (int i : tuple) p *= coeffs_.at(i);
  return p;
}

Rational LinearForm::power_product(std::span<const int> exponents) const {
  Rational p = 1;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    for (int k = 0; k < exponents[i]; ++k) p *= coeffs_.at(i);
  return p;
}

HomogForm::HomogForm(int nvars, int degree)
    : nvars_(nvars), degree_(degree), coeffs_(monomial_count(nvars, degree)) {
  if (nvars < 1 || degree < 0) throw DomainError("HomogForm: need nvars >= 1 and degree >= 0");
}

HomogForm::HomogForm(int nvars, int degree, std::vector<Rational> tensor_coeffs)
    : nvars_(nvars), degree_(degree), coeffs_(std::move(tensor_coeffs)) {
  if (nvars < 1 || degree < 0) throw DomainError("HomogForm: need nvars >= 1 and degree >= 0");
  if (coeffs_.size() != monomial_count(nvars, degree))
    throw DomainError("HomogForm: coefficient count does not match (nvars, degree)");
}

const Rational& HomogForm::tensor_at(std::span<const int> exponents) const {
  if (static_cast<int>(exponents.size()) != nvars_ ||
      std::accumulate(exponents.begin(), exponents.end(), 0) != degree_)
    throw DomainError("HomogForm::tensor_at: exponent vector has wrong shape");
  return coeffs_[monomial_index(exponents)];
}

Rational HomogForm::tensor_at_tuple(std::span<const int> tuple) const {
  return tensor_at(to_exponents(tuple, nvars_));
}

std::vector<Rational> HomogForm::monomial_coeffs() const {
  const MonomialBasis basis(nvars_, degree_);
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t k = 0; k < out.size(); ++k)
    if (coeffs_[k] != 0) out[k] = coeffs_[k] * multinomial(basis[k]);
  return out;
}

bool HomogForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

HomogForm& HomogForm::operator+=(const HomogForm& other) {
  if (nvars_ != other.nvars_ || degree_ != other.degree_) throw DomainError("form sum: shape mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

HomogForm& HomogForm::operator-=(const HomogForm& other) {
  if (nvars_ != other.nvars_ || degree_ != other.degree_)
    throw DomainError("form difference: shape mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

HomogForm& HomogForm::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

namespace {

HomogForm from_terms(int nvars, int degree, std::span<const std::pair<Monomial, Rational>> terms,
                     bool monomial_convention) {
  HomogForm phi(nvars, degree);
  std::vector<Rational> c(phi.size());
  for (const auto& [e, coeff] : terms) {
    if (static_cast<int>(e.size()) != nvars)
      throw DomainError("monomial has " + std::to_string(e.size()) + " exponents, expected " +
                        std::to_string(nvars));
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
      throw DomainError("monomial has a negative exponent");
    const int deg = std::accumulate(e.begin(), e.end(), 0);
    if (deg != degree)
      throw DomainError("monomial of degree " + std::to_string(deg) + " in a form of degree " +
                        std::to_string(degree));
    Rational t = coeff;
    if (monomial_convention) t /= Rational(multinomial(e));
    c[monomial_index(e)] += t;
  }
  return HomogForm(nvars, degree, std::move(c));
}

}  // namespace

HomogForm from_monomial_coeffs(int nvars, int degree,
                               std::span<const std::pair<Monomial, Rational>> terms) {
  return from_terms(nvars, degree, terms, true);
}

HomogForm from_tensor_coeffs(int nvars, int degree,
                             std::span<const std::pair<Monomial, Rational>> terms) {
  return from_terms(nvars, degree, terms, false);
}

HomogForm partial_derivative(const HomogForm& phi, int i) {
  if (phi.degree() < 1) throw DomainError("partial_derivative: form has degree 0");
  if (i < 0 || i >= phi.nvars()) throw DomainError("partial_derivative: variable index out of range");
  const MonomialBasis basis(phi.nvars(), phi.degree() - 1);
  std::vector<Rational> c(basis.size());
  const Rational d = phi.degree();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Exponents e = basis[k];
    ++e[i];
    const Rational& t = phi.tensor(monomial_index(e));
    if (t != 0) c[k] = d * t;
  }
  return HomogForm(phi.nvars(), phi.degree() - 1, std::move(c));
}

HomogForm power_form(const LinearForm& l, int degree) {
  const MonomialBasis basis(l.nvars(), degree);
  std::vector<Rational> c(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) c[k] = l.power_product(basis[k]);
  return HomogForm(l.nvars(), degree, std::move(c));
}

Rational evaluate(const HomogForm& phi, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != phi.nvars())
    throw DomainError("evaluate: point has wrong number of coordinates");
  const MonomialBasis basis(phi.nvars(), phi.degree());
  Rational v = 0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (phi.tensor(k) == 0) continue;
    Rational term = phi.tensor(k) * multinomial(basis[k]);
    for (int i = 0; i < phi.nvars(); ++i)
      for (int p = 0; p < basis[k][i]; ++p) term *= point[i];
    v += term;
  }
  return v;
}

Rational evaluate(const LinearForm& l, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != l.nvars())
    throw DomainError("evaluate: point has wrong number of coordinates");
  Rational v = 0;
  for (int i = 0; i < l.nvars(); ++i) v += l[i] * point[i];
  return v;
}

PowerSum random_power_sum(int nvars, int degree, int r, std::uint64_t seed, std::int64_t height) {
  if (r < 1) throw DomainError("random_power_sum: need r >= 1");
  if (height < 1) throw DomainError("random_power_sum: height bound must be positive");
  Rng rng(seed);
  PowerSum out{HomogForm(nvars, degree), {}};
  while (static_cast<int>(out.summands.size()) < r) {
    std::vector<Rational> c(nvars);
    bool zero = true;
    for (auto& x : c) {
      x = rng.uniform(-height, height);
      zero = zero && x == 0;
    }
    if (zero) continue;
    out.summands.emplace_back(std::move(c));
    out.form += power_form(out.summands.back(), degree);
  }
  return out;
}

HomogForm random_form(int nvars, int degree, std::uint64_t seed, std::int64_t height) {
  Rng rng(seed);
  std::vector<Rational> c(monomial_count(nvars, degree));
  for (auto& x : c) x = rng.uniform(-height, height);
  return HomogForm(nvars, degree, std::move(c));
}

HomogForm power_combination(std::span<const Rational> coeffs, std::span<const LinearForm> forms,
                            int degree) {
  if (coeffs.size() != forms.size() || forms.empty())
    throw DomainError("power_combination: need matching, nonempty coefficient and form lists");
  HomogForm phi(forms.front().nvars(), degree);
  for (std::size_t i = 0; i < forms.size(); ++i)
    if (coeffs[i] != 0) phi += coeffs[i] * power_form(forms[i], degree);
  return phi;
}

}  // namespace waring
