#include "waring/upoly.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace waring {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::operator()(const Rational& x) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = c_;
  const Rational lead = leading();
  for (auto& x : c) x /= lead;
  return UPoly(std::move(c));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

std::vector<Complex> UPoly::normalized_complex() const {
  Rational scale = 0;
  for (const auto& x : c_) scale = std::max(scale, Rational(abs(x)));
  std::vector<Complex> out;
  for (const auto& x : c_) out.emplace_back(scale == 0 ? 0.0 : Rational(x / scale).get_d(), 0.0);
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rational> quot(a.degree() - db + 1);
  for (int k = a.degree(); k >= db; --k) {
    const Rational f = rem[k] / b.leading();
    quot[k - db] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw DomainError("interpolate: mismatched point lists");
  const std::size_t n = xs.size();
  // Divided differences, then Newton form expanded into monomial coefficients.
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational den = xs[i] - xs[i - level];
      if (den == 0) throw DomainError("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  UPoly result;
  for (std::size_t i = n; i-- > 0;) {
    result = result * UPoly({-xs[i], Rational(1)}) + UPoly({dd[i]});
  }
  return result;
}

Complex evaluate(std::span<const Complex> coeffs, Complex x) {
  Complex v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
  return v;
}

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == Complex(0)) --n;
  if (n <= 1) return {};
  const std::size_t deg = n - 1;
  const std::span<const Complex> p = coeffs.subspan(0, n);
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
  for (std::size_t i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < deg; ++i) comp(i, deg - 1) = -p[i] / p[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
  std::vector<Complex> dp;
  for (std::size_t k = 1; k < n; ++k) dp.push_back(p[k] * static_cast<double>(k));
  std::vector<Complex> roots;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    Complex z = solver.eigenvalues()(i);
    for (int it = 0; it < 8; ++it) {
      const Complex fz = evaluate(p, z), dz = evaluate(dp, z);
      if (dz == Complex(0)) break;
      const Complex next = z - fz / dz;
      if (!(std::abs(evaluate(p, next)) < std::abs(fz))) break;
      z = next;
    }
    roots.push_back(z);
  }
  return roots;
}

Rational rationalize(double x, long max_den) {
  if (!std::isfinite(x)) throw DomainError("rationalize: non-finite value");
  // Convergents h/k of the continued fraction of x.
  BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(r);
    if (std::abs(a) > 1e15) break;
    const BigInt ai(static_cast<long>(a));
    const BigInt h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const double frac = r - a;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  if (k1 == 0) return Rational(BigInt(static_cast<long>(std::floor(x))));
  return ratio(h1, k1);
}

}  // namespace waring
