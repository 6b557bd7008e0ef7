#include "waring/exactla.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace waring {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw DomainError("malformed rational: \"" + std::string(whole) + "\"");
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    std::string_view d = text.substr(slash + 1);
    if (!all_digits(d)) throw DomainError("malformed rational: \"" + std::string(text) + "\"");
    den = BigInt(std::string(d), 10);
    if (den == 0) throw DomainError("zero denominator in \"" + std::string(text) + "\"");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// ExactMatrix

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw DomainError("ExactMatrix: entry count does not match rows x cols");
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ExactMatrix: ragged initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const Rational> diag) {
  ExactMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

bool ExactMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool ExactMatrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if ((*this)(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  }
  return true;
}

void ExactMatrix::set_block(std::size_t r0, std::size_t c0, const ExactMatrix& block,
                            const Rational& scale) {
  if (r0 + block.rows() > rows_ || c0 + block.cols() > cols_)
    throw DomainError("set_block: block does not fit");
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) (*this)(r0 + i, c0 + j) = scale * block(i, j);
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DomainError("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DomainError("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product: shape mismatch");
  ExactMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ExactVector operator*(const ExactMatrix& a, std::span<const Rational> v) {
  if (a.cols() != v.size()) throw DomainError("matrix-vector product: shape mismatch");
  ExactVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) out[i] += a(i, j) * v[j];
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination

namespace {

struct IntegerMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> a;
  BigInt& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  void swap_rows(std::size_t p, std::size_t q) {
    if (p == q) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[q * cols + j]);
  }
};

// Scales every row by the lcm of its denominators. `scale` receives the
// product of the row multipliers.
IntegerMatrix clear_denominators(const ExactMatrix& m, BigInt* scale = nullptr) {
  IntegerMatrix out{m.rows(), m.cols(), std::vector<BigInt>(m.rows() * m.cols())};
  if (scale) *scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (const auto& q : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j);
      if (q == 0) continue;
      BigInt f;
      mpz_divexact(f.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
      out.at(i, j) = q.get_num() * f;
    }
    if (scale) *scale *= l;
  }
  return out;
}

// Bareiss elimination to row echelon form; returns the rank. Each entry of
// the trailing block after step k is a (k+1)-minor of the input, so the
// division by the previous pivot is exact.
std::size_t bareiss(IntegerMatrix& m, int* sign = nullptr) {
  std::size_t r = 0;
  BigInt prev = 1;
  BigInt tmp;
  if (sign) *sign = 1;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r) {
      m.swap_rows(p, r);
      if (sign) *sign = -*sign;
    }
    const BigInt& piv = m.at(r, c);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      BigInt& lead = m.at(i, c);
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        BigInt& x = m.at(i, j);
        mpz_mul(tmp.get_mpz_t(), piv.get_mpz_t(), x.get_mpz_t());
        if (lead != 0) mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), m.at(r, j).get_mpz_t());
        mpz_divexact(x.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      lead = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
  if (m.empty()) return 0;
  // Eliminate along the shorter dimension.
  IntegerMatrix a = m.rows() <= m.cols() ? clear_denominators(m) : clear_denominators(m.transpose());
  return bareiss(a);
}

Rational determinant(const ExactMatrix& m) {
  if (!m.is_square()) throw DomainError("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigInt scale;
  IntegerMatrix a = clear_denominators(m, &scale);
  int sign = 1;
  if (bareiss(a, &sign) < n) return 0;
  Rational d(a.at(n - 1, n - 1) * sign, scale);
  d.canonicalize();
  return d;
}

ExactMatrix rref(const ExactMatrix& m, std::vector<std::size_t>* pivots) {
  ExactMatrix r = m;
  if (pivots) pivots->clear();
  std::size_t row = 0;
  Rational f;
  for (std::size_t c = 0; c < r.cols() && row < r.rows(); ++c) {
    std::size_t p = row;
    while (p < r.rows() && r(p, c) == 0) ++p;
    if (p == r.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(p, j), r(row, j));
    const Rational inv = 1 / r(row, c);
    for (std::size_t j = c; j < r.cols(); ++j) r(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, c) == 0) continue;
      f = r(i, c);
      for (std::size_t j = c; j < r.cols(); ++j)
        if (r(row, j) != 0) r(i, j) -= f * r(row, j);
    }
    if (pivots) pivots->push_back(c);
    ++row;
  }
  return r;
}

std::vector<ExactVector> kernel_basis(const ExactMatrix& m) {
  std::vector<std::size_t> pivots;
  const ExactMatrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<ExactVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    ExactVector v(m.cols());
    v[f] = 1;
    for (std::size_t t = 0; t < pivots.size(); ++t) v[pivots[t]] = -r(t, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw DomainError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots;
  const ExactMatrix r = rref(aug, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw DomainError("inverse: matrix is singular");
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------
// Pfaffian

namespace {

void require_skew(const ExactMatrix& m) {
  if (!m.is_square()) throw DomainError("pfaffian: matrix is not square");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 0) {
      std::ostringstream os;
      os << "pfaffian: matrix is not skew-symmetric: diagonal entry (" << i << "," << i
         << ") = " << to_string(m(i, i));
      throw DomainError(os.str());
    }
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) {
        std::ostringstream os;
        os << "pfaffian: matrix is not skew-symmetric: entry (" << i << "," << j
           << ") = " << to_string(m(i, j)) << " but (" << j << "," << i
           << ") = " << to_string(m(j, i));
        throw DomainError(os.str());
      }
  }
}

void swap_index(ExactMatrix& a, std::size_t p, std::size_t q) {
  if (p == q) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(q, j));
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, p), a(i, q));
}

}  // namespace

Rational pfaffian(const ExactMatrix& m) {
  require_skew(m);
  const std::size_t n = m.rows();
  if (n % 2 == 1) return 0;
  ExactMatrix a = m;
  Rational result = 1;
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t p = n, q = n;
    for (std::size_t i = k; i < n && p == n; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (a(i, j) != 0) {
          p = i;
          q = j;
          break;
        }
    if (p == n) return 0;
    // First nonzero in row-major order lies above the diagonal, so p < q.
    if (p != k) {
      swap_index(a, p, k);
      result = -result;
    }
    if (q != k + 1) {
      swap_index(a, q, k + 1);
      result = -result;
    }
    const Rational piv = a(k, k + 1);
    result *= piv;
    for (std::size_t i = k + 2; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        Rational s = a(i, k + 1) * a(j, k) - a(i, k) * a(j, k + 1);
        if (s == 0) continue;
        a(i, j) += s / piv;
        a(j, i) = -a(i, j);
      }
    }
  }
  return result;
}

ExactMatrix principal_submatrix(const ExactMatrix& m, std::span<const std::size_t> keep) {
  if (!m.is_square()) throw DomainError("principal_submatrix: matrix is not square");
  for (auto k : keep)
    if (k >= m.rows())
      throw DomainError("principal_submatrix: index " + std::to_string(k) + " out of range");
  ExactMatrix s(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) s(i, j) = m(keep[i], keep[j]);
  return s;
}

}  // namespace waring
