#include "waring/multiindex.hpp"

#include <algorithm>
#include <numeric>

namespace waring {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

BigInt big_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(int n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(std::max(n, 0)));
  return r;
}

std::size_t monomial_count(int nvars, int degree) {
  if (nvars <= 0 || degree < 0) return degree == 0 ? 1 : 0;
  return binomial(nvars - 1 + degree, degree);
}

BigInt multinomial(std::span<const int> exponents) {
  const int d = std::accumulate(exponents.begin(), exponents.end(), 0);
  BigInt r = factorial(d);
  for (int e : exponents) r /= factorial(e);
  return r;
}

IndexTuple to_tuple(std::span<const int> exponents) {
  IndexTuple t;
  for (std::size_t i = 0; i < exponents.size(); ++i) t.insert(t.end(), exponents[i], static_cast<int>(i));
  return t;
}

Exponents to_exponents(std::span<const int> tuple, int nvars) {
  Exponents e(nvars, 0);
  for (int i : tuple) {
    if (i < 0 || i >= nvars) throw DomainError("index tuple entry out of range");
    ++e[i];
  }
  return e;
}

std::size_t monomial_index(std::span<const int> exponents) {
  const int n = static_cast<int>(exponents.size()) - 1;
  const IndexTuple t = to_tuple(exponents);
  const int d = static_cast<int>(t.size());
  std::size_t r = 0;
  int lo = 0;
  for (int j = 0; j < d; ++j) {
    const int len = d - j - 1;
    for (int v = lo; v < t[j]; ++v) r += binomial(n - v + len, len);
    lo = t[j];
  }
  return r;
}

namespace {

void enumerate_tuples(int nvars, int degree, int lo, IndexTuple& cur, std::vector<Exponents>& out) {
  if (static_cast<int>(cur.size()) == degree) {
    out.push_back(to_exponents(cur, nvars));
    return;
  }
  for (int v = lo; v < nvars; ++v) {
    cur.push_back(v);
    enumerate_tuples(nvars, degree, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

MonomialBasis::MonomialBasis(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (nvars < 1 || degree < 0) throw DomainError("MonomialBasis: need nvars >= 1 and degree >= 0");
  exps_.reserve(monomial_count(nvars, degree));
  IndexTuple cur;
  enumerate_tuples(nvars, degree, 0, cur, exps_);
}

std::size_t MonomialBasis::index_of(std::span<const int> exponents) const {
  if (static_cast<int>(exponents.size()) != nvars_ ||
      std::accumulate(exponents.begin(), exponents.end(), 0) != degree_)
    throw DomainError("MonomialBasis::index_of: exponent vector has wrong shape");
  return monomial_index(exponents);
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::size_t subset_index(std::span<const int> subset, int n) {
  const int k = static_cast<int>(subset.size());
  std::size_t r = 0;
  int prev = -1;
  for (int j = 0; j < k; ++j) {
    for (int v = prev + 1; v < subset[j]; ++v) r += binomial(n - v - 1, k - j - 1);
    prev = subset[j];
  }
  return r;
}

int permutation_sign(std::span<const int> seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace waring
