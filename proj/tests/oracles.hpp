#pragma once

// Slow, independent reference computations used only by the tests. None of
// these call the library routine they are checked against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "waring/exactla.hpp"
#include "waring/forms.hpp"
#include "waring/multiindex.hpp"
#include "waring/random.hpp"

namespace oracle {

using waring::BigInt;
using waring::ExactMatrix;
using waring::LinearForm;
using waring::Rational;

// Sum over permutations. Fine up to 8x8.
inline Rational leibniz_det(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Textbook elimination over Q with full fractions.
inline std::size_t gaussian_rank(ExactMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

// Expansion along the first row: Pf(A) = sum_j (-1)^(j+1) a_{0j} Pf(A minus rows/cols 0, j).
inline Rational pfaffian_expansion(const ExactMatrix& m) {
  std::function<Rational(const std::vector<std::size_t>&)> rec = [&](const std::vector<std::size_t>& idx) {
    if (idx.empty()) return Rational(1);
    if (idx.size() % 2) return Rational(0);
    Rational total = 0;
    for (std::size_t j = 1; j < idx.size(); ++j) {
      const Rational& a = m(idx[0], idx[j]);
      if (a == 0) continue;
      std::vector<std::size_t> rest;
      for (std::size_t k = 1; k < idx.size(); ++k)
        if (k != j) rest.push_back(idx[k]);
      const Rational sub = rec(rest);
      total += (j % 2 ? 1 : -1) * a * sub;
    }
    return total;
  };
  std::vector<std::size_t> all(m.rows());
  std::iota(all.begin(), all.end(), 0);
  return rec(all);
}

inline ExactMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed, std::int64_t h = 9) {
  waring::Rng rng(seed);
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(rng.uniform(-h, h));
  return m;
}

inline ExactMatrix random_skew(std::size_t n, std::uint64_t seed, std::int64_t h = 9) {
  waring::Rng rng(seed);
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = Rational(rng.uniform(-h, h));
      m(j, i) = -m(i, j);
    }
  return m;
}

// phi_{a,d-a} of sum_i c_i l_i^d built as a sum of rank-one outer products
// l^(d-a) (l^a)^T, with rows and columns in the monomial order of the basis.
inline ExactMatrix cat_from_summands(const std::vector<LinearForm>& ls, const std::vector<Rational>& cs, int d,
                                     int a) {
  const int nv = ls.front().nvars();
  const waring::MonomialBasis rows(nv, d - a), cols(nv, a);
  ExactMatrix m(rows.size(), cols.size());
  for (std::size_t s = 0; s < ls.size(); ++s)
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational u = cs[s] * ls[s].power_product(rows[i]);
      if (u == 0) continue;
      for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) += u * ls[s].power_product(cols[j]);
    }
  return m;
}

struct SignedPermutation {
  std::vector<std::size_t> row_perm, col_perm;
  std::vector<int> row_sign, col_sign;
};

// Holds when b(i, j) = rs[i] cs[j] scale a(rp[i], cp[j]) for every entry.
inline bool check_equivalence(const ExactMatrix& a, const ExactMatrix& b, const SignedPermutation& p,
                              const Rational& scale = 1) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (b(i, j) != p.row_sign[i] * p.col_sign[j] * scale * a(p.row_perm[i], p.col_perm[j])) return false;
  return true;
}

// Searches for a signed row/column permutation taking scale*a to b.
// Backtracking over rows; columns are fixed as soon as a nonzero entry of b
// needs them. Rows and columns are pre-filtered by their multisets of
// absolute values.
inline std::optional<SignedPermutation> find_signed_permutation(const ExactMatrix& a0, const ExactMatrix& b,
                                                                const Rational& scale = 1) {
  if (a0.rows() != b.rows() || a0.cols() != b.cols()) return std::nullopt;
  const ExactMatrix a = a0 * scale;
  const std::size_t R = a.rows(), C = a.cols();
  auto row_sig = [](const ExactMatrix& m, std::size_t i) {
    std::vector<Rational> v;
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(abs(m(i, j)));
    std::sort(v.begin(), v.end());
    return v;
  };
  auto col_sig = [](const ExactMatrix& m, std::size_t j) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(abs(m(i, j)));
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<std::vector<std::size_t>> row_cand(R), col_cand(C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t k = 0; k < R; ++k)
      if (row_sig(b, i) == row_sig(a, k)) row_cand[i].push_back(k);
  for (std::size_t j = 0; j < C; ++j)
    for (std::size_t l = 0; l < C; ++l)
      if (col_sig(b, j) == col_sig(a, l)) col_cand[j].push_back(l);

  SignedPermutation p{std::vector<std::size_t>(R), std::vector<std::size_t>(C), std::vector<int>(R, 0),
                      std::vector<int>(C, 0)};
  std::vector<bool> row_used(R, false), col_used(C, false);
  std::vector<std::size_t> assigned_rows;

  // Column j of b against column l of a with sign c, on all assigned rows.
  auto column_fits = [&](std::size_t j, std::size_t l, int c) {
    for (std::size_t i : assigned_rows)
      if (b(i, j) != p.row_sign[i] * c * a(p.row_perm[i], l)) return false;
    return true;
  };

  std::function<bool(std::size_t)> place_row;
  // Fix the unassigned columns that row i needs, one at a time.
  std::function<bool(std::size_t, std::size_t)> place_cols = [&](std::size_t i, std::size_t j) -> bool {
    while (j < C && (p.col_sign[j] != 0 || b(i, j) == 0)) ++j;
    if (j == C) return place_row(i + 1);
    for (std::size_t l : col_cand[j]) {
      if (col_used[l] || a(p.row_perm[i], l) == 0) continue;
      for (int c : {1, -1}) {
        if (!column_fits(j, l, c)) continue;
        p.col_perm[j] = l;
        p.col_sign[j] = c;
        col_used[l] = true;
        if (place_cols(i, j + 1)) return true;
        col_used[l] = false;
        p.col_sign[j] = 0;
      }
    }
    return false;
  };

  place_row = [&](std::size_t i) -> bool {
    if (i == R) {
      // Columns never touched by a nonzero entry of b: match them to the leftover ones.
      for (std::size_t j = 0; j < C; ++j) {
        if (p.col_sign[j] != 0) continue;
        bool found = false;
        for (std::size_t l : col_cand[j]) {
          if (col_used[l] || !column_fits(j, l, 1)) continue;
          p.col_perm[j] = l;
          p.col_sign[j] = 1;
          col_used[l] = true;
          found = true;
          break;
        }
        if (!found) return false;
      }
      return true;
    }
    for (std::size_t k : row_cand[i]) {
      if (row_used[k]) continue;
      for (int s : {1, -1}) {
        bool ok = true;
        for (std::size_t j = 0; j < C && ok; ++j)
          if (p.col_sign[j] != 0 && b(i, j) != s * p.col_sign[j] * a(k, p.col_perm[j])) ok = false;
        if (!ok) continue;
        p.row_perm[i] = k;
        p.row_sign[i] = s;
        row_used[k] = true;
        assigned_rows.push_back(i);
        // Snapshot the columns so a failed branch can release them.
        const auto col_sign_before = p.col_sign;
        const auto col_used_before = col_used;
        if (place_cols(i, 0)) return true;
        p.col_sign = col_sign_before;
        col_used = col_used_before;
        assigned_rows.pop_back();
        row_used[k] = false;
      }
    }
    return false;
  };
  if (!place_row(0)) return std::nullopt;
  return p;
}

inline BigInt choose(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// Degree of the symmetric (N x N) matrices of rank <= N - m, evaluated as one
// big numerator over one big denominator.
inline BigInt symmetric_corank_degree(int N, int m) {
  BigInt num = 1, den = 1;
  for (int i = 0; i < m; ++i) {
    num *= choose(N + i, m - i);
    den *= choose(2 * i + 1, i);
  }
  if (num % den != 0) return -1;
  return num / den;
}

// Degree of the skew (N x N) matrices of rank <= N - 1 - m (N odd) or the
// analogous locus: 2^-(m) prod_i C(N + i, m - i) / C(2i + 1, i).
inline BigInt skew_corank_degree(int N, int m) {
  BigInt num = 1, den = 1;
  for (int i = 0; i < m; ++i) {
    num *= choose(N + i, m - i);
    den *= choose(2 * i + 1, i);
    den *= 2;
  }
  if (num % den != 0) return -1;
  return num / den;
}

}  // namespace oracle

namespace oracle {

// The 9x9 matrix of phi in S^3 C^3 with rows/cols (P, r), P, r in {0,1,2}:
// entry eps_{P Q k} phi_{k r c}. This is the displayed Aronhold matrix with
// its three misprinted rows (rows 2, 5 and the third row of the (1,2)
// block) restored to the pattern the other rows follow.
inline ExactMatrix aronhold_display_matrix(const waring::HomogForm& phi) {
  auto eps = [](int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return waring::permutation_sign(std::vector<int>{i, j, k});
  };
  ExactMatrix m(9, 9);
  for (int P = 0; P < 3; ++P)
    for (int r = 0; r < 3; ++r)
      for (int Q = 0; Q < 3; ++Q)
        for (int c = 0; c < 3; ++c)
          for (int k = 0; k < 3; ++k) {
            const int e = eps(P, Q, k);
            if (e == 0) continue;
            std::vector<int> t{k, r, c};
            std::sort(t.begin(), t.end());
            m(3 * P + r, 3 * Q + c) += e * phi.tensor_at_tuple(t);
          }
  return m;
}

// The displayed Koszul matrices K_2 and K_4 (rows and columns in the order
// shown, no labels given).
// Symbolic matrices of linear forms written as +-(var+1), 0 for blank.
using Symbolic = std::vector<std::vector<int>>;

inline const Symbolic kDisplayK2 = {{0, 3, -2}, {-3, 0, 1}, {2, -1, 0}};

inline const Symbolic kDisplayK4 = {
    {0, 0, 0, 0, 0, 0, 0, 5, -4, 3},  {0, 0, 0, 0, 0, -5, 4, 0, 0, -2}, {0, 0, 0, 0, 5, 0, -3, 0, 2, 0},
    {0, 0, 0, 0, -4, 3, 0, -2, 0, 0}, {0, 0, 5, -4, 0, 0, 0, 0, 0, 1}, {0, -5, 0, 3, 0, 0, 0, 0, -1, 0},
    {0, 4, -3, 0, 0, 0, 0, 1, 0, 0},  {5, 0, 0, -2, 0, 0, 1, 0, 0, 0}, {-4, 0, 2, 0, 0, -1, 0, 0, 0, 0},
    {3, -2, 0, 0, 1, 0, 0, 0, 0, 0}};

inline ExactMatrix instantiate(const Symbolic& s, std::span<const Rational> v) {
  ExactMatrix m(s.size(), s.front().size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s[i].size(); ++j) {
      const int c = s[i][j];
      if (c != 0) m(i, j) = (c > 0 ? 1 : -1) * v[std::abs(c) - 1];
    }
  return m;
}

}  // namespace oracle
