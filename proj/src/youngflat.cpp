#include "waring/youngflat.hpp"

#include <algorithm>
#include <numeric>

#include "waring/flattenings.hpp"
#include "waring/random.hpp"

namespace waring {

KoszulPattern::KoszulPattern(int n, int a, bool volume_identified)
    : n_(n), a_(a), identified_(volume_identified) {
  if (n < 0 || a < 0 || a > n) throw DomainError("koszul pattern: need 0 <= a <= n");
  if (volume_identified && n != 2 * a)
    throw DomainError("koszul pattern: volume identification needs n = 2a");
  const auto raw_rows = subsets(n + 1, a + 1);
  cols_ = subsets(n + 1, a);
  rows_.resize(raw_rows.size());
  cells_.resize(raw_rows.size() * cols_.size());

  for (std::size_t jr = 0; jr < raw_rows.size(); ++jr) {
    const auto& J = raw_rows[jr];
    std::size_t target = jr;
    int vol_sign = 1;
    if (identified_) {
      std::vector<int> comp;
      for (int v = 0; v <= n; ++v)
        if (!std::binary_search(J.begin(), J.end(), v)) comp.push_back(v);
      std::vector<int> seq = J;
      seq.insert(seq.end(), comp.begin(), comp.end());
      vol_sign = permutation_sign(seq);
      target = subset_index(comp, n + 1);
      rows_[target] = comp;
    } else {
      rows_[target] = J;
    }
    // J = I u {i}: drop one element of J at a time.
    for (std::size_t pos = 0; pos < J.size(); ++pos) {
      std::vector<int> I = J;
      I.erase(I.begin() + static_cast<std::ptrdiff_t>(pos));
      const std::size_t col = subset_index(I, n + 1);
      KoszulCell& c = cells_[target * cols_.size() + col];
      c.var = J[pos];
      c.sign = (pos % 2 == 0 ? 1 : -1) * vol_sign;
    }
  }
}

ExactMatrix KoszulPattern::instantiate(std::span<const Rational> v) const {
  if (static_cast<int>(v.size()) != n_ + 1)
    throw DomainError("koszul instantiate: vector must have n+1 coordinates");
  ExactMatrix m(rows(), cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      const KoszulCell& c = cell(i, j);
      if (c.var >= 0 && v[c.var] != 0) m(i, j) = c.sign * v[c.var];
    }
  return m;
}

KoszulPattern koszul_matrix(int n, int a) { return KoszulPattern(n, a, n == 2 * a); }

std::string to_string(Structure s) {
  switch (s) {
    case Structure::Symmetric: return "symmetric";
    case Structure::Skew: return "skew";
    case Structure::Rectangular: return "rectangular";
  }
  return "rectangular";
}

Structure young_flattening_structure(int n, int d) {
  const int a = n / 2;
  if (n != 2 * a || d % 2 == 0) return Structure::Rectangular;
  return a % 2 == 1 ? Structure::Skew : Structure::Symmetric;
}

namespace {

struct YfShape {
  int n, d, delta, a;
  std::size_t block_rows, block_cols;
};

YfShape yf_shape(int n, int d) {
  if (n < 1) throw DomainError("young flattening: need at least 2 variables");
  if (d < 1) throw DomainError("young flattening: need degree >= 1");
  YfShape s{n, d, (d - 1) / 2, n / 2, 0, 0};
  s.block_rows = monomial_count(n + 1, d - 1 - s.delta);
  s.block_cols = monomial_count(n + 1, s.delta);
  return s;
}

// Places sign-scaled copies of block(i) at every Koszul cell.
ExactMatrix assemble(const KoszulPattern& pat, const YfShape& s,
                     const std::vector<ExactMatrix>& blocks) {
  ExactMatrix m(pat.rows() * s.block_rows, pat.cols() * s.block_cols);
  for (std::size_t r = 0; r < pat.rows(); ++r)
    for (std::size_t c = 0; c < pat.cols(); ++c) {
      const KoszulCell& cell = pat.cell(r, c);
      if (cell.var < 0) continue;
      m.set_block(r * s.block_rows, c * s.block_cols, blocks[cell.var], Rational(cell.sign));
    }
  return m;
}

}  // namespace

YoungFlattening young_flattening(const HomogForm& phi) {
  const YfShape s = yf_shape(phi.nvars() - 1, phi.degree());
  const KoszulPattern pat = koszul_matrix(s.n, s.a);
  std::vector<ExactMatrix> blocks;
  for (int i = 0; i <= s.n; ++i) blocks.push_back(catalecticant_block(partial_derivative(phi, i), s.delta));
  YoungFlattening yf;
  yf.n = s.n;
  yf.d = s.d;
  yf.delta = s.delta;
  yf.a = s.a;
  yf.matrix = assemble(pat, s, blocks);
  yf.structure = young_flattening_structure(s.n, s.d);
  return yf;
}

std::size_t yf_border_rank_lb(const HomogForm& phi) {
  const int n = phi.nvars() - 1;
  const std::size_t r = rank(young_flattening(phi).matrix);
  const std::size_t per = binomial(n, n / 2);
  return (r + per - 1) / per;
}

std::size_t yf_column(int n, int d, std::size_t subset_idx, std::size_t monomial_idx) {
  const YfShape s = yf_shape(n, d);
  return subset_idx * s.block_cols + monomial_idx;
}

std::vector<ExactVector> euler_kernel_vectors(int n, int d) {
  const YfShape s = yf_shape(n, d);
  if (s.a != 1) throw DomainError("euler_kernel_vectors: needs floor(n/2) = 1");
  if (s.delta < 1) throw DomainError("euler_kernel_vectors: needs degree >= 3");
  const MonomialBasis gammas(n + 1, s.delta - 1);
  const std::size_t cols = static_cast<std::size_t>(n + 1) * s.block_cols;
  std::vector<ExactVector> out;
  for (std::size_t g = 0; g < gammas.size(); ++g) {
    ExactVector v(cols);
    for (int i = 0; i <= n; ++i) {
      Exponents e = gammas[g];
      ++e[i];
      v[yf_column(n, d, static_cast<std::size_t>(i), monomial_index(e))] = 1;
    }
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Rational> power_products(const LinearForm& l, const MonomialBasis& basis) {
  std::vector<Rational> out(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) out[k] = l.power_product(basis[k]);
  return out;
}

constexpr int kPowerSpanAttempts = 16;

}  // namespace

ExactVector PowerSpanBasis::expand(const HomogForm& phi) const {
  if (phi.nvars() != nvars || phi.degree() != degree)
    throw DomainError("power-span expansion: form shape does not match the basis");
  return to_power_coords * phi.tensor_coeffs();
}

PowerSpanBasis power_span_basis(int nvars, int degree, std::uint64_t seed) {
  if (nvars < 1 || degree < 0) throw DomainError("power_span_basis: bad shape");
  const std::size_t N = monomial_count(nvars, degree);
  for (int attempt = 0; attempt < kPowerSpanAttempts; ++attempt) {
    Rng rng(seed + static_cast<std::uint64_t>(attempt) * 0x9e3779b97f4a7c15ULL);
    const std::int64_t height = 4 + attempt;
    PowerSpanBasis b;
    b.nvars = nvars;
    b.degree = degree;
    ExactMatrix P(N, N);
    while (b.forms.size() < N) {
      std::vector<Rational> c(nvars);
      bool zero = true;
      for (auto& x : c) {
        x = rng.uniform(-height, height);
        zero = zero && x == 0;
      }
      if (zero) continue;
      b.forms.emplace_back(std::move(c));
    }
    for (std::size_t j = 0; j < N; ++j) {
      const HomogForm pw = power_form(b.forms[j], degree);
      for (std::size_t i = 0; i < N; ++i) P(i, j) = pw.tensor(i);
    }
    if (rank(P) != N) continue;
    b.to_power_coords = inverse(P);
    return b;
  }
  throw DomainError("power_span_basis: no spanning set found after " +
                    std::to_string(kPowerSpanAttempts) + " attempts");
}

ExactMatrix flattening_from_power_rule(const HomogForm& phi, const PowerRule& rule,
                                       const PowerSpanBasis& basis) {
  if (phi.nvars() != rule.nvars || phi.degree() != rule.degree)
    throw DomainError("flattening_from_power_rule: form does not match the rule's degree");
  const ExactVector c = basis.expand(phi);
  ExactMatrix out(rule.rows, rule.cols);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    ExactMatrix term = rule.at_power(basis.forms[i]);
    if (term.rows() != rule.rows || term.cols() != rule.cols)
      throw DomainError("flattening_from_power_rule: rule returned a matrix of the wrong size");
    term *= c[i];
    out += term;
  }
  return out;
}

ExactMatrix flattening_from_power_rule(const HomogForm& phi, const PowerRule& rule,
                                       std::uint64_t seed) {
  return flattening_from_power_rule(phi, rule, power_span_basis(rule.nvars, rule.degree, seed));
}

PowerRule young_flattening_rule(int n, int d) {
  const YfShape s = yf_shape(n, d);
  const KoszulPattern pat = koszul_matrix(n, s.a);
  PowerRule rule;
  rule.nvars = n + 1;
  rule.degree = d;
  rule.rows = pat.rows() * s.block_rows;
  rule.cols = pat.cols() * s.block_cols;
  rule.at_power = [s, pat](const LinearForm& l) {
    const MonomialBasis rb(s.n + 1, s.d - 1 - s.delta), cb(s.n + 1, s.delta);
    const auto lr = power_products(l, rb), lc = power_products(l, cb);
    ExactMatrix outer(rb.size(), cb.size());
    for (std::size_t i = 0; i < rb.size(); ++i)
      for (std::size_t j = 0; j < cb.size(); ++j) outer(i, j) = lr[i] * lc[j];
    std::vector<ExactMatrix> blocks;
    for (int i = 0; i <= s.n; ++i) blocks.push_back(outer * (Rational(s.d) * l[i]));
    return assemble(pat, s, blocks);
  };
  return rule;
}

namespace {

Rational permanent(const std::vector<std::vector<Rational>>& m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    Rational p = 1;
    for (std::size_t i = 0; i < k && p != 0; ++i) p *= m[i][perm[i]];
    total += p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

PowerRule twisted_rule(int m, int k) {
  if (m < 0 || k < 0) throw DomainError("twisted_rule: need m, k >= 0");
  PowerRule rule;
  rule.nvars = 3;
  rule.degree = 2 * m + k;
  const std::size_t nm = monomial_count(3, m), nk = monomial_count(3, k);
  rule.rows = rule.cols = nm * nk;
  rule.at_power = [m, k, nm, nk](const LinearForm& l) {
    if (l.nvars() != 3) throw DomainError("twisted_rule: linear form must have 3 variables");
    // Contraction with l on the pair basis {01, 02, 12}, followed by V* ~ L^2 V.
    const Rational N[3][3] = {{0, l[0], l[1]}, {-l[0], 0, l[2]}, {-l[1], -l[2], 0}};
    const MonomialBasis mb(3, m), kb(3, k);
    const auto lp = power_products(l, mb);
    const Rational kfact(factorial(k));
    ExactMatrix sym(nk, nk);
    for (std::size_t r = 0; r < nk; ++r) {
      const IndexTuple C = to_tuple(kb[r]);
      for (std::size_t c = 0; c < nk; ++c) {
        const IndexTuple A = to_tuple(kb[c]);
        std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub[i][j] = N[C[i]][A[j]];
        sym(r, c) = permanent(sub) / kfact;
      }
    }
    ExactMatrix out(nm * nk, nm * nk);
    for (std::size_t b = 0; b < nm; ++b)
      for (std::size_t a = 0; a < nm; ++a) {
        const Rational s = lp[a] * lp[b];
        if (s != 0) out.set_block(b * nk, a * nk, sym, s);
      }
    return out;
  };
  return rule;
}

ExactMatrix symmetric_twisted_flattening(const HomogForm& phi, int p) {
  if (phi.nvars() != 3) throw DomainError("symmetric_twisted_flattening: form must be ternary");
  if (p < 0 || phi.degree() != 2 * p + 2)
    throw DomainError("symmetric_twisted_flattening: degree must be 2p+2 = " +
                      std::to_string(2 * p + 2) + ", got " + std::to_string(phi.degree()));
  return flattening_from_power_rule(phi, twisted_rule(p, 2));
}

ExactMatrix q_twisted_flattening(const HomogForm& phi, int p, int q) {
  if (phi.nvars() != 3) throw DomainError("q_twisted_flattening: form must be ternary");
  if (p < 1 || q < 1) throw DomainError("q_twisted_flattening: need p, q >= 1");
  if (phi.degree() != p + 4 * q - 1)
    throw DomainError("q_twisted_flattening: degree must be p+4q-1 = " +
                      std::to_string(p + 4 * q - 1) + ", got " + std::to_string(phi.degree()));
  return flattening_from_power_rule(phi, twisted_rule(2 * q, p - 1));
}

std::uint64_t x_power_yf_rank(int a, int b, int alpha, int beta) {
  if (b < 0 || a < b || alpha < 0 || alpha > b || beta < 0 || beta > a - b)
    throw DomainError("x_power_yf_rank: need a >= b >= 0, 0 <= alpha <= b, 0 <= beta <= a-b");
  const std::uint64_t prod = static_cast<std::uint64_t>(b - alpha + 1) *
                             static_cast<std::uint64_t>(a - b - beta + 1) *
                             static_cast<std::uint64_t>(a + beta - alpha + 2);
  return prod / 2;
}

}  // namespace waring
