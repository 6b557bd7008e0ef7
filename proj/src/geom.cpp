#include "waring/geom.hpp"

#include <algorithm>
#include <array>

#include "waring/multiindex.hpp"

namespace waring {

namespace {

BigInt exact_integer(const Rational& q, const char* what) {
  if (q.get_den() != 1) throw std::logic_error(std::string(what) + ": product is not an integer");
  return q.get_num();
}

// C(n, k) with C(n, k) = 0 for k < 0 or k > n, as a big integer.
BigInt choose(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return big_binomial(n, k);
}

struct DefectEntry {
  int k, d, n;
};

// Triples (k, d, n) with sigma_k(v_d(P^n)) of dimension one less than expected.
constexpr std::array<DefectEntry, 4> kDefective = {{{5, 4, 2}, {9, 4, 3}, {14, 4, 4}, {7, 3, 4}}};
// Weakly defective but of the expected dimension.
constexpr std::array<DefectEntry, 2> kWeaklyDefective = {{{9, 6, 2}, {8, 4, 3}}};

template <std::size_t N>
bool listed(const std::array<DefectEntry, N>& table, int n, int d, int r) {
  return std::any_of(table.begin(), table.end(),
                     [&](const DefectEntry& e) { return e.k == r && e.d == d && e.n == n; });
}

}  // namespace

std::uint64_t dim_sab(int a, int b) {
  if (b < 0 || a < b) throw DomainError("dim_sab: need a >= b >= 0");
  return static_cast<std::uint64_t>(a + 2) * static_cast<std::uint64_t>(b + 1) *
         static_cast<std::uint64_t>(a - b + 1) / 2;
}

CodimDegree segre_sym(int n, int r) {
  if (n < 0 || r < 1 || r > n + 1)
    throw DomainError("segre_sym: need 1 <= r <= n+1 (n = " + std::to_string(n) +
                      ", r = " + std::to_string(r) + ")");
  Rational deg = 1;
  for (int i = 0; i <= n - r; ++i)
    deg *= ratio(choose(n + 1 + i, n - r - i + 1), choose(2 * i + 1, i));
  return {choose(n - r + 2, 2), exact_integer(deg, "segre_sym degree")};
}

CodimDegree segre_grass(int n, int r) {
  if (n < 1 || r < 1 || 2 * r > n + 1)
    throw DomainError("segre_grass: need r >= 1 and 2r <= n+1 (n = " + std::to_string(n) +
                      ", r = " + std::to_string(r) + ")");
  const int m = n - 2 * r;
  if (m <= 0) return {0, 1};
  Rational deg = 1;
  for (int i = 0; i <= m - 1; ++i)
    deg *= ratio(choose(n + 1 + i, m - i), choose(2 * i + 1, i));
  BigInt pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(m));
  deg /= Rational(pow2);
  return {choose(m + 1, 2), exact_integer(deg, "segre_grass degree")};
}

BigInt sym_series_degree(int p) {
  if (p < 1) throw DomainError("sym_series_degree: need p >= 1");
  return segre_sym(p * (p + 3) / 2, static_cast<int>(binomial(p + 1, 2))).degree;
}

BigInt grass_series_degree(int p) {
  if (p < 1) throw DomainError("grass_series_degree: need p >= 1");
  return segre_grass((p + 1) * (p + 3) - 1, static_cast<int>(binomial(p + 2, 2))).degree;
}

std::optional<BigInt> known_secant_degree(int n, int d, int r) {
  if (n != 2) return std::nullopt;
  if (d == 4 && r == 3) return BigInt(112);
  if (d == 4 && r == 4) return BigInt(35);
  if (d == 5 && r == 6) return BigInt(140);
  if (d == 6 && r == 6) return BigInt(28314);
  return std::nullopt;
}

SecantDimReport secant_dim(int n, int d, int r) {
  if (n < 1 || d < 1 || r < 1) throw DomainError("secant_dim: need n, d, r >= 1");
  SecantDimReport rep;
  rep.n = n;
  rep.d = d;
  rep.r = r;
  rep.ambient_dim = choose(n + d, d) - 1;
  const BigInt naive = BigInt(r) * (n + 1) - 1;
  rep.expected_dim = naive < rep.ambient_dim ? naive : rep.ambient_dim;
  rep.actual_dim = rep.expected_dim;
  if (d == 2) {
    if (r <= n + 1) rep.actual_dim = rep.ambient_dim - segre_sym(n, r).codim;
    else rep.actual_dim = rep.ambient_dim;
    rep.defective = rep.actual_dim < rep.expected_dim;
    rep.weakly_defective = r >= 2 && BigInt(r) <= rep.ambient_dim + 1;
  } else if (listed(kDefective, n, d, r)) {
    rep.actual_dim = rep.expected_dim - 1;
    rep.defective = true;
    rep.weakly_defective = true;
  } else if (listed(kWeaklyDefective, n, d, r)) {
    rep.weakly_defective = true;
  }
  return rep;
}

}  // namespace waring
