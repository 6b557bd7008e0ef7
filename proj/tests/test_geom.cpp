#include "doctest.h"
#include "oracles.hpp"

#include "waring/geom.hpp"
#include "waring/multiindex.hpp"

using namespace waring;

TEST_CASE("dim S_{a,b} C^3") {
  CHECK(dim_sab(1, 0) == 3);
  CHECK(dim_sab(3, 2) == 15);
  CHECK(dim_sab(4, 1) == 24);
  CHECK(dim_sab(0, 0) == 1);
  // S_{a,0} is S^a and S_{a,a} is S^a of the dual after a twist.
  for (int a = 0; a <= 8; ++a) {
    CHECK(dim_sab(a, 0) == binomial(a + 2, 2));
    CHECK(dim_sab(a, a) == binomial(a + 2, 2));
  }
  CHECK_THROWS_AS(dim_sab(1, 2), DomainError);
}

TEST_CASE("symmetric degeneracy degrees") {
  const BigInt series[] = {4, 112, 28314, 81662152};
  for (int p = 1; p <= 4; ++p) CHECK(sym_series_degree(p) == series[p - 1]);
  for (int n = 0; n <= 5; ++n) CHECK(segre_sym(n, n + 1).codim == 0);
  CHECK(segre_sym(3, 4).degree == 1);
  // The determinant hypersurface: degree n+1.
  for (int n = 1; n <= 6; ++n) {
    CHECK(segre_sym(n, n).degree == n + 1);
    CHECK(segre_sym(n, n).codim == 1);
  }
  CHECK(segre_sym(2, 1).degree == 4);
  // Direct product evaluation over a grid.
  for (int n = 1; n <= 12; ++n)
    for (int r = 1; r <= n + 1; ++r) {
      const CodimDegree cd = segre_sym(n, r);
      CHECK(cd.degree == oracle::symmetric_corank_degree(n + 1, n + 1 - r));
      CHECK(cd.codim == oracle::choose(n + 2 - r, 2));
    }
  CHECK(segre_sym(5, 4).degree == oracle::symmetric_corank_degree(6, 2));
  CHECK_THROWS_AS(segre_sym(2, 4), DomainError);
}

TEST_CASE("skew degeneracy degrees") {
  const BigInt series[] = {4, 140, 65780, 563178924};
  for (int p = 1; p <= 4; ++p) CHECK(grass_series_degree(p) == series[p - 1]);
  // Pfaffian hypersurface of a 2m x 2m skew matrix has degree m.
  for (int m = 2; m <= 6; ++m) {
    const CodimDegree cd = segre_grass(2 * m - 1, m - 1);
    CHECK(cd.codim == 1);
    CHECK(cd.degree == m);
  }
  // G(2, 5) in P^9 has degree 5 and codimension 3.
  CHECK(segre_grass(4, 1).degree == 5);
  CHECK(segre_grass(4, 1).codim == 3);
  CHECK(segre_grass(5, 3).degree == 1);
  CHECK(segre_grass(5, 3).codim == 0);
  for (int n = 2; n <= 14; ++n)
    for (int r = 1; 2 * r <= n + 1; ++r) {
      const int m = n - 2 * r;
      if (m <= 0) continue;
      CHECK(segre_grass(n, r).degree == oracle::skew_corank_degree(n + 1, m));
    }
  CHECK_THROWS_AS(segre_grass(4, 3), DomainError);
}

TEST_CASE("known secant degrees") {
  CHECK(known_secant_degree(2, 4, 3) == BigInt(112));
  CHECK(known_secant_degree(2, 4, 4) == BigInt(35));
  CHECK(known_secant_degree(2, 5, 6) == BigInt(140));
  CHECK(known_secant_degree(2, 6, 6) == BigInt(28314));
  CHECK_FALSE(known_secant_degree(2, 7, 3).has_value());
  CHECK_FALSE(known_secant_degree(3, 4, 3).has_value());
  // Tabulated values coincide with the series where the constructions overlap.
  CHECK(*known_secant_degree(2, 4, 3) == sym_series_degree(2));
  CHECK(*known_secant_degree(2, 5, 6) == grass_series_degree(2));
  CHECK(*known_secant_degree(2, 6, 6) == sym_series_degree(3));
}

TEST_CASE("secant dimensions and defectivity") {
  const SecantDimReport c = secant_dim(2, 3, 3);
  CHECK(c.actual_dim == 8);
  CHECK(c.ambient_dim == 9);
  CHECK_FALSE(c.defective);

  const SecantDimReport q = secant_dim(2, 4, 5);
  CHECK(q.defective);
  CHECK(q.expected_dim == 14);
  CHECK(q.actual_dim == 13);

  const SecantDimReport s = secant_dim(2, 6, 9);
  CHECK(s.weakly_defective);
  CHECK_FALSE(s.defective);
  CHECK(s.actual_dim == s.ambient_dim - 1);

  for (const auto& [n, d, r] : {std::tuple{3, 4, 9}, std::tuple{4, 4, 14}, std::tuple{4, 3, 7}}) {
    const SecantDimReport rep = secant_dim(n, d, r);
    CHECK(rep.defective);
    CHECK(rep.actual_dim + 1 == rep.expected_dim);
  }
  CHECK(secant_dim(3, 4, 8).weakly_defective);
  CHECK_FALSE(secant_dim(3, 4, 8).defective);

  // Quadrics: sigma_r is the rank <= r locus, far below the naive count.
  const SecantDimReport quad = secant_dim(4, 2, 2);
  CHECK(quad.defective);
  CHECK(quad.actual_dim == quad.ambient_dim - segre_sym(4, 2).codim);

  // Outside the table every (n, d >= 3, r) is non-defective.
  const auto tabulated = [](int n, int d, int r) {
    return (n == 2 && d == 4 && r == 5) || (n == 3 && d == 4 && r == 9) || (n == 4 && d == 4 && r == 14) ||
           (n == 4 && d == 3 && r == 7);
  };
  for (int n = 1; n <= 5; ++n)
    for (int d = 3; d <= 6; ++d)
      for (int r = 1; r <= 15; ++r) {
        const SecantDimReport rep = secant_dim(n, d, r);
        CHECK(rep.actual_dim <= rep.expected_dim);
        if (rep.defective) CHECK(tabulated(n, d, r));
      }
}
