#include "doctest.h"
#include "oracles.hpp"

#include "waring/flattenings.hpp"
#include "waring/forms.hpp"
#include "waring/io.hpp"
#include "waring/multiindex.hpp"

using namespace waring;

namespace {

std::vector<Rational> ones(std::size_t n) { return std::vector<Rational>(n, Rational(1)); }

std::vector<Rational> basis_vector(int n, int i) {
  std::vector<Rational> v(n, Rational(0));
  v[i] = 1;
  return v;
}

std::vector<Rational> random_vector(int n, Rng& rng) {
  std::vector<Rational> v;
  for (int i = 0; i < n; ++i) v.emplace_back(rng.uniform(-5, 5));
  return v;
}

}  // namespace

TEST_CASE("catalecticant examples") {
  const ExactMatrix a = cat_matrix(parse_inline_polynomial("x0^2", 2), 1);
  CHECK(a == ExactMatrix{{1, 0}, {0, 0}});
  CHECK(rank(a) == 1);
  const ExactMatrix b = cat_matrix(parse_inline_polynomial("x0*x1"), 1);
  CHECK(b == ExactMatrix{{0, make_rational(1, 2)}, {make_rational(1, 2), 0}});
  CHECK(rank(b) == 2);
  const ExactMatrix c = cat_matrix(parse_inline_polynomial("x0^4 + x1^4"), 2);
  CHECK(c == ExactMatrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 1}});
  CHECK(rank(c) == 2);
  CHECK_THROWS_AS(cat_matrix(parse_inline_polynomial("x0^3"), 0), DomainError);
  CHECK_THROWS_AS(cat_matrix(parse_inline_polynomial("x0^3"), 3), DomainError);
}

TEST_CASE("catalecticant equals the sum of outer products of the summands") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const int nv = 2 + static_cast<int>(seed % 3), d = 2 + static_cast<int>(seed % 5);
    const int r = 1 + static_cast<int>(seed % 5);
    const PowerSum ps = random_power_sum(nv, d, r, seed);
    for (int a = 1; a < d; ++a) {
      const ExactMatrix m = cat_matrix(ps.form, a);
      CHECK(m == oracle::cat_from_summands(ps.summands, ones(r), d, a));
      CHECK(m.transpose() == cat_matrix(ps.form, d - a));
    }
  }
}

TEST_CASE("rank profile") {
  const HomogForm l = power_form(LinearForm{2, -1, 3}, 6);
  CHECK(rank_profile(l) == std::vector<std::size_t>{1, 1, 1});
  CHECK(rank_profile(HomogForm(3, 5)) == std::vector<std::size_t>{0, 0});
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const int d = 4 + static_cast<int>(seed % 3), r = 1 + static_cast<int>(seed % 6);
    const PowerSum ps = random_power_sum(3, d, r, seed);
    const auto prof = rank_profile(ps.form);
    for (int a = 1; a <= d / 2; ++a) {
      const std::size_t expected =
          std::min<std::size_t>({static_cast<std::size_t>(r), binomial(a + 2, 2), binomial(d - a + 2, 2)});
      CHECK(prof[a - 1] == expected);
      CHECK(prof[a - 1] == oracle::gaussian_rank(cat_matrix(ps.form, a)));
    }
  }
}

TEST_CASE("catalecticant border-rank lower bound") {
  CHECK(cat_border_rank_lb(power_form(LinearForm{1, 2, 3}, 5)) == 1);
  for (int d = 2; d <= 10; d += 2) {
    const HomogForm phi = random_form(2, d, static_cast<std::uint64_t>(d));
    CHECK(cat_border_rank_lb(phi) == static_cast<std::size_t>(d / 2 + 1));
  }
  const PowerSum ps = random_power_sum(3, 4, 4, 2);
  CHECK(cat_border_rank_lb(ps.form) == 4);
}

TEST_CASE("ternary rank-profile membership") {
  CHECK(ternary_membership_consistent(parse_inline_polynomial("x0^4", 3), 1).consistent);
  const MembershipReport three = ternary_membership_consistent(random_power_sum(3, 4, 3, 1).form, 3);
  CHECK(three.consistent);
  CHECK(three.profile == std::vector<std::size_t>{3, 3});
  const MembershipReport five = ternary_membership_consistent(random_power_sum(3, 4, 5, 1).form, 3);
  CHECK_FALSE(five.consistent);
  CHECK(five.profile[1] == 5);
}

TEST_CASE("skew tensors") {
  SkewTensor t(4, 2);
  t.add({1, 0}, 3);
  CHECK(t.at({0, 1}) == -3);
  t.add({2, 2}, 5);
  CHECK(t.at({2, 2}) == 0);
  t.add({0, 1}, 3);
  CHECK(t.is_zero());
  const SkewTensor w = wedge({basis_vector(3, 1), basis_vector(3, 0)});
  CHECK(w.at({0, 1}) == -1);
  // Alternating: swapping two factors negates, repeating one kills the wedge.
  Rng rng(5);
  const auto u = random_vector(5, rng), v = random_vector(5, rng), x = random_vector(5, rng);
  SkewTensor sum = wedge({u, v, x});
  sum += wedge({v, u, x});
  CHECK(sum.is_zero());
  CHECK(wedge({u, u, x}).is_zero());
}

TEST_CASE("Grassmann skew-flattening examples") {
  SkewTensor e012(6, 3);
  e012.add({0, 1, 2}, 1);
  CHECK(rank(grass_skew_flattening(e012, 1)) == 3);
  CHECK(rank(grass_skew_flattening(SkewTensor(6, 3), 1)) == 0);
  SkewTensor two = e012;
  two.add({3, 4, 5}, 1);
  CHECK(rank(grass_skew_flattening(two, 1)) == 6);
  CHECK(grass_border_rank_lb(e012, 1) == 1);
  CHECK(grass_border_rank_lb(two, 1) == 2);
  const ExactMatrix m = grass_skew_flattening(two, 1);
  CHECK(m.rows() == binomial(6, 2));
  CHECK(m.cols() == 6);
}

TEST_CASE("skew flattening of sums of decomposables in wedge^2 C^6 and wedge^3 C^9") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Rng rng(seed);
    SkewTensor s2(6, 2);
    for (int i = 0; i < 2; ++i) s2 += wedge({random_vector(6, rng), random_vector(6, rng)});
    const ExactMatrix m2 = grass_skew_flattening(s2, 1);
    // For k = 2 this is the skew matrix of the 2-form itself.
    CHECK(m2.rows() == 6);
    CHECK(m2.is_skew_symmetric());
    CHECK(rank(m2) == 4);
    CHECK(grass_border_rank_lb(s2, 1) == 2);
    for (int r = 1; r <= 3; ++r) {
      SkewTensor s3(9, 3);
      for (int i = 0; i < r; ++i) s3 += wedge({random_vector(9, rng), random_vector(9, rng), random_vector(9, rng)});
      const ExactMatrix m3 = grass_skew_flattening(s3, 1);
      CHECK(oracle::gaussian_rank(m3) == static_cast<std::size_t>(3 * r));
      CHECK(grass_border_rank_lb(s3, 1) == static_cast<std::size_t>(r));
    }
  }
}

TEST_CASE("skew flattening checks its arguments") {
  SkewTensor t(5, 2);
  CHECK_THROWS_AS(grass_skew_flattening(t, 3), DomainError);
  CHECK_THROWS_AS(SkewTensor(3, 4), DomainError);
}
