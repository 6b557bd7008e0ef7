#include "doctest.h"
#include "oracles.hpp"

#include "waring/flattenings.hpp"
#include "waring/forms.hpp"
#include "waring/io.hpp"
#include "waring/multiindex.hpp"

using namespace waring;

namespace {

using Terms = std::vector<std::pair<Monomial, Rational>>;

// Monomial coefficients of l^d by repeated multiplication of coefficient
// maps, independent of the tensor layout.
std::map<Monomial, Rational> expand_power(const LinearForm& l, int d) {
  std::map<Monomial, Rational> acc{{Monomial(l.nvars(), 0), Rational(1)}};
  for (int step = 0; step < d; ++step) {
    std::map<Monomial, Rational> next;
    for (const auto& [m, c] : acc)
      for (int i = 0; i < l.nvars(); ++i) {
        if (l[i] == 0) continue;
        Monomial e = m;
        ++e[i];
        next[e] += c * l[i];
      }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

TEST_CASE("multi-index helpers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(monomial_count(3, 5) == 21);
  CHECK(monomial_count(2, 0) == 1);
  const int e[] = {1, 1, 1};
  CHECK(multinomial(e) == 6);
  const int t[] = {0, 0, 2};
  CHECK(to_exponents(t, 3) == Exponents{2, 0, 1});
  const int e2[] = {2, 0, 1};
  CHECK(to_tuple(e2) == IndexTuple{0, 0, 2});
  CHECK(subsets(4, 2).size() == 6);
  CHECK(subsets(4, 2).front() == std::vector<int>{0, 1});
  const int s[] = {1, 3};
  CHECK(subset_index(s, 4) == 4);
  const int p[] = {2, 0, 1};
  CHECK(permutation_sign(p) == 1);
  const int q[] = {1, 0, 2};
  CHECK(permutation_sign(q) == -1);
}

TEST_CASE("monomial basis is graded-lex with x0 largest and index_of inverts it") {
  const MonomialBasis b(3, 2);
  REQUIRE(b.size() == 6);
  CHECK(b[0] == Exponents{2, 0, 0});
  CHECK(b[1] == Exponents{1, 1, 0});
  CHECK(b[5] == Exponents{0, 0, 2});
  for (int nv = 1; nv <= 4; ++nv)
    for (int d = 0; d <= 5; ++d) {
      const MonomialBasis mb(nv, d);
      CHECK(mb.size() == monomial_count(nv, d));
      for (std::size_t k = 0; k < mb.size(); ++k) CHECK(mb.index_of(mb[k]) == k);
    }
}

TEST_CASE("from_monomial_coeffs divides by the multinomial coefficient") {
  const Terms t1{{{1, 1, 1}, 6}};
  const HomogForm a = from_monomial_coeffs(3, 3, t1);
  CHECK(a.tensor_at_tuple(std::vector<int>{0, 1, 2}) == 1);
  const Terms t2{{{3, 0, 0}, 1}};
  CHECK(from_monomial_coeffs(3, 3, t2).tensor_at_tuple(std::vector<int>{0, 0, 0}) == 1);
  const Terms t3{{{2, 1, 0}, 3}};
  CHECK(from_monomial_coeffs(3, 3, t3).tensor_at_tuple(std::vector<int>{0, 0, 1}) == 1);
  const Terms bad{{{2, 0, 0}, 1}};
  CHECK_THROWS_AS(from_monomial_coeffs(3, 3, bad), DomainError);
}

TEST_CASE("monomial and tensor conventions round-trip") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const int nv = 1 + static_cast<int>(seed % 4), d = static_cast<int>(seed % 6);
    const HomogForm phi = random_form(nv, d, seed);
    const MonomialBasis b(nv, d);
    const auto mc = phi.monomial_coeffs();
    Terms terms;
    for (std::size_t k = 0; k < b.size(); ++k) terms.emplace_back(b[k], mc[k]);
    CHECK(from_monomial_coeffs(nv, d, terms) == phi);
    for (std::size_t k = 0; k < b.size(); ++k) CHECK(mc[k] == phi.tensor(k) * Rational(multinomial(b[k])));
  }
}

TEST_CASE("partial derivatives") {
  const HomogForm c = parse_inline_polynomial("x0^3", 3);
  CHECK(partial_derivative(c, 0) == parse_inline_polynomial("3*x0^2", 3));
  CHECK(partial_derivative(c, 1).is_zero());
  // d/dx2 of x0 x1 x2 is x0 x1, whose tensor component at {0,1} is 1/2.
  const HomogForm m = parse_inline_polynomial("x0*x1*x2");
  const HomogForm dm = partial_derivative(m, 2);
  CHECK(dm.degree() == 2);
  CHECK(dm.tensor_at_tuple(std::vector<int>{0, 1}) == make_rational(1, 2));
  CHECK(dm == parse_inline_polynomial("x0*x1", 3));
}

TEST_CASE("Euler identity: sum x_i d_i phi = d phi") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const HomogForm phi = random_form(3, 4, seed);
    Rng rng(seed);
    std::vector<Rational> pt{Rational(rng.uniform(-5, 5)), Rational(rng.uniform(-5, 5)), Rational(rng.uniform(-5, 5))};
    Rational lhs = 0;
    for (int i = 0; i < 3; ++i) lhs += pt[i] * evaluate(partial_derivative(phi, i), pt);
    CHECK(lhs == 4 * evaluate(phi, pt));
  }
}

TEST_CASE("power_form") {
  CHECK(power_form(LinearForm{1, 0, 0}, 3) == parse_inline_polynomial("x0^3", 3));
  CHECK(power_form(LinearForm{1, 1}, 2) == parse_inline_polynomial("x0^2 + 2*x0*x1 + x1^2"));
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Rng rng(seed);
    std::vector<Rational> c;
    const int nv = 2 + static_cast<int>(seed % 3), d = 1 + static_cast<int>(seed % 5);
    for (int i = 0; i < nv; ++i) c.emplace_back(rng.uniform(-4, 4));
    c[0] = c[0] == 0 ? Rational(1) : c[0];
    const LinearForm l(c);
    const HomogForm f = power_form(l, d);
    const auto expected = expand_power(l, d);
    const MonomialBasis b(nv, d);
    const auto mc = f.monomial_coeffs();
    for (std::size_t k = 0; k < b.size(); ++k) {
      const auto it = expected.find(b[k]);
      CHECK(mc[k] == (it == expected.end() ? Rational(0) : it->second));
    }
    for (int a = 1; a < d; ++a) CHECK(rank(cat_matrix(f, a)) == 1);
  }
}

TEST_CASE("evaluate") {
  const std::vector<Rational> p200{2, 0, 0}, p11{1, 1};
  CHECK(evaluate(parse_inline_polynomial("x0^3", 3), p200) == 8);
  CHECK(evaluate(HomogForm(3, 4), p200) == 0);
  CHECK(evaluate(parse_inline_polynomial("(x0+x1)^2"), p11) == 4);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const PowerSum ps = random_power_sum(3, 3, 4, seed);
    const std::vector<Rational> pt{1, -2, 3};
    Rational direct = 0;
    for (const auto& l : ps.summands) {
      const Rational v = evaluate(l, pt);
      direct += v * v * v;
    }
    CHECK(evaluate(ps.form, pt) == direct);
  }
}

TEST_CASE("random_power_sum") {
  const PowerSum a = random_power_sum(2, 2, 1, 3);
  CHECK(rank(cat_matrix(a.form, 1)) == 1);
  const PowerSum b = random_power_sum(3, 5, 7, 17), c = random_power_sum(3, 5, 7, 17);
  CHECK(b.form == c.form);
  CHECK(b.summands == c.summands);
  CHECK_FALSE(random_power_sum(3, 5, 7, 18).form == b.form);
  std::vector<Rational> ones(b.summands.size(), Rational(1));
  CHECK(power_combination(ones, b.summands, 5) == b.form);
  for (const auto& l : b.summands) {
    bool nonzero = false;
    for (const auto& x : l.coeffs()) {
      nonzero = nonzero || x != 0;
      CHECK(abs(x) <= kDefaultHeight);
    }
    CHECK(nonzero);
  }
}

TEST_CASE("linear forms must be nonzero; arithmetic checks shapes") {
  CHECK_THROWS_AS(LinearForm({0, 0}), DomainError);
  HomogForm a(3, 2), b(3, 3);
  CHECK_THROWS_AS(a += b, DomainError);
}
