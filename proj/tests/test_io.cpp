#include "doctest.h"
#include "oracles.hpp"

#include "waring/forms.hpp"
#include "waring/io.hpp"

using namespace waring;
using nlohmann::json;

TEST_CASE("polynomial JSON round trip in both conventions") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const HomogForm phi = random_form(1 + static_cast<int>(seed % 4), static_cast<int>(seed % 6), seed);
    CHECK(polynomial_from_json(polynomial_to_json(phi)) == phi);
    CHECK(polynomial_from_json(polynomial_to_json(phi, Convention::Tensor)) == phi);
    CHECK(parse_polynomial_json(polynomial_to_json(phi).dump()) == phi);
  }
}

TEST_CASE("polynomial JSON: monomial and tensor readings of the same terms") {
  const json mono = json::parse(R"({"vars": 3, "degree": 3, "terms": [{"c": "6", "e": [1, 1, 1]}]})");
  const HomogForm a = polynomial_from_json(mono);
  CHECK(a.tensor_at_tuple(std::vector<int>{0, 1, 2}) == 1);
  json tensor = mono;
  tensor["convention"] = "tensor";
  CHECK(polynomial_from_json(tensor).tensor_at_tuple(std::vector<int>{0, 1, 2}) == 6);
  const json frac = json::parse(R"({"vars": 2, "degree": 2, "terms": [{"c": "1/2", "e": [2, 0]}, {"c": 3, "e": [0, 2]}]})");
  CHECK(polynomial_from_json(frac) == parse_inline_polynomial("1/2*x0^2 + 3*x1^2"));
}

TEST_CASE("malformed polynomial JSON is rejected with DomainError") {
  const char* bad[] = {
      R"({"vars": 3, "degree": 3)",
      R"([1, 2, 3])",
      R"({"vars": 3, "degree": 3})",
      R"({"vars": 3, "degree": 3, "terms": [{"c": "1", "e": [1, 1]}]})",
      R"({"vars": 3, "degree": 3, "terms": [{"c": "1", "e": [1, 1, 0]}]})",
      R"({"vars": 3, "degree": 3, "terms": [{"c": "1/0", "e": [3, 0, 0]}]})",
      R"({"vars": 3, "degree": 3, "terms": [{"c": "abc", "e": [3, 0, 0]}]})",
      R"({"vars": 3, "degree": 3, "convention": "weird", "terms": []})",
      R"({"vars": 3, "degree": 3, "terms": [{"e": [3, 0, 0]}]})",
      R"({"vars": 3, "degree": 3, "terms": [{"c": "1", "e": [4, -1, 0]}]})",
  };
  for (const char* text : bad) CHECK_THROWS_AS(parse_polynomial_json(text), DomainError);
}

TEST_CASE("inline polynomial grammar") {
  const HomogForm a = parse_inline_polynomial("x0^3 + 3/2*x0*x1^2 - x2^3");
  CHECK(a.nvars() == 3);
  CHECK(a.degree() == 3);
  CHECK(a.monomial_coeffs()[0] == 1);
  CHECK(parse_inline_polynomial("(x0 + x1)^2") == parse_inline_polynomial("x0^2 + 2*x0*x1 + x1^2"));
  CHECK(parse_inline_polynomial("-x0*x1", 3).nvars() == 3);
  CHECK(parse_inline_polynomial("0", 2, 4).is_zero());
  CHECK(parse_inline_polynomial("2*(x0 - x1)*(x0 + x1)") == parse_inline_polynomial("2*x0^2 - 2*x1^2"));
  CHECK(parse_inline_polynomial(" x1 ^ 2 ").nvars() == 2);
  CHECK_THROWS_AS(parse_inline_polynomial("x0^2 + x1"), DomainError);
  CHECK_THROWS_AS(parse_inline_polynomial("x0^2 +"), DomainError);
  CHECK_THROWS_AS(parse_inline_polynomial("y0"), DomainError);
  CHECK_THROWS_AS(parse_inline_polynomial("x3", 2), DomainError);
  CHECK_THROWS_AS(parse_inline_polynomial("(x0"), DomainError);
  CHECK_THROWS_AS(parse_inline_polynomial("0"), DomainError);
  CHECK_THROWS_AS(parse_inline_polynomial("x0/x1"), DomainError);
}

TEST_CASE("format_polynomial output parses back") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const int nv = 1 + static_cast<int>(seed % 4), d = 1 + static_cast<int>(seed % 5);
    const HomogForm phi = random_form(nv, d, seed);
    CHECK(parse_inline_polynomial(format_polynomial(phi), nv, d) == phi);
  }
}

TEST_CASE("canonical JSON and digest") {
  const HomogForm a = parse_inline_polynomial("x0^2 + x1^2");
  const HomogForm b = parse_inline_polynomial("x1^2 + x0^2");
  CHECK(canonical_json(a) == canonical_json(b));
  CHECK(form_digest(a) == form_digest(b));
  CHECK(form_digest(a).size() == 16);
  CHECK(form_digest(a) != form_digest(parse_inline_polynomial("x0^2 - x1^2")));
  CHECK(canonical_json(a).find(' ') == std::string::npos);
}

TEST_CASE("skew tensor JSON round trip") {
  SkewTensor t(5, 3);
  t.add({0, 2, 4}, make_rational(3, 2));
  t.add({1, 2, 3}, -1);
  const json j = skew_tensor_to_json(t);
  const SkewTensor u = skew_tensor_from_json(j);
  CHECK(u.components() == t.components());
  CHECK_THROWS_AS(skew_tensor_from_json(json::parse(R"({"nvars": 3, "step": 2, "terms": [{"c": "1", "idx": [0, 5]}]})")),
                  DomainError);
}

TEST_CASE("matrix export") {
  const ExactMatrix m{{1, make_rational(-1, 2)}, {0, 3}};
  CHECK(matrix_csv(m) == "1,-1/2\n0,3\n");
  const json j = matrix_to_json(m);
  CHECK(j.at("rows") == 2);
  CHECK(j.at("cols") == 2);
  CHECK(j.at("entries")[0][1] == "-1/2");
}
