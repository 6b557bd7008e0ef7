#include "waring/io.hpp"

#include <cctype>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

namespace waring {

using nlohmann::json;

namespace {

Rational coefficient_from_json(const json& c) {
  if (c.is_string()) return parse_rational(c.get<std::string>());
  if (c.is_number_integer()) return Rational(BigInt(std::to_string(c.get<long long>())));
  throw DomainError("coefficient must be a \"p/q\" string or an integer");
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key)) throw DomainError(std::string("missing field \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw DomainError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

HomogForm polynomial_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("polynomial JSON must be an object");
  const int vars = int_field(j, "vars");
  const int degree = int_field(j, "degree");
  if (vars < 1) throw DomainError("\"vars\" must be at least 1");
  if (degree < 0) throw DomainError("\"degree\" must be nonnegative");
  Convention conv = Convention::Monomial;
  if (j.contains("convention")) {
    const json& c = j.at("convention");
    if (c == "monomial") conv = Convention::Monomial;
    else if (c == "tensor") conv = Convention::Tensor;
    else throw DomainError("\"convention\" must be \"monomial\" or \"tensor\"");
  }
  if (!j.contains("terms") || !j.at("terms").is_array()) throw DomainError("\"terms\" must be an array");
  std::vector<std::pair<Monomial, Rational>> terms;
  for (const json& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("c") || !t.contains("e"))
      throw DomainError("each term needs \"c\" and \"e\"");
    const json& e = t.at("e");
    if (!e.is_array()) throw DomainError("term exponents \"e\" must be an array");
    Monomial m;
    for (const json& x : e) {
      if (!x.is_number_integer()) throw DomainError("exponents must be integers");
      m.push_back(x.get<int>());
    }
    terms.emplace_back(std::move(m), coefficient_from_json(t.at("c")));
  }
  return conv == Convention::Monomial ? from_monomial_coeffs(vars, degree, terms)
                                      : from_tensor_coeffs(vars, degree, terms);
}

HomogForm parse_polynomial_json(std::string_view text) { return polynomial_from_json(parse_text(text)); }

json polynomial_to_json(const HomogForm& phi, Convention conv) {
  const MonomialBasis basis(phi.nvars(), phi.degree());
  const std::vector<Rational> coeffs =
      conv == Convention::Monomial
          ? phi.monomial_coeffs()
          : std::vector<Rational>(phi.tensor_coeffs().begin(), phi.tensor_coeffs().end());
  json terms = json::array();
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (coeffs[k] != 0) terms.push_back({{"c", to_string(coeffs[k])}, {"e", basis[k]}});
  return {{"vars", phi.nvars()},
          {"degree", phi.degree()},
          {"convention", conv == Convention::Monomial ? "monomial" : "tensor"},
          {"terms", terms}};
}

std::string canonical_json(const HomogForm& phi) { return polynomial_to_json(phi, Convention::Tensor).dump(); }

std::string form_digest(const HomogForm& phi) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical_json(phi)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// Inline grammar.

namespace {

using Poly = std::map<Exponents, Rational>;  // exponents padded to a common length

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

  int max_var() const { return max_var_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int max_var_ = -1;

  [[noreturn]] void fail(const std::string& msg) const {
    throw DomainError("polynomial syntax error at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  static Poly constant(const Rational& c) {
    Poly p;
    if (c != 0) p[{}] = c;
    return p;
  }

  static void pad(Exponents& e, std::size_t n) {
    if (e.size() < n) e.resize(n, 0);
  }

  static Poly add(Poly a, const Poly& b, int sign) {
    for (auto [e, c] : b) {
      Rational& slot = a[e];
      slot += sign * c;
      if (slot == 0) a.erase(e);
    }
    return a;
  }

  static Poly mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) {
        Exponents e = ea;
        pad(e, eb.size());
        for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        while (!e.empty() && e.back() == 0) e.pop_back();
        Rational& slot = out[e];
        slot += ca * cb;
        if (slot == 0) out.erase(e);
      }
    return out;
  }

  Poly expr() {
    int sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    Poly acc = add(Poly{}, term(), sign);
    for (;;) {
      if (accept('+')) acc = add(std::move(acc), term(), 1);
      else if (accept('-')) acc = add(std::move(acc), term(), -1);
      else return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc = mul(acc, factor());
    return acc;
  }

  Poly factor() {
    Poly base = primary();
    if (!accept('^')) return base;
    const std::string ds = digits();
    if (ds.size() > 4) fail("exponent too large");
    const int k = std::stoi(ds);
    Poly out = constant(1);
    for (int i = 0; i < k; ++i) out = mul(out, base);
    return out;
  }

  Poly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == 'x') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("variable names are x0, x1, ...");
      const std::string ds = digits();
      if (ds.size() > 4) fail("variable index too large");
      const int v = std::stoi(ds);
      max_var_ = std::max(max_var_, v);
      Exponents e(v + 1, 0);
      e[v] = 1;
      return Poly{{e, Rational(1)}};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const BigInt num(digits());
      BigInt den = 1;
      if (accept('/')) {
        den = BigInt(digits());
        if (den == 0) fail("zero denominator");
      }
      return constant(ratio(num, den));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

HomogForm parse_inline_polynomial(std::string_view text, std::optional<int> nvars,
                                  std::optional<int> degree) {
  Parser parser(text);
  const Poly p = parser.parse();
  const int used = parser.max_var() + 1;
  const int vars = nvars.value_or(std::max(used, 1));
  if (vars < 1) throw DomainError("number of variables must be positive");
  if (used > vars)
    throw DomainError("polynomial uses x" + std::to_string(used - 1) + " but only " +
                      std::to_string(vars) + " variables were declared");
  std::optional<int> deg = degree;
  std::vector<std::pair<Monomial, Rational>> terms;
  for (const auto& [e, c] : p) {
    const int td = std::accumulate(e.begin(), e.end(), 0);
    if (!deg) deg = td;
    if (td != *deg)
      throw DomainError("polynomial is not homogeneous (terms of degree " + std::to_string(*deg) +
                        " and " + std::to_string(td) + ")");
    Monomial m = e;
    m.resize(vars, 0);
    terms.emplace_back(std::move(m), c);
  }
  if (!deg) throw DomainError("the zero polynomial needs an explicit degree");
  return from_monomial_coeffs(vars, *deg, terms);
}

std::string format_polynomial(const HomogForm& phi) {
  const MonomialBasis basis(phi.nvars(), phi.degree());
  const auto coeffs = phi.monomial_coeffs();
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k] == 0) continue;
    Rational c = coeffs[k];
    if (c < 0) {
      out << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      out << " + ";
    }
    first = false;
    bool need_star = false;
    if (c != 1 || phi.degree() == 0) {
      out << to_string(c);
      need_star = true;
    }
    for (int v = 0; v < phi.nvars(); ++v) {
      if (basis[k][v] == 0) continue;
      if (need_star) out << '*';
      out << 'x' << v;
      if (basis[k][v] > 1) out << '^' << basis[k][v];
      need_star = true;
    }
  }
  if (first) out << '0';
  return out.str();
}

// ---------------------------------------------------------------------------

SkewTensor skew_tensor_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("skew tensor JSON must be an object");
  const int vars = int_field(j, "vars");
  const int step = int_field(j, "step");
  SkewTensor t(vars, step);
  if (!j.contains("terms") || !j.at("terms").is_array()) throw DomainError("\"terms\" must be an array");
  for (const json& term : j.at("terms")) {
    if (!term.is_object() || !term.contains("c") || !term.contains("idx"))
      throw DomainError("each term needs \"c\" and \"idx\"");
    std::vector<int> idx;
    for (const json& x : term.at("idx")) {
      if (!x.is_number_integer()) throw DomainError("indices must be integers");
      idx.push_back(x.get<int>());
    }
    for (std::size_t i = 1; i < idx.size(); ++i)
      if (idx[i - 1] >= idx[i]) throw DomainError("indices must be strictly increasing");
    t.add(idx, coefficient_from_json(term.at("c")));
  }
  return t;
}

json skew_tensor_to_json(const SkewTensor& t) {
  json terms = json::array();
  for (const auto& [idx, c] : t.components()) terms.push_back({{"c", to_string(c)}, {"idx", idx}});
  return {{"vars", t.nvars()}, {"step", t.step()}, {"terms", terms}};
}

std::string matrix_csv(const ExactMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

json matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

}  // namespace waring
