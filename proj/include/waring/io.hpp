#pragma once

// Text formats: polynomial JSON, the inline polynomial grammar, SkewTensor
// JSON and exact matrix export.
//
// Polynomial JSON:
//   { "vars": n+1, "degree": d, "convention": "monomial" | "tensor",
//     "terms": [ { "c": "p/q", "e": [e0, ..., en] }, ... ] }
//
// Inline grammar (whitespace ignored):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := primary ('^' integer)?
//   primary:= integer ['/' integer] | 'x' integer | '(' expr ')'
// Coefficients are monomial-convention; the result must be homogeneous.

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "waring/exactla.hpp"
#include "waring/flattenings.hpp"
#include "waring/forms.hpp"

namespace waring {

enum class Convention { Monomial, Tensor };

/// Throws DomainError with a description of the first problem found.
HomogForm polynomial_from_json(const nlohmann::json& j);
HomogForm parse_polynomial_json(std::string_view text);

/// Nonzero terms in basis order.
nlohmann::json polynomial_to_json(const HomogForm& phi, Convention conv = Convention::Monomial);

/// Tensor-convention serialization used for digests; compact, no whitespace.
std::string canonical_json(const HomogForm& phi);

/// FNV-1a 64-bit hash of canonical_json, as 16 hex digits.
std::string form_digest(const HomogForm& phi);

/// `nvars` fixes the number of variables (otherwise one more than the
/// largest index used); `degree` is needed only for the zero polynomial.
HomogForm parse_inline_polynomial(std::string_view text, std::optional<int> nvars = std::nullopt,
                                  std::optional<int> degree = std::nullopt);

/// Human-readable monomial-convention rendering, parseable by the inline grammar.
std::string format_polynomial(const HomogForm& phi);

SkewTensor skew_tensor_from_json(const nlohmann::json& j);
nlohmann::json skew_tensor_to_json(const SkewTensor& t);

/// One line per row, entries as exact "p/q" strings separated by commas.
std::string matrix_csv(const ExactMatrix& m);
/// { "rows", "cols", "entries": [[...], ...] } with "p/q" strings.
nlohmann::json matrix_to_json(const ExactMatrix& m);

}  // namespace waring
