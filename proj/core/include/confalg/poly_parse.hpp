#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "confalg/poly.hpp"

namespace confalg {

/// Which identifiers a polynomial string may mention besides the built-in
/// variables d, d1, d2, d3, lm, mu, nu, th.
struct ParseScope {
  /// When set, only these parameter names are accepted; they are registered
  /// on first use. When unset, any parameter already in the registry is.
  std::optional<std::set<std::string>> parameters;
  VarRegistry* registry = &VarRegistry::global();
};

/// Parses the polynomial text grammar:
///   expr  := term (('+' | '-') term)*
///   term  := unary ('*' unary)*
///   unary := '-' unary | power
///   power := atom ('^' ['-'] INT)?
///   atom  := INT ['/' INT] | IDENT | '(' expr ')'
/// Negative exponents are accepted on parameters only. Throws InputError
/// with the offending position on malformed input.
Poly parse_poly(std::string_view text, const ParseScope& scope = {});

}  // namespace confalg
