#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parametra/cli/lexer.hpp"
#include "parametra/engine/op_poly.hpp"

namespace parametra::cli {

struct Symbols {
  std::vector<std::string> params;
  std::vector<std::string> vars;
  // Named polynomials defined earlier in a script.
  std::function<std::optional<OpPoly>(const std::string&)> lookup;
};

// expr := term (('+'|'-') term)*
// term := unary (('*'|'/') unary)*       divisors must be free of operator variables
// unary := ('-'|'+') unary | power
// power := primary ('^' integer)?
// primary := integer | identifier | '(' expr ')'
OpPoly parse_expression(TokenStream& ts, const Symbols& sym);

// Whole-text variants; trailing input is an error.
OpPoly parse_op_poly(std::string_view text, const Symbols& sym);
ParamPoly parse_param_poly(std::string_view text, const std::vector<std::string>& params);
ParamFraction parse_param_fraction(std::string_view text, const std::vector<std::string>& params);

}  // namespace parametra::cli
