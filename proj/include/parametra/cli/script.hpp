#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parametra/cli/lexer.hpp"

namespace parametra::cli {

// Kinds of script values.
enum class ValueKind { Poly, Matrix, Ideal, Report };

struct Expr {
  enum class Kind { Poly, Vector, Call, String };
  Kind kind = Kind::Poly;
  // Poly: the expression tokens; Vector: unused.
  std::vector<Token> tokens;
  // Vector: one token list per entry.
  std::vector<std::vector<Token>> entries;
  // Call: command name; String: the literal.
  std::string name;
  std::vector<Expr> args;
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Statement {
  enum class Kind { Ring, Declare, Command, Specialize };
  Kind kind = Kind::Command;
  std::size_t line = 1;
  std::size_t column = 1;
  // Source text without the trailing ';', whitespace collapsed.
  std::string text;

  // Ring
  std::string name;
  std::vector<std::string> params;
  std::vector<std::string> vars;
  std::string order;

  // Declare: type is poly, module, matrix or ideal; items are the
  // comma-separated right-hand sides. Command: items[0] is the call.
  std::string type;
  std::vector<Expr> items;

  // Specialize: parameter = expression over the new parameters.
  std::vector<std::pair<std::string, std::vector<Token>>> substitutions;
};

struct SessionScript {
  std::vector<Statement> statements;
};

// Names accepted in command position.
const std::vector<std::string>& command_names();

// Parses and scope-checks a script. Throws ParseError with the position of
// the first syntax error, undeclared identifier or malformed ordering token.
SessionScript parse_script(std::string_view text);

// Parameters after a `specialize` statement: those not substituted, in
// order, followed by fresh identifiers of the right-hand sides in order of
// first appearance.
std::vector<std::string> specialized_params(const std::vector<std::string>& params,
                                            const std::vector<std::string>& vars,
                                            const std::vector<std::pair<std::string, std::vector<Token>>>& subs);

}  // namespace parametra::cli
