#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace parametra::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct Token {
  enum class Kind { Ident, Number, String, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

// Splits script text into identifiers, integers, quoted strings and single
// punctuation characters. `//` starts a comment running to end of line.
std::vector<Token> tokenize(std::string_view text);

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool accept(std::string_view punct);
  const Token& expect(std::string_view punct);
  const Token& expect_ident();
  [[noreturn]] void fail(const std::string& msg, const Token& at) const;
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, peek()); }
  std::size_t position() const { return pos_; }
  void rewind(std::size_t pos) { pos_ = pos; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace parametra::cli
