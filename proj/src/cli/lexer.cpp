#include "parametra/cli/lexer.hpp"

#include <cctype>

namespace parametra::cli {

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    unsigned char ch = static_cast<unsigned char>(text[i]);
    if (std::isspace(ch)) {
      advance(1);
      continue;
    }
    if (ch == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    std::size_t start = i;
    if (std::isalpha(ch) || ch == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      t.kind = Token::Kind::Ident;
      t.text = std::string(text.substr(start, j - start));
      advance(j - i);
    } else if (std::isdigit(ch)) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Token::Kind::Number;
      t.text = std::string(text.substr(start, j - start));
      advance(j - i);
    } else if (ch == '"') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"' && text[j] != '\n') ++j;
      if (j >= text.size() || text[j] != '"') throw ParseError("unterminated string", line, col);
      t.kind = Token::Kind::String;
      t.text = std::string(text.substr(i + 1, j - i - 1));
      advance(j + 1 - i);
    } else if (ch < 0x80 && std::ispunct(ch)) {
      t.kind = Token::Kind::Punct;
      t.text = std::string(1, static_cast<char>(ch));
      advance(1);
    } else {
      throw ParseError("unexpected character", line, col);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

const Token& TokenStream::peek(std::size_t ahead) const {
  std::size_t k = std::min(pos_ + ahead, tokens_.size() - 1);
  return tokens_[k];
}

const Token& TokenStream::next() {
  const Token& t = tokens_[pos_];
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

bool TokenStream::accept(std::string_view punct) {
  const Token& t = peek();
  if ((t.kind == Token::Kind::Punct || t.kind == Token::Kind::Ident) && t.text == punct) {
    next();
    return true;
  }
  return false;
}

const Token& TokenStream::expect(std::string_view punct) {
  if (peek().text != punct || peek().kind == Token::Kind::End || peek().kind == Token::Kind::String)
    fail("expected '" + std::string(punct) + "'");
  return next();
}

const Token& TokenStream::expect_ident() {
  if (peek().kind != Token::Kind::Ident) fail("expected identifier");
  return next();
}

void TokenStream::fail(const std::string& msg, const Token& at) const {
  std::string near = at.kind == Token::Kind::End ? "end of input" : "'" + at.text + "'";
  throw ParseError(msg + " near " + near, at.line, at.column);
}

}  // namespace parametra::cli
