#include "parametra/cli/expression.hpp"

#include <algorithm>

namespace parametra::cli {
namespace {

constexpr unsigned long kMaxExponent = 1000;

class ExprParser {
 public:
  ExprParser(TokenStream& ts, const Symbols& sym) : ts_(ts), sym_(sym) {}

  OpPoly expr() {
    OpPoly acc = term();
    for (;;) {
      if (ts_.peek().kind != Token::Kind::Punct) return acc;
      if (ts_.accept("+"))
        acc += term();
      else if (ts_.accept("-"))
        acc -= term();
      else
        return acc;
    }
  }

 private:
  OpPoly one() const {
    return OpPoly::constant(sym_.vars.size(), ParamFraction::constant(sym_.params.size(), 1));
  }

  OpPoly term() {
    OpPoly acc = unary();
    for (;;) {
      if (ts_.peek().kind != Token::Kind::Punct) return acc;
      if (ts_.accept("*")) {
        acc = acc * unary();
      } else if (ts_.peek().text == "/") {
        const Token at = ts_.next();
        OpPoly d = unary();
        if (!d.is_constant()) ts_.fail("division by a non-constant operator polynomial", at);
        if (d.is_zero()) ts_.fail("division by zero", at);
        acc = d.constant_coeff().inverse() * acc;
      } else {
        return acc;
      }
    }
  }

  OpPoly unary() {
    if (ts_.peek().kind == Token::Kind::Punct) {
      if (ts_.accept("-")) return -unary();
      if (ts_.accept("+")) return unary();
    }
    return power();
  }

  OpPoly power() {
    OpPoly base = primary();
    if (ts_.peek().kind == Token::Kind::Punct && ts_.peek().text == "^") {
      ts_.next();
      const Token& e = ts_.peek();
      if (e.kind != Token::Kind::Number) ts_.fail("syntax error: expected exponent");
      ts_.next();
      if (e.text.size() > 4 || std::stoul(e.text) > kMaxExponent) ts_.fail("exponent too large", e);
      unsigned long k = std::stoul(e.text);
      OpPoly r = one();
      for (unsigned long i = 0; i < k; ++i) r = r * base;
      return r;
    }
    return base;
  }

  OpPoly primary() {
    const Token& t = ts_.peek();
    const std::size_t np = sym_.params.size(), nv = sym_.vars.size();
    if (t.kind == Token::Kind::Number) {
      ts_.next();
      return OpPoly::constant(nv, ParamFraction::constant(np, BigRational(BigInteger(t.text))));
    }
    if (t.kind == Token::Kind::Ident) {
      ts_.next();
      auto pv = std::find(sym_.vars.begin(), sym_.vars.end(), t.text);
      if (pv != sym_.vars.end()) return OpPoly::variable(np, nv, static_cast<std::size_t>(pv - sym_.vars.begin()));
      auto pp = std::find(sym_.params.begin(), sym_.params.end(), t.text);
      if (pp != sym_.params.end())
        return OpPoly::constant(
            nv, ParamFraction(ParamPoly::variable(np, static_cast<std::size_t>(pp - sym_.params.begin()))));
      if (sym_.lookup)
        if (auto v = sym_.lookup(t.text)) return *v;
      ts_.fail("undeclared identifier '" + t.text + "'", t);
    }
    if (t.kind == Token::Kind::Punct && t.text == "(") {
      ts_.next();
      OpPoly e = expr();
      ts_.expect(")");
      return e;
    }
    ts_.fail("syntax error");
  }

  TokenStream& ts_;
  const Symbols& sym_;
};

OpPoly parse_whole(std::string_view text, const Symbols& sym) {
  TokenStream ts(tokenize(text));
  OpPoly p = parse_expression(ts, sym);
  if (!ts.at_end()) ts.fail("unexpected trailing input");
  return p;
}

}  // namespace

OpPoly parse_expression(TokenStream& ts, const Symbols& sym) { return ExprParser(ts, sym).expr(); }

OpPoly parse_op_poly(std::string_view text, const Symbols& sym) { return parse_whole(text, sym); }

ParamFraction parse_param_fraction(std::string_view text, const std::vector<std::string>& params) {
  Symbols sym{params, {}, {}};
  OpPoly p = parse_whole(text, sym);
  return p.constant_coeff();
}

ParamPoly parse_param_poly(std::string_view text, const std::vector<std::string>& params) {
  ParamFraction f = parse_param_fraction(text, params);
  if (!f.den().is_constant()) throw ParseError("expected a polynomial in the parameters", 1, 1);
  return f.num() * (1 / f.den().constant_value());
}

}  // namespace parametra::cli
