#include "parametra/cli/script.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "parametra/cli/expression.hpp"
#include "parametra/ordering.hpp"

namespace parametra::cli {
namespace {

struct Signature {
  std::string name;
  std::size_t min_args;
  std::size_t max_args;
  bool assignable;
};

const std::vector<Signature>& signatures() {
  static const std::vector<Signature> s = {
      {"transpose", 1, 1, true},   {"gb", 1, 1, true},           {"syz", 1, 1, true},
      {"lift", 2, 2, true},        {"trinity", 1, 1, false},     {"leftinverse", 1, 1, true},
      {"rightinverse", 1, 1, true}, {"leftkernel", 1, 1, true},  {"rightkernel", 1, 1, true},
      {"rank", 1, 1, false},       {"dim", 1, 1, false},         {"control", 1, 1, false},
      {"autonom", 1, 1, false},    {"canonize", 1, 1, true},     {"genericity", 1, 2, false},
      {"stratify", 1, 1, false},   {"factgb", 2, 3, false},      {"lw_obstruction", 1, 1, false},
      {"coherence", 1, 2, false},  {"print", 1, 1, false},
  };
  return s;
}

const Signature* find_signature(const std::string& name) {
  for (const auto& s : signatures())
    if (s.name == name) return &s;
  return nullptr;
}

bool is_type_word(const std::string& s) { return s == "poly" || s == "module" || s == "matrix" || s == "ideal"; }

class ScriptParser {
 public:
  explicit ScriptParser(std::string_view text) : text_(text), ts_(tokenize(text)) {}

  SessionScript parse() {
    SessionScript script;
    while (!ts_.at_end()) {
      if (ts_.accept(";")) continue;
      script.statements.push_back(statement());
    }
    return script;
  }

 private:
  Statement statement() {
    const Token start = ts_.peek();
    std::size_t first = ts_.position();
    Statement st;
    st.line = start.line;
    st.column = start.column;
    if (start.kind != Token::Kind::Ident) ts_.fail("syntax error: expected a statement");
    if (start.text == "ring") {
      ring(st);
    } else if (start.text == "specialize") {
      specialize(st);
    } else if (is_type_word(start.text)) {
      declare(st);
    } else {
      require_ring(start);
      st.kind = Statement::Kind::Command;
      Expr e = item();
      if (e.kind != Expr::Kind::Call) ts_.fail("syntax error: expected a command", start);
      st.items.push_back(std::move(e));
    }
    st.text = source_text(first, ts_.position());
    ts_.expect(";");
    return st;
  }

  void require_ring(const Token& at) {
    if (!have_ring_) ts_.fail("no ring declared", at);
  }

  void ring(Statement& st) {
    st.kind = Statement::Kind::Ring;
    ts_.next();
    st.name = ts_.expect_ident().text;
    ts_.expect("=");
    ts_.expect("(");
    const Token& ch = ts_.peek();
    if (ch.kind != Token::Kind::Number || ch.text != "0") ts_.fail("only characteristic 0 is supported");
    ts_.next();
    while (ts_.accept(",")) st.params.push_back(ts_.expect_ident().text);
    ts_.expect(")");
    ts_.expect(",");
    ts_.expect("(");
    st.vars.push_back(ts_.expect_ident().text);
    while (ts_.accept(",")) st.vars.push_back(ts_.expect_ident().text);
    ts_.expect(")");
    ts_.expect(",");
    const Token at = ts_.peek();
    st.order = order_token();
    try {
      parse_order(st.order, st.vars.size());
    } catch (const OrderSyntaxError& e) {
      ts_.fail(std::string("malformed ordering token: ") + e.what(), at);
    }
    std::vector<std::string> all = st.params;
    all.insert(all.end(), st.vars.begin(), st.vars.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) ts_.fail("duplicate name in ring declaration", at);
    params_ = st.params;
    vars_ = st.vars;
    objects_.clear();
    have_ring_ = true;
  }

  // Balanced token text up to the ';' or top-level ',' ending the ordering.
  std::string order_token() {
    std::string out;
    int depth = 0;
    for (;;) {
      const Token& t = ts_.peek();
      if (t.kind == Token::Kind::End) ts_.fail("malformed ordering token");
      if (depth == 0 && t.kind == Token::Kind::Punct && t.text == ";") break;
      if (t.kind == Token::Kind::Punct && t.text == "(") ++depth;
      if (t.kind == Token::Kind::Punct && t.text == ")") {
        if (depth == 0) ts_.fail("malformed ordering token");
        --depth;
      }
      out += t.text;
      ts_.next();
    }
    if (out.empty()) ts_.fail("malformed ordering token");
    return out;
  }

  void specialize(Statement& st) {
    st.kind = Statement::Kind::Specialize;
    require_ring(ts_.peek());
    ts_.next();
    do {
      const Token& p = ts_.expect_ident();
      if (std::find(params_.begin(), params_.end(), p.text) == params_.end())
        ts_.fail("'" + p.text + "' is not a parameter", p);
      for (const auto& s : st.substitutions)
        if (s.first == p.text) ts_.fail("parameter substituted twice", p);
      ts_.expect("=");
      st.substitutions.emplace_back(p.text, capture());
    } while (ts_.accept(","));
    std::vector<std::string> next = specialized_params(params_, vars_, st.substitutions);
    for (const auto& s : st.substitutions) {
      for (const Token& t : s.second)
        if (t.kind == Token::Kind::Ident && objects_.count(t.text))
          ts_.fail("named objects cannot appear in substitutions", t);
      check_poly(s.second, next, {});
    }
    for (const auto& name : next)
      if (objects_.count(name)) ts_.fail("new parameter '" + name + "' clashes with a named object", ts_.peek());
    params_ = std::move(next);
  }

  void declare(Statement& st) {
    st.kind = Statement::Kind::Declare;
    require_ring(ts_.peek());
    st.type = ts_.next().text;
    const Token& name = ts_.expect_ident();
    st.name = name.text;
    if (std::find(params_.begin(), params_.end(), st.name) != params_.end() ||
        std::find(vars_.begin(), vars_.end(), st.name) != vars_.end() || find_signature(st.name))
      ts_.fail("'" + st.name + "' is a reserved name", name);
    ts_.expect("=");
    do st.items.push_back(item());
    while (ts_.accept(","));
    ValueKind kind = st.type == "poly" ? ValueKind::Poly : st.type == "ideal" ? ValueKind::Ideal : ValueKind::Matrix;
    if (st.type == "poly" && (st.items.size() != 1 || kind_of(st.items[0]) != ValueKind::Poly))
      ts_.fail("a poly must be a single polynomial expression", name);
    if (kind == ValueKind::Matrix) {
      bool vectors = std::all_of(st.items.begin(), st.items.end(), [](const Expr& e) { return e.kind == Expr::Kind::Vector; });
      if (!vectors && (st.items.size() != 1 || kind_of(st.items[0]) == ValueKind::Ideal ||
                       kind_of(st.items[0]) == ValueKind::Report))
        ts_.fail("a " + st.type + " is a list of bracketed vectors or a matrix expression", name);
      if (vectors) {
        std::size_t len = st.items[0].entries.size();
        for (const Expr& e : st.items)
          if (e.entries.size() != len) ts_.fail("bracketed vectors must have equal length", token_at(e));
      }
    }
    if (kind == ValueKind::Ideal)
      for (const Expr& e : st.items)
        if (e.kind == Expr::Kind::Vector || kind_of(e) == ValueKind::Matrix || kind_of(e) == ValueKind::Report)
          ts_.fail("ideal generators must be polynomials or ideals", token_at(e));
    objects_[st.name] = kind;
  }

  static Token token_at(const Expr& e) {
    Token t;
    t.line = e.line;
    t.column = e.column;
    t.kind = Token::Kind::Punct;
    t.text = e.kind == Expr::Kind::Call ? e.name : "[";
    return t;
  }

  Expr item() {
    const Token start = ts_.peek();
    Expr e;
    e.line = start.line;
    e.column = start.column;
    if (start.kind == Token::Kind::Punct && start.text == "[") {
      ts_.next();
      e.kind = Expr::Kind::Vector;
      do e.entries.push_back(capture());
      while (ts_.accept(","));
      ts_.expect("]");
      for (const auto& entry : e.entries) check_poly(entry, params_, objects_);
      return e;
    }
    if (start.kind == Token::Kind::String) {
      ts_.next();
      e.kind = Expr::Kind::String;
      e.name = start.text;
      return e;
    }
    std::string call = start.text;
    if (start.kind == Token::Kind::Ident && ts_.peek(1).text == "-" && ts_.peek(2).kind == Token::Kind::Ident &&
        ts_.peek(3).text == "(" && find_signature(start.text + "_" + ts_.peek(2).text))
      call = start.text + "_" + ts_.peek(2).text;
    const Signature* sig = start.kind == Token::Kind::Ident ? find_signature(call) : nullptr;
    if (sig && (ts_.peek(1).text == "(" || call != start.text)) {
      if (call != start.text) {
        ts_.next();
        ts_.next();
      }
      ts_.next();
      e.kind = Expr::Kind::Call;
      e.name = call;
      ts_.expect("(");
      if (!ts_.accept(")")) {
        do e.args.push_back(item());
        while (ts_.accept(","));
        ts_.expect(")");
      }
      if (e.args.size() < sig->min_args || e.args.size() > sig->max_args)
        ts_.fail("wrong number of arguments to " + e.name, start);
      check_call(e, start);
      return e;
    }
    e.kind = Expr::Kind::Poly;
    e.tokens = capture();
    if (!is_reference(e)) check_poly(e.tokens, params_, objects_);
    return e;
  }

  bool is_reference(const Expr& e) const {
    if (e.kind != Expr::Kind::Poly || e.tokens.size() != 1 || e.tokens[0].kind != Token::Kind::Ident) return false;
    auto it = objects_.find(e.tokens[0].text);
    return it != objects_.end() && it->second != ValueKind::Poly;
  }

  ValueKind kind_of(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::Vector:
        return ValueKind::Matrix;
      case Expr::Kind::String:
        return ValueKind::Report;
      case Expr::Kind::Poly:
        return is_reference(e) ? objects_.at(e.tokens[0].text) : ValueKind::Poly;
      case Expr::Kind::Call:
        break;
    }
    const Signature* sig = find_signature(e.name);
    if (!sig->assignable) return ValueKind::Report;
    if (e.name == "gb" || e.name == "canonize") return kind_of(e.args[0]) == ValueKind::Ideal ? ValueKind::Ideal : ValueKind::Matrix;
    return ValueKind::Matrix;
  }

  void check_call(const Expr& e, const Token& at) const {
    auto module_arg = [&](std::size_t i) {
      ValueKind k = kind_of(e.args[i]);
      if (e.args[i].kind == Expr::Kind::String || k == ValueKind::Ideal || k == ValueKind::Report)
        ts_.fail(e.name + ": argument " + std::to_string(i + 1) + " must be a module or matrix", at);
    };
    auto ideal_arg = [&](std::size_t i) {
      ValueKind k = kind_of(e.args[i]);
      if (e.args[i].kind == Expr::Kind::String || k == ValueKind::Matrix || k == ValueKind::Report)
        ts_.fail(e.name + ": argument " + std::to_string(i + 1) + " must be an ideal or polynomial", at);
    };
    const std::string& n = e.name;
    if (n == "gb" || n == "stratify") {
      ValueKind k = kind_of(e.args[0]);
      if (k == ValueKind::Report || e.args[0].kind == Expr::Kind::String)
        ts_.fail(n + ": argument must be a module, matrix or ideal", at);
    } else if (n == "canonize") {
      const Expr& a = e.args[0];
      bool analysis = a.kind == Expr::Kind::Call && (a.name == "control" || a.name == "autonom");
      if (!analysis && kind_of(a) == ValueKind::Report) ts_.fail("canonize: unsupported argument", at);
    } else if (n == "factgb") {
      ideal_arg(0);
      ideal_arg(1);
      if (e.args.size() == 3 && e.args[2].kind != Expr::Kind::String)
        ts_.fail("factgb: the third argument is a quoted ordering token", at);
      if (e.args.size() == 3) {
        try {
          parse_order(e.args[2].name, params_.size());
        } catch (const OrderSyntaxError& err) {
          ts_.fail(std::string("malformed ordering token: ") + err.what(), at);
        }
      }
    } else if (n == "coherence") {
      module_arg(0);
      if (e.args.size() == 2 &&
          (e.args[1].kind != Expr::Kind::Poly || e.args[1].tokens.size() != 1 ||
           e.args[1].tokens[0].kind != Token::Kind::Number))
        ts_.fail("coherence: the second argument is a number of points", at);
    } else if (n == "print") {
      if (e.args[0].kind == Expr::Kind::String) ts_.fail("print: unsupported argument", at);
    } else {
      for (std::size_t i = 0; i < e.args.size(); ++i) module_arg(i);
    }
  }

  // Tokens of one expression: up to a top-level ',', ']', ')' or ';'.
  std::vector<Token> capture() {
    std::vector<Token> out;
    int depth = 0;
    for (;;) {
      const Token& t = ts_.peek();
      if (t.kind == Token::Kind::End) break;
      if (t.kind == Token::Kind::Punct) {
        if (depth == 0 && (t.text == "," || t.text == "]" || t.text == ")" || t.text == ";")) break;
        if (t.text == "(") ++depth;
        if (t.text == ")") --depth;
        if (t.text == "[") ts_.fail("syntax error: unexpected '['");
      }
      out.push_back(ts_.next());
    }
    if (out.empty()) ts_.fail("syntax error: expected an expression");
    return out;
  }

  void check_poly(const std::vector<Token>& tokens, const std::vector<std::string>& params,
                  const std::map<std::string, ValueKind>& objects) const {
    const std::size_t nparams = params.size(), nvars = vars_.size();
    Symbols sym{params, vars_, [&](const std::string& name) -> std::optional<OpPoly> {
                  auto it = objects.find(name);
                  if (it == objects.end()) return std::nullopt;
                  if (it->second != ValueKind::Poly)
                    throw ParseError("'" + name + "' is not a polynomial", 0, 0);
                  return OpPoly(nparams, nvars);
                }};
    std::vector<Token> copy = tokens;
    Token end;
    end.line = tokens.back().line;
    end.column = tokens.back().column + tokens.back().text.size();
    copy.push_back(end);
    TokenStream ts(std::move(copy));
    try {
      parse_expression(ts, sym);
    } catch (const ParseError& e) {
      if (e.line() == 0) {
        for (const Token& t : tokens)
          if (t.kind == Token::Kind::Ident && objects.count(t.text) && objects.at(t.text) != ValueKind::Poly)
            ts.fail("'" + t.text + "' is not a polynomial", t);
      }
      throw;
    }
    if (!ts.at_end()) ts.fail("syntax error");
  }

  std::string source_text(std::size_t first, std::size_t last) {
    std::string out;
    TokenStream probe = ts_;
    probe.rewind(first);
    const Token* prev = nullptr;
    while (probe.position() < last) {
      const Token& t = probe.next();
      bool word = t.kind != Token::Kind::Punct;
      if (prev && word && prev->kind != Token::Kind::Punct) out += ' ';
      if (prev && prev->kind == Token::Kind::Punct && prev->text == "," ) out += ' ';
      if (prev && (t.text == "=" || (prev->kind == Token::Kind::Punct && prev->text == "="))) out += ' ';
      out += t.kind == Token::Kind::String ? "\"" + t.text + "\"" : t.text;
      prev = &t;
    }
    return out;
  }

  std::string_view text_;
  TokenStream ts_;
  bool have_ring_ = false;
  std::vector<std::string> params_;
  std::vector<std::string> vars_;
  std::map<std::string, ValueKind> objects_;
};

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : signatures()) n.push_back(s.name);
    return n;
  }();
  return names;
}

std::vector<std::string> specialized_params(const std::vector<std::string>& params,
                                            const std::vector<std::string>& vars,
                                            const std::vector<std::pair<std::string, std::vector<Token>>>& subs) {
  std::vector<std::string> out;
  auto substituted = [&](const std::string& p) {
    return std::any_of(subs.begin(), subs.end(), [&](const auto& s) { return s.first == p; });
  };
  for (const auto& p : params)
    if (!substituted(p)) out.push_back(p);
  for (const auto& s : subs)
    for (const Token& t : s.second)
      if (t.kind == Token::Kind::Ident && std::find(out.begin(), out.end(), t.text) == out.end() &&
          std::find(vars.begin(), vars.end(), t.text) == vars.end() &&
          std::find(params.begin(), params.end(), t.text) == params.end())
        out.push_back(t.text);
  return out;
}

SessionScript parse_script(std::string_view text) { return ScriptParser(text).parse(); }

}  // namespace parametra::cli
