#include "parametra/ordering.hpp"

#include <cctype>
#include <charconv>

namespace parametra {
namespace {

std::strong_ordering from_int(int c) {
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Monomial slice(const Monomial& m, std::size_t begin, std::size_t count) {
  return Monomial(m.exponents().subspan(begin, count));
}

}  // namespace

MonoOrder MonoOrder::lex(std::size_t arity) { return MonoOrder(Kind::Lex, arity); }

MonoOrder MonoOrder::degrevlex(std::size_t arity) { return MonoOrder(Kind::DegRevLex, arity); }

MonoOrder MonoOrder::weighted(std::vector<Exponent> weights, MonoOrder tie_break) {
  if (weights.size() > tie_break.arity())
    throw ArityError("MonoOrder::weighted: more weights than variables");
  for (Exponent w : weights)
    if (w < 0) throw std::invalid_argument("MonoOrder::weighted: weights must be nonnegative");
  weights.resize(tie_break.arity(), 0);
  MonoOrder o(Kind::Weighted, tie_break.arity());
  o.weights_ = std::move(weights);
  o.first_ = std::make_shared<const MonoOrder>(std::move(tie_break));
  return o;
}

MonoOrder MonoOrder::product(MonoOrder first, MonoOrder second) {
  MonoOrder o(Kind::Product, first.arity() + second.arity());
  o.first_ = std::make_shared<const MonoOrder>(std::move(first));
  o.second_ = std::make_shared<const MonoOrder>(std::move(second));
  return o;
}

std::strong_ordering MonoOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.arity() != arity_ || b.arity() != arity_) throw ArityError("MonoOrder::compare: arity mismatch");
  switch (kind_) {
    case Kind::Lex:
      return from_int(compare_lex(a, b));
    case Kind::DegRevLex:
      return from_int(compare_degrevlex(a, b));
    case Kind::Weighted: {
      const auto& k = simd::kernels();
      std::int64_t wa = k.dot(a.data(), weights_.data(), arity_);
      std::int64_t wb = k.dot(b.data(), weights_.data(), arity_);
      if (wa != wb) return wa <=> wb;
      return first_->compare(a, b);
    }
    case Kind::Product: {
      std::size_t k = first_->arity();
      auto c = first_->compare(slice(a, 0, k), slice(b, 0, k));
      if (c != 0) return c;
      return second_->compare(slice(a, k, arity_ - k), slice(b, k, arity_ - k));
    }
  }
  return std::strong_ordering::equal;
}

std::string MonoOrder::to_string() const {
  switch (kind_) {
    case Kind::Lex:
      return "lp";
    case Kind::DegRevLex:
      return "dp";
    case Kind::Weighted: {
      std::size_t last = weights_.size();
      while (last > 1 && weights_[last - 1] == 0) --last;
      std::string s = "a(";
      for (std::size_t i = 0; i < last; ++i) s += (i ? "," : "") + std::to_string(weights_[i]);
      return s + ")," + first_->to_string();
    }
    case Kind::Product:
      return "(" + first_->to_string() + "(" + std::to_string(first_->arity()) + ")," +
             second_->to_string() + "(" + std::to_string(second_->arity()) + "))";
  }
  return {};
}

ModOrder ModOrder::with_base(MonoOrder base) const {
  ModOrder o = *this;
  o.base_ = std::move(base);
  return o;
}

ModOrder ModOrder::with_scheme(ModScheme scheme) const {
  ModOrder o = *this;
  o.scheme_ = scheme;
  return o;
}

ModOrder ModOrder::with_tags(std::size_t first_tag) const {
  ModOrder o = *this;
  o.tag_start_ = first_tag;
  return o;
}

ModOrder ModOrder::without_tags() const {
  ModOrder o = *this;
  o.tag_start_ = kNoTags;
  return o;
}

std::strong_ordering ModOrder::compare_plain(const Monomial& a, std::size_t ca, const Monomial& b,
                                             std::size_t cb) const {
  // descending: e_1 > e_2 > ..., so a smaller index is the larger component
  auto comp = components_ == ComponentOrder::Descending ? (cb <=> ca) : (ca <=> cb);
  if (scheme_ == ModScheme::PositionOverTerm) {
    if (comp != 0) return comp;
    return base_.compare(a, b);
  }
  auto c = base_.compare(a, b);
  if (c != 0) return c;
  return comp;
}

std::strong_ordering ModOrder::compare(const Monomial& a, std::size_t ca, const Monomial& b,
                                       std::size_t cb) const {
  if (tag_start_ == kNoTags) return compare_plain(a, ca, b, cb);
  bool ta = ca >= tag_start_, tb = cb >= tag_start_;
  if (ta != tb) return ta ? std::strong_ordering::less : std::strong_ordering::greater;
  return compare_plain(a, ca, b, cb);
}

std::string ModOrder::to_string() const {
  std::string c = components_ == ComponentOrder::Descending ? "c" : "C";
  if (scheme_ == ModScheme::PositionOverTerm) return "(" + base_.to_string() + "," + c + ")";
  return "(" + c + "," + base_.to_string() + ")";
}

std::strong_ordering LiftOrder::compare(const Monomial& a, std::size_t ca, const Monomial& b,
                                        std::size_t cb) const {
  if (ca >= m_ + l_ || cb >= m_ + l_) throw std::out_of_range("LiftOrder::compare: component out of range");
  return order_.compare(a, ca, b, cb);
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  return out;
}

// Splits on commas at parenthesis depth zero.
std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0) throw OrderSyntaxError("ordering: unbalanced parentheses");
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (depth != 0) throw OrderSyntaxError("ordering: unbalanced parentheses");
  parts.push_back(cur);
  return parts;
}

std::vector<Exponent> parse_weights(const std::string& tok) {
  // a(w1,...,wk)
  if (tok.size() < 4 || tok[0] != 'a' || tok[1] != '(' || tok.back() != ')')
    throw OrderSyntaxError("ordering: malformed weight block '" + tok + "'");
  std::vector<Exponent> w;
  for (const std::string& part : split_top(tok.substr(2, tok.size() - 3))) {
    Exponent v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || v < 0)
      throw OrderSyntaxError("ordering: bad weight '" + part + "'");
    w.push_back(v);
  }
  return w;
}

}  // namespace

ModOrder parse_order(std::string_view token, std::size_t nvars) {
  std::string s = strip(token);
  if (s.empty()) throw OrderSyntaxError("ordering: empty token");
  if (s.front() == '(' && s.back() == ')') {
    // only strip when the outer parentheses enclose the whole token
    int depth = 0;
    bool encloses = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0 && i + 1 < s.size()) encloses = false;
    }
    if (encloses) s = s.substr(1, s.size() - 2);
  }
  std::vector<std::string> parts = split_top(s);
  ModScheme scheme = ModScheme::TermOverPosition;
  ComponentOrder comp = ComponentOrder::Descending;
  std::vector<std::string> mono;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string& p = parts[i];
    if (p == "c" || p == "C") {
      comp = p == "c" ? ComponentOrder::Descending : ComponentOrder::Ascending;
      if (i != 0 && i + 1 != parts.size()) throw OrderSyntaxError("ordering: component marker must be first or last");
      if (i != 0) scheme = ModScheme::PositionOverTerm;
      continue;
    }
    mono.push_back(p);
  }
  if (mono.empty()) throw OrderSyntaxError("ordering: missing monomial order in '" + std::string(token) + "'");
  const std::string& last = mono.back();
  MonoOrder base = MonoOrder::degrevlex(nvars);
  if (last == "dp")
    base = MonoOrder::degrevlex(nvars);
  else if (last == "lp")
    base = MonoOrder::lex(nvars);
  else
    throw OrderSyntaxError("ordering: unknown monomial order '" + last + "'");
  for (std::size_t i = mono.size() - 1; i-- > 0;) {
    std::vector<Exponent> w = parse_weights(mono[i]);
    if (w.size() > nvars) throw OrderSyntaxError("ordering: more weights than variables");
    base = MonoOrder::weighted(std::move(w), std::move(base));
  }
  return ModOrder(std::move(base), scheme, comp);
}

}  // namespace parametra
