#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "parametra/arith/monomial.hpp"

namespace parametra {

class OrderSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Monomial well-ordering on the operator variables.
class MonoOrder {
 public:
  enum class Kind { Lex, DegRevLex, Weighted, Product };

  static MonoOrder lex(std::size_t arity);
  static MonoOrder degrevlex(std::size_t arity);
  // Compares w.a first and falls back to `tie_break`. Weights must be
  // nonnegative; a shorter vector is padded with zeros.
  static MonoOrder weighted(std::vector<Exponent> weights, MonoOrder tie_break);
  // Block order: `first` on the leading variables, `second` on the rest.
  static MonoOrder product(MonoOrder first, MonoOrder second);

  Kind kind() const { return kind_; }
  std::size_t arity() const { return arity_; }
  const std::vector<Exponent>& weights() const { return weights_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  // Singular-like token: "dp", "lp", "a(1,1),dp", "(dp(2),dp(3))".
  std::string to_string() const;

 private:
  MonoOrder(Kind kind, std::size_t arity) : kind_(kind), arity_(arity) {}

  Kind kind_;
  std::size_t arity_;
  std::vector<Exponent> weights_;
  std::shared_ptr<const MonoOrder> first_;   // tie-break for Weighted, leading block for Product
  std::shared_ptr<const MonoOrder> second_;  // trailing block for Product
};

enum class ComponentOrder { Ascending, Descending };
enum class ModScheme { TermOverPosition, PositionOverTerm };

// Extension of a MonoOrder to free modules. When tag_start() is set the
// components at or above it are the bookkeeping tags of the lift
// construction and sit strictly below every term of the leading components.
class ModOrder {
 public:
  explicit ModOrder(MonoOrder base, ModScheme scheme = ModScheme::TermOverPosition,
                    ComponentOrder components = ComponentOrder::Descending)
      : base_(std::move(base)), scheme_(scheme), components_(components) {}

  const MonoOrder& base() const { return base_; }
  ModScheme scheme() const { return scheme_; }
  ComponentOrder components() const { return components_; }
  bool has_tags() const { return tag_start_ != kNoTags; }
  std::size_t tag_start() const { return tag_start_; }

  ModOrder with_base(MonoOrder base) const;
  ModOrder with_scheme(ModScheme scheme) const;
  ModOrder with_tags(std::size_t first_tag) const;
  ModOrder without_tags() const;

  std::strong_ordering compare(const Monomial& a, std::size_t ca, const Monomial& b,
                               std::size_t cb) const;

  // "(c,dp)" style token
  std::string to_string() const;

 private:
  static constexpr std::size_t kNoTags = static_cast<std::size_t>(-1);

  std::strong_ordering compare_plain(const Monomial& a, std::size_t ca, const Monomial& b,
                                     std::size_t cb) const;

  MonoOrder base_;
  ModScheme scheme_;
  ComponentOrder components_;
  std::size_t tag_start_ = kNoTags;
};

// Order on A^{m+l} used by the transformation-matrix construction: the
// first m components follow `inner`, the l tag components are smaller than
// all of them and are ordered among themselves by the same scheme.
class LiftOrder {
 public:
  LiftOrder(const ModOrder& inner, std::size_t m, std::size_t l)
      : order_(inner.with_tags(m)), m_(m), l_(l) {}

  std::size_t leading_rank() const { return m_; }
  std::size_t tag_count() const { return l_; }
  const ModOrder& as_mod_order() const { return order_; }

  // Throws std::out_of_range for components >= m + l.
  std::strong_ordering compare(const Monomial& a, std::size_t ca, const Monomial& b,
                               std::size_t cb) const;

 private:
  ModOrder order_;
  std::size_t m_;
  std::size_t l_;
};

// Parses ordering tokens of the script language for `nvars` variables:
//   (c,dp) (C,dp) (c,lp)      term over position, components descending/ascending
//   (dp,c) (lp,C)             position over term
//   (a(1,1),dp) dp lp         monomial orders (components descending, TOP)
ModOrder parse_order(std::string_view token, std::size_t nvars);

}  // namespace parametra
