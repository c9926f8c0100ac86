#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "parametra/engine/module.hpp"
#include "parametra/ordering.hpp"

namespace parametra {

class MembershipError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a computation exceeds GroebnerOptions::max_pairs.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DenominatorEvent {
  enum class Kind { TransformEntry, MonicNormalization };
  ParamPoly denominator;
  Kind kind = Kind::MonicNormalization;
  // TransformEntry: entry (row, col) of T; leading_component of the basis
  // element in column col.
  std::size_t row = 0;
  std::size_t col = 0;
  std::size_t leading_component = 0;
};

class DenominatorLog {
 public:
  void record(DenominatorEvent e) { events_.push_back(std::move(e)); }
  const std::vector<DenominatorEvent>& events() const { return events_; }
  void clear() { events_.clear(); }

 private:
  std::vector<DenominatorEvent> events_;
};

struct GroebnerOptions {
  DenominatorLog* log = nullptr;
  // Maximal number of S-pairs reduced; 0 means unlimited.
  std::size_t max_pairs = 0;
  // Skip S-pairs whose leading terms lie in tag components (only H and T
  // are needed then; S is incomplete).
  bool skip_tag_pairs = false;
};

struct LeadTerm {
  Monomial mono;
  std::size_t component = 0;
  ParamFraction coeff;
};

// Leading term of a nonzero element; nullopt for zero.
std::optional<LeadTerm> leading_term(const ModElement& v, const ModOrder& order);

// Full reduction of f by the columns of G (top and tail). When G is a
// Groebner basis the result is the unique normal form.
ModElement normal_form(const ModElement& f, const ModMatrix& G, const ModOrder& order);

// Monic reduced minimal Groebner basis of the column span of F, sorted
// ascending by leading term.
ModMatrix groebner_basis(const ModMatrix& F, const ModOrder& order, const GroebnerOptions& opts = {});

// True iff every S-vector of the columns of G reduces to zero.
bool is_groebner_basis(const ModMatrix& G, const ModOrder& order);

// Membership of v in the span of a Groebner basis G.
bool in_span(const ModMatrix& G, const ModElement& v, const ModOrder& order);

// gb = F * transform, F * syzygies = 0.
struct Trinity {
  ModMatrix gb;
  ModMatrix transform;
  ModMatrix syzygies;
};

Trinity trinity(const ModMatrix& F, const ModOrder& order, const GroebnerOptions& opts = {});

// T with H = F * T. Throws MembershipError when a column of H is not in
// the span of F.
ModMatrix lift(const ModMatrix& F, const ModMatrix& H, const ModOrder& order, const GroebnerOptions& opts = {});

// Groebner basis of the module of x with F * x = 0.
ModMatrix syzygies(const ModMatrix& F, const ModOrder& order, const GroebnerOptions& opts = {});

}  // namespace parametra
