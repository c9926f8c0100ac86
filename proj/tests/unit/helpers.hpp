#pragma once

#include <string>
#include <vector>

#include "parametra/cli/expression.hpp"
#include "parametra/engine/groebner.hpp"

namespace testing {

using namespace parametra;

struct Ring {
  cli::Symbols sym;
  ModOrder order;

  Ring(std::vector<std::string> params, std::vector<std::string> vars, const std::string& ord = "(c,dp)")
      : sym{std::move(params), std::move(vars), {}}, order(parse_order(ord, sym.vars.size())) {}

  std::size_t np() const { return sym.params.size(); }
  std::size_t nv() const { return sym.vars.size(); }
  OpPoly p(const std::string& s) const { return cli::parse_op_poly(s, sym); }
  ParamPoly pp(const std::string& s) const { return cli::parse_param_poly(s, sym.params); }
  ParamFraction pf(const std::string& s) const { return cli::parse_param_fraction(s, sym.params); }

  ModMatrix rows(const std::vector<std::vector<std::string>>& r) const {
    std::vector<std::vector<OpPoly>> rr;
    for (const auto& row : r) {
      rr.emplace_back();
      for (const auto& e : row) rr.back().push_back(p(e));
    }
    return ModMatrix::from_rows(np(), nv(), r.empty() ? 0 : r[0].size(), rr);
  }
  ModElement vec(const std::vector<std::string>& v) const {
    std::vector<OpPoly> e;
    for (const auto& s : v) e.push_back(p(s));
    return ModElement(std::move(e));
  }
  std::string str(const OpPoly& f) const { return f.to_string(sym.params, sym.vars); }
};

}  // namespace testing
