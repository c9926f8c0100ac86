#pragma once

#include <random>
#include <string>
#include <vector>

#include "parametra/cli/expression.hpp"
#include "parametra/engine/groebner.hpp"

namespace testing {

// Small random matrices over Q(a)[x,y] or Q[x,y].
class InstanceGenerator {
 public:
  explicit InstanceGenerator(unsigned seed) : rng_(seed) {}

  parametra::ModMatrix matrix(bool with_param) {
    using namespace parametra;
    cli::Symbols sym{with_param ? std::vector<std::string>{"a"} : std::vector<std::string>{}, {"x", "y"}, {}};
    std::uniform_int_distribution<int> shape(1, 3), coef(-3, 3), pick(0, 9);
    const char* atoms[] = {"x", "y", "x*y", "x^2", "y^2", "1", "x+y", "x-1", "y^2-x", "x*y+1"};
    const char* scales[] = {"1", "a", "a+1", "1/a"};
    std::uniform_int_distribution<int> scale(0, with_param ? 3 : 0);
    std::size_t rows = shape(rng_), cols = shape(rng_);
    std::vector<std::vector<OpPoly>> m(rows);
    for (auto& row : m)
      for (std::size_t j = 0; j < cols; ++j) {
        std::string e = "0";
        for (int t = 0; t < 2; ++t) {
          int c = coef(rng_);
          if (c == 0) continue;
          e += "+(" + std::to_string(c) + ")*(" + scales[scale(rng_)] + ")*(" + atoms[pick(rng_)] + ")";
        }
        row.push_back(cli::parse_op_poly(e, sym));
      }
    return ModMatrix::from_rows(sym.params.size(), 2, cols, m);
  }

  // Lex orders only without a parameter.
  parametra::ModOrder order(bool with_param = false) {
    const char* tokens[] = {"(c,dp)", "(C,dp)", "(dp,c)", "(c,lp)", "(lp,C)"};
    std::uniform_int_distribution<int> pick(0, with_param ? 2 : 4);
    return parametra::parse_order(tokens[pick(rng_)], 2);
  }

 private:
  std::mt19937 rng_;
};

}  // namespace testing
