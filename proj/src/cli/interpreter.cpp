#include "parametra/cli/interpreter.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "parametra/analysis/homological.hpp"
#include "parametra/analysis/leykin_walther.hpp"
#include "parametra/analysis/strata.hpp"
#include "parametra/cli/expression.hpp"
#include "parametra/engine/module_ops.hpp"
#include "parametra/engine/specialize.hpp"

#ifndef PARAMETRA_VERSION
#define PARAMETRA_VERSION "0.0.0"
#endif

namespace parametra::cli {
namespace {

using nlohmann::json;

struct Value {
  ValueKind kind = ValueKind::Poly;
  OpPoly poly;
  ModMatrix matrix;
  std::vector<OpPoly> ideal;
};

// Raised inside a command; wrapped into EngineError with the statement.
class CommandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t\r\n"), b = s.find_last_not_of(" \t\r\n");
  return a == std::string_view::npos ? std::string() : std::string(s.substr(a, b - a + 1));
}

// Integer primitive form with positive leading coefficient.
ParamPoly display_form(const ParamPoly& p) { return p.is_zero() ? p : p.monic().primitive_integer(); }

class Interpreter {
 public:
  explicit Interpreter(const RunOptions& opts) : opts_(opts) {}

  json run(const SessionScript& script) {
    json results = json::array();
    for (const Statement& st : script.statements) {
      auto t0 = std::chrono::steady_clock::now();
      json result;
      try {
        switch (st.kind) {
          case Statement::Kind::Ring:
            declare_ring(st);
            continue;
          case Statement::Kind::Declare:
            declare(st);
            continue;
          case Statement::Kind::Specialize:
            result = specialize(st);
            break;
          case Statement::Kind::Command:
            result = command(st.items[0]);
            break;
        }
      } catch (const std::exception& e) {
        throw EngineError(st.line, st.text, e.what());
      }
      json entry;
      entry["command"] = st.text;
      entry["line"] = st.line;
      entry["ring"] = ring_json();
      entry["result"] = std::move(result);
      if (opts_.timing)
        entry["timing_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      results.push_back(std::move(entry));
    }
    json report;
    report["engine"] = "parametra";
    report["version"] = std::string(engine_version());
    report["results"] = std::move(results);
    return report;
  }

 private:
  // Ring and objects

  void declare_ring(const Statement& st) {
    ring_name_ = st.name;
    params_ = st.params;
    vars_ = st.vars;
    order_token_ = opts_.order.value_or(st.order);
    order_.emplace(parse_order(order_token_, vars_.size()));
    objects_.clear();
  }

  json ring_json() const {
    return {{"name", ring_name_}, {"params", params_}, {"vars", vars_}, {"order", order_token_}};
  }

  const ModOrder& order() const { return *order_; }
  std::size_t np() const { return params_.size(); }
  std::size_t nv() const { return vars_.size(); }

  Symbols symbols(const std::vector<std::string>& params) const {
    return Symbols{params, vars_, [this](const std::string& name) -> std::optional<OpPoly> {
                     auto it = objects_.find(name);
                     if (it == objects_.end() || it->second.kind != ValueKind::Poly) return std::nullopt;
                     return it->second.poly;
                   }};
  }

  OpPoly parse_tokens(const std::vector<Token>& tokens, const std::vector<std::string>& params) const {
    std::vector<Token> copy = tokens;
    copy.push_back(Token{});
    TokenStream ts(std::move(copy));
    return parse_expression(ts, symbols(params));
  }

  void declare(const Statement& st) {
    Value v;
    if (st.type == "poly") {
      v = eval(st.items[0]);
    } else if (st.type == "ideal") {
      v.kind = ValueKind::Ideal;
      for (const Expr& e : st.items) {
        std::vector<OpPoly> gens = as_ideal(eval(e));
        v.ideal.insert(v.ideal.end(), gens.begin(), gens.end());
      }
    } else {
      v.kind = ValueKind::Matrix;
      if (st.items[0].kind == Expr::Kind::Vector) {
        std::vector<std::vector<OpPoly>> vectors;
        for (const Expr& e : st.items) vectors.push_back(vector_entries(e));
        std::size_t len = vectors[0].size();
        if (st.type == "module") {
          std::vector<ModElement> cols;
          for (auto& c : vectors) cols.emplace_back(std::move(c));
          v.matrix = ModMatrix(np(), nv(), len, std::move(cols));
        } else {
          v.matrix = ModMatrix::from_rows(np(), nv(), len, vectors);
        }
      } else {
        v.matrix = as_matrix(eval(st.items[0]));
      }
    }
    objects_[st.name] = std::move(v);
  }

  std::vector<OpPoly> vector_entries(const Expr& e) const {
    std::vector<OpPoly> out;
    for (const auto& entry : e.entries) out.push_back(parse_tokens(entry, params_));
    return out;
  }

  json specialize(const Statement& st) {
    std::vector<std::string> next = specialized_params(params_, vars_, st.substitutions);
    ParamMap map;
    map.target_params = next.size();
    for (const std::string& p : params_) {
      auto sub = std::find_if(st.substitutions.begin(), st.substitutions.end(),
                              [&](const auto& s) { return s.first == p; });
      if (sub == st.substitutions.end()) {
        std::size_t k = static_cast<std::size_t>(std::find(next.begin(), next.end(), p) - next.begin());
        map.images.push_back(ParamFraction(ParamPoly::variable(next.size(), k)));
        continue;
      }
      OpPoly image = parse_tokens(sub->second, next);
      if (!image.is_constant()) throw CommandError("substitution for " + p + " involves operator variables");
      map.images.push_back(image.constant_coeff());
    }
    std::map<std::string, Value> mapped;
    for (const auto& [name, v] : objects_) {
      Value w;
      w.kind = v.kind;
      switch (v.kind) {
        case ValueKind::Poly:
          w.poly = apply(map, v.poly);
          break;
        case ValueKind::Matrix:
          w.matrix = apply(map, v.matrix);
          break;
        case ValueKind::Ideal:
          for (const OpPoly& g : v.ideal) w.ideal.push_back(apply(map, g));
          break;
        case ValueKind::Report:
          break;
      }
      mapped.emplace(name, std::move(w));
    }
    params_ = std::move(next);
    objects_ = std::move(mapped);
    return {{"type", "ring"}, {"params", params_}};
  }

  // Values

  Value eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Poly: {
        if (e.tokens.size() == 1 && e.tokens[0].kind == Token::Kind::Ident) {
          auto it = objects_.find(e.tokens[0].text);
          if (it != objects_.end()) return it->second;
        }
        Value v;
        v.poly = parse_tokens(e.tokens, params_);
        return v;
      }
      case Expr::Kind::Vector: {
        Value v;
        v.kind = ValueKind::Matrix;
        std::vector<OpPoly> entries = vector_entries(e);
        std::size_t len = entries.size();
        v.matrix = ModMatrix(np(), nv(), len, {ModElement(std::move(entries))});
        return v;
      }
      case Expr::Kind::Call:
        return eval_call(e);
      case Expr::Kind::String:
        break;
    }
    throw CommandError("unexpected string");
  }

  ModMatrix as_matrix(const Value& v) const {
    if (v.kind == ValueKind::Matrix) return v.matrix;
    if (v.kind == ValueKind::Poly) return ModMatrix(np(), nv(), 1, {ModElement(std::vector<OpPoly>{v.poly})});
    throw CommandError("expected a module or matrix");
  }

  std::vector<OpPoly> as_ideal(const Value& v) const {
    if (v.kind == ValueKind::Ideal) return v.ideal;
    if (v.kind == ValueKind::Poly) return {v.poly};
    throw CommandError("expected an ideal or polynomial");
  }

  ParamPoly as_param_poly(const OpPoly& p) const {
    if (!p.is_constant()) throw CommandError("expected a polynomial in the parameters only");
    ParamFraction c = p.constant_coeff();
    if (c.is_zero()) return ParamPoly(np());
    if (!c.den().is_constant()) throw CommandError("expected a polynomial in the parameters, not a fraction");
    return c.num() * (1 / c.den().constant_value());
  }

  std::vector<ParamPoly> param_ideal(const Value& v) const {
    std::vector<ParamPoly> out;
    for (const OpPoly& g : as_ideal(v)) out.push_back(as_param_poly(g));
    return out;
  }

  OpPoly from_param(const ParamPoly& p) const { return OpPoly::constant(nv(), ParamFraction(p)); }

  Value matrix_value(ModMatrix m) const {
    Value v;
    v.kind = ValueKind::Matrix;
    v.matrix = std::move(m);
    return v;
  }

  Value eval_call(const Expr& e) {
    const std::string& n = e.name;
    if (n == "transpose") return matrix_value(transpose(as_matrix(eval(e.args[0]))));
    if (n == "gb") {
      Value a = eval(e.args[0]);
      if (a.kind == ValueKind::Ideal) {
        Value v;
        v.kind = ValueKind::Ideal;
        for (const ParamPoly& g : ideal_basis(param_ideal(a), np())) v.ideal.push_back(from_param(g));
        return v;
      }
      return matrix_value(groebner_basis(as_matrix(a), order()));
    }
    if (n == "syz") return matrix_value(syzygies(as_matrix(eval(e.args[0])), order()));
    if (n == "lift") return matrix_value(lift(as_matrix(eval(e.args[0])), as_matrix(eval(e.args[1])), order()));
    if (n == "leftinverse" || n == "rightinverse") {
      ModMatrix M = as_matrix(eval(e.args[0]));
      auto inv = n == "leftinverse" ? left_inverse(M, order()) : right_inverse(M, order());
      if (!inv) throw CommandError(std::string("no ") + (n == "leftinverse" ? "left" : "right") + " inverse exists");
      return matrix_value(*inv);
    }
    if (n == "leftkernel") return matrix_value(left_kernel(as_matrix(eval(e.args[0])), order()));
    if (n == "rightkernel") return matrix_value(right_kernel(as_matrix(eval(e.args[0])), order()));
    if (n == "canonize") {
      Value a = eval(e.args[0]);
      auto canon = [&](const OpPoly& g) { return g.is_constant() ? from_param(display_form(as_param_poly(g))) : canonize(g); };
      if (a.kind == ValueKind::Ideal) {
        for (OpPoly& g : a.ideal) g = canon(g);
        return a;
      }
      if (a.kind == ValueKind::Poly) {
        a.poly = canon(a.poly);
        return a;
      }
      return matrix_value(canonize_columns(a.matrix, order()));
    }
    throw CommandError(n + " does not produce a value");
  }

  // Commands

  json command(const Expr& e) {
    const std::string& n = e.name;
    if (n == "canonize" && e.args[0].kind == Expr::Kind::Call &&
        (e.args[0].name == "control" || e.args[0].name == "autonom"))
      return command(e.args[0]);
    if (n == "control" || n == "autonom") return analysis(n, as_matrix(eval(e.args[0])));
    if (n == "trinity") {
      Trinity t = trinity(as_matrix(eval(e.args[0])), order());
      return {{"type", "trinity"},
              {"gb", matrix_json(t.gb)},
              {"transform", matrix_json(t.transform)},
              {"syzygies", matrix_json(t.syzygies)}};
    }
    if (n == "leftinverse" || n == "rightinverse") {
      ModMatrix M = as_matrix(eval(e.args[0]));
      auto inv = n == "leftinverse" ? left_inverse(M, order()) : right_inverse(M, order());
      return {{"type", "inverse"}, {"side", n == "leftinverse" ? "left" : "right"}, {"exists", inv.has_value()},
              {"matrix", inv ? matrix_json(*inv) : json(nullptr)}};
    }
    if (n == "rank") return {{"type", "integer"}, {"name", "column rank"}, {"value", column_rank(as_matrix(eval(e.args[0])), order())}};
    if (n == "dim")
      return {{"type", "integer"}, {"name", "dimension"},
              {"value", system_dimension(PresentedModule(as_matrix(eval(e.args[0]))), order())}};
    if (n == "genericity") return genericity_json(genericity_of(e));
    if (n == "stratify") return stratify(e);
    if (n == "factgb") return factgb(e);
    if (n == "lw_obstruction") return lw_obstruction(e);
    if (n == "coherence") return coherence(e);
    Value v = eval(n == "print" ? e.args[0] : e);
    json out{{"type", "value"}, {"operation", n}};
    switch (v.kind) {
      case ValueKind::Poly:
        out["kind"] = "poly";
        out["poly"] = str(v.poly);
        break;
      case ValueKind::Matrix:
        out["kind"] = "matrix";
        out["matrix"] = matrix_json(v.matrix);
        break;
      case ValueKind::Ideal: {
        out["kind"] = "ideal";
        json gens = json::array();
        for (const OpPoly& g : v.ideal) gens.push_back(g.is_constant() ? as_param_poly(g).to_string(params_) : str(g));
        out["ideal"] = gens;
        break;
      }
      case ValueKind::Report:
        break;
    }
    return out;
  }

  std::string str(const OpPoly& p) const { return p.to_string(params_, vars_); }
  std::string str(const ParamPoly& p) const { return display_form(p).to_string(params_); }

  json matrix_json(const ModMatrix& m) const {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(str(m.at(i, j)));
      rows.push_back(row);
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
  }

  json polys_json(const std::vector<ParamPoly>& ps) const {
    json out = json::array();
    for (const ParamPoly& p : ps) out.push_back(str(p));
    return out;
  }

  std::vector<Constraint> constraints() const {
    std::vector<Constraint> out;
    for (const NamedConstraint& c : opts_.constraints) {
      auto it = std::find(params_.begin(), params_.end(), c.param);
      if (it != params_.end()) out.push_back({static_cast<std::size_t>(it - params_.begin()), c.sign});
    }
    return out;
  }

  std::vector<ParamPoly> positive_params() const {
    std::vector<ParamPoly> out;
    for (const Constraint& c : constraints())
      if (c.sign == Sign::Positive) out.push_back(ParamPoly::variable(np(), c.param));
    return out;
  }

  json genericity_json(const ObstructionSet& s) const {
    return {{"type", "genericity"},
            {"factors", polys_json(s.factors)},
            {"excluded", polys_json(s.excluded)},
            {"normalization_only", polys_json(s.normalization_only)}};
  }

  ObstructionSet genericity_of(const Expr& e) {
    ModMatrix M = as_matrix(eval(e.args[0]));
    ObstructionSet s = e.args.size() == 2 ? genericity(M, as_matrix(eval(e.args[1])), order()) : genericity(M, order());
    return admissibility_filter(s, constraints());
  }

  json analysis(const std::string& n, const ModMatrix& R) {
    AnalysisOptions ao;
    ao.max_ext = opts_.max_ext;
    PresentedModule M(R);
    AnalysisReport rep = n == "control" ? control_analysis(M, order(), ao) : autonomy_analysis(M, order(), ao);
    auto opt_matrix = [&](const std::optional<ModMatrix>& m) { return m ? matrix_json(*m) : json(nullptr); };
    json out;
    out["type"] = n == "control" ? "control" : "autonomy";
    out["first_nonzero_ext"] = rep.first_nonzero_ext;
    out["verdict"] = std::string(verdict_text(rep.verdict));
    out["kernel_representation"] = opt_matrix(rep.kernel_rep);
    out["dimension"] = rep.dimension;
    if (n == "control") {
      out["image_representation"] = opt_matrix(rep.image_rep);
      out["left_inverse"] = opt_matrix(rep.left_inverse);
      out["obstruction"] = rep.obstruction ? matrix_json(rep.obstruction->relations()) : json(nullptr);
      json ann = json::array();
      for (const OpPoly& a : rep.torsion_annihilator) ann.push_back(str(canonize(a)));
      out["torsion_annihilator"] = ann;
      out["genericity"] = rep.genericity ? genericity_json(admissibility_filter(*rep.genericity, constraints()))
                                         : json(nullptr);
    } else {
      out["column_rank"] = rep.column_rank ? json(*rep.column_rank) : json(nullptr);
    }
    return out;
  }

  json stratify(const Expr& e) {
    Value a = eval(e.args[0]);
    std::vector<ParamPoly> P;
    if (a.kind == ValueKind::Matrix) {
      P = admissibility_filter(genericity(a.matrix, order()), constraints()).factors;
    } else {
      for (const ParamPoly& p : param_ideal(a))
        if (!p.is_constant()) P.push_back(display_form(p));
      std::sort(P.begin(), P.end(), factor_less);
      P.erase(std::unique(P.begin(), P.end()), P.end());
    }
    json strata = json::array();
    for (const Stratum& s : stratify_lc(P, np())) {
      json comps = json::array();
      for (const auto& c : s.components) comps.push_back(polys_json(c));
      strata.push_back({{"equations", polys_json(s.equations)},
                        {"inequations", polys_json(s.inequations)},
                        {"status", std::string(status_text(s.status))},
                        {"components", comps}});
    }
    return {{"type", "strata"}, {"polynomials", polys_json(P)}, {"strata", strata}};
  }

  json factgb(const Expr& e) {
    IdealOptions io;
    if (e.args.size() == 3) io.order = parse_order(e.args[2].name, np()).base();
    json comps = json::array();
    for (const auto& c : fact_gb(param_ideal(eval(e.args[0])), param_ideal(eval(e.args[1])), np(), io))
      comps.push_back(polys_json(c));
    return {{"type", "components"}, {"components", comps}};
  }

  json lw_obstruction(const Expr& e) {
    ModMatrix M = as_matrix(eval(e.args[0]));
    LeykinWaltherResult lw = leykin_walther(M);
    ObstructionSet s = admissibility_filter(genericity(M, order()), constraints());
    std::vector<ParamPoly> pos = positive_params();
    json contains = json::array();
    for (const ParamPoly& f : s.factors)
      contains.push_back({{"factor", str(f)}, {"contained", zero_set_contains(lw.h, f, pos)}});
    return {{"type", "lw_obstruction"},
            {"h", str(lw.h)},
            {"h_factors", polys_json(simplify_factors({lw.h}))},
            {"quotient", polys_json(lw.quotient)},
            {"basis_size", lw.basis_size},
            {"contains", contains}};
  }

  json coherence(const Expr& e) {
    ModMatrix M = as_matrix(eval(e.args[0]));
    std::size_t points = e.args.size() == 2 ? std::stoul(e.args[1].tokens[0].text) : 20;
    ModMatrix G = groebner_basis(M, order());
    ObstructionSet s = genericity(M, order());
    std::vector<ParamPoly> avoid = s.factors;
    avoid.insert(avoid.end(), s.normalization_only.begin(), s.normalization_only.end());
    std::mt19937_64 rng(opts_.seed);
    std::uniform_int_distribution<int> value(1, 30);
    json failures = json::array();
    std::size_t tested = 0;
    for (std::size_t attempt = 0; tested < points && attempt < 50 * points; ++attempt) {
      std::vector<BigRational> pt;
      for (std::size_t i = 0; i < np(); ++i) pt.push_back(BigRational(value(rng)));
      if (std::any_of(avoid.begin(), avoid.end(), [&](const ParamPoly& f) { return f.evaluate(pt) == 0; })) continue;
      ParamMap map = rational_point(pt);
      ModMatrix Ms, Gs;
      try {
        Ms = apply(map, M);
        Gs = apply(map, G);
      } catch (const DomainError&) {
        continue;
      }
      ++tested;
      if (!(groebner_basis(Ms, order()) == Gs)) {
        json p;
        for (std::size_t i = 0; i < np(); ++i) p[params_[i]] = to_string(pt[i]);
        failures.push_back(p);
      }
    }
    return {{"type", "coherence"},
            {"seed", opts_.seed},
            {"requested", points},
            {"points", tested},
            {"coherent", failures.empty() && tested == points},
            {"failures", failures}};
  }

  const RunOptions& opts_;
  std::string ring_name_;
  std::vector<std::string> params_;
  std::vector<std::string> vars_;
  std::string order_token_;
  std::optional<ModOrder> order_;
  std::map<std::string, Value> objects_;
};

// Text rendering

class Items {
 public:
  void add(std::vector<std::string> lines) { items_.push_back(std::move(lines)); }
  void add(std::string line) { items_.push_back({std::move(line)}); }
  std::string str() const {
    std::string out;
    for (std::size_t k = 0; k < items_.size(); ++k) {
      out += "[" + std::to_string(k + 1) + "]:\n";
      for (const std::string& l : items_[k]) out += "   " + l + "\n";
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> items_;
};

std::vector<std::string> column_lines(const json& m) {
  std::vector<std::string> out;
  std::size_t rows = m["rows"], cols = m["cols"];
  for (std::size_t j = 0; j < cols; ++j) {
    std::string s = "_[" + std::to_string(j + 1) + "]=[";
    for (std::size_t i = 0; i < rows; ++i) s += (i ? "," : "") + m["entries"][i][j].get<std::string>();
    out.push_back(s + "]");
  }
  if (cols == 0) out.push_back("_[1]=0");
  return out;
}

std::vector<std::string> row_lines(const json& m) {
  std::vector<std::string> out;
  std::size_t rows = m["rows"], cols = m["cols"];
  for (std::size_t i = 0; i < rows; ++i) {
    std::string s = "_[" + std::to_string(i + 1) + "]=[";
    for (std::size_t j = 0; j < cols; ++j) s += (j ? "," : "") + m["entries"][i][j].get<std::string>();
    out.push_back(s + "]");
  }
  if (rows == 0) out.push_back("_[1]=0");
  return out;
}

std::vector<std::string> entry_lines(const json& m) {
  std::vector<std::string> out;
  std::size_t rows = m["rows"], cols = m["cols"];
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      out.push_back("_[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]=" +
                    m["entries"][i][j].get<std::string>());
  if (out.empty()) out.push_back("_[1,1]=0");
  return out;
}

std::vector<std::string> list_lines(const json& polys) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < polys.size(); ++k)
    out.push_back("_[" + std::to_string(k + 1) + "]=" + polys[k].get<std::string>());
  if (out.empty()) out.push_back("_[1]=0");
  return out;
}

std::string joined(const json& polys) {
  std::string s;
  for (const auto& p : polys) s += (s.empty() ? "" : ", ") + p.get<std::string>();
  return s.empty() ? "none" : s;
}

std::string genericity_text(const json& g) {
  std::string out = g["factors"].empty() ? "// no obstructions\n" : "";
  for (std::size_t k = 0; k < g["factors"].size(); ++k)
    out += "[" + std::to_string(k + 1) + "]:\n   " + g["factors"][k].get<std::string>() + "\n";
  if (!g["excluded"].empty()) out += "// excluded by constraints: " + joined(g["excluded"]) + "\n";
  if (!g["normalization_only"].empty()) out += "// normalization denominators: " + joined(g["normalization_only"]) + "\n";
  return out;
}

std::string control_text(const json& r) {
  Items it;
  it.add("number of first nonzero Ext:");
  it.add(std::to_string(r["first_nonzero_ext"].get<int>()));
  if (r["verdict"] == "strongly controllable(flat)") {
    it.add("strongly controllable(flat), image representation:");
    it.add(column_lines(r["image_representation"]));
    if (!r["left_inverse"].is_null()) {
      it.add("left inverse to image representation:");
      it.add(entry_lines(r["left_inverse"]));
    }
    it.add("dimension of the system:");
    it.add(std::to_string(r["dimension"].get<int>()));
    if (!r["genericity"].is_null()) {
      it.add("Parameter constellations which might lead to a non-controllable system:");
      std::string g = genericity_text(r["genericity"]);
      std::vector<std::string> lines;
      std::istringstream in(g);
      for (std::string line; std::getline(in, line);) lines.push_back(line);
      if (lines.empty()) lines.push_back("none");
      it.add(lines);
    }
    return it.str();
  }
  it.add("not controllable , image representation for controllable part:");
  it.add(column_lines(r["image_representation"]));
  it.add("kernel representation for controllable part:");
  it.add(row_lines(r["kernel_representation"]));
  it.add("obstruction to controllability");
  it.add(column_lines(r["obstruction"]));
  it.add("annihilator of torsion module (of obstruction to controllability)");
  it.add(list_lines(r["torsion_annihilator"]));
  it.add("dimension of the system:");
  it.add(std::to_string(r["dimension"].get<int>()));
  return it.str();
}

std::string autonomy_text(const json& r) {
  Items it;
  it.add("number of first nonzero Ext:");
  it.add(std::to_string(r["first_nonzero_ext"].get<int>()));
  it.add(r["verdict"].get<std::string>());
  if (!r["kernel_representation"].is_null()) {
    it.add("kernel representation for controllable part");
    it.add(row_lines(r["kernel_representation"]));
  }
  it.add("column rank of the matrix");
  it.add(std::to_string(r["column_rank"].get<std::size_t>()));
  it.add("dimension of the system:");
  it.add(std::to_string(r["dimension"].get<int>()));
  return it.str();
}

std::string strata_text(const json& r) {
  Items it;
  for (const auto& s : r["strata"]) {
    std::vector<std::string> lines{"equations: " + joined(s["equations"]), "inequations: " + joined(s["inequations"]),
                                   "status: " + s["status"].get<std::string>()};
    for (std::size_t k = 0; k < s["components"].size(); ++k)
      lines.push_back("component [" + std::to_string(k + 1) + "]: " + joined(s["components"][k]));
    it.add(lines);
  }
  return "// polynomials: " + joined(r["polynomials"]) + "\n" + it.str();
}

std::string result_text(const json& r) {
  const std::string type = r["type"];
  if (type == "control") return control_text(r);
  if (type == "autonomy") return autonomy_text(r);
  if (type == "genericity") return genericity_text(r);
  if (type == "strata") return strata_text(r);
  if (type == "ring") return "";
  if (type == "integer") return std::to_string(r["value"].get<long long>()) + "\n";
  if (type == "trinity") {
    Items it;
    it.add("Groebner basis:");
    it.add(column_lines(r["gb"]));
    it.add("transformation matrix:");
    it.add(entry_lines(r["transform"]));
    it.add("syzygies:");
    it.add(column_lines(r["syzygies"]));
    return it.str();
  }
  if (type == "inverse") {
    if (!r["exists"].get<bool>()) return "// no " + r["side"].get<std::string>() + " inverse\n";
    std::string s;
    for (const auto& l : entry_lines(r["matrix"])) s += l + "\n";
    return s;
  }
  if (type == "components") {
    Items it;
    for (const auto& c : r["components"]) it.add(list_lines(c));
    return it.str();
  }
  if (type == "lw_obstruction") {
    Items it;
    it.add("obstruction polynomial h:");
    it.add(r["h"].get<std::string>());
    it.add("distinct factors of h:");
    it.add(list_lines(r["h_factors"]));
    it.add("quotient ideal:");
    it.add(list_lines(r["quotient"]));
    it.add("admissible obstructions whose zero set lies in V(h):");
    std::vector<std::string> lines;
    for (const auto& c : r["contains"])
      lines.push_back(c["factor"].get<std::string>() + ": " + (c["contained"].get<bool>() ? "yes" : "no"));
    if (lines.empty()) lines.push_back("none");
    it.add(lines);
    return it.str();
  }
  if (type == "coherence") {
    std::string s = "// " + std::to_string(r["points"].get<std::size_t>()) + " of " +
                    std::to_string(r["requested"].get<std::size_t>()) + " random points tested, seed " +
                    std::to_string(r["seed"].get<std::uint64_t>()) + "\n";
    s += r["coherent"].get<bool>() ? "coherent\n" : "not coherent\n";
    for (const auto& f : r["failures"]) s += "// failure at " + f.dump() + "\n";
    return s;
  }
  if (type == "value") {
    const std::string kind = r["kind"];
    std::vector<std::string> lines;
    if (kind == "poly") lines.push_back(r["poly"].get<std::string>());
    if (kind == "ideal") lines = list_lines(r["ideal"]);
    if (kind == "matrix") {
      const std::string op = r["operation"];
      bool entries = op == "lift" || op == "leftinverse" || op == "rightinverse";
      lines = entries ? entry_lines(r["matrix"]) : op == "leftkernel" ? row_lines(r["matrix"]) : column_lines(r["matrix"]);
    }
    std::string s;
    for (const auto& l : lines) s += l + "\n";
    return s;
  }
  return r.dump() + "\n";
}

std::string ring_text(const json& ring) {
  std::string s = "ring " + ring["name"].get<std::string>() + " = (0";
  for (const auto& p : ring["params"]) s += "," + p.get<std::string>();
  s += "),(";
  for (std::size_t i = 0; i < ring["vars"].size(); ++i) s += (i ? "," : "") + ring["vars"][i].get<std::string>();
  return s + ")," + ring["order"].get<std::string>();
}

}  // namespace

std::vector<NamedConstraint> parse_constraints(std::string_view text) {
  std::vector<NamedConstraint> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string group = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (group.empty()) continue;
    std::size_t eq = group.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("constraint group without '=': " + group);
    std::string kind = trim(std::string_view(group).substr(0, eq));
    Sign sign;
    if (kind == "pos" || kind == "positive")
      sign = Sign::Positive;
    else if (kind == "nonneg" || kind == "nonnegative")
      sign = Sign::NonNegative;
    else if (kind == "nonzero")
      sign = Sign::NonZero;
    else
      throw std::invalid_argument("unknown constraint kind: " + kind);
    std::string names = group.substr(eq + 1);
    std::size_t p = 0;
    while (p <= names.size()) {
      std::size_t c = names.find(',', p);
      if (c == std::string::npos) c = names.size();
      std::string name = trim(std::string_view(names).substr(p, c - p));
      p = c + 1;
      if (name.empty()) throw std::invalid_argument("empty parameter name in constraints");
      out.push_back({name, sign});
    }
  }
  return out;
}

std::string_view engine_version() { return PARAMETRA_VERSION; }

nlohmann::json run(const SessionScript& script, const RunOptions& opts) { return Interpreter(opts).run(script); }

std::string render_text(const nlohmann::json& report) {
  std::string out;
  for (const auto& entry : report["results"]) {
    if (!out.empty()) out += "\n";
    out += "// " + entry["command"].get<std::string>() + "\n";
    if (entry["result"]["type"] == "ring") out += "// " + ring_text(entry["ring"]) + "\n";
    out += result_text(entry["result"]);
    if (entry.contains("timing_ms")) out += "// time: " + std::to_string(entry["timing_ms"].get<double>()) + " ms\n";
  }
  return out;
}

}  // namespace parametra::cli
