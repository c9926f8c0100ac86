#include "parametra/engine/module.hpp"

namespace parametra {

ModElement::ModElement(std::vector<OpPoly> entries) : entries_(std::move(entries)) {
  if (!entries_.empty()) {
    nparams_ = entries_[0].nparams();
    nvars_ = entries_[0].nvars();
  }
  for (const OpPoly& e : entries_) {
    require_same_arity(nparams_, e.nparams(), "ModElement");
    require_same_arity(nvars_, e.nvars(), "ModElement");
  }
}

ModElement ModElement::unit(std::size_t nparams, std::size_t nvars, std::size_t rank, std::size_t index) {
  ModElement v(nparams, nvars, rank);
  v.entries_.at(index) = OpPoly::constant(nvars, ParamFraction::constant(nparams, 1));
  return v;
}

bool ModElement::is_zero() const {
  for (const OpPoly& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

ModElement& ModElement::operator+=(const ModElement& o) {
  if (rank() != o.rank()) throw ShapeError("ModElement add: rank mismatch");
  for (std::size_t i = 0; i < rank(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

ModElement& ModElement::operator-=(const ModElement& o) {
  if (rank() != o.rank()) throw ShapeError("ModElement sub: rank mismatch");
  for (std::size_t i = 0; i < rank(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

ModElement operator*(const OpPoly& c, const ModElement& v) {
  ModElement r = v;
  for (OpPoly& e : r.entries_) e = c * e;
  return r;
}

std::string ModElement::to_string(std::span<const std::string> params, std::span<const std::string> vars) const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += entries_[i].to_string(params, vars);
  }
  return s + "]";
}

ModMatrix::ModMatrix(std::size_t nparams, std::size_t nvars, std::size_t rows, std::vector<ModElement> columns)
    : nparams_(nparams), nvars_(nvars), rows_(rows) {
  for (ModElement& c : columns) push_back(std::move(c));
}

ModMatrix ModMatrix::identity(std::size_t nparams, std::size_t nvars, std::size_t n) {
  ModMatrix m(nparams, nvars, n);
  for (std::size_t j = 0; j < n; ++j) m.push_back(ModElement::unit(nparams, nvars, n, j));
  return m;
}

ModMatrix ModMatrix::zero(std::size_t nparams, std::size_t nvars, std::size_t rows, std::size_t cols) {
  ModMatrix m(nparams, nvars, rows);
  for (std::size_t j = 0; j < cols; ++j) m.push_back(ModElement(nparams, nvars, rows));
  return m;
}

ModMatrix ModMatrix::from_rows(std::size_t nparams, std::size_t nvars, std::size_t cols,
                               const std::vector<std::vector<OpPoly>>& rows) {
  ModMatrix m = zero(nparams, nvars, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeError("ModMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

void ModMatrix::push_back(ModElement column) {
  if (column.rank() != rows_) throw ShapeError("ModMatrix: column rank mismatch");
  if (rows_ > 0) {
    require_same_arity(nparams_, column.nparams(), "ModMatrix");
    require_same_arity(nvars_, column.nvars(), "ModMatrix");
  }
  columns_.push_back(std::move(column));
}

bool ModMatrix::is_zero() const {
  for (const ModElement& c : columns_)
    if (!c.is_zero()) return false;
  return true;
}

ModMatrix ModMatrix::transpose() const {
  ModMatrix t = zero(nparams_, nvars_, cols(), rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols(); ++j) t.at(j, i) = at(i, j);
  return t;
}

ModMatrix ModMatrix::select_columns(std::span<const std::size_t> idx) const {
  ModMatrix m(nparams_, nvars_, rows_);
  for (std::size_t j : idx) m.push_back(columns_.at(j));
  return m;
}

ModMatrix ModMatrix::select_rows(std::size_t begin, std::size_t count) const {
  if (begin + count > rows_) throw ShapeError("ModMatrix::select_rows: out of range");
  ModMatrix m(nparams_, nvars_, count);
  for (const ModElement& c : columns_) {
    std::vector<OpPoly> e(c.entries().begin() + begin, c.entries().begin() + begin + count);
    m.push_back(count ? ModElement(std::move(e)) : ModElement(nparams_, nvars_, 0));
  }
  return m;
}

ModMatrix ModMatrix::concat(const ModMatrix& o) const {
  if (o.rows_ != rows_) throw ShapeError("ModMatrix::concat: row mismatch");
  ModMatrix m = *this;
  for (const ModElement& c : o.columns_) m.push_back(c);
  return m;
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("ModMatrix mul: shape mismatch");
  ModMatrix r = ModMatrix::zero(a.nparams_, a.nvars_, a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const OpPoly& bkj = b.at(k, j);
      if (bkj.is_zero()) continue;
      for (std::size_t i = 0; i < a.rows(); ++i)
        if (!a.at(i, k).is_zero()) r.at(i, j) += a.at(i, k) * bkj;
    }
  return r;
}

ModMatrix operator-(const ModMatrix& a, const ModMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("ModMatrix sub: shape mismatch");
  ModMatrix r = a;
  for (std::size_t j = 0; j < a.cols(); ++j) r.columns_[j] -= b.columns_[j];
  return r;
}

std::string ModMatrix::to_string(std::span<const std::string> params, std::span<const std::string> vars) const {
  std::string s;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j) s += ", ";
      s += at(i, j).to_string(params, vars);
    }
    s += '\n';
  }
  return s;
}

}  // namespace parametra
