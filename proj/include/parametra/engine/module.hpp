#pragma once

#include <span>
#include <string>
#include <vector>

#include "parametra/engine/op_poly.hpp"

namespace parametra {

// Vector in the free module A^rank.
class ModElement {
 public:
  ModElement() = default;
  ModElement(std::size_t nparams, std::size_t nvars, std::size_t rank)
      : nparams_(nparams), nvars_(nvars), entries_(rank, OpPoly(nparams, nvars)) {}
  explicit ModElement(std::vector<OpPoly> entries);

  static ModElement unit(std::size_t nparams, std::size_t nvars, std::size_t rank, std::size_t index);

  std::size_t nparams() const { return nparams_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t rank() const { return entries_.size(); }
  const OpPoly& operator[](std::size_t i) const { return entries_[i]; }
  OpPoly& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<OpPoly>& entries() const { return entries_; }
  bool is_zero() const;

  ModElement& operator+=(const ModElement& o);
  ModElement& operator-=(const ModElement& o);
  friend ModElement operator+(ModElement a, const ModElement& b) { return a += b; }
  friend ModElement operator-(ModElement a, const ModElement& b) { return a -= b; }
  friend ModElement operator*(const OpPoly& c, const ModElement& v);
  friend bool operator==(const ModElement& a, const ModElement& b) { return a.entries_ == b.entries_; }

  // "[a,b,c]"
  std::string to_string(std::span<const std::string> params, std::span<const std::string> vars) const;

 private:
  std::size_t nparams_ = 0;
  std::size_t nvars_ = 0;
  std::vector<OpPoly> entries_;
};

// Matrix in A^{rows x cols}, stored as columns; the columns are the
// generators of the submodule it presents.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t nparams, std::size_t nvars, std::size_t rows)
      : nparams_(nparams), nvars_(nvars), rows_(rows) {}
  ModMatrix(std::size_t nparams, std::size_t nvars, std::size_t rows, std::vector<ModElement> columns);

  static ModMatrix identity(std::size_t nparams, std::size_t nvars, std::size_t n);
  static ModMatrix zero(std::size_t nparams, std::size_t nvars, std::size_t rows, std::size_t cols);
  static ModMatrix from_rows(std::size_t nparams, std::size_t nvars, std::size_t cols,
                             const std::vector<std::vector<OpPoly>>& rows);

  std::size_t nparams() const { return nparams_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const std::vector<ModElement>& columns() const { return columns_; }
  const ModElement& column(std::size_t j) const { return columns_[j]; }
  const OpPoly& at(std::size_t i, std::size_t j) const { return columns_[j][i]; }
  OpPoly& at(std::size_t i, std::size_t j) { return columns_[j][i]; }
  void push_back(ModElement column);
  bool is_zero() const;

  ModMatrix transpose() const;
  // Columns at the given indices, in that order.
  ModMatrix select_columns(std::span<const std::size_t> idx) const;
  ModMatrix select_rows(std::size_t begin, std::size_t count) const;
  // [this | o]
  ModMatrix concat(const ModMatrix& o) const;

  friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
  friend ModMatrix operator-(const ModMatrix& a, const ModMatrix& b);
  friend bool operator==(const ModMatrix& a, const ModMatrix& b) {
    return a.rows_ == b.rows_ && a.columns_ == b.columns_;
  }

  std::string to_string(std::span<const std::string> params, std::span<const std::string> vars) const;

 private:
  std::size_t nparams_ = 0;
  std::size_t nvars_ = 0;
  std::size_t rows_ = 0;
  std::vector<ModElement> columns_;
};

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace parametra
