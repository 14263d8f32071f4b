#pragma once

#include "bruhat/poly.hpp"

#include <string>
#include <vector>

namespace bruhat {

// Square matrix over Polynomial.  All indices in the public API are 1-based.
class PolyMatrix {
 public:
  explicit PolyMatrix(int size = 0);
  static PolyMatrix identity(int size);

  int size() const { return size_; }
  const Polynomial& operator()(int row, int col) const { return data_[offset(row, col)]; }
  Polynomial& operator()(int row, int col) { return data_[offset(row, col)]; }

  PolyMatrix transpose() const;
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  PolyMatrix substitute(const Substitution& map) const;

  // Row-major dump, one row per line, entries separated by " | ".
  std::string to_string() const;

 private:
  std::size_t offset(int row, int col) const;
  int size_;
  std::vector<Polynomial> data_;
};

// Index tuples are 1-based and strictly increasing.
using IndexTuple = std::vector<int>;

// Determinant of the (rows, cols) submatrix by cofactor expansion along rows,
// memoized on column subsets.  Empty tuples give 1.
Polynomial minor(const PolyMatrix& m, const IndexTuple& rows, const IndexTuple& cols);
Polynomial determinant(const PolyMatrix& m);

// [1..size] minus the given indices.
IndexTuple complement(const IndexTuple& idx, int size);
IndexTuple prefix(int count);

// Parses "1,2,3" (empty string gives the empty tuple).
IndexTuple parse_index_tuple(const std::string& text);
std::string index_tuple_to_string(const IndexTuple& idx);

}  // namespace bruhat
