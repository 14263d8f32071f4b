#include "bruhat/poly_matrix.hpp"

#include <bit>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace bruhat {

PolyMatrix::PolyMatrix(int size) : size_(size), data_(static_cast<std::size_t>(size) * size) {
  if (size < 0) throw std::invalid_argument("negative matrix size");
}

PolyMatrix PolyMatrix::identity(int size) {
  PolyMatrix m(size);
  for (int i = 1; i <= size; ++i) m(i, i) = Polynomial(1);
  return m;
}

std::size_t PolyMatrix::offset(int row, int col) const {
  if (row < 1 || row > size_ || col < 1 || col > size_)
    throw std::out_of_range("matrix index (" + std::to_string(row) + "," + std::to_string(col) +
                            ") outside a " + std::to_string(size_) + "x" +
                            std::to_string(size_) + " matrix");
  return static_cast<std::size_t>(row - 1) * size_ + (col - 1);
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(size_);
  for (int i = 1; i <= size_; ++i)
    for (int j = 1; j <= size_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("matrix size mismatch");
  const int k = a.size_;
  PolyMatrix c(k);
  for (int i = 1; i <= k; ++i)
    for (int l = 1; l <= k; ++l) {
      const Polynomial& ail = a(i, l);
      if (ail.is_zero()) continue;
      for (int j = 1; j <= k; ++j) {
        const Polynomial& blj = b(l, j);
        if (!blj.is_zero()) c(i, j) += ail * blj;
      }
    }
  return c;
}

PolyMatrix PolyMatrix::substitute(const Substitution& map) const {
  PolyMatrix r(size_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = bruhat::substitute(data_[i], map);
  return r;
}

std::string PolyMatrix::to_string() const {
  std::string s;
  for (int i = 1; i <= size_; ++i) {
    for (int j = 1; j <= size_; ++j) {
      if (j > 1) s += " | ";
      s += (*this)(i, j).to_string();
    }
    s += '\n';
  }
  return s;
}

namespace {

void check_tuple(const IndexTuple& idx, int size, const char* what) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 1 || idx[i] > size)
      throw std::out_of_range(std::string(what) + " index " + std::to_string(idx[i]) +
                              " outside [1, " + std::to_string(size) + "]");
    if (i > 0 && idx[i] <= idx[i - 1])
      throw std::invalid_argument(std::string(what) + " indices must be strictly increasing");
  }
}

}  // namespace

Polynomial minor(const PolyMatrix& m, const IndexTuple& rows, const IndexTuple& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor: row/column count mismatch");
  check_tuple(rows, m.size(), "row");
  check_tuple(cols, m.size(), "column");
  const int s = static_cast<int>(rows.size());
  if (s == 0) return Polynomial(1);
  if (s > 31) throw std::invalid_argument("minor: at most 31 rows supported");

  // det(r, S): rows r..s-1 (positions into `rows`), column positions in mask S
  // with |S| = s - r.  Filled from the last row upward.
  std::unordered_map<std::uint32_t, Polynomial> below{{0u, Polynomial(1)}};
  for (int r = s - 1; r >= 0; --r) {
    std::unordered_map<std::uint32_t, Polynomial> current;
    for (const auto& [mask, sub] : below) {
      if (sub.is_zero()) continue;
      // Each mask of size |S|+1 containing `mask` gains one column c; the sign
      // is the position of c inside the larger mask.
      for (int c = 0; c < s; ++c) {
        const std::uint32_t bit = 1u << c;
        if (mask & bit) continue;
        const Polynomial& entry = m(rows[r], cols[c]);
        if (entry.is_zero()) continue;
        const int pos = std::popcount(mask & (bit - 1));
        Polynomial term = entry * sub;
        if (pos % 2) term = -term;
        current[mask | bit] += term;
      }
    }
    below = std::move(current);
  }
  auto it = below.find((1u << s) - 1u);
  return it == below.end() ? Polynomial() : it->second;
}

Polynomial determinant(const PolyMatrix& m) {
  return minor(m, prefix(m.size()), prefix(m.size()));
}

IndexTuple complement(const IndexTuple& idx, int size) {
  std::vector<bool> taken(size + 1, false);
  for (int i : idx)
    if (i >= 1 && i <= size) taken[i] = true;
  IndexTuple out;
  for (int i = 1; i <= size; ++i)
    if (!taken[i]) out.push_back(i);
  return out;
}

IndexTuple prefix(int count) {
  IndexTuple out(count);
  for (int i = 0; i < count; ++i) out[i] = i + 1;
  return out;
}

IndexTuple parse_index_tuple(const std::string& text) {
  IndexTuple out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))))
      ++i;
    if (i == text.size()) break;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw std::invalid_argument("malformed index tuple \"" + text + "\"");
    out.push_back(std::stoi(text.substr(start, i - start)));
  }
  return out;
}

std::string index_tuple_to_string(const IndexTuple& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(idx[i]);
  }
  return s;
}

}  // namespace bruhat
