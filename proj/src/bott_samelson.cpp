#include "bruhat/bott_samelson.hpp"

#include <stdexcept>

namespace bruhat {

PolyMatrix form_J(int n) {
  check_rank(n);
  const int k = 2 * n + 2;
  PolyMatrix j(k);
  for (int i = 1; i <= k; ++i) j(i, k + 1 - i) = Polynomial(1);
  return j;
}

namespace {

// Writes a 2x2 block (a b; c d) with top-left corner at (r, r).
void put2(PolyMatrix& m, int r, Polynomial a, Polynomial b, Polynomial c, Polynomial d) {
  m(r, r) = std::move(a);
  m(r, r + 1) = std::move(b);
  m(r + 1, r) = std::move(c);
  m(r + 1, r + 1) = std::move(d);
}

}  // namespace

PolyMatrix factor_matrix(int alpha, const Polynomial& z, int n) {
  check_rank(n);
  check_label(alpha, n);
  const int k = 2 * n + 2;
  PolyMatrix m = PolyMatrix::identity(k);
  if (alpha == 0) {
    const int c = n;
    for (int i = c; i < c + 4; ++i) m(i, i) = Polynomial();
    m(c, c) = -z;
    m(c + 1, c + 1) = z;
    m(c, c + 2) = m(c + 1, c + 3) = m(c + 2, c) = m(c + 3, c + 1) = Polynomial(1);
  } else {
    put2(m, alpha, -z, 1, 1, 0);
    put2(m, k - alpha, z, 1, 1, 0);
  }
  return m;
}

PolyMatrix factor_matrix(int alpha, Variable z, int n) {
  return factor_matrix(alpha, Polynomial(z), n);
}

PolyMatrix factor_inverse_matrix(int alpha, const Polynomial& z, int n) {
  check_rank(n);
  check_label(alpha, n);
  const int k = 2 * n + 2;
  PolyMatrix m = PolyMatrix::identity(k);
  if (alpha == 0) {
    const int c = n;
    for (int i = c; i < c + 4; ++i) m(i, i) = Polynomial();
    m(c, c + 2) = m(c + 1, c + 3) = m(c + 2, c) = m(c + 3, c + 1) = Polynomial(1);
    m(c + 2, c + 2) = z;
    m(c + 3, c + 3) = -z;
  } else {
    put2(m, alpha, 0, 1, 1, z);
    put2(m, k - alpha, 0, 1, 1, -z);
  }
  return m;
}

PolyMatrix permutation_matrix(const SignedPermutation& w) {
  const int k = 2 * w.rank() + 2;
  const auto pi = permutation_matrix_one_line(w);
  PolyMatrix m(k);
  for (int r = 1; r <= k; ++r) m(r, pi[r - 1]) = Polynomial(1);
  return m;
}

PolyMatrix bott_samelson_matrix(const Word& word, int n) {
  check_rank(n);
  PolyMatrix m = PolyMatrix::identity(2 * n + 2);
  for (std::size_t i = 0; i < word.size(); ++i)
    m = m * factor_matrix(word[i], Variable::z(static_cast<int>(i) + 1), n);
  return m;
}

PolyMatrix inverse_transpose_matrix(const Word& word, int n) {
  check_rank(n);
  PolyMatrix inv = PolyMatrix::identity(2 * n + 2);
  for (std::size_t i = word.size(); i-- > 0;)
    inv = inv * factor_inverse_matrix(word[i], zvar(static_cast<int>(i) + 1), n);
  return inv.transpose();
}

bool check_group_membership(const PolyMatrix& m) {
  const int k = m.size();
  if (k < 6 || k % 2) return false;
  const PolyMatrix j = form_J(k / 2 - 1);
  if (m.transpose() * j * m != j) return false;
  return determinant(m) == Polynomial(1);
}

Substitution zero_substitution(int count) {
  Substitution s;
  for (int i = 1; i <= count; ++i) s.emplace(Variable::z(i), Polynomial());
  return s;
}

}  // namespace bruhat
