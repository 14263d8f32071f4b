#pragma once

// Essential sets and matrix-Schubert ideal generators (Fulton), pulled back
// through Bott-Samelson matrices.

#include "bruhat/poly_matrix.hpp"
#include "bruhat/weyl.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace bruhat {

// A k x k permutation matrix with its 1 in row i at column pi(i).
class PermutationMatrixView {
 public:
  explicit PermutationMatrixView(std::vector<int> one_line);
  static PermutationMatrixView of(const SignedPermutation& w);

  int size() const { return static_cast<int>(pi_.size()); }
  int operator()(int i) const { return pi_[i - 1]; }
  int inverse(int j) const { return inv_[j - 1]; }

  // Number of 1's weakly northwest of (i, j).
  int rank_nw(int i, int j) const;

 private:
  std::vector<int> pi_, inv_;
};

struct EssentialCell {
  int row;
  int col;
  int rank;  // m(i, j)

  friend bool operator==(const EssentialCell&, const EssentialCell&) = default;
};

// Cells (i, j) in [1, k-1]^2 with pi(i) > j, pi^-1(j) > i, pi(i+1) <= j and
// pi^-1(j+1) <= i, in row-major order.
std::vector<EssentialCell> essential_set(const PermutationMatrixView& pi);

// For each essential cell, every (m+1)x(m+1) minor of the northwest i x j
// submatrix of M, concatenated in cell order then lexicographic order.
std::vector<Polynomial> fulton_generators(const PermutationMatrixView& pi, const PolyMatrix& m);

// A generator g that divides all the others (up to sign), normalized to a
// positive leading coefficient; 1 if any generator is a nonzero constant.
// Throws std::invalid_argument if the list is empty or all zero.
std::optional<Polynomial> find_principal_generator(const std::vector<Polynomial>& gens);

class NonReducedWordError : public std::invalid_argument {
 public:
  explicit NonReducedWordError(const Word& w);
};

struct PullbackIdeal {
  Word word;
  int alpha = 0;
  std::vector<EssentialCell> cells;
  std::vector<Polynomial> generators;
  std::optional<Polynomial> principal_generator;
};

// Fulton generators of r_alpha pulled back through M_word.  Throws
// NonReducedWordError for non-reduced words.
PullbackIdeal pullback_ideal(const Word& word, int alpha, int n);

// Variant reusing an already computed M_word.
PullbackIdeal pullback_ideal(const Word& word, const PolyMatrix& m, int alpha, int n);

}  // namespace bruhat
