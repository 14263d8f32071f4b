#pragma once

// Type D_{n+1} Weyl group as signed permutations of {±1, ..., ±(n+1)}.
//
// Dynkin labeling: a chain 1 - 2 - ... - (n-1) with the two fork nodes 0 and n
// both attached to n-1.  Generator s_a for 1 <= a <= n swaps the letters a and
// a+1; s_0 sends n -> -(n+1) and n+1 -> -n.
//
// Letters map to rows of the (2n+2)x(2n+2) realization: letter i -> row i,
// letter -i -> row 2n+3-i.

#include <string>
#include <string_view>
#include <vector>

namespace bruhat {

// Node labels 0..n.  Words need not be reduced.
using Word = std::vector<int>;

std::string word_to_string(const Word& w);  // "0,1,0"
// Accepts comma and/or whitespace separators.  Throws std::invalid_argument.
Word parse_word(std::string_view text);

void check_rank(int n);
void check_label(int alpha, int n);

class SignedPermutation {
 public:
  static SignedPermutation identity(int n);
  // Validates that |window| is a permutation of 1..n+1 with an even number of
  // negative entries.
  static SignedPermutation from_window(std::vector<int> window);

  int rank() const { return static_cast<int>(window_.size()) - 1; }
  int letters() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }

  // Image of a signed letter.
  int operator()(int letter) const;

  // (a*b)(i) = a(b(i)), so matrix(a*b) = matrix(a)*matrix(b).
  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

  std::string to_string() const;

 private:
  explicit SignedPermutation(std::vector<int> w) : window_(std::move(w)) {}
  std::vector<int> window_;
};

SignedPermutation simple_reflection(int alpha, int n);
SignedPermutation product(const Word& word, int n);
SignedPermutation inverse(const SignedPermutation& w);
int length(const SignedPermutation& w);
bool is_reduced(const Word& word, int n);

// Matrix row (1-based) of a signed letter for rank n.
int letter_row(int letter, int n);

// One-line form pi of the (2n+2)x(2n+2) permutation matrix: the 1 in row r
// sits in column pi[r-1].
std::vector<int> permutation_matrix_one_line(const SignedPermutation& w);

// Dynkin adjacency under the labeling above.
bool dynkin_adjacent(int a, int b, int n);

// The 2n distinguished reduced words, l = 1..2n.
Word distinguished_word(int l, int n);

}  // namespace bruhat
