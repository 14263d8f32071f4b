#pragma once

// Matrix realization of SO(2n+2): matrices preserving the antidiagonal form J,
// the factors e_a(z) r_a, and Bott-Samelson products over words.

#include "bruhat/poly_matrix.hpp"
#include "bruhat/weyl.hpp"

namespace bruhat {

PolyMatrix form_J(int n);

// e_a(z) r_a as a (2n+2)x(2n+2) matrix.
//   1 <= a <= n: identity with (-z 1; 1 0) at rows/cols a, a+1 and
//                (z 1; 1 0) at rows/cols 2n+2-a, 2n+3-a.
//   a = 0:       identity with the central block
//                (-z 0 1 0; 0 z 0 1; 1 0 0 0; 0 1 0 0) at rows/cols n..n+3.
PolyMatrix factor_matrix(int alpha, const Polynomial& z, int n);
PolyMatrix factor_matrix(int alpha, Variable z, int n);

// Inverse of factor_matrix, using (x 1; 1 0)^-1 = (0 1; 1 -x) blockwise and
// the matching 4x4 inverse for a = 0.
PolyMatrix factor_inverse_matrix(int alpha, const Polynomial& z, int n);

// Permutation matrix of a Weyl group element (column row(j) has its 1 in row
// row(w(j))).
PolyMatrix permutation_matrix(const SignedPermutation& w);

// M_Q = prod_i e_{a_i}(z_i) r_{a_i}, with z_i attached to the i-th letter.
PolyMatrix bott_samelson_matrix(const Word& word, int n);

// M_Q^{-T}, built as the transpose of the reversed product of factor inverses.
PolyMatrix inverse_transpose_matrix(const Word& word, int n);

// M^T J M == J and det M == 1, both as polynomial identities.
bool check_group_membership(const PolyMatrix& m);

// Substitution z_i -> 0 for i = 1..count.
Substitution zero_substitution(int count);

}  // namespace bruhat
