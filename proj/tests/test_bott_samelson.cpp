#include "doctest.h"

#include "bruhat/bott_samelson.hpp"
#include "bruhat/wiring.hpp"
#include "oracles.hpp"

using namespace bruhat;

namespace golden {

// n = 2 reference matrices, z written as z1.
const char* e0 = R"( 1&0&0&0&0&0\\
 0&-z1&0&1&0&0\\
 0&0&z1&0&1&0\\
 0&1&0&0&0&0\\
 0&0&1&0&0&0\\
 0&0&0&0&0&1)";
const char* e1 = R"( -z1&1&0&0&0&0\\
 1&0&0&0&0&0\\
 0&0&1&0&0&0\\
 0&0&0&1&0&0\\
 0&0&0&0&z1&1\\
 0&0&0&0&1&0)";
const char* e2 = R"( 1&0&0&0&0&0\\
 0&-z1&1&0&0&0\\
 0&1&0&0&0&0\\
 0&0&0&z1&1&0\\
 0&0&0&1&0&0\\
 0&0&0&0&0&1)";
const char* m012 = R"( -z2& -z3 & 1 & 0 & 0 & 0 \\
 -z1 & 0 & 0 & z3 & 1 & 0 \\
 0 & z1 & 0  & z2 & 0  & 1 \\
 1 & 0 & 0 & 0 & 0 & 0 \\
 0 & 1 & 0 & 0 & 0  & 0 \\
 0 & 0 & 0 & 1 & 0 & 0)";

}  // namespace golden

TEST_CASE("form J") {
  const PolyMatrix j = form_J(2);
  for (int r = 1; r <= 6; ++r)
    for (int c = 1; c <= 6; ++c) CHECK(j(r, c) == Polynomial(r + c == 7 ? 1 : 0));
  for (int n = 2; n <= 4; ++n) {
    CHECK(form_J(n) * form_J(n) == PolyMatrix::identity(2 * n + 2));
    CHECK(form_J(n).transpose() == form_J(n));
  }
}

TEST_CASE("factor matrices match the displayed n = 2 examples") {
  CHECK(factor_matrix(0, Variable::z(1), 2) == oracle::dense(6, golden::e0));
  CHECK(factor_matrix(1, Variable::z(1), 2) == oracle::dense(6, golden::e1));
  CHECK(factor_matrix(2, Variable::z(1), 2) == oracle::dense(6, golden::e2));
  CHECK_THROWS(factor_matrix(3, Variable::z(1), 2));
}

TEST_CASE("Bott-Samelson matrix of 012 matches the displayed example") {
  const PolyMatrix m = bott_samelson_matrix({0, 1, 2}, 2);
  CHECK(m == oracle::dense(6, golden::m012));
  CHECK(m(1, 1) == -zvar(2));
  CHECK(m(1, 2) == -zvar(3));
  CHECK(bott_samelson_matrix({}, 3) == PolyMatrix::identity(8));
}

TEST_CASE("single letters at z = 0 give the permutation matrices") {
  for (int n = 2; n <= 4; ++n)
    for (int a = 0; a <= n; ++a)
      CHECK(bott_samelson_matrix({a}, n).substitute(zero_substitution(1)) ==
            permutation_matrix(simple_reflection(a, n)));
}

TEST_CASE("group membership") {
  CHECK(check_group_membership(PolyMatrix::identity(6)));
  for (int n = 2; n <= 4; ++n) {
    for (int a = 0; a <= n; ++a) {
      CHECK(check_group_membership(factor_matrix(a, Variable::z(1), n)));
      CHECK(factor_matrix(a, zvar(1), n) * factor_inverse_matrix(a, zvar(1), n) ==
            PolyMatrix::identity(2 * n + 2));
    }
    for (int l = 1; l <= 2 * n; ++l)
      CHECK(check_group_membership(bott_samelson_matrix(distinguished_word(l, n), n)));
  }
  PolyMatrix bad = PolyMatrix::identity(6);
  bad(1, 2) = zvar(1);
  CHECK_FALSE(check_group_membership(bad));
  // Odd permutation, and it does not preserve J either.
  PolyMatrix swap = PolyMatrix::identity(6);
  swap(1, 1) = 0;
  swap(2, 2) = 0;
  swap(1, 2) = 1;
  swap(2, 1) = 1;
  CHECK_FALSE(check_group_membership(swap));
}

TEST_CASE("determinant against Leibniz") {
  for (int n = 2; n <= 3; ++n)
    for (int l = 1; l <= 2 * n; ++l) {
      const PolyMatrix m = bott_samelson_matrix(distinguished_word(l, n), n);
      CHECK(determinant(m) == 1);
      if (n == 2) CHECK(oracle::leibniz_det(m) == 1);
    }
}

TEST_CASE("inverse transpose") {
  CHECK(inverse_transpose_matrix({}, 2) == PolyMatrix::identity(6));
  const PolyMatrix m = bott_samelson_matrix({0, 1, 2}, 2);
  CHECK(m * inverse_transpose_matrix({0, 1, 2}, 2).transpose() == PolyMatrix::identity(6));
  for (int n = 2; n <= 3; ++n)
    for (int l = 1; l <= 2 * n; ++l) {
      const Word w = distinguished_word(l, n);
      CHECK(inverse_transpose_matrix(w, n) == matrix_of(inverse_diagram(flip(diagram_of_word(w, n)))));
    }
}

TEST_CASE("minors") {
  for (int n = 2; n <= 4; ++n) {
    const PolyMatrix m = bott_samelson_matrix(distinguished_word(1, n), n);
    CHECK(minor(m, {}, {}) == 1);
    CHECK(minor(m, {1}, {1}) == -zvar(n));
    CHECK(eq_up_to_sign(minor(m, {1}, {1}), zvar(n)));
  }
  const PolyMatrix m2 = bott_samelson_matrix(distinguished_word(1, 2), 2);
  CHECK(eq_up_to_sign(minor(m2, {1, 2}, {1, 2}), zvar(2) + zvar(1) * zvar(3)));
  CHECK_THROWS(minor(m2, {1, 2}, {1}));
  CHECK_THROWS(minor(m2, {2, 1}, {1, 2}));
  CHECK_THROWS(minor(m2, {7}, {1}));
  CHECK_THROWS(minor(m2, {0}, {1}));
}

TEST_CASE("minor transpose symmetry and Leibniz agreement") {
  const int n = 3;
  const PolyMatrix m = bott_samelson_matrix(distinguished_word(3, n), n);
  const PolyMatrix t = m.transpose();
  const std::vector<IndexTuple> tuples{{1}, {2, 5}, {1, 3, 8}, {2, 4, 6, 7}, {1, 2, 3, 4, 5}};
  for (const auto& r : tuples)
    for (const auto& c : tuples) {
      if (r.size() != c.size()) continue;
      CHECK(minor(m, r, c) == minor(t, c, r));
      CHECK(minor(m, r, c) == oracle::leibniz_minor(m, r, c));
    }
}

TEST_CASE("NW n x n minors of Q1 share the alpha = 0 factor") {
  for (int n = 2; n <= 3; ++n) {
    const PolyMatrix m = bott_samelson_matrix(distinguished_word(1, n), n);
    Polynomial g = zvar(n);
    for (int k = 1; k < n; ++k) g += zvar(n - k) * zvar(n + k);
    // every n-subset of rows and cols in the NW (n+1) x (n+1) block
    for (int skip_r = 1; skip_r <= n + 1; ++skip_r)
      for (int skip_c = 1; skip_c <= n + 1; ++skip_c) {
        IndexTuple r, c;
        for (int i = 1; i <= n + 1; ++i) {
          if (i != skip_r) r.push_back(i);
          if (i != skip_c) c.push_back(i);
        }
        CHECK(divide_exact(minor(m, r, c), g).has_value());
      }
  }
}

TEST_CASE("index tuple helpers") {
  CHECK(complement({2, 4}, 5) == IndexTuple{1, 3, 5});
  CHECK(complement({4, 2}, 5) == IndexTuple{1, 3, 5});
  CHECK(complement({}, 3) == IndexTuple{1, 2, 3});
  CHECK(prefix(3) == IndexTuple{1, 2, 3});
  CHECK(parse_index_tuple("1,3") == IndexTuple{1, 3});
  CHECK(parse_index_tuple("") == IndexTuple{});
  CHECK(index_tuple_to_string({1, 3}) == "1,3");
  CHECK_THROWS(parse_index_tuple("1,x"));
}
