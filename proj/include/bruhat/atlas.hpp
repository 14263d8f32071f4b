#pragma once

// The projective-space side of the atlas: divisor polynomials, affine chart
// coordinates, chart maps into Bott-Samelson coordinates, closed-form divisor
// equations, and the end-to-end chart verification.
//
// Projective coordinates x_1..x_{2n}; divisors f_1 = x_1, f_1' = x_2 and
// f_i = x_1 x_2 + ... + x_{2i-1} x_{2i} for 2 <= i <= n.  Chart U_l is
// {x_l != 0} with affine coordinates u_j = x_j / x_l (j != l).

#include "bruhat/fulton.hpp"
#include "bruhat/poly.hpp"
#include "bruhat/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bruhat {

class DivisorIndex {
 public:
  static DivisorIndex one_prime() { return DivisorIndex(0); }
  // 1..n
  static DivisorIndex plain(int i);
  // "1", "1'", "2", ...
  static DivisorIndex parse(const std::string& s);
  // 1, 1', 2, ..., n
  static std::vector<DivisorIndex> all(int n);

  bool is_one_prime() const { return value_ == 0; }
  int value() const { return value_; }
  bool valid_for(int n) const { return value_ >= 0 && value_ <= n; }
  std::string to_string() const;

  // Order 1 < 1' < 2 < ... < n.
  friend bool operator<(const DivisorIndex& a, const DivisorIndex& b) { return a.key() < b.key(); }
  friend bool operator==(const DivisorIndex&, const DivisorIndex&) = default;

 private:
  explicit DivisorIndex(int v) : value_(v) {}
  int key() const { return value_ == 0 ? 2 : (value_ == 1 ? 1 : 2 * value_); }
  int value_;  // 0 encodes 1'
};

Polynomial divisor_polynomial(DivisorIndex i, int n);

// f_i with x_l := 1 and x_j := u_j for j != l.
Polynomial divisor_restriction(DivisorIndex i, int l, int n);

// Chart map c_l: each z_j (j = 1..2n-1) as a polynomial in the chart
// coordinates u.
class ChartMap {
 public:
  int chart() const { return l_; }
  int rank() const { return n_; }
  const std::vector<Polynomial>& images() const { return images_; }
  const Polynomial& image(int j) const { return images_.at(j - 1); }
  Substitution as_substitution() const;

  // Inverse assignment u_k -> polynomial in z, for the 2n-1 chart coordinates.
  // Throws std::logic_error if the map is not of the expected triangular shape.
  Substitution inverse() const;
  // Both compositions with inverse() are the identity.
  bool is_coordinate_change() const;

 private:
  friend ChartMap chart_map(int l, int n);
  ChartMap(int l, int n, std::vector<Polynomial> images)
      : l_(l), n_(n), images_(std::move(images)) {}
  int l_, n_;
  std::vector<Polynomial> images_;
};

ChartMap chart_map(int l, int n);

// Chart coordinates u_j, j != l.
std::vector<Variable> chart_coordinates(int l, int n);

enum class WordPattern { Q1, Q2, QOdd, QEven };

// Pattern of chart l's word; QOdd/QEven carry i = (l+1)/2 or l/2.
WordPattern pattern_of_chart(int l);

// Closed-form generator for X_{r_alpha} on the cell of Q_1, Q_2 or Q_{2i-1}
// (i = 2..n, chart indexing).  Throws std::invalid_argument for QEven, which
// has no closed form.
Polynomial closed_form_generator(WordPattern pattern, int alpha, int n, int i = 0);

struct DivisorMatch {
  std::vector<DivisorIndex> divisors;  // sorted, possibly empty (unit)
  int sign = 1;                        // p = sign * product
};

// Smallest set S of divisors with p = +- prod_{i in S} f_i|_{U_l}.
std::optional<DivisorMatch> match_divisor_product(const Polynomial& p, int l, int n);

struct AlphaRow {
  int alpha = 0;
  std::optional<Polynomial> generator;      // principal generator in z
  std::optional<bool> closed_form_match;    // absent for reversed words
  std::optional<bool> reversed_form_match;  // reversed words: vs. reindexed odd-chart form
  std::optional<Polynomial> pullback;       // generator under c_l, in u
  std::optional<DivisorMatch> divisors;
  std::size_t generator_count = 0;
  std::vector<EssentialCell> cells;

  bool passes() const;
};

struct ChartReport {
  int chart = 0;
  int rank = 0;
  Word word;
  bool reduced = false;
  int length = 0;
  std::vector<AlphaRow> rows;
  bool coverage = false;
  bool coordinate_change = false;
  bool origin_fixed = false;  // c_l(0) = 0
  std::vector<std::string> failures;

  bool passes() const;
};

struct AtlasReport {
  int rank = 0;
  std::vector<ChartReport> charts;
  bool inverse_pairs = false;    // w_{2i} = w_{2i-1}^{-1}
  bool distinct_cells = false;   // the 2n Weyl elements are distinct
  std::vector<std::string> failures;
  bool pass = false;
};

ChartReport verify_chart(int l, int n);

// threads <= 1 runs serially.
AtlasReport verify_atlas(int n, unsigned threads = 1);

}  // namespace bruhat
