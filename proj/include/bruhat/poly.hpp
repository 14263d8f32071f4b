#pragma once

// Sparse multivariate polynomials over the integers.
//
// Variables come in three families: z (Bott-Samelson coordinates),
// u (affine chart coordinates) and x (projective coordinates).  Terms are
// kept in canonical form: sorted by decreasing graded-lex order, no zero
// coefficients, no zero exponents.  Two polynomials are equal iff their term
// vectors are identical.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bruhat {

using Integer = boost::multiprecision::cpp_int;

enum class Family : std::uint8_t { Z = 0, U = 1, X = 2 };

char family_letter(Family f);

struct Variable {
  Family family = Family::Z;
  std::uint16_t index = 1;

  static Variable z(int i);
  static Variable u(int i);
  static Variable x(int i);

  // Z < U < X, then by index.
  friend constexpr auto operator<=>(const Variable&, const Variable&) = default;

  std::string to_string() const;
};

class Polynomial;

// Bound-checked variable factory for a fixed rank n:
// z_1..z_{2n-1}, u_1..u_{2n}, x_1..x_{2n}.
class PolynomialRing {
 public:
  explicit PolynomialRing(int n);

  int rank() const { return n_; }
  Variable var(Family f, int index) const;
  bool contains(const Variable& v) const;
  bool contains(const Polynomial& p) const;

 private:
  int n_;
};

class Monomial {
 public:
  using Factor = std::pair<Variable, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(Variable v, std::uint32_t exponent = 1);
  // Factors may be unsorted and may repeat; zero exponents are dropped.
  explicit Monomial(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(const Variable& v) const;
  bool is_one() const { return factors_.empty(); }

  bool divides(const Monomial& other) const;
  // Precondition: divides(other).
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }
  // Graded lex: total degree first, then the exponent of the largest
  // variable decides.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;  // sorted by variable, exponents > 0
  std::uint32_t degree_ = 0;
};

struct Term {
  Monomial monomial;
  Integer coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

class MissingVariableError : public std::invalid_argument {
 public:
  explicit MissingVariableError(const Variable& v);
  Variable variable;
};

class DivisionByZeroError : public std::domain_error {
 public:
  DivisionByZeroError() : std::domain_error("division by the zero polynomial") {}
};

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long long c);  // NOLINT: integer constants convert implicitly
  explicit Polynomial(Integer c);
  explicit Polynomial(Variable v);
  Polynomial(Monomial m, Integer c);
  // Arbitrary order, duplicates are combined.
  static Polynomial from_terms(std::vector<Term> terms);
  // Parses the textual form produced by to_string, e.g. "z3*z5 - z4 + 1",
  // also accepting "^" exponents.  Throws std::invalid_argument.
  static Polynomial parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Requires !is_zero().
  std::uint32_t degree() const;
  const Term& leading_term() const;
  Integer constant_term() const;
  std::vector<Variable> variables() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(unsigned e) const;

  // Leading coefficient made positive.
  Polynomial sign_normalized() const;

  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<Term> terms_;  // strictly decreasing monomial order
};

using Substitution = std::map<Variable, Polynomial>;

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

// Simultaneous substitution. Throws MissingVariableError when a variable of p
// has no image.
Polynomial substitute(const Polynomial& p, const Substitution& map);

// q with p = g*q, if it exists.  Throws DivisionByZeroError for g = 0.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& g);

bool eq_up_to_sign(const Polynomial& p, const Polynomial& q);

// +1 if p == q, -1 if p == -q (and p != 0), 0 otherwise.
int sign_relation(const Polynomial& p, const Polynomial& q);

inline Polynomial zvar(int i) { return Polynomial(Variable::z(i)); }
inline Polynomial uvar(int i) { return Polynomial(Variable::u(i)); }
inline Polynomial xvar(int i) { return Polynomial(Variable::x(i)); }

}  // namespace bruhat
