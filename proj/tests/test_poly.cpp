#include "doctest.h"

#include "bruhat/poly.hpp"

using namespace bruhat;

namespace {

Polynomial f(int i) {
  Polynomial s;
  for (int j = 1; j <= i; ++j) s += xvar(2 * j - 1) * xvar(2 * j);
  return s;
}

}  // namespace

TEST_CASE("addition") {
  CHECK((zvar(1) + (-zvar(1))).is_zero());
  const int n = 3;
  const Polynomial s = zvar(n) + zvar(n - 1) * zvar(n + 1);
  CHECK(s.size() == 2);
  CHECK(s == Polynomial::parse("z2*z4 + z3"));
  CHECK(add(f(2), xvar(1) * xvar(2)) == Polynomial::parse("2*x1*x2 + x3*x4"));
}

TEST_CASE("multiplication") {
  const Polynomial p = Polynomial::parse("z1*z3 - 4*z2 + 7");
  CHECK(mul(Polynomial(1), p) == p);
  CHECK(mul(zvar(1) + zvar(2), zvar(1) - zvar(2)) == zvar(1).pow(2) - zvar(2).pow(2));
  CHECK(mul(xvar(1), xvar(2)) == f(2) - xvar(3) * xvar(4));
  CHECK((p * Polynomial(0)).is_zero());
}

TEST_CASE("canonical form and ordering") {
  const Polynomial a = zvar(3) * zvar(5) - zvar(4) + 1;
  CHECK(a.to_string() == "z3*z5 - z4 + 1");
  const Polynomial b = Polynomial(1) + (-zvar(4)) + zvar(5) * zvar(3);
  CHECK(a == b);
  CHECK(a.terms() == b.terms());
  CHECK(Polynomial::parse(a.to_string()) == a);
  CHECK(Polynomial::parse("z1^3*u2 - x4^2").to_string() == "z1^3*u2 - x4^2");
  // Z < U < X inside a degree.
  CHECK((zvar(1) + uvar(1) + xvar(1)).to_string() == "x1 + u1 + z1");
  CHECK((zvar(9) + zvar(1) * zvar(1)).to_string() == "z1^2 + z9");
  CHECK(Polynomial().to_string() == "0");
  CHECK(Polynomial(-3).to_string() == "-3");
  CHECK(Polynomial::parse("-2*u3 + 2*u3").is_zero());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(Polynomial::parse("z"), std::invalid_argument);
  CHECK_THROWS_AS(Polynomial::parse("z1 +"), std::invalid_argument);
  CHECK_THROWS_AS(Polynomial::parse("w1"), std::invalid_argument);
  CHECK_THROWS_AS(Polynomial::parse("z0"), std::invalid_argument);
}

TEST_CASE("degree and leading term") {
  CHECK_THROWS(Polynomial().degree());
  const Polynomial p = Polynomial::parse("z1*z2 + 3*z5 - 2");
  CHECK(p.degree() == 2);
  CHECK(p.leading_term().coefficient == 1);
  CHECK(p.constant_term() == -2);
  CHECK((-p).sign_normalized() == p);
  CHECK(p.variables().size() == 3);
}

TEST_CASE("big coefficients stay exact") {
  Polynomial p = Polynomial(2) * zvar(1) + 1;
  const Polynomial q = p.pow(80);
  CHECK(q.constant_term() == 1);
  CHECK(q.leading_term().coefficient == Integer(1) << 80);
}

TEST_CASE("substitute") {
  for (int n = 2; n <= 5; ++n) {
    Polynomial image = uvar(2);
    for (int i = 1; i <= n - 1; ++i) image += uvar(2 * i + 1) * uvar(2 * i + 2);
    CHECK(substitute(zvar(n), {{Variable::z(n), image}}) == image);
  }
  const Polynomial p = Polynomial::parse("z1*z3 - z2 + 5");
  Substitution id;
  for (auto v : p.variables()) id[v] = Polynomial(v);
  CHECK(substitute(p, id) == p);
  CHECK(substitute(zvar(1) * zvar(3), {{Variable::z(1), 0}, {Variable::z(3), uvar(1)}}).is_zero());
  CHECK_THROWS_AS(substitute(p, {{Variable::z(1), 0}}), MissingVariableError);
  CHECK(substitute(Polynomial(4), {}) == Polynomial(4));
}

TEST_CASE("divide_exact") {
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i <= n; ++i) {
      const Polynomial g = zvar(n + i - 1);
      auto q = divide_exact(g * (zvar(1) + 1), g);
      REQUIRE(q);
      CHECK(*q == zvar(1) + 1);
    }
  CHECK_FALSE(divide_exact(zvar(1) + 1, zvar(2)));
  CHECK_THROWS_AS(divide_exact(zvar(1), Polynomial()), DivisionByZeroError);
  CHECK(divide_exact(Polynomial(), zvar(2)) == Polynomial());
  CHECK(divide_exact(Polynomial(6), Polynomial(3)) == Polynomial(2));
  CHECK_FALSE(divide_exact(Polynomial(5), Polynomial(3)));
  const Polynomial g = Polynomial::parse("z2 + z1*z3");
  const Polynomial h = Polynomial::parse("z1 - 2*z3 + 4");
  CHECK(divide_exact(g * h, h) == g);
  CHECK_FALSE(divide_exact(g * h + 1, h));
}

TEST_CASE("sign relations") {
  CHECK(eq_up_to_sign(zvar(3), -zvar(3)));
  CHECK_FALSE(eq_up_to_sign(zvar(3), zvar(3) + 1));
  CHECK(sign_relation(zvar(2), zvar(2)) == 1);
  CHECK(sign_relation(zvar(2), -zvar(2)) == -1);
  CHECK(sign_relation(zvar(2), zvar(1)) == 0);
  CHECK(sign_relation(Polynomial(), Polynomial()) == 1);
}

TEST_CASE("polynomial ring bounds") {
  PolynomialRing r(3);
  CHECK(r.contains(Variable::z(5)));
  CHECK_FALSE(r.contains(Variable::z(6)));
  CHECK(r.contains(Variable::u(6)));
  CHECK_FALSE(r.contains(Variable::x(7)));
  CHECK_THROWS(r.var(Family::Z, 6));
  CHECK_THROWS(r.var(Family::U, 0));
  CHECK(r.contains(Polynomial::parse("z5*u6 + x1")));
  CHECK_FALSE(r.contains(Polynomial::parse("z6")));
}
