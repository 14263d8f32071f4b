#include "bruhat/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bruhat {

char family_letter(Family f) {
  switch (f) {
    case Family::Z: return 'z';
    case Family::U: return 'u';
    case Family::X: return 'x';
  }
  return '?';
}

namespace {

Variable make_var(Family f, int i) {
  if (i < 1 || i > 0xFFFF)
    throw std::out_of_range("variable index must be in [1, 65535], got " + std::to_string(i));
  return Variable{f, static_cast<std::uint16_t>(i)};
}

}  // namespace

Variable Variable::z(int i) { return make_var(Family::Z, i); }
Variable Variable::u(int i) { return make_var(Family::U, i); }
Variable Variable::x(int i) { return make_var(Family::X, i); }

std::string Variable::to_string() const {
  return family_letter(family) + std::to_string(index);
}

PolynomialRing::PolynomialRing(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("rank n must be at least 2");
}

bool PolynomialRing::contains(const Variable& v) const {
  const int bound = v.family == Family::Z ? 2 * n_ - 1 : 2 * n_;
  return v.index >= 1 && v.index <= bound;
}

Variable PolynomialRing::var(Family f, int index) const {
  Variable v = make_var(f, index);
  if (!contains(v))
    throw std::out_of_range("variable " + v.to_string() + " out of range for n = " +
                            std::to_string(n_));
  return v;
}

bool PolynomialRing::contains(const Polynomial& p) const {
  for (const auto& v : p.variables())
    if (!contains(v)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Variable v, std::uint32_t exponent) {
  if (exponent > 0) {
    factors_.emplace_back(v, exponent);
    degree_ = exponent;
  }
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v)
      factors_.back().second += e;
    else
      factors_.emplace_back(v, e);
    degree_ += e;
  }
}

std::uint32_t Monomial::exponent(const Variable& v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const Variable& w) { return f.first < w; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  auto it = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != other.factors_.end() && it->first < v) ++it;
    if (it == other.factors_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q;
  auto it = factors_.begin();
  for (const auto& [v, e] : other.factors_) {
    std::uint32_t sub = 0;
    if (it != factors_.end() && it->first == v) {
      sub = it->second;
      ++it;
    }
    if (e > sub) {
      q.factors_.emplace_back(v, e - sub);
      q.degree_ += e - sub;
    }
  }
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      m.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  auto i = a.factors_.rbegin();
  auto j = b.factors_.rbegin();
  while (i != a.factors_.rend() && j != b.factors_.rend()) {
    if (i->first != j->first) return i->first > j->first ? std::strong_ordering::greater
                                                         : std::strong_ordering::less;
    if (i->second != j->second) return i->second <=> j->second;
    ++i;
    ++j;
  }
  // Equal degree and equal common suffix means both ran out together.
  if (i != a.factors_.rend()) return std::strong_ordering::greater;
  if (j != b.factors_.rend()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += '*';
    s += v.to_string();
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Polynomial

MissingVariableError::MissingVariableError(const Variable& v)
    : std::invalid_argument("substitution has no image for " + v.to_string()), variable(v) {}

Polynomial::Polynomial(long long c) : Polynomial(Integer(c)) {}

Polynomial::Polynomial(Integer c) {
  if (c != 0) terms_.push_back(Term{Monomial{}, std::move(c)});
}

Polynomial::Polynomial(Variable v) { terms_.push_back(Term{Monomial(v), Integer(1)}); }

Polynomial::Polynomial(Monomial m, Integer c) {
  if (c != 0) terms_.push_back(Term{std::move(m), std::move(c)});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void Polynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().monomial == t.monomial)
      out.back().coefficient += t.coefficient;
    else
      out.push_back(std::move(t));
  }
  // Zeros are dropped only after all duplicates have been merged.
  std::erase_if(out, [](const Term& t) { return t.coefficient == 0; });
  terms_ = std::move(out);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

std::uint32_t Polynomial::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial is undefined");
  return terms_.front().monomial.degree();
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.front();
}

Integer Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return 0;
}

std::vector<Variable> Polynomial::variables() const {
  std::vector<Variable> vs;
  for (const auto& t : terms_)
    for (const auto& [v, e] : t.monomial.factors()) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

namespace {

// Merge two canonical term lists, sign = +1 or -1 applied to q.
std::vector<Term> merge_terms(const std::vector<Term>& p, const std::vector<Term>& q, int sign) {
  std::vector<Term> out;
  out.reserve(p.size() + q.size());
  auto i = p.begin();
  auto j = q.begin();
  while (i != p.end() || j != q.end()) {
    if (j == q.end() || (i != p.end() && i->monomial > j->monomial)) {
      out.push_back(*i++);
    } else if (i == p.end() || j->monomial > i->monomial) {
      out.push_back(Term{j->monomial, sign > 0 ? j->coefficient : Integer(-j->coefficient)});
      ++j;
    } else {
      Integer c = sign > 0 ? Integer(i->coefficient + j->coefficient) : Integer(i->coefficient - j->coefficient);
      if (c != 0) out.push_back(Term{i->monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  terms_ = merge_terms(terms_, q.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  terms_ = merge_terms(terms_, q.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Term> prod;
  prod.reserve(p.terms_.size() * q.terms_.size());
  for (const auto& a : p.terms_)
    for (const auto& b : q.terms_)
      prod.push_back(Term{a.monomial * b.monomial, a.coefficient * b.coefficient});
  return Polynomial::from_terms(std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& q) { return *this = *this * q; }

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::sign_normalized() const {
  if (!terms_.empty() && terms_.front().coefficient < 0) return -*this;
  return *this;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Integer c = t.coefficient;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    if (t.monomial.is_one()) {
      s += c.str();
    } else {
      if (c != 1) s += c.str() + "*";
      s += t.monomial.to_string();
    }
  }
  return s;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial text");
    std::vector<Term> terms;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      terms.push_back(parse_term(sign));
    }
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  Term parse_term(int sign) {
    Integer coeff = sign;
    std::vector<Monomial::Factor> factors;
    bool need_factor = true;
    while (need_factor) {
      skip_ws();
      if (pos_ == s_.size()) fail("unexpected end of input");
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= Integer(read_digits());
      } else if (c == 'z' || c == 'u' || c == 'x') {
        ++pos_;
        std::string idx = read_digits();
        Variable v = c == 'z' ? Variable::z(std::stoi(idx))
                     : c == 'u' ? Variable::u(std::stoi(idx))
                                : Variable::x(std::stoi(idx));
        std::uint32_t e = 1;
        skip_ws();
        if (pos_ < s_.size() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = static_cast<std::uint32_t>(std::stoul(read_digits()));
        }
        factors.emplace_back(v, e);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      need_factor = pos_ < s_.size() && peek() == '*';
      if (need_factor) ++pos_;
    }
    return Term{Monomial(std::move(factors)), std::move(coeff)};
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial \"" + std::string(s_) + "\" at offset " +
                                std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) {
  try {
    return Parser(text).parse();
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(e.what());
  }
}

// ---------------------------------------------------------------------------
// Free functions

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial substitute(const Polynomial& p, const Substitution& map) {
  // Powers are cached per variable since exponents repeat across terms.
  std::map<std::pair<Variable, std::uint32_t>, Polynomial> powers;
  auto power_of = [&](const Variable& v, std::uint32_t e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto img = map.find(v);
    if (img == map.end()) throw MissingVariableError(v);
    return powers.emplace(key, img->second.pow(e)).first->second;
  };

  Polynomial result;
  for (const auto& t : p.terms()) {
    Polynomial term(t.coefficient);
    for (const auto& [v, e] : t.monomial.factors()) {
      term *= power_of(v, e);
      if (term.is_zero()) break;
    }
    result += term;
  }
  return result;
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& g) {
  if (g.is_zero()) throw DivisionByZeroError();
  const Term& lead = g.leading_term();
  Polynomial remainder = p;
  std::vector<Term> quotient;
  while (!remainder.is_zero()) {
    const Term& r = remainder.leading_term();
    if (!lead.monomial.divides(r.monomial)) return std::nullopt;
    Integer q, rem;
    boost::multiprecision::divide_qr(r.coefficient, lead.coefficient, q, rem);
    if (rem != 0) return std::nullopt;
    Polynomial step(lead.monomial.quotient_of(r.monomial), q);
    quotient.push_back(step.leading_term());
    remainder -= step * g;
  }
  return Polynomial::from_terms(std::move(quotient));
}

int sign_relation(const Polynomial& p, const Polynomial& q) {
  if (p == q) return 1;
  if (p == -q) return -1;
  return 0;
}

bool eq_up_to_sign(const Polynomial& p, const Polynomial& q) { return sign_relation(p, q) != 0; }

}  // namespace bruhat
