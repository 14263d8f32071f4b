#include "bruhat/atlas.hpp"

#include "bruhat/bott_samelson.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <set>
#include <stdexcept>

namespace bruhat {

namespace {

void check_chart(int l, int n) {
  check_rank(n);
  if (l < 1 || l > 2 * n)
    throw std::out_of_range("chart index " + std::to_string(l) + " outside [1, " +
                            std::to_string(2 * n) + "]");
}

void check_divisor(DivisorIndex i, int n) {
  if (!i.valid_for(n))
    throw std::out_of_range("divisor index " + i.to_string() + " invalid for n = " +
                            std::to_string(n));
}

}  // namespace

// ---------------------------------------------------------------------------
// Divisors

DivisorIndex DivisorIndex::plain(int i) {
  if (i < 1) throw std::out_of_range("divisor index must be positive");
  return DivisorIndex(i);
}

DivisorIndex DivisorIndex::parse(const std::string& s) {
  if (s == "1'") return one_prime();
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size() && v >= 1) return DivisorIndex(v);
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("malformed divisor index \"" + s + "\"");
}

std::vector<DivisorIndex> DivisorIndex::all(int n) {
  std::vector<DivisorIndex> out{plain(1), one_prime()};
  for (int i = 2; i <= n; ++i) out.push_back(plain(i));
  return out;
}

std::string DivisorIndex::to_string() const {
  return value_ == 0 ? std::string("1'") : std::to_string(value_);
}

Polynomial divisor_polynomial(DivisorIndex i, int n) {
  check_rank(n);
  check_divisor(i, n);
  if (i.is_one_prime()) return xvar(2);
  if (i.value() == 1) return xvar(1);
  Polynomial f;
  for (int j = 1; j <= i.value(); ++j) f += xvar(2 * j - 1) * xvar(2 * j);
  return f;
}

namespace {

Substitution chart_restriction(int l, int n) {
  Substitution s;
  for (int j = 1; j <= 2 * n; ++j) s.emplace(Variable::x(j), j == l ? Polynomial(1) : uvar(j));
  return s;
}

}  // namespace

Polynomial divisor_restriction(DivisorIndex i, int l, int n) {
  check_chart(l, n);
  return substitute(divisor_polynomial(i, n), chart_restriction(l, n));
}

// ---------------------------------------------------------------------------
// Chart maps

std::vector<Variable> chart_coordinates(int l, int n) {
  check_chart(l, n);
  std::vector<Variable> out;
  for (int j = 1; j <= 2 * n; ++j)
    if (j != l) out.push_back(Variable::u(j));
  return out;
}

namespace {

// u_lead + sum over j in [1, upto], j != skip, of u_{2j-1} u_{2j}.
Polynomial quadric(int lead, int upto, int skip) {
  Polynomial q = uvar(lead);
  for (int j = 1; j <= upto; ++j)
    if (j != skip) q += uvar(2 * j - 1) * uvar(2 * j);
  return q;
}

std::vector<Polynomial> odd_chart_images(int i, int n) {
  std::vector<Polynomial> z(2 * n - 1);
  for (int j = 1; j <= 2 * n - 1; ++j) {
    Polynomial& img = z[j - 1];
    if (j <= n - i)
      img = uvar(2 * i + 2 * j - 1);
    else if (j == n - i + 1)
      img = quadric(2 * i, n, i);
    else if (j <= 2 * n - 2 * i + 1)
      img = -uvar(4 * n - 2 * i + 4 - 2 * j);
    else if (j <= 2 * n - i)
      img = uvar(4 * n - 2 * i + 1 - 2 * j);
    else
      img = uvar(2 * (j - 2 * n + i));
  }
  return z;
}

}  // namespace

ChartMap chart_map(int l, int n) {
  check_chart(l, n);
  std::vector<Polynomial> z(2 * n - 1);
  if (l <= 2) {
    // c_2 is c_1 with u_2 replaced by u_1 in the quadric slot.
    for (int j = 1; j <= 2 * n - 1; ++j) {
      if (j <= n - 1)
        z[j - 1] = uvar(2 * j + 1);
      else if (j == n) {
        Polynomial q = uvar(l == 1 ? 2 : 1);
        for (int i = 1; i <= n - 1; ++i) q += uvar(2 * i + 1) * uvar(2 * i + 2);
        z[j - 1] = q;
      } else
        z[j - 1] = -uvar(2 * (2 * n + 1 - j));
    }
  } else {
    const int i = (l + 1) / 2;
    auto odd = odd_chart_images(i, n);
    if (l % 2 == 1) {
      z = std::move(odd);
    } else {
      // Coordinates reversed, u_{2i} replaced by u_{2i-1}.
      Substitution swap;
      for (int k = 1; k <= 2 * n; ++k)
        swap.emplace(Variable::u(k), k == 2 * i ? uvar(2 * i - 1) : uvar(k));
      for (int j = 1; j <= 2 * n - 1; ++j) z[j - 1] = substitute(odd[2 * n - 1 - j], swap);
    }
  }
  return ChartMap(l, n, std::move(z));
}

Substitution ChartMap::as_substitution() const {
  Substitution s;
  for (std::size_t j = 0; j < images_.size(); ++j)
    s.emplace(Variable::z(static_cast<int>(j) + 1), images_[j]);
  return s;
}

Substitution ChartMap::inverse() const {
  Substitution linear;
  std::optional<std::size_t> quad_slot;
  for (std::size_t j = 0; j < images_.size(); ++j) {
    const Polynomial& img = images_[j];
    if (img.size() == 1 && img.degree() == 1) {
      const Term& t = img.leading_term();
      const Variable v = t.monomial.factors().front().first;
      if (t.coefficient != 1 && t.coefficient != -1) throw std::logic_error("non-unit coefficient");
      linear.emplace(v, t.coefficient == 1 ? zvar(static_cast<int>(j) + 1)
                                           : -zvar(static_cast<int>(j) + 1));
    } else {
      if (quad_slot) throw std::logic_error("chart map has more than one nonlinear slot");
      quad_slot = j;
    }
  }
  if (!quad_slot) throw std::logic_error("chart map has no quadric slot");

  // The quadric slot is u_q + (terms in already-solved coordinates).
  const Polynomial& quad = images_[*quad_slot];
  std::optional<Variable> lead;
  for (const auto& t : quad.terms())
    if (t.monomial.degree() == 1 && t.coefficient == 1) {
      const Variable v = t.monomial.factors().front().first;
      if (!linear.contains(v)) lead = v;
    }
  if (!lead) throw std::logic_error("quadric slot has no free linear term");
  const Polynomial rest = quad - Polynomial(*lead);
  Substitution inv = linear;
  try {
    inv.emplace(*lead, zvar(static_cast<int>(*quad_slot) + 1) - substitute(rest, linear));
  } catch (const MissingVariableError& e) {
    throw std::logic_error(std::string("chart map is not triangular: ") + e.what());
  }
  return inv;
}

bool ChartMap::is_coordinate_change() const {
  Substitution inv;
  try {
    inv = inverse();
  } catch (const std::logic_error&) {
    return false;
  }
  const auto coords = chart_coordinates(l_, n_);
  if (inv.size() != coords.size()) return false;
  for (const auto& v : coords)
    if (!inv.contains(v)) return false;
  for (std::size_t j = 0; j < images_.size(); ++j)
    if (substitute(images_[j], inv) != zvar(static_cast<int>(j) + 1)) return false;
  const Substitution fwd = as_substitution();
  for (const auto& [u, img] : inv)
    if (substitute(img, fwd) != Polynomial(u)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Closed forms

WordPattern pattern_of_chart(int l) {
  if (l == 1) return WordPattern::Q1;
  if (l == 2) return WordPattern::Q2;
  return l % 2 ? WordPattern::QOdd : WordPattern::QEven;
}

namespace {

// z_c + z_{c-1} z_{c+1} + ... + z_{c-(terms-1)} z_{c+(terms-1)}
Polynomial centered_sum(int c, int terms) {
  Polynomial p = zvar(c);
  for (int k = 1; k < terms; ++k) p += zvar(c - k) * zvar(c + k);
  return p;
}

}  // namespace

Polynomial closed_form_generator(WordPattern pattern, int alpha, int n, int i) {
  check_rank(n);
  check_label(alpha, n);
  switch (pattern) {
    case WordPattern::Q1:
      return centered_sum(n, alpha == 0 ? n : alpha);
    case WordPattern::Q2:
      return alpha == 0 ? Polynomial(1) : centered_sum(n, alpha);
    case WordPattern::QOdd: {
      if (i < 2 || i > n) throw std::out_of_range("odd-chart pattern index must be in [2, n]");
      const int p = n + 1 - i;  // the word starts p, p-1, ..., 1
      if (alpha == 0) return zvar(n + p - 1);
      if (alpha <= p) return centered_sum(p, alpha);
      Polynomial s;
      for (int k = 1; k <= n + 1 - alpha; ++k) s += zvar(n + p - k) * zvar(n + p + k - 1);
      return s;
    }
    case WordPattern::QEven:
      break;
  }
  throw std::invalid_argument("reversed words have no closed-form generator");
}

// ---------------------------------------------------------------------------
// Divisor matching

std::optional<DivisorMatch> match_divisor_product(const Polynomial& p, int l, int n) {
  check_chart(l, n);
  if (p.is_zero()) return std::nullopt;
  if (p == Polynomial(1)) return DivisorMatch{{}, 1};
  if (p == Polynomial(-1)) return DivisorMatch{{}, -1};

  std::vector<std::pair<DivisorIndex, Polynomial>> pool;
  for (const auto& d : DivisorIndex::all(n)) {
    Polynomial r = divisor_restriction(d, l, n);
    if (!r.is_constant()) pool.emplace_back(d, std::move(r));
  }
  const int m = static_cast<int>(pool.size());
  const unsigned target = p.degree();
  for (int size = 1; size <= m; ++size) {
    // Index combinations of the given size in lexicographic order.
    std::vector<int> pick(size);
    for (int b = 0; b < size; ++b) pick[b] = b;
    while (true) {
      unsigned degree = 0;
      for (int b : pick) degree += pool[b].second.degree();
      if (degree == target) {
        Polynomial prod(1);
        std::vector<DivisorIndex> chosen;
        for (int b : pick) {
          prod *= pool[b].second;
          chosen.push_back(pool[b].first);
        }
        if (const int s = sign_relation(p, prod); s != 0) return DivisorMatch{std::move(chosen), s};
      }
      int b = size - 1;
      while (b >= 0 && pick[b] == m - size + b) --b;
      if (b < 0) break;
      ++pick[b];
      for (int c = b + 1; c < size; ++c) pick[c] = pick[c - 1] + 1;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Verification

bool AlphaRow::passes() const {
  return generator.has_value() && closed_form_match.value_or(true) && divisors.has_value();
}

bool ChartReport::passes() const {
  if (!reduced || length != 2 * rank - 1 || !coverage || !coordinate_change || !origin_fixed)
    return false;
  if (static_cast<int>(rows.size()) != rank + 1) return false;
  return std::all_of(rows.begin(), rows.end(), [](const AlphaRow& r) { return r.passes(); });
}

namespace {

Polynomial reverse_z(const Polynomial& p, int n) {
  Substitution s;
  for (int j = 1; j <= 2 * n - 1; ++j) s.emplace(Variable::z(j), zvar(2 * n - j));
  return substitute(p, s);
}

}  // namespace

ChartReport verify_chart(int l, int n) {
  check_chart(l, n);
  ChartReport report;
  report.chart = l;
  report.rank = n;
  report.word = distinguished_word(l, n);
  report.length = length(product(report.word, n));
  report.reduced = report.length == static_cast<int>(report.word.size());
  if (!report.reduced) report.failures.push_back("word is not reduced");
  if (report.length != 2 * n - 1) report.failures.push_back("word length is not 2n-1");

  const ChartMap chart = chart_map(l, n);
  report.coordinate_change = chart.is_coordinate_change();
  if (!report.coordinate_change) report.failures.push_back("chart map is not a coordinate change");

  report.origin_fixed = std::all_of(chart.images().begin(), chart.images().end(),
                                    [](const Polynomial& p) { return p.constant_term() == 0; });
  for (const auto& d : DivisorIndex::all(n)) {
    const Polynomial r = divisor_restriction(d, l, n);
    if (r != Polynomial(1) && r.constant_term() != 0) report.origin_fixed = false;
  }
  if (!report.origin_fixed) report.failures.push_back("chart origin is not the coordinate point");

  const PolyMatrix m = bott_samelson_matrix(report.word, n);
  const Substitution pull = chart.as_substitution();
  const WordPattern pattern = pattern_of_chart(l);
  const int pair_index = (l + 1) / 2;
  std::set<DivisorIndex> covered;

  for (int alpha = 0; alpha <= n; ++alpha) {
    AlphaRow row;
    row.alpha = alpha;
    const std::string tag = "alpha=" + std::to_string(alpha) + ": ";
    try {
      const PullbackIdeal ideal = pullback_ideal(report.word, m, alpha, n);
      row.cells = ideal.cells;
      row.generator_count = ideal.generators.size();
      row.generator = ideal.principal_generator;
    } catch (const std::exception& e) {
      report.failures.push_back(tag + e.what());
    }
    if (!row.generator) {
      report.failures.push_back(tag + "pullback ideal is not principal");
      report.rows.push_back(std::move(row));
      continue;
    }
    if (pattern == WordPattern::QEven) {
      const Polynomial odd = closed_form_generator(WordPattern::QOdd, alpha, n, pair_index);
      row.reversed_form_match = eq_up_to_sign(*row.generator, reverse_z(odd, n));
    } else {
      const Polynomial expected = closed_form_generator(pattern, alpha, n, pair_index);
      row.closed_form_match = eq_up_to_sign(*row.generator, expected);
      if (!*row.closed_form_match)
        report.failures.push_back(tag + "generator " + row.generator->to_string() +
                                  " differs from closed form " + expected.to_string());
    }
    row.pullback = substitute(*row.generator, pull);
    row.divisors = match_divisor_product(*row.pullback, l, n);
    if (row.divisors)
      covered.insert(row.divisors->divisors.begin(), row.divisors->divisors.end());
    else
      report.failures.push_back(tag + "pullback " + row.pullback->to_string() +
                                " is not a product of divisors");
    report.rows.push_back(std::move(row));
  }

  report.coverage = true;
  for (const auto& d : DivisorIndex::all(n)) {
    if (divisor_restriction(d, l, n).is_constant()) continue;
    if (!covered.contains(d)) {
      report.coverage = false;
      report.failures.push_back("divisor " + d.to_string() + " is not covered");
    }
  }
  return report;
}

AtlasReport verify_atlas(int n, unsigned threads) {
  check_rank(n);
  AtlasReport report;
  report.rank = n;
  const int charts = 2 * n;
  report.charts.resize(charts);
  if (threads <= 1) {
    for (int l = 1; l <= charts; ++l) report.charts[l - 1] = verify_chart(l, n);
  } else {
    // Work is handed out in chart order; results land in fixed slots.
    std::vector<std::future<void>> workers;
    std::atomic<int> next{1};
    for (unsigned t = 0; t < threads; ++t)
      workers.push_back(std::async(std::launch::async, [&] {
        for (int l = next++; l <= charts; l = next++) report.charts[l - 1] = verify_chart(l, n);
      }));
    for (auto& w : workers) w.get();
  }

  report.inverse_pairs = true;
  for (int i = 2; i <= n; ++i) {
    const auto odd = product(distinguished_word(2 * i - 1, n), n);
    const auto even = product(distinguished_word(2 * i, n), n);
    if (even != inverse(odd)) {
      report.inverse_pairs = false;
      report.failures.push_back("w_" + std::to_string(2 * i) + " is not the inverse of w_" +
                                std::to_string(2 * i - 1));
    }
  }

  std::set<SignedPermutation> elements;
  for (int l = 1; l <= charts; ++l) elements.insert(product(distinguished_word(l, n), n));
  report.distinct_cells = static_cast<int>(elements.size()) == charts;
  if (!report.distinct_cells) report.failures.push_back("chart cells are not distinct");

  report.pass = report.inverse_pairs && report.distinct_cells &&
                std::all_of(report.charts.begin(), report.charts.end(),
                            [](const ChartReport& c) { return c.passes(); });
  return report;
}

}  // namespace bruhat
