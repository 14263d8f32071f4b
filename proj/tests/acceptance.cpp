// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include "bruhat/atlas.hpp"
#include "bruhat/bott_samelson.hpp"
#include "bruhat/fulton.hpp"
#include "bruhat/wiring.hpp"
#include "oracles.hpp"
#include "random_poly.hpp"
#include "tikz_edges.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace bruhat;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion_1(Outcome& o) {
  const double budget[] = {0, 0, 10.0, 300.0, 300.0};
  for (int n = 2; n <= 4; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    const AtlasReport a = verify_atlas(n);
    const double secs = seconds_since(t0);
    o.require(a.pass, "verify_atlas(" + std::to_string(n) + ") failed");
    o.require(a.inverse_pairs, "inverse pairs at n=" + std::to_string(n));
    o.require(secs < budget[n], "n=" + std::to_string(n) + " over time budget");
    std::size_t closed = 0;
    for (const auto& c : a.charts) {
      o.require(c.reduced && c.length == 2 * n - 1, "word length/reducedness");
      o.require(c.coverage, "coverage at chart " + std::to_string(c.chart));
      for (const auto& r : c.rows) {
        o.require(r.generator.has_value(), "non-principal ideal");
        o.require(r.divisors.has_value(), "pullback not a divisor product");
        if (r.closed_form_match) {
          o.require(*r.closed_form_match, "closed form mismatch");
          ++closed;
        }
      }
    }
    o.detail << "n=" << n << " " << a.charts.size() << " charts, " << closed
             << " closed-form rows, " << secs << "s; ";
  }
}

PolyMatrix dense6(const char* text) { return oracle::dense(6, text); }

void criterion_2(Outcome& o) {
  o.require(factor_matrix(0, Variable::z(1), 2) ==
                dense6("1&0&0&0&0&0\\\\0&-z1&0&1&0&0\\\\0&0&z1&0&1&0\\\\0&1&0&0&0&0\\\\"
                       "0&0&1&0&0&0\\\\0&0&0&0&0&1"),
            "e_0");
  o.require(factor_matrix(1, Variable::z(1), 2) ==
                dense6("-z1&1&0&0&0&0\\\\1&0&0&0&0&0\\\\0&0&1&0&0&0\\\\0&0&0&1&0&0\\\\"
                       "0&0&0&0&z1&1\\\\0&0&0&0&1&0"),
            "e_1");
  o.require(factor_matrix(2, Variable::z(1), 2) ==
                dense6("1&0&0&0&0&0\\\\0&-z1&1&0&0&0\\\\0&1&0&0&0&0\\\\0&0&0&z1&1&0\\\\"
                       "0&0&0&1&0&0\\\\0&0&0&0&0&1"),
            "e_2");
  o.require(bott_samelson_matrix({0, 1, 2}, 2) ==
                dense6("-z2&-z3&1&0&0&0\\\\-z1&0&0&z3&1&0\\\\0&z1&0&z2&0&1\\\\1&0&0&0&0&0\\\\"
                       "0&1&0&0&0&0\\\\0&0&0&1&0&0"),
            "M_012");
  o.detail << "e_0, e_1, e_2, M_012 compared entry-wise; ";
}

std::vector<IndexTuple> tuples_up_to_3(int k) {
  std::vector<IndexTuple> out{{}};
  for (int a = 1; a <= k; ++a) {
    out.push_back({a});
    for (int b = a + 1; b <= k; ++b) {
      out.push_back({a, b});
      for (int c = b + 1; c <= k; ++c) out.push_back({a, b, c});
    }
  }
  return out;
}

IndexTuple random_tuple(std::mt19937_64& rng, int k, int size) {
  std::vector<int> all(k);
  std::iota(all.begin(), all.end(), 1);
  std::shuffle(all.begin(), all.end(), rng);
  IndexTuple t(all.begin(), all.begin() + size);
  std::sort(t.begin(), t.end());
  return t;
}

void criterion_3(Outcome& o) {
  std::mt19937_64 rng(3);
  std::size_t pairs = 0;
  for (int n = 2; n <= 3; ++n) {
    const int k = 2 * n + 2;
    const auto tuples = tuples_up_to_3(k);
    for (int l = 1; l <= 2 * n; ++l) {
      const Word w = distinguished_word(l, n);
      const auto d = diagram_of_word(w, n);
      const PolyMatrix m = bott_samelson_matrix(w, n);
      for (int a = 0; a <= k; ++a) {
        o.require(lgv_minor(d, prefix(a), prefix(a)) == minor(m, prefix(a), prefix(a)), "NW prefix");
        ++pairs;
      }
      for (const auto& r : tuples)
        for (const auto& c : tuples)
          if (r.size() == c.size()) {
            o.require(lgv_minor(d, r, c) == minor(m, r, c), "|J|<=3 pair");
            ++pairs;
          }
      for (int t = 0; t < 50; ++t) {
        const int s = 1 + static_cast<int>(rng() % k);
        const IndexTuple r = random_tuple(rng, k, s), c = random_tuple(rng, k, s);
        o.require(lgv_minor(d, r, c) == minor(m, r, c), "random pair");
        ++pairs;
      }
    }
  }
  o.detail << pairs << " (J,J') pairs, exact equality; ";
}

void criterion_4(Outcome& o) {
  std::map<int, std::size_t> signs;
  std::ostringstream table;
  for (int n = 2; n <= 3; ++n) {
    const int k = 2 * n + 2;
    for (int l = 1; l <= 2 * n; ++l) {
      const auto d = diagram_of_word(distinguished_word(l, n), n);
      table << "    n=" << n << " l=" << l << " signs:";
      for (int a = 0; a <= k; ++a) {
        const auto r = duality(d, prefix(a), prefix(a));
        o.require(r.holds(), "duality at n=" + std::to_string(n) + " l=" + std::to_string(l));
        ++signs[r.sign];
        table << ' ' << (r.sign > 0 ? '+' : r.sign < 0 ? '-' : '0');
      }
      table << '\n';
    }
  }
  o.detail << "sign +1: " << signs[1] << ", sign -1: " << signs[-1] << ", unrelated: " << signs[0]
           << "\n" << table.str();
}

void criterion_5(Outcome& o) {
  std::size_t count = 0;
  for (int n = 2; n <= 4; ++n)
    for (int l = 1; l <= 2 * n; ++l) {
      const PolyMatrix m = bott_samelson_matrix(distinguished_word(l, n), n);
      o.require(m.transpose() * form_J(n) * m == form_J(n), "M^T J M = J");
      o.require(determinant(m) == 1, "det M = 1");
      ++count;
    }
  o.detail << count << " matrices; ";
}

void criterion_6(Outcome& o) {
  for (int n = 2; n <= 3; ++n) {
    const auto dist = oracle::bfs_lengths(n, 5);
    for (const auto& [window, d] : dist)
      o.require(length(SignedPermutation::from_window(window)) == d, "length vs BFS");
    o.detail << "D_" << n + 1 << ": " << dist.size() << " elements of length <= 5; ";
  }
}

void criterion_7(Outcome& o) {
  for (int n = 2; n <= 4; ++n) {
    const int k = 2 * n + 2;
    for (int a = 0; a <= n; ++a) {
      const auto cells = essential_set(PermutationMatrixView::of(simple_reflection(a, n)));
      // (minor size, NW block rows, NW block cols)
      std::vector<std::tuple<int, int, int>> derived, stated;
      for (const auto& c : cells) derived.emplace_back(c.rank + 1, c.row, c.col);
      if (a == 0) {
        stated = {{n, n + 1, n + 1}};
      } else {
        stated = {{a, a, a}, {k - a, k - a, k - a}};
      }
      o.require(derived == stated, "essential set of r_" + std::to_string(a) + " at n=" + std::to_string(n));
    }
  }
  o.detail << "r_0..r_n for n = 2, 3, 4; ";
}

void criterion_8(Outcome& o) {
  using testing_support::random_poly;
  using testing_support::random_word;
  constexpr int kCases = 1000;
  std::mt19937_64 rng(8);
  for (int t = 0; t < kCases; ++t) {
    const Polynomial p = random_poly(rng, 3, 2, 5), q = random_poly(rng, 3, 2, 5), r = random_poly(rng, 3, 2, 5);
    o.require((p + q) + r == p + (q + r) && (p * q) * r == p * (q * r), "associativity");
    o.require(p + q == q + p && p * q == q * p, "commutativity");
    o.require(p * (q + r) == p * q + p * r, "distributivity");
  }
  for (int t = 0; t < kCases; ++t) {
    Substitution s;
    for (int i = 1; i <= 3; ++i) s[Variable::z(i)] = random_poly(rng, 3, 2, 3) * uvar(1) + uvar(i);
    const Polynomial p = random_poly(rng, 3, 2, 4), q = random_poly(rng, 3, 2, 4);
    o.require(substitute(p * q, s) == substitute(p, s) * substitute(q, s) &&
                  substitute(p + q, s) == substitute(p, s) + substitute(q, s),
              "substitution homomorphism");
  }
  for (int t = 0; t < kCases;) {
    const Polynomial g = random_poly(rng, 4, 2, 4), q = random_poly(rng, 4, 2, 4);
    if (g.is_zero()) continue;
    o.require(divide_exact(g * q, g) == q, "divide_exact round trip");
    ++t;
  }
  for (int t = 0; t < kCases; ++t) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto d = diagram_of_word(random_word(rng, n, 6), n);
    o.require(flip(flip(d)) == d, "flip involution");
    const auto fmt = t % 2 ? RenderFormat::SVG : RenderFormat::TIKZ;
    o.require(render(d, fmt) == render(flip(flip(d)), fmt), "render determinism");
  }
  o.detail << kCases << " cases per property; ";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"atlas verification for n = 2, 3, 4", criterion_1},
      {"displayed matrices at n = 2", criterion_2},
      {"LGV minors equal Laplace minors", criterion_3},
      {"duality on NW prefixes", criterion_4},
      {"group membership of M_Q", criterion_5},
      {"length formula against BFS", criterion_6},
      {"essential sets and minor families", criterion_7},
      {"property suites", criterion_8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first
              << " (" << seconds_since(t0) << "s) " << o.detail.str() << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed ? "FAIL" : "PASS") << " acceptance: " << criteria.size() - failed << "/"
            << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
