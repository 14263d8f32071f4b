#include "bruhat/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace bruhat {

std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

Word parse_word(std::string_view text) {
  Word w;
  std::size_t i = 0;
  auto sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (i < text.size()) {
    while (i < text.size() && sep(text[i])) ++i;
    if (i == text.size()) break;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i || (i < text.size() && !sep(text[i])))
      throw std::invalid_argument("malformed word \"" + std::string(text) + "\"");
    w.push_back(std::stoi(std::string(text.substr(start, i - start))));
  }
  return w;
}

void check_rank(int n) {
  if (n < 2) throw std::invalid_argument("rank n must be at least 2, got " + std::to_string(n));
}

void check_label(int alpha, int n) {
  if (alpha < 0 || alpha > n)
    throw std::out_of_range("node label " + std::to_string(alpha) + " outside [0, " +
                            std::to_string(n) + "]");
}

SignedPermutation SignedPermutation::identity(int n) {
  check_rank(n);
  std::vector<int> w(n + 1);
  for (int i = 0; i <= n; ++i) w[i] = i + 1;
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::from_window(std::vector<int> window) {
  const int N = static_cast<int>(window.size());
  std::vector<bool> seen(N + 1, false);
  int negatives = 0;
  for (int v : window) {
    int a = std::abs(v);
    if (a < 1 || a > N || seen[a]) throw std::invalid_argument("window is not a signed permutation");
    seen[a] = true;
    negatives += v < 0;
  }
  if (negatives % 2) throw std::invalid_argument("type D window needs an even number of negatives");
  check_rank(N - 1);
  return SignedPermutation(std::move(window));
}

int SignedPermutation::operator()(int letter) const {
  int a = std::abs(letter);
  if (a < 1 || a > letters()) throw std::out_of_range("letter out of range");
  int v = window_[a - 1];
  return letter > 0 ? v : -v;
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.letters() != b.letters()) throw std::invalid_argument("rank mismatch in composition");
  std::vector<int> w(b.window_.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = a(b.window_[i]);
  return SignedPermutation(std::move(w));
}

std::string SignedPermutation::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(window_[i]);
  }
  return s + ")";
}

SignedPermutation simple_reflection(int alpha, int n) {
  check_rank(n);
  check_label(alpha, n);
  std::vector<int> w(n + 1);
  for (int i = 0; i <= n; ++i) w[i] = i + 1;
  if (alpha == 0) {
    w[n - 1] = -(n + 1);
    w[n] = -n;
  } else {
    std::swap(w[alpha - 1], w[alpha]);
  }
  return SignedPermutation::from_window(std::move(w));
}

SignedPermutation product(const Word& word, int n) {
  SignedPermutation w = SignedPermutation::identity(n);
  for (int a : word) w = w * simple_reflection(a, n);
  return w;
}

SignedPermutation inverse(const SignedPermutation& w) {
  std::vector<int> inv(w.window().size());
  for (int i = 1; i <= w.letters(); ++i) {
    int v = w(i);
    inv[std::abs(v) - 1] = v > 0 ? i : -i;
  }
  return SignedPermutation::from_window(std::move(inv));
}

int letter_row(int letter, int n) {
  const int k = 2 * n + 2;
  return letter > 0 ? letter : k + 1 + letter;
}

int length(const SignedPermutation& w) {
  // Number of positive roots e_i - e_j, e_i + e_j (i < j) sent to negative
  // roots.  A root eps_a - eps_b is positive iff row(a) < row(b).
  const int n = w.rank();
  const int N = w.letters();
  int len = 0;
  for (int i = 1; i <= N; ++i) {
    const int ri = letter_row(w(i), n);
    for (int j = i + 1; j <= N; ++j) {
      if (ri > letter_row(w(j), n)) ++len;
      if (ri > letter_row(-w(j), n)) ++len;
    }
  }
  return len;
}

bool is_reduced(const Word& word, int n) {
  return length(product(word, n)) == static_cast<int>(word.size());
}

std::vector<int> permutation_matrix_one_line(const SignedPermutation& w) {
  // Column c = row(j) carries its 1 in row row(w(j)).
  const int n = w.rank();
  const int k = 2 * n + 2;
  std::vector<int> pi(k, 0);
  for (int j = 1; j <= w.letters(); ++j) {
    pi[letter_row(w(j), n) - 1] = letter_row(j, n);
    pi[letter_row(-w(j), n) - 1] = letter_row(-j, n);
  }
  return pi;
}

bool dynkin_adjacent(int a, int b, int n) {
  if (a == b) return false;
  if (a > b) std::swap(a, b);
  if (a == 0) return b == n - 1;
  if (b == n) return a == n - 1;
  return b == a + 1;
}

Word distinguished_word(int l, int n) {
  check_rank(n);
  if (l < 1 || l > 2 * n)
    throw std::out_of_range("chart index " + std::to_string(l) + " outside [1, " +
                            std::to_string(2 * n) + "]");
  Word w;
  auto down = [&w](int from, int to) {
    for (int a = from; a >= to; --a) w.push_back(a);
  };
  auto up = [&w](int from, int to) {
    for (int a = from; a <= to; ++a) w.push_back(a);
  };
  if (l == 1) {
    w.push_back(0);
    down(n - 1, 1);
    up(2, n - 1);
    w.push_back(0);
  } else if (l == 2) {
    down(n, 1);
    up(2, n);
  } else {
    const int i = (l + 1) / 2;
    down(n + 1 - i, 1);
    up(2, n - 1);
    w.push_back(0);
    down(n, n + 2 - i);
    if (l % 2 == 0) std::reverse(w.begin(), w.end());
  }
  return w;
}

}  // namespace bruhat
