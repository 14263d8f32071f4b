#include "bruhat/fulton.hpp"

#include "bruhat/bott_samelson.hpp"

#include <algorithm>

namespace bruhat {

PermutationMatrixView::PermutationMatrixView(std::vector<int> one_line)
    : pi_(std::move(one_line)), inv_(pi_.size(), 0) {
  const int k = size();
  for (int i = 1; i <= k; ++i) {
    const int j = pi_[i - 1];
    if (j < 1 || j > k || inv_[j - 1] != 0) throw std::invalid_argument("not a permutation");
    inv_[j - 1] = i;
  }
}

PermutationMatrixView PermutationMatrixView::of(const SignedPermutation& w) {
  return PermutationMatrixView(permutation_matrix_one_line(w));
}

int PermutationMatrixView::rank_nw(int i, int j) const {
  int count = 0;
  for (int r = 1; r <= i; ++r) count += pi_[r - 1] <= j;
  return count;
}

std::vector<EssentialCell> essential_set(const PermutationMatrixView& pi) {
  std::vector<EssentialCell> cells;
  const int k = pi.size();
  for (int i = 1; i < k; ++i)
    for (int j = 1; j < k; ++j)
      if (pi(i) > j && pi.inverse(j) > i && pi(i + 1) <= j && pi.inverse(j + 1) <= i)
        cells.push_back(EssentialCell{i, j, pi.rank_nw(i, j)});
  return cells;
}

namespace {

// All increasing size-s subsets of [1, limit], lexicographic.
std::vector<IndexTuple> subsets(int limit, int s) {
  std::vector<IndexTuple> out;
  if (s > limit) return out;
  IndexTuple cur = prefix(s);
  while (true) {
    out.push_back(cur);
    int i = s - 1;
    while (i >= 0 && cur[i] == limit - s + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < s; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<Polynomial> fulton_generators(const PermutationMatrixView& pi, const PolyMatrix& m) {
  if (pi.size() != m.size()) throw std::invalid_argument("permutation and matrix sizes differ");
  std::vector<Polynomial> gens;
  for (const auto& cell : essential_set(pi)) {
    const int s = cell.rank + 1;
    const auto row_sets = subsets(cell.row, s);
    const auto col_sets = subsets(cell.col, s);
    for (const auto& rows : row_sets)
      for (const auto& cols : col_sets) gens.push_back(minor(m, rows, cols));
  }
  return gens;
}

std::optional<Polynomial> find_principal_generator(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  std::vector<const Polynomial*> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(&g);
  if (nonzero.empty()) throw std::invalid_argument("all generators are zero");

  for (const auto* g : nonzero)
    if (g->is_constant()) return Polynomial(1);

  // Try candidates from smallest to largest; the result is unique up to sign
  // whenever it exists, so the scan order only affects speed.
  std::vector<const Polynomial*> candidates = nonzero;
  std::stable_sort(candidates.begin(), candidates.end(), [](const Polynomial* a, const Polynomial* b) {
    if (a->degree() != b->degree()) return a->degree() < b->degree();
    return a->size() < b->size();
  });
  for (const auto* g : candidates) {
    const bool divides_all = std::all_of(nonzero.begin(), nonzero.end(), [g](const Polynomial* p) {
      return p == g || divide_exact(*p, *g).has_value();
    });
    if (divides_all) return g->sign_normalized();
  }
  return std::nullopt;
}

NonReducedWordError::NonReducedWordError(const Word& w)
    : std::invalid_argument("word " + word_to_string(w) + " is not reduced") {}

PullbackIdeal pullback_ideal(const Word& word, const PolyMatrix& m, int alpha, int n) {
  check_label(alpha, n);
  if (!is_reduced(word, n)) throw NonReducedWordError(word);
  PullbackIdeal ideal;
  ideal.word = word;
  ideal.alpha = alpha;
  const auto pi = PermutationMatrixView::of(simple_reflection(alpha, n));
  ideal.cells = essential_set(pi);
  ideal.generators = fulton_generators(pi, m);
  ideal.principal_generator = find_principal_generator(ideal.generators);
  return ideal;
}

PullbackIdeal pullback_ideal(const Word& word, int alpha, int n) {
  return pullback_ideal(word, bott_samelson_matrix(word, n), alpha, n);
}

}  // namespace bruhat
