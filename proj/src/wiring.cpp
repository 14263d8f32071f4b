#include "bruhat/wiring.hpp"

#include "bruhat/bott_samelson.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace bruhat {

namespace {

void sort_edges(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
}

std::vector<Edge> edges_of(const PolyMatrix& m) {
  std::vector<Edge> edges;
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j)
      if (!m(i, j).is_zero()) edges.push_back(Edge{i, j, m(i, j)});
  return edges;
}

}  // namespace

Layer::Layer(int size, std::vector<Edge> edges, std::optional<FactorTag> tag)
    : size_(size), edges_(std::move(edges)), tag_(std::move(tag)) {
  sort_edges(edges_);
}

Layer Layer::from_matrix(const PolyMatrix& m) { return Layer(m.size(), edges_of(m), std::nullopt); }

Layer Layer::from_tag(const FactorTag& tag, int size) {
  const int n = size / 2 - 1;
  PolyMatrix m = tag.inverted ? factor_inverse_matrix(tag.alpha, tag.z, n)
                              : factor_matrix(tag.alpha, tag.z, n);
  if (tag.transposed) m = m.transpose();
  return Layer(size, edges_of(m), tag);
}

Layer Layer::factor(int alpha, const Polynomial& z, int n) {
  return from_tag(FactorTag{alpha, z, false, false}, 2 * n + 2);
}

PolyMatrix Layer::matrix() const {
  PolyMatrix m(size_);
  for (const auto& e : edges_) m(e.from, e.to) += e.weight;
  return m;
}

Layer Layer::flipped() const {
  std::vector<Edge> rev;
  rev.reserve(edges_.size());
  for (const auto& e : edges_) rev.push_back(Edge{e.to, e.from, e.weight});
  std::optional<FactorTag> tag = tag_;
  if (tag) tag->transposed = !tag->transposed;
  return Layer(size_, std::move(rev), std::move(tag));
}

Layer Layer::inverted() const {
  if (!tag_) throw NonFactorLayerError();
  FactorTag tag = *tag_;
  // (F^T)^-1 = (F^-1)^T, so only the inversion flag changes.
  tag.inverted = !tag.inverted;
  return from_tag(tag, size_);
}

bool Layer::weights_well_formed() const {
  std::optional<Polynomial> var;
  for (const auto& e : edges_) {
    const Polynomial& w = e.weight;
    if (w == Polynomial(1)) continue;
    if (w.size() != 1 || w.degree() != 1) return false;
    const Integer& c = w.leading_term().coefficient;
    if (c != 1 && c != -1) return false;
    Polynomial v = w.sign_normalized();
    if (var && *var != v) return false;
    var = v;
  }
  return true;
}

WiringDiagram::WiringDiagram(int size, std::vector<Layer> layers)
    : size_(size), layers_(std::move(layers)) {
  for (const auto& l : layers_)
    if (l.size() != size_) throw std::invalid_argument("all layers must have the same vertex count");
}

WiringDiagram diagram_of_word(const Word& word, int n) {
  check_rank(n);
  std::vector<Layer> layers;
  layers.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i)
    layers.push_back(Layer::factor(word[i], zvar(static_cast<int>(i) + 1), n));
  return WiringDiagram(2 * n + 2, std::move(layers));
}

PolyMatrix matrix_of(const WiringDiagram& d) {
  const int k = d.size();
  PolyMatrix m(k);
  for (int source = 1; source <= k; ++source) {
    std::vector<Polynomial> at(k + 1);
    at[source] = Polynomial(1);
    for (const auto& layer : d.layers()) {
      std::vector<Polynomial> next(k + 1);
      for (const auto& e : layer.edges())
        if (!at[e.from].is_zero()) next[e.to] += at[e.from] * e.weight;
      at = std::move(next);
    }
    for (int j = 1; j <= k; ++j) m(source, j) = std::move(at[j]);
  }
  return m;
}

std::size_t path_count(const WiringDiagram& d, int source, int sink) {
  const int k = d.size();
  if (source < 1 || source > k || sink < 1 || sink > k) throw std::out_of_range("vertex out of range");
  std::vector<std::size_t> at(k + 1, 0);
  at[source] = 1;
  for (const auto& layer : d.layers()) {
    std::vector<std::size_t> next(k + 1, 0);
    for (const auto& e : layer.edges()) next[e.to] += at[e.from];
    at = std::move(next);
  }
  return at[sink];
}

WiringDiagram flip(const WiringDiagram& d) {
  std::vector<Layer> layers;
  layers.reserve(d.layers().size());
  for (auto it = d.layers().rbegin(); it != d.layers().rend(); ++it) layers.push_back(it->flipped());
  return WiringDiagram(d.size(), std::move(layers));
}

WiringDiagram inverse_diagram(const WiringDiagram& d) {
  std::vector<Layer> layers;
  layers.reserve(d.layers().size());
  for (auto it = d.layers().rbegin(); it != d.layers().rend(); ++it) layers.push_back(it->inverted());
  return WiringDiagram(d.size(), std::move(layers));
}

// ---------------------------------------------------------------------------
// Lindstrom-Gessel-Viennot enumeration

namespace {

class PathSystemEnumerator {
 public:
  PathSystemEnumerator(const WiringDiagram& d, const IndexTuple& sources, const IndexTuple& sinks)
      : d_(d), sources_(sources), sinks_(sinks) {
    const int k = d.size();
    if (k > 64) throw std::invalid_argument("lgv: at most 64 wires supported");
    const std::size_t layers = d.layers().size();
    out_.resize(layers);
    for (std::size_t c = 0; c < layers; ++c) {
      out_[c].resize(k);
      for (const auto& e : d.layers()[c].edges()) out_[c][e.from - 1].push_back(&e);
    }
    for (int s : sinks) sink_mask_ |= bit(s - 1);
    // reach_[c][v]: sinks (as a mask) reachable from vertex v at column c.
    reach_.assign(layers + 1, std::vector<std::uint64_t>(k, 0));
    for (int v = 0; v < k; ++v) reach_[layers][v] = bit(v) & sink_mask_;
    for (std::size_t c = layers; c-- > 0;)
      for (int v = 0; v < k; ++v)
        for (const Edge* e : out_[c][v]) reach_[c][v] |= reach_[c + 1][e->to - 1];
  }

  LgvResult run() {
    const std::size_t j = sources_.size();
    current_.resize(j);
    next_.resize(j);
    for (std::size_t i = 0; i < j; ++i) {
      current_[i] = sources_[i] - 1;
      if (!reach_[0][current_[i]]) return {};
    }
    step(0, 0, 0, Polynomial(1));
    return LgvResult{std::move(total_), systems_};
  }

 private:
  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  // Choose the next vertex of path p in layer c; `occupied` marks vertices of
  // column c+1 already used by paths 0..p-1.
  void step(std::size_t c, std::size_t p, std::uint64_t occupied, const Polynomial& weight) {
    const std::size_t j = current_.size();
    if (p == j) {
      std::vector<int> saved_current = current_;
      std::vector<int> saved_next = next_;
      current_ = next_;
      if (c + 1 == d_.layers().size())
        finish(weight);
      else
        step(c + 1, 0, 0, weight);
      current_ = std::move(saved_current);
      next_ = std::move(saved_next);
      return;
    }
    if (c == d_.layers().size()) {
      finish(weight);
      return;
    }
    for (const Edge* e : out_[c][current_[p]]) {
      const int to = e->to - 1;
      if (occupied & bit(to)) continue;
      if (!reach_[c + 1][to]) continue;
      next_[p] = to;
      if (e->weight == Polynomial(1))
        step(c, p + 1, occupied | bit(to), weight);
      else
        step(c, p + 1, occupied | bit(to), weight * e->weight);
    }
  }

  void finish(const Polynomial& weight) {
    // Endpoints are distinct and all lie in the sink set, so they fill it.
    const std::size_t j = current_.size();
    std::vector<int> sigma(j);
    for (std::size_t i = 0; i < j; ++i) {
      auto it = std::find(sinks_.begin(), sinks_.end(), current_[i] + 1);
      sigma[i] = static_cast<int>(it - sinks_.begin());
    }
    int inversions = 0;
    for (std::size_t a = 0; a < j; ++a)
      for (std::size_t b = a + 1; b < j; ++b) inversions += sigma[a] > sigma[b];
    if (inversions % 2)
      total_ -= weight;
    else
      total_ += weight;
    ++systems_;
  }

  const WiringDiagram& d_;
  const IndexTuple& sources_;
  const IndexTuple& sinks_;
  std::vector<std::vector<std::vector<const Edge*>>> out_;
  std::vector<std::vector<std::uint64_t>> reach_;
  std::uint64_t sink_mask_ = 0;
  std::vector<int> current_, next_;
  Polynomial total_;
  std::size_t systems_ = 0;
};

void check_endpoints(const IndexTuple& idx, int k, const char* what) {
  std::uint64_t seen = 0;
  for (int v : idx) {
    if (v < 1 || v > k)
      throw std::out_of_range(std::string(what) + " vertex " + std::to_string(v) + " out of range");
    if (seen & (std::uint64_t{1} << (v - 1)))
      throw std::invalid_argument(std::string(what) + " vertices must be distinct");
    seen |= std::uint64_t{1} << (v - 1);
  }
}

}  // namespace

LgvResult lgv_enumerate(const WiringDiagram& d, const IndexTuple& sources, const IndexTuple& sinks) {
  if (sources.size() != sinks.size()) throw std::invalid_argument("lgv: |J| != |J'|");
  check_endpoints(sources, d.size(), "source");
  check_endpoints(sinks, d.size(), "sink");
  if (sources.empty()) return LgvResult{Polynomial(1), 1};
  return PathSystemEnumerator(d, sources, sinks).run();
}

Polynomial lgv_minor(const WiringDiagram& d, const IndexTuple& sources, const IndexTuple& sinks) {
  return lgv_enumerate(d, sources, sinks).value;
}

DualityResult duality(const WiringDiagram& d, const IndexTuple& sources, const IndexTuple& sinks) {
  if (sources.size() != sinks.size()) throw std::invalid_argument("duality: |J| != |J'|");
  DualityResult r;
  r.minor = lgv_minor(d, sources, sinks);
  const WiringDiagram dual = inverse_diagram(flip(d));
  r.dual_minor = lgv_minor(dual, complement(sources, d.size()), complement(sinks, d.size()));
  r.sign = sign_relation(r.minor, r.dual_minor);
  return r;
}

bool duality_check(const WiringDiagram& d, const IndexTuple& sources, const IndexTuple& sinks) {
  return duality(d, sources, sinks).holds();
}

}  // namespace bruhat
