#pragma once

// Wiring diagrams: layered weighted networks whose path sums compute matrix
// products, and whose vertex-disjoint path systems compute minors
// (Lindstrom-Gessel-Viennot).
//
// A layer is the bipartite graph of one k x k matrix: an edge (i, j) with
// weight M(i, j) for every nonzero entry.  A diagram is the concatenation of
// its layers, read left to right in matrix-product order.  Rows are 1-based.

#include "bruhat/poly_matrix.hpp"
#include "bruhat/weyl.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bruhat {

struct Edge {
  int from;
  int to;
  Polynomial weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Provenance of a layer built from a Bott-Samelson factor.  The layer's
// matrix is e_a(z) r_a, inverted and/or transposed as flagged.
struct FactorTag {
  int alpha;
  Polynomial z;
  bool inverted = false;
  bool transposed = false;

  friend bool operator==(const FactorTag&, const FactorTag&) = default;
};

class NonFactorLayerError : public std::invalid_argument {
 public:
  NonFactorLayerError() : std::invalid_argument("layer was not built from a factor matrix") {}
};

class Layer {
 public:
  static Layer from_matrix(const PolyMatrix& m);
  static Layer factor(int alpha, const Polynomial& z, int n);

  int size() const { return size_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::optional<FactorTag>& tag() const { return tag_; }

  PolyMatrix matrix() const;
  Layer flipped() const;
  // Throws NonFactorLayerError for layers without a FactorTag.
  Layer inverted() const;

  // Every weight is 1 or +-z for the layer's single variable z.
  bool weights_well_formed() const;

  friend bool operator==(const Layer&, const Layer&) = default;

 private:
  Layer(int size, std::vector<Edge> edges, std::optional<FactorTag> tag);
  static Layer from_tag(const FactorTag& tag, int size);

  int size_ = 0;
  std::vector<Edge> edges_;  // sorted by (from, to)
  std::optional<FactorTag> tag_;
};

class WiringDiagram {
 public:
  explicit WiringDiagram(int size, std::vector<Layer> layers = {});

  int size() const { return size_; }
  const std::vector<Layer>& layers() const { return layers_; }

  friend bool operator==(const WiringDiagram&, const WiringDiagram&) = default;

 private:
  int size_;
  std::vector<Layer> layers_;
};

WiringDiagram diagram_of_word(const Word& word, int n);

// Entry (i, j) is the sum over paths i -> j of the product of edge weights.
PolyMatrix matrix_of(const WiringDiagram& d);

// Number of source-to-sink paths from i to j.
std::size_t path_count(const WiringDiagram& d, int source, int sink);

// Reversed layer order and reversed edges; computes the transpose.
WiringDiagram flip(const WiringDiagram& d);

// Inverted layers in reverse order; computes the inverse matrix.
WiringDiagram inverse_diagram(const WiringDiagram& d);

struct LgvResult {
  Polynomial value;
  std::size_t path_systems = 0;  // vertex-disjoint systems enumerated
};

// Sum over vertex-disjoint path systems (endpoints included) from sources J to
// sinks J' of sign(sigma) * prod w(P_i), where path i ends at J'[sigma(i)].
LgvResult lgv_enumerate(const WiringDiagram& d, const IndexTuple& sources,
                        const IndexTuple& sinks);
Polynomial lgv_minor(const WiringDiagram& d, const IndexTuple& sources, const IndexTuple& sinks);

struct DualityResult {
  Polynomial minor;       // (J, J') minor of the diagram
  Polynomial dual_minor;  // complementary minor of inverse_diagram(flip(d))
  int sign = 0;           // minor = sign * dual_minor; 0 if unrelated
  bool holds() const { return sign != 0; }
};

DualityResult duality(const WiringDiagram& d, const IndexTuple& sources, const IndexTuple& sinks);
bool duality_check(const WiringDiagram& d, const IndexTuple& sources, const IndexTuple& sinks);

enum class RenderFormat { SVG, TIKZ };

RenderFormat parse_render_format(const std::string& s);

// Solid edges carry weight 1, dashed -z, dotted +z.
std::string render(const WiringDiagram& d, RenderFormat format);

}  // namespace bruhat
