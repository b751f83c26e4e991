#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pluricalc/ratmat.hpp"
#include "pluricalc/rational.hpp"

namespace pluricalc {

// An exceptional (or auxiliary) curve. Its weight is
// -self_intersection, derived rather than stored.
struct CurveVertex {
  std::string id;
  std::int64_t self_intersection = -2;
  std::int64_t genus = 0;
  // Coefficient b = 1 - a(E) of the curve in the pulled-back canonical class.
  std::optional<Rational> coeff;

  std::int64_t weight() const { return -self_intersection; }
  friend bool operator==(const CurveVertex&, const CurveVertex&) = default;
};

// Undirected edge; multiplicity is the intersection number of the two curves.
struct GraphEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  std::int64_t multiplicity = 1;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

// Weighted dual graph of a curve configuration on a smooth surface. Immutable
// once built; every mutation returns a new graph.
//
// Chains are compared up to reversal throughout the library: the dual graph of
// 1/n(1,q) read backwards is the dual graph of 1/n(1,q') with qq' = 1 mod n.
class DualGraph {
 public:
  DualGraph() = default;
  // Throws PreconditionError on duplicate ids, self-loops, multiplicity < 1,
  // out-of-range endpoints or repeated vertex pairs.
  DualGraph(std::vector<CurveVertex> vertices, std::vector<GraphEdge> edges);

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<CurveVertex>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const CurveVertex& vertex(std::size_t i) const { return vertices_.at(i); }

  std::optional<std::size_t> find(std::string_view id) const;
  // Throws PreconditionError when id is unknown.
  std::size_t index_of(std::string_view id) const;

  // Intersection number C_i . C_j (self-intersection on the diagonal).
  std::int64_t intersection(std::size_t i, std::size_t j) const;
  RatMatrix intersection_matrix() const;
  std::vector<std::size_t> neighbours(std::size_t i) const;

  // True when the graph is a path E_0 - E_1 - ... in vertex order with simple
  // edges (every chain() graph qualifies).
  bool is_ordered_path() const;
  // Weights along the path when is_ordered_path().
  std::vector<std::int64_t> path_weights() const;

  std::vector<std::optional<Rational>> coeffs() const;
  DualGraph with_coeffs(std::span<const Rational> coeffs) const;

  friend bool operator==(const DualGraph&, const DualGraph&) = default;

 private:
  std::vector<CurveVertex> vertices_;
  std::vector<GraphEdge> edges_;  // stored with a < b, sorted
};

// Path graph with self-intersections -weights[i]; ids are prefix1, prefix2, ...
DualGraph chain(std::span<const std::int64_t> weights, std::string_view prefix = "E");
DualGraph chain(std::initializer_list<std::int64_t> weights, std::string_view prefix = "E");

// Determinant of the negated intersection matrix; 1 for the empty graph.
Rational graph_det(const DualGraph& g);

// K . E_v by adjunction: 2g - 2 - E_v^2.
Rational k_dot_vertex(const DualGraph& g, std::size_t v);

// Blow up the intersection point of two vertices joined by a simple edge. The
// new (-1)-curve is appended last, and gets coefficient b_a + b_b - 1 when
// both endpoints carry coefficients. Throws UnsupportedOperationError for a
// tangency (multiplicity > 1) and PreconditionError when no edge exists.
DualGraph blow_up_edge(const DualGraph& g, std::size_t a, std::size_t b, std::string new_id = "C");

// Connected components after deleting v. Vertex order inside each component
// follows the original order; components are ordered by their first vertex.
std::vector<DualGraph> split_at(const DualGraph& g, std::size_t v);

std::vector<DualGraph> connected_components(const DualGraph& g);

enum class DiagnosticKind {
  kNonNegativeSelfIntersection,
  kWeightBelowTwo,
  kWeightBound,
  kNotNegativeDefinite,
  kMinusOneCurvesMeet,
  kNegativeGenus,
};

struct Diagnostic {
  DiagnosticKind kind;
  std::string vertex;  // empty when the diagnostic is about the whole graph
  std::string message;
};

struct ValidateOptions {
  // Require every weight >= 2 (minimal-resolution context).
  bool minimal_resolution = false;
  // Flag weights above 2/epsilon (the epsilon-lc weight bound).
  std::optional<Rational> epsilon;
  // Require the intersection matrix to be negative definite.
  bool contractible = false;
  // Flag two intersecting (-1)-curves (impossible when K is pseudo-effective).
  bool pseudo_effective_k = false;
};

std::vector<Diagnostic> validate(const DualGraph& g, const ValidateOptions& opts = {});

std::string_view to_string(DiagnosticKind kind);

}  // namespace pluricalc
