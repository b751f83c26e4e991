#include "pluricalc/dualgraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "pluricalc/error.hpp"

namespace pluricalc {

DualGraph::DualGraph(std::vector<CurveVertex> vertices, std::vector<GraphEdge> edges)
    : vertices_(std::move(vertices)) {
  std::unordered_set<std::string> ids;
  for (const auto& v : vertices_) {
    if (!ids.insert(v.id).second) throw PreconditionError("duplicate vertex id '" + v.id + "'");
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  edges_.reserve(edges.size());
  for (GraphEdge e : edges) {
    if (e.a >= vertices_.size() || e.b >= vertices_.size())
      throw PreconditionError("edge endpoint out of range");
    if (e.a == e.b) throw PreconditionError("self-loop at '" + vertices_[e.a].id + "'");
    if (e.multiplicity < 1) throw PreconditionError("edge multiplicity must be >= 1");
    if (e.a > e.b) std::swap(e.a, e.b);
    if (!seen.emplace(e.a, e.b).second)
      throw PreconditionError("repeated edge " + vertices_[e.a].id + "-" + vertices_[e.b].id);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const GraphEdge& x, const GraphEdge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
}

std::optional<std::size_t> DualGraph::find(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return i;
  return std::nullopt;
}

std::size_t DualGraph::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw PreconditionError("unknown vertex '" + std::string(id) + "'");
}

std::int64_t DualGraph::intersection(std::size_t i, std::size_t j) const {
  if (i == j) return vertices_.at(i).self_intersection;
  if (i > j) std::swap(i, j);
  for (const auto& e : edges_)
    if (e.a == i && e.b == j) return e.multiplicity;
  return 0;
}

RatMatrix DualGraph::intersection_matrix() const {
  const std::size_t n = vertices_.size();
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = vertices_[i].self_intersection;
  for (const auto& e : edges_) {
    m(e.a, e.b) = e.multiplicity;
    m(e.b, e.a) = e.multiplicity;
  }
  return m;
}

std::vector<std::size_t> DualGraph::neighbours(std::size_t i) const {
  std::vector<std::size_t> out;
  for (const auto& e : edges_) {
    if (e.a == i) out.push_back(e.b);
    if (e.b == i) out.push_back(e.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool DualGraph::is_ordered_path() const {
  if (vertices_.empty()) return true;
  if (edges_.size() != vertices_.size() - 1) return false;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto& e = edges_[k];
    if (e.a != k || e.b != k + 1 || e.multiplicity != 1) return false;
  }
  return true;
}

std::vector<std::int64_t> DualGraph::path_weights() const {
  if (!is_ordered_path()) throw PreconditionError("graph is not an ordered chain");
  std::vector<std::int64_t> w;
  w.reserve(vertices_.size());
  for (const auto& v : vertices_) w.push_back(v.weight());
  return w;
}

std::vector<std::optional<Rational>> DualGraph::coeffs() const {
  std::vector<std::optional<Rational>> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.coeff);
  return out;
}

DualGraph DualGraph::with_coeffs(std::span<const Rational> coeffs) const {
  if (coeffs.size() != vertices_.size()) throw DimensionError("with_coeffs: size mismatch");
  DualGraph g = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) g.vertices_[i].coeff = coeffs[i];
  return g;
}

DualGraph chain(std::span<const std::int64_t> weights, std::string_view prefix) {
  std::vector<CurveVertex> vs;
  std::vector<GraphEdge> es;
  vs.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 1) throw PreconditionError("chain weights must be >= 1");
    vs.push_back(CurveVertex{std::string(prefix) + std::to_string(i + 1), -weights[i], 0, std::nullopt});
    if (i > 0) es.push_back(GraphEdge{i - 1, i, 1});
  }
  return DualGraph(std::move(vs), std::move(es));
}

DualGraph chain(std::initializer_list<std::int64_t> weights, std::string_view prefix) {
  return chain(std::span<const std::int64_t>(weights.begin(), weights.size()), prefix);
}

Rational graph_det(const DualGraph& g) {
  if (g.is_ordered_path()) {
    // Continuant recursion det[w1..wr] = w1 det[w2..wr] - det[w3..wr], with
    // det of the empty tail 1 and of the "tail past the end" 0.
    BigInt next = 1, after = 0;
    const auto& vs = g.vertices();
    for (std::size_t i = vs.size(); i-- > 0;) {
      BigInt cur = BigInt(static_cast<long>(vs[i].weight())) * next - after;
      after = std::move(next);
      next = std::move(cur);
    }
    return Rational(next);
  }
  return det(-g.intersection_matrix());
}

Rational k_dot_vertex(const DualGraph& g, std::size_t v) {
  const auto& c = g.vertex(v);
  return Rational(2 * c.genus - 2 - c.self_intersection);
}

DualGraph blow_up_edge(const DualGraph& g, std::size_t a, std::size_t b, std::string new_id) {
  if (a >= g.size() || b >= g.size() || a == b) throw PreconditionError("blow_up_edge: bad endpoints");
  const std::int64_t mult = g.intersection(a, b);
  if (mult == 0) throw PreconditionError("blow_up_edge: vertices do not meet");
  if (mult > 1) throw UnsupportedOperationError("blow_up_edge: tangential/multiple intersection");
  if (g.find(new_id)) throw PreconditionError("blow_up_edge: id '" + new_id + "' already used");

  std::vector<CurveVertex> vs = g.vertices();
  vs[a].self_intersection -= 1;
  vs[b].self_intersection -= 1;
  std::optional<Rational> coeff;
  if (vs[a].coeff && vs[b].coeff) coeff = *vs[a].coeff + *vs[b].coeff - 1;
  vs.push_back(CurveVertex{std::move(new_id), -1, 0, coeff});
  const std::size_t c = vs.size() - 1;

  std::vector<GraphEdge> es;
  for (const auto& e : g.edges()) {
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) continue;
    es.push_back(e);
  }
  es.push_back(GraphEdge{a, c, 1});
  es.push_back(GraphEdge{b, c, 1});
  return DualGraph(std::move(vs), std::move(es));
}

namespace {

std::vector<DualGraph> components_excluding(const DualGraph& g, std::optional<std::size_t> removed) {
  const std::size_t n = g.size();
  std::vector<std::size_t> comp(n, n);
  std::size_t ncomp = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != n || (removed && s == *removed)) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : g.neighbours(x)) {
        if ((removed && y == *removed) || comp[y] != n) continue;
        comp[y] = ncomp;
        stack.push_back(y);
      }
    }
    ++ncomp;
  }
  std::vector<DualGraph> out;
  out.reserve(ncomp);
  for (std::size_t c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> local(n, n);
    std::vector<CurveVertex> vs;
    for (std::size_t i = 0; i < n; ++i) {
      if (comp[i] != c || (removed && i == *removed)) continue;
      local[i] = vs.size();
      vs.push_back(g.vertex(i));
    }
    std::vector<GraphEdge> es;
    for (const auto& e : g.edges()) {
      if (local[e.a] == n || local[e.b] == n) continue;
      es.push_back(GraphEdge{local[e.a], local[e.b], e.multiplicity});
    }
    out.emplace_back(std::move(vs), std::move(es));
  }
  return out;
}

}  // namespace

std::vector<DualGraph> split_at(const DualGraph& g, std::size_t v) {
  if (v >= g.size()) throw PreconditionError("split_at: vertex out of range");
  return components_excluding(g, v);
}

std::vector<DualGraph> connected_components(const DualGraph& g) { return components_excluding(g, std::nullopt); }

std::vector<Diagnostic> validate(const DualGraph& g, const ValidateOptions& opts) {
  std::vector<Diagnostic> out;
  std::optional<Rational> bound;
  if (opts.epsilon) {
    if (opts.epsilon->sign() <= 0) throw PreconditionError("validate: epsilon must be positive");
    bound = Rational(2) / *opts.epsilon;
  }
  for (const auto& v : g.vertices()) {
    if (v.genus < 0)
      out.push_back({DiagnosticKind::kNegativeGenus, v.id, "genus " + std::to_string(v.genus) + " < 0"});
    if ((opts.minimal_resolution || opts.contractible) && v.self_intersection >= 0)
      out.push_back({DiagnosticKind::kNonNegativeSelfIntersection, v.id,
                     "self-intersection " + std::to_string(v.self_intersection) + " >= 0"});
    else if (opts.minimal_resolution && v.weight() < 2)
      out.push_back({DiagnosticKind::kWeightBelowTwo, v.id,
                     "weight " + std::to_string(v.weight()) + " < 2 in a minimal resolution"});
    if (bound && Rational(v.weight()) > *bound)
      out.push_back({DiagnosticKind::kWeightBound, v.id,
                     "weight " + std::to_string(v.weight()) + " exceeds 2/epsilon = " + bound->str()});
  }
  if (opts.pseudo_effective_k) {
    for (const auto& e : g.edges()) {
      if (g.vertex(e.a).self_intersection == -1 && g.vertex(e.b).self_intersection == -1)
        out.push_back({DiagnosticKind::kMinusOneCurvesMeet, g.vertex(e.a).id,
                       "(-1)-curves " + g.vertex(e.a).id + " and " + g.vertex(e.b).id + " meet"});
    }
  }
  if (opts.contractible && !g.empty() && !is_negative_definite(g.intersection_matrix()))
    out.push_back({DiagnosticKind::kNotNegativeDefinite, "", "intersection matrix is not negative definite"});
  return out;
}

std::string_view to_string(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::kNonNegativeSelfIntersection: return "non_negative_self_intersection";
    case DiagnosticKind::kWeightBelowTwo: return "weight_below_two";
    case DiagnosticKind::kWeightBound: return "weight_bound";
    case DiagnosticKind::kNotNegativeDefinite: return "not_negative_definite";
    case DiagnosticKind::kMinusOneCurvesMeet: return "minus_one_curves_meet";
    case DiagnosticKind::kNegativeGenus: return "negative_genus";
  }
  return "unknown";
}

}  // namespace pluricalc
