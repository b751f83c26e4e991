#include "pluricalc/zariski.hpp"

#include <algorithm>

#include "pluricalc/error.hpp"
#include "pluricalc/singularity.hpp"

namespace pluricalc {

void Configuration::check() const {
  for (const auto& x : externals) {
    if (x.dots.size() != graph.size())
      throw PreconditionError("external " + x.id + ": expected " + std::to_string(graph.size()) + " dots, got " +
                              std::to_string(x.dots.size()));
  }
}

const ExternalClass* Configuration::find_external(const std::string& id) const {
  for (const auto& x : externals)
    if (x.id == id) return &x;
  return nullptr;
}

namespace {

void check_shape(const Configuration& cfg, const LatticeDivisor& d) {
  if (d.coeffs.size() != cfg.graph.size())
    throw DimensionError("divisor has " + std::to_string(d.coeffs.size()) + " coefficients for " +
                         std::to_string(cfg.graph.size()) + " vertices");
}

Rational base_dot_vertex(const Configuration& cfg, const BaseTerm& base, std::size_t j) {
  if (const auto* x = cfg.find_external(base.id)) return Rational(base.multiplier) * x->dots.at(j);
  if (base.id == kCanonicalId) return Rational(base.multiplier) * k_dot_vertex(cfg.graph, j);
  throw PreconditionError("unknown base class '" + base.id + "'");
}

LatticeDivisor subtract_vertices(const LatticeDivisor& d, const std::vector<Rational>& n) {
  LatticeDivisor out = d;
  for (std::size_t i = 0; i < n.size(); ++i) out.coeffs[i] -= n[i];
  return out;
}

bool all_nonneg(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.sign() >= 0; });
}

std::vector<Rational> difference(const LatticeDivisor& a, const LatticeDivisor& b) {
  std::vector<Rational> out(a.coeffs.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeffs[i] - b.coeffs[i];
  return out;
}

void check_pair(const Configuration& cfg, const LatticeDivisor& d, const LatticeDivisor& dtilde) {
  check_shape(cfg, d);
  check_shape(cfg, dtilde);
  if (d.base != dtilde.base) throw PreconditionError("D and Dtilde must have the same base part");
  if (!all_nonneg(difference(d, dtilde))) throw PreconditionError("D - Dtilde is not effective");
  if (!is_relatively_nef(cfg, dtilde)) throw PreconditionError("Dtilde is not relatively nef");
}

}  // namespace

std::vector<Rational> dot_vertices(const Configuration& cfg, const LatticeDivisor& d) {
  check_shape(cfg, d);
  const auto& g = cfg.graph;
  std::vector<Rational> out(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    out[j] = d.coeffs[j] * Rational(g.vertex(j).self_intersection);
    if (d.base) out[j] += base_dot_vertex(cfg, *d.base, j);
  }
  for (const auto& e : g.edges()) {
    out[e.a] += d.coeffs[e.b] * Rational(e.multiplicity);
    out[e.b] += d.coeffs[e.a] * Rational(e.multiplicity);
  }
  return out;
}

Rational dot_vertex(const Configuration& cfg, const LatticeDivisor& d, std::size_t j) {
  check_shape(cfg, d);
  Rational out = d.base ? base_dot_vertex(cfg, *d.base, j) : Rational(0);
  for (std::size_t i = 0; i < cfg.graph.size(); ++i)
    if (!d.coeffs[i].is_zero()) out += d.coeffs[i] * Rational(cfg.graph.intersection(i, j));
  return out;
}

Rational dot_external(const Configuration& cfg, const LatticeDivisor& d, const ExternalClass& x) {
  check_shape(cfg, d);
  Rational out = 0;
  for (std::size_t i = 0; i < d.coeffs.size(); ++i) out += d.coeffs[i] * x.dots.at(i);
  if (!d.base) return out;
  const Rational mult(d.base->multiplier);
  if (d.base->id == x.id) {
    if (!x.self_sq) throw PreconditionError("external " + x.id + " has no self-intersection");
    return out + mult * *x.self_sq;
  }
  if (auto it = x.ext_dots.find(d.base->id); it != x.ext_dots.end()) return out + mult * it->second;
  if (const auto* b = cfg.find_external(d.base->id)) {
    if (auto it = b->ext_dots.find(x.id); it != b->ext_dots.end()) return out + mult * it->second;
  }
  if (d.base->id == kCanonicalId && x.k_dot) return out + mult * *x.k_dot;
  throw PreconditionError("no intersection declared between " + d.base->id + " and " + x.id);
}

bool is_relatively_nef(const Configuration& cfg, const LatticeDivisor& d) { return all_nonneg(dot_vertices(cfg, d)); }

bool is_nef(const Configuration& cfg, const LatticeDivisor& d) {
  if (!is_relatively_nef(cfg, d)) return false;
  for (const auto& x : cfg.externals)
    if (x.test_curve && dot_external(cfg, d, x).sign() < 0) return false;
  return true;
}

ZariskiResult zariski_decompose(const Configuration& cfg, const LatticeDivisor& d) {
  check_shape(cfg, d);
  const std::size_t n = cfg.graph.size();
  const RatMatrix m = cfg.graph.intersection_matrix();
  const auto d_dots = dot_vertices(cfg, d);

  std::vector<Rational> neg(n);
  std::vector<std::size_t> support;
  std::vector<bool> in_support(n, false);
  while (true) {
    const auto p_dots = dot_vertices(cfg, subtract_vertices(d, neg));
    bool grown = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (p_dots[j].sign() < 0 && !in_support[j]) {
        in_support[j] = true;
        support.push_back(j);
        grown = true;
      }
    }
    if (!grown) break;
    std::sort(support.begin(), support.end());
    const RatMatrix ms = m.principal(support);
    if (!is_negative_definite(ms))
      throw DecompositionError("support of size " + std::to_string(support.size()) +
                               " is not negative definite; D is not pseudo-effective over the universe");
    RatVector rhs(support.size());
    for (std::size_t i = 0; i < support.size(); ++i) rhs[i] = d_dots[support[i]];
    const RatVector x = solve(ms, rhs);
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (x[i].sign() < 0) throw DecompositionError("negative part acquired a negative coefficient");
      neg[support[i]] = x[i];
    }
  }
  ZariskiResult out;
  out.P = subtract_vertices(d, neg);
  out.N = LatticeDivisor{std::nullopt, std::move(neg)};
  out.support = std::move(support);
  return out;
}

std::optional<ZariskiResult> zariski_decompose_exhaustive(const Configuration& cfg, const LatticeDivisor& d) {
  check_shape(cfg, d);
  const std::size_t n = cfg.graph.size();
  if (n > 16) throw SearchTooLargeError("exhaustive Zariski oracle limited to 16 vertices");
  const RatMatrix m = cfg.graph.intersection_matrix();
  const auto d_dots = dot_vertices(cfg, d);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    const RatMatrix ms = m.principal(s);
    if (!is_negative_definite(ms)) continue;
    RatVector rhs(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) rhs[i] = d_dots[s[i]];
    const RatVector x = solve(ms, rhs);
    if (!all_nonneg(x)) continue;
    std::vector<Rational> neg(n);
    for (std::size_t i = 0; i < s.size(); ++i) neg[s[i]] = x[i];
    LatticeDivisor p = subtract_vertices(d, neg);
    if (!is_relatively_nef(cfg, p)) continue;
    return ZariskiResult{std::move(p), LatticeDivisor{std::nullopt, std::move(neg)}, std::move(s)};
  }
  return std::nullopt;
}

bool check_monotone(const Configuration& cfg, const LatticeDivisor& d, const LatticeDivisor& dtilde) {
  check_pair(cfg, d, dtilde);
  const auto z = zariski_decompose(cfg, d);
  return all_nonneg(difference(z.P, dtilde));
}

FloorLoopResult floor_round_loop(const Configuration& cfg, const LatticeDivisor& d, const LatticeDivisor& dtilde,
                                 bool birational) {
  check_pair(cfg, d, dtilde);
  for (std::size_t i = 0; i < d.coeffs.size(); ++i) {
    if (!d.coeffs[i].is_integer() || !dtilde.coeffs[i].is_integer())
      throw PreconditionError("floor_round_loop needs integral vertex coefficients");
  }
  FloorLoopResult out;
  out.birational = birational;
  out.r0 = 0;
  for (const auto& x : difference(d, dtilde)) out.r0 += x.numerator();

  LatticeDivisor cur = d;
  out.trace.push_back(cur);
  while (true) {
    auto z = zariski_decompose(cfg, cur);
    const bool done = std::all_of(z.N.coeffs.begin(), z.N.coeffs.end(), [](const Rational& x) { return x.is_zero(); });
    out.decompositions.push_back(z);
    if (done) break;
    if (BigInt(static_cast<unsigned long>(out.steps)) >= out.r0)
      throw DecompositionError("floor loop did not stabilise within r0 = " + out.r0.get_str() + " steps");
    for (auto& c : z.P.coeffs) c = Rational(c.floor());
    cur = std::move(z.P);
    ++out.steps;
    out.trace.push_back(cur);
  }
  out.result = std::move(cur);
  return out;
}

LatticeDivisor reduction_divisor(const Configuration& cfg, const BigInt& m, const std::vector<BigInt>& c) {
  if (m <= 0) throw PreconditionError("m must be positive");
  if (c.size() != cfg.graph.size()) throw DimensionError("coefficient vector size mismatch");
  LatticeDivisor d;
  d.base = BaseTerm{kCanonicalId, 1};
  d.coeffs.reserve(c.size());
  for (const auto& ci : c) d.coeffs.emplace_back(ci, m);
  return d;
}

std::vector<BigInt> reduction_bounds(const Configuration& cfg, const BigInt& m) {
  const auto b = discrepancy_coeffs(cfg.graph);
  std::vector<BigInt> out;
  out.reserve(b.size());
  for (const auto& bi : b) out.push_back((Rational(m) * bi).floor());
  return out;
}

ReductionStep coefficient_reduction(const Configuration& cfg, const BigInt& m, const std::vector<BigInt>& c) {
  const LatticeDivisor d = reduction_divisor(cfg, m, c);
  const auto bounds = reduction_bounds(cfg, m);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] > bounds[i])
      throw PreconditionError("c[" + std::to_string(i) + "] = " + c[i].get_str() + " outside [0, " +
                              bounds[i].get_str() + "]");
  }
  const auto z = zariski_decompose(cfg, d);
  ReductionStep out;
  out.b = z.N.coeffs;
  out.fixpoint = std::all_of(out.b.begin(), out.b.end(), [](const Rational& x) { return x.is_zero(); });
  out.next.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out.next.push_back((Rational(c[i]) - Rational(m) * out.b[i]).floor());
  return out;
}

ReductionTrace reduction_loop(const Configuration& cfg, const BigInt& m, const std::vector<BigInt>& c,
                              bool fixed_part_hypothesis) {
  ReductionTrace out;
  out.fixed_part_hypothesis = fixed_part_hypothesis;
  out.iterates.push_back(c);
  const auto bounds = reduction_bounds(cfg, m);
  while (true) {
    auto step = coefficient_reduction(cfg, m, out.iterates.back());
    if (step.fixpoint) break;
    for (std::size_t i = 0; i < step.next.size(); ++i)
      if (step.next[i] < 0 || step.next[i] > bounds[i]) out.left_range = true;
    out.iterates.push_back(std::move(step.next));
    if (out.left_range) break;
  }
  return out;
}

}  // namespace pluricalc
