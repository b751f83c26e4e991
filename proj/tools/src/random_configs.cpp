#include "pluricalc_cli/random_configs.hpp"

#include "pluricalc/ratmat.hpp"

namespace pluricalc::cli {

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

DualGraph random_graph(Rng& rng, std::size_t max_vertices) {
  while (true) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_vertices)));
    std::vector<CurveVertex> vs;
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t self = uniform(rng, 0, 9) == 0 ? -1 : -uniform(rng, 2, 5);
      vs.push_back(CurveVertex{"C" + std::to_string(i + 1), self, uniform(rng, 0, 4) == 0 ? 1 : 0, {}});
    }
    std::vector<GraphEdge> es;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (uniform(rng, 0, 99) < 35) es.push_back(GraphEdge{a, b, uniform(rng, 0, 5) == 0 ? 2 : 1});
    DualGraph g(std::move(vs), std::move(es));
    if (is_negative_definite(g.intersection_matrix())) return g;
  }
}

Rational small_rational(Rng& rng, bool integral) {
  const std::int64_t den = integral ? 1 : uniform(rng, 1, 3);
  return Rational(uniform(rng, -2 * den, 3 * den), den);
}

}  // namespace

Configuration random_configuration(Rng& rng, std::size_t max_vertices) {
  Configuration cfg;
  cfg.graph = random_graph(rng, max_vertices);
  ExternalClass b;
  b.id = "B";
  for (std::size_t i = 0; i < cfg.graph.size(); ++i) b.dots.emplace_back(uniform(rng, -3, 3));
  b.self_sq = Rational(uniform(rng, 0, 4));
  cfg.externals.push_back(std::move(b));
  return cfg;
}

Configuration random_nef_base_configuration(Rng& rng, std::size_t max_vertices) {
  Configuration cfg = random_configuration(rng, max_vertices);
  for (auto& x : cfg.externals.front().dots) x = Rational(uniform(rng, 0, 4));
  return cfg;
}

LatticeDivisor random_divisor(Rng& rng, const Configuration& cfg, bool integral) {
  LatticeDivisor d;
  d.base = BaseTerm{"B", uniform(rng, 1, 2)};
  for (std::size_t i = 0; i < cfg.graph.size(); ++i) d.coeffs.push_back(small_rational(rng, integral));
  return d;
}

DivisorPair random_pair(Rng& rng, const Configuration& cfg, bool integral) {
  DivisorPair p;
  p.dtilde.base = BaseTerm{"B", 1};
  p.dtilde.coeffs.assign(cfg.graph.size(), Rational(0));
  // Shrink towards the always-nef B until a relatively nef target appears.
  for (int attempt = 0; attempt < 64; ++attempt) {
    LatticeDivisor t;
    t.base = BaseTerm{"B", 1};
    for (std::size_t i = 0; i < cfg.graph.size(); ++i)
      t.coeffs.push_back(attempt < 48 ? small_rational(rng, integral) : Rational(uniform(rng, -1, 0)));
    if (is_relatively_nef(cfg, t)) {
      p.dtilde = std::move(t);
      break;
    }
  }
  p.d = p.dtilde;
  for (auto& c : p.d.coeffs) {
    const std::int64_t den = integral ? 1 : uniform(rng, 1, 3);
    c += Rational(uniform(rng, 0, 3 * den), den);
  }
  return p;
}

}  // namespace pluricalc::cli
