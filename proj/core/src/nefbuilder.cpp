#include "pluricalc/nefbuilder.hpp"

#include <algorithm>

#include "pluricalc/error.hpp"
#include "pluricalc/singularity.hpp"

namespace pluricalc {

DualGraph NefInput::graph() const {
  std::vector<CurveVertex> vs;
  std::vector<GraphEdge> es;
  const auto ks = active_chains();
  for (std::size_t i = 0; i < ks.size(); ++i) {
    for (std::int64_t j = 1; j <= ks[i]; ++j) {
      vs.push_back(CurveVertex{"E" + std::to_string(i + 1) + "_" + std::to_string(j), j == ks[i] ? -3 : -2, 0, {}});
      if (j > 1) es.push_back(GraphEdge{vs.size() - 2, vs.size() - 1, 1});
    }
  }
  const std::size_t offset = vs.size();
  for (const auto& v : f_graph.vertices()) vs.push_back(v);
  for (const auto& e : f_graph.edges()) es.push_back(GraphEdge{e.a + offset, e.b + offset, e.multiplicity});
  return DualGraph(std::move(vs), std::move(es));
}

std::vector<Rational> NefInput::pullback() const {
  std::vector<Rational> a;
  for (auto k : active_chains())
    for (std::int64_t j = 1; j <= k; ++j) a.emplace_back(j, 2 * k + 1);
  a.insert(a.end(), f_coeffs.begin(), f_coeffs.end());
  return a;
}

void NefInput::check() const {
  if (m0 <= 0) throw PreconditionError("m0 must be positive");
  if (n2 < 1) throw PreconditionError("n2 must be positive");
  if (f_coeffs.size() != f_graph.size()) throw DimensionError("F coefficients do not match the F graph");
  for (auto k : active_chains())
    if (k < n2) throw PreconditionError("chain length " + std::to_string(k) + " below n2 = " + std::to_string(n2));
  const BigInt step = 2 * n2 + 1;
  if (m0 % step != 0) throw InvalidM0Error("2 n2 + 1 = " + step.get_str() + " does not divide m0 = " + m0.get_str());
  for (std::size_t i = 0; i < f_coeffs.size(); ++i) {
    if (!(Rational(m0) * f_coeffs[i]).is_integer())
      throw InvalidM0Error("m0 a is not integral on F vertex " + f_graph.vertex(i).id);
  }
}

NefInput make_nef_input(BigInt m0, std::int64_t n2, std::vector<std::int64_t> chains, std::optional<DualGraph> f,
                        bool rational) {
  NefInput inp;
  inp.m0 = std::move(m0);
  inp.n2 = n2;
  inp.chains = std::move(chains);
  inp.rational = rational;
  if (f) {
    inp.f_coeffs = discrepancy_coeffs(*f);
    inp.f_graph = std::move(*f);
  }
  return inp;
}

std::vector<BigInt> build_coeffs(const NefInput& inp) {
  inp.check();
  const BigInt unit = inp.m0 / (2 * inp.n2 + 1);
  std::vector<BigInt> c;
  for (auto k : inp.active_chains()) {
    for (std::int64_t j = 1; j <= k; ++j) {
      const std::int64_t depth = j - (k - inp.n2);
      c.push_back(depth > 0 ? unit * depth : BigInt(0));
    }
  }
  for (const auto& a : inp.f_coeffs) c.push_back((Rational(inp.m0) * a).numerator());
  return c;
}

NefCertificate verify_exceptional(const NefInput& inp, const std::vector<BigInt>& c) {
  const DualGraph g = inp.graph();
  if (c.size() != g.size()) throw DimensionError("coefficient vector size mismatch");
  const auto a = inp.pullback();
  NefCertificate cert;
  cert.coeffs = c;
  cert.intersections.resize(g.size());
  for (std::size_t j = 0; j < g.size(); ++j)
    cert.intersections[j] = Rational(inp.m0) * k_dot_vertex(g, j) + Rational(c[j] * g.vertex(j).self_intersection);
  for (const auto& e : g.edges()) {
    cert.intersections[e.a] += Rational(c[e.b] * e.multiplicity);
    cert.intersections[e.b] += Rational(c[e.a] * e.multiplicity);
  }
  cert.bound_ok.resize(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) cert.bound_ok[j] = c[j] >= 0 && c[j] <= (Rational(inp.m0) * a[j]).floor();
  cert.nef = std::all_of(cert.intersections.begin(), cert.intersections.end(),
                         [](const Rational& x) { return x.sign() >= 0; });
  cert.bounds_hold = std::all_of(cert.bound_ok.begin(), cert.bound_ok.end(), [](bool b) { return b; });
  return cert;
}

std::vector<Rational> expected_chain_profile(const BigInt& m0, std::int64_t n2, std::int64_t k) {
  std::vector<Rational> out(static_cast<std::size_t>(k), Rational(0));
  if (k - n2 >= 1) out[static_cast<std::size_t>(k - n2 - 1)] = Rational(m0, BigInt(2 * n2 + 1));
  return out;
}

ExternalReport external_inequalities(std::int64_t n2, const Rational& gamma0, std::int64_t t,
                                     const std::vector<std::int64_t>& k_list, const BigInt& m0) {
  ExternalReport r;
  r.t = t;
  const Rational M(m0);
  const Rational top(n2, 2 * n2 + 1);  // n2/(2n2+1)
  if (n2 < 1 || m0 <= 0 || t < 0) {
    r.preconditions_ok = false;
    r.notes.push_back("n2, m0 must be positive and t non-negative");
    return r;
  }
  if (gamma0.sign() <= 0) {
    r.preconditions_ok = false;
    r.notes.push_back("gamma0 must be positive");
  } else if (BigInt(static_cast<long>(n2)) < gamma0.reciprocal().ceil()) {
    r.preconditions_ok = false;
    r.notes.push_back("n2 < ceil(1/gamma0) = " + gamma0.reciprocal().ceil().get_str());
  }
  if (t <= 2) {
    r.case_label = "t<=2";
    if (static_cast<std::int64_t>(k_list.size()) < t) {
      r.preconditions_ok = false;
      r.notes.push_back("need at least t chain lengths");
      return r;
    }
    r.value = M * gamma0;
    for (std::int64_t i = 0; i < t; ++i) {
      const auto k = k_list[static_cast<std::size_t>(i)];
      if (k < n2) {
        r.preconditions_ok = false;
        r.notes.push_back("k = " + std::to_string(k) + " below n2");
      }
      r.value -= M * (unit_term(k) - top);
    }
    r.bound = M * gamma0 - M * Rational(1, 2 * n2 + 1);
  } else {
    r.case_label = "t>=3";
    r.value = M * (Rational(-1) + Rational(t) * top);
    r.bound = M * Rational(n2 - 1, 2 * n2 + 1);
  }
  r.chain_ok = r.value >= r.bound;
  r.positive = r.bound.sign() > 0;
  return r;
}

std::int64_t choose_n2(const BigInt& n1, const Rational& gamma0) {
  if (gamma0.sign() <= 0) throw PreconditionError("gamma0 must be positive");
  BigInt n2 = std::max(BigInt(10), std::max(n1, gamma0.reciprocal().ceil()));
  return to_int64(n2);
}

ConstantsReport constants_report(const BigInt& n1, const Rational& gamma0, const BigInt& m1) {
  ConstantsReport r;
  r.n1 = n1;
  r.gamma0 = gamma0;
  r.n2 = choose_n2(n1, gamma0);
  r.m0 = n1;
  for (std::int64_t i = 1; i <= r.n2; ++i) r.m0 *= 2 * i + 1;
  r.m1 = m1;
  r.m2 = r.m0 * m1;
  r.m = 192 * r.m2;
  return r;
}

}  // namespace pluricalc
