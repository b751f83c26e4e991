#include "pluricalc/family.hpp"

#include <algorithm>

#include "pluricalc/error.hpp"
#include "pluricalc/parallel.hpp"

namespace pluricalc {

namespace {

void expect(FamilyInstance& inst, bool ok, const std::string& what) {
  if (!ok) inst.invariant_failures.push_back(what);
}

// (K_W + sum b E) . vertex, K by adjunction.
Rational pulled_dot(const DualGraph& g, std::span<const Rational> b, std::size_t v) {
  Rational out = k_dot_vertex(g, v);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!b[i].is_zero()) out += b[i] * Rational(g.intersection(i, v));
  return out;
}

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

}  // namespace

FamilyInstance build_family(std::int64_t n, std::int64_t k) {
  if (n < 4 || k < 2) throw PreconditionError("X_{n,k} needs n >= 4 and k >= 2");
  FamilyInstance inst;
  inst.n = n;
  inst.k = k;
  inst.kp = k * (n - 1);
  const std::int64_t a = 2 * k * (n - 2);
  const std::int64_t order = a * (n - 1) + 1;
  inst.d = big(2 * k) * big(n - 2) * big(n - 2) * big(2 * k * (n - 1) - 1);
  inst.ambient_weights = {1, 1, a, order};
  inst.o_type = CyclicQuotientType(order, a);

  auto weights = hj_expand(inst.o_type);
  std::reverse(weights.begin(), weights.end());
  DualGraph y = chain(weights);
  inst.coeffs_y = discrepancy_coeffs(y);
  inst.y_chain = y.with_coeffs(inst.coeffs_y);
  const auto L = static_cast<std::int64_t>(weights.size());

  expect(inst, graph_det(inst.y_chain) == Rational(order), "det of the resolution chain differs from the order");
  expect(inst, L == a, "resolution chain length is not 2k(n-2)");
  for (std::size_t i = 0; i < inst.coeffs_y.size(); ++i) {
    expect(inst, inst.coeffs_y[i] == Rational(big(static_cast<std::int64_t>(i + 1) * (n - 2)), big(order)),
           "Y coefficient of E" + std::to_string(i + 1));
  }
  if (L <= inst.kp) throw Error("resolution chain too short to blow up E_{K'} cap E_{K'+1}");

  inst.w_graph = blow_up_edge(inst.y_chain, static_cast<std::size_t>(inst.kp - 1), static_cast<std::size_t>(inst.kp));
  inst.c_index = inst.w_graph.size() - 1;
  expect(inst, inst.w_graph.vertex(inst.c_index).coeff == Rational(n - 3, order), "coefficient of C");

  auto parts = split_at(inst.w_graph, inst.c_index);
  if (parts.size() != 2) throw Error("removing C should leave two chains");
  inst.o1_graph = std::move(parts[0]);
  inst.o2_graph = std::move(parts[1]);
  const std::int64_t kp = inst.kp;
  expect(inst, graph_det(inst.o1_graph) == Rational(2 * kp + 1), "det(o1) = 2k(n-1)+1");
  expect(inst, graph_det(inst.o2_graph) == Rational((n - 3) * (2 * kp - 1)), "det(o2) = (n-3)(2k(n-1)-1)");
  expect(inst, big(a) * big(n - 2) * big(2 * kp - 1) == inst.d, "z-power degree");
  expect(inst, inst.d % a == 0, "2k(n-2) divides d");
  expect(inst, (inst.d - 1) % order == 0, "order divides d - 1");

  const auto b1 = discrepancy_coeffs(inst.o1_graph);
  const auto b2 = discrepancy_coeffs(inst.o2_graph);
  inst.coeffs_x = b1;
  inst.coeffs_x.insert(inst.coeffs_x.end(), b2.begin(), b2.end());
  inst.coeffs_x.emplace_back(0);
  for (std::size_t i = 0; i < b1.size(); ++i)
    expect(inst, b1[i] == Rational(static_cast<std::int64_t>(i + 1), 2 * kp + 1), "o1 coefficient");
  for (std::size_t i = 0; i < b2.size(); ++i) {
    const auto idx = static_cast<std::int64_t>(b1.size() + i + 1);
    expect(inst, b2[i] == Rational(idx - 1, 2 * kp - 1), "o2 coefficient");
  }

  const std::int64_t o2_order = (n - 3) * (2 * kp - 1);
  const std::int64_t o2_q = 2 * k * (n - 3) - 1;
  try {
    inst.o2_stated_type = CyclicQuotientType(o2_order, o2_q);
    const auto stated = hj_expand(inst.o2_stated_type);
    inst.o2_type_matches = equal_up_to_reversal(stated, inst.o2_graph.path_weights());
    if (!inst.o2_type_matches)
      inst.notes.push_back("o2: stated type 1/" + std::to_string(o2_order) + "(1," + std::to_string(o2_q) +
                           ") does not expand to the o2 chain; the chain is kept");
  } catch (const InvalidTypeError& e) {
    inst.o2_type_matches = false;
    inst.notes.push_back(std::string("o2: stated type is not a valid cyclic quotient: ") + e.what());
  }
  return inst;
}

CIntersectionReport check_c_intersection(const FamilyInstance& inst) {
  CIntersectionReport r;
  r.value = pulled_dot(inst.w_graph, inst.coeffs_x, inst.c_index);
  const BigInt kp = big(inst.kp);
  r.closed_form = Rational(BigInt(1), 4 * kp * kp - 1);
  const Rational direct = Rational(-1) + Rational(kp, 2 * kp + 1) + Rational(kp, 2 * kp - 1);
  r.equal = r.value == r.closed_form && direct == r.closed_form;
  const Rational k(inst.k);
  r.below_35 = r.value < (Rational(35) * k * k).reciprocal();
  r.below_5_12 = (Rational(35) * k * k).reciprocal() < Rational(5) / (Rational(12) * k);
  return r;
}

FractionalReport check_fractional_obstruction(const FamilyInstance& inst, std::int64_t m) {
  if (m <= 0 || m % 2 != 0) throw PreconditionError("m must be a positive even integer");
  if (inst.k < m / 2) throw PreconditionError("need k >= l = m/2");
  FractionalReport r;
  r.m = m;
  r.l = m / 2;
  r.term = (Rational(m) * Rational(inst.kp, 2 * inst.kp + 1)).frac() / Rational(m);
  r.lower_l = Rational(5, 12 * r.l);
  r.lower_k = Rational(5, 12 * inst.k);
  r.intersection = check_c_intersection(inst).value;
  r.above_bounds = r.term >= r.lower_l && r.lower_l >= r.lower_k;
  r.dominates = r.term > r.intersection;
  return r;
}

NonNefReport exhaustive_non_nef(const FamilyInstance& inst, std::int64_t m, std::uint64_t budget,
                                std::size_t threads) {
  if (m <= 0) throw PreconditionError("m must be positive");
  const DualGraph& w = inst.w_graph;
  const std::size_t len = inst.y_chain.size();
  NonNefReport r;
  r.m = m;
  for (std::size_t i = 0; i < len; ++i) r.bounds.push_back((Rational(m) * inst.coeffs_x[i]).floor());

  BigInt total = 1;
  for (const auto& b : r.bounds) total *= b + 1;
  if (total > BigInt(static_cast<unsigned long>(budget))) {
    std::string v;
    for (const auto& b : r.bounds) v += (v.empty() ? "" : ",") + b.get_str();
    throw SearchTooLargeError("search space " + total.get_str() + " exceeds budget; bounds (" + v + ")");
  }
  r.searched = total;
  const auto count = total.get_ui();

  // m (K_W + sum (c_i/m) E_i) . V = m K.V + sum c_i E_i.V, kept integral.
  std::vector<std::int64_t> kdot(w.size());
  for (std::size_t v = 0; v < w.size(); ++v) kdot[v] = m * to_int64(k_dot_vertex(w, v).numerator());
  std::vector<std::vector<std::int64_t>> inter(len, std::vector<std::int64_t>(w.size()));
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t v = 0; v < w.size(); ++v) inter[i][v] = w.intersection(i, v);
  std::vector<std::int64_t> radix(len);
  for (std::size_t i = 0; i < len; ++i) radix[i] = to_int64(r.bounds[i]) + 1;

  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(count, 256));
  std::vector<std::uint64_t> nef(chunks, 0), c_only(chunks, 0);
  std::vector<std::optional<std::uint64_t>> first(chunks);
  parallel_for(
      chunks,
      [&](std::size_t ch) {
        const std::uint64_t lo = count * ch / chunks, hi = count * (ch + 1) / chunks;
        std::vector<std::int64_t> c(len);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
          std::uint64_t rest = idx;
          for (std::size_t i = 0; i < len; ++i) {
            c[i] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(radix[i]));
            rest /= static_cast<std::uint64_t>(radix[i]);
          }
          bool rel = true;
          for (std::size_t v = 0; v < len && rel; ++v) {
            std::int64_t s = kdot[v];
            for (std::size_t i = 0; i < len; ++i) s += c[i] * inter[i][v];
            rel = s >= 0;
          }
          std::int64_t sc = kdot[inst.c_index];
          for (std::size_t i = 0; i < len; ++i) sc += c[i] * inter[i][inst.c_index];
          if (rel && sc >= 0) {
            ++nef[ch];
            if (!first[ch]) first[ch] = idx;
          } else if (rel) {
            ++c_only[ch];
          }
        }
      },
      threads);

  r.nef_count = 0;
  r.fail_on_c_only = 0;
  for (std::size_t ch = 0; ch < chunks; ++ch) {
    r.nef_count += BigInt(static_cast<unsigned long>(nef[ch]));
    r.fail_on_c_only += BigInt(static_cast<unsigned long>(c_only[ch]));
    if (first[ch] && !r.witness) {
      std::uint64_t rest = *first[ch];
      std::vector<BigInt> c;
      for (std::size_t i = 0; i < len; ++i) {
        c.emplace_back(static_cast<unsigned long>(rest % static_cast<std::uint64_t>(radix[i])));
        rest /= static_cast<std::uint64_t>(radix[i]);
      }
      r.witness = std::move(c);
    }
  }
  return r;
}

Configuration family_configuration(const FamilyInstance& inst) {
  const DualGraph& w = inst.w_graph;
  std::vector<CurveVertex> vs;
  std::vector<GraphEdge> es;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i != inst.c_index) vs.push_back(w.vertex(i));
  for (const auto& e : w.edges())
    if (e.a != inst.c_index && e.b != inst.c_index) es.push_back(e);
  Configuration cfg;
  cfg.graph = DualGraph(std::move(vs), std::move(es));
  ExternalClass c;
  c.id = w.vertex(inst.c_index).id;
  c.self_sq = Rational(w.vertex(inst.c_index).self_intersection);
  c.k_dot = k_dot_vertex(w, inst.c_index);
  c.test_curve = true;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i != inst.c_index) c.dots.emplace_back(w.intersection(i, inst.c_index));
  cfg.externals.push_back(std::move(c));
  return cfg;
}

ReductionCrossCheck reduction_cross_check(const FamilyInstance& inst, std::int64_t m) {
  ReductionCrossCheck r;
  r.m = m;
  const Configuration cfg = family_configuration(inst);
  const BigInt mm = big(m);
  r.trace = reduction_loop(cfg, mm, reduction_bounds(cfg, mm));
  for (const auto& c : r.trace.iterates)
    if (is_nef(cfg, reduction_divisor(cfg, mm, c))) r.reached_nef = true;
  return r;
}

DegreeReport check_ample_degrees(const FamilyInstance& inst) {
  DegreeReport r;
  const BigInt n = big(inst.n), k = big(inst.k);
  r.d = inst.d;
  BigInt sum = 0;
  for (auto w : inst.ambient_weights) sum += big(w);
  r.d_prime = r.d - sum;
  const BigInt order = big(inst.ambient_weights[3]);
  r.lhs = r.d_prime - order;
  r.rhs = -4 + 2 * k * (n - 2) * (n - 1) * (2 * k * (n - 2) - 3);
  r.identity = r.lhs == r.rhs;
  r.at_least_116 = r.lhs >= 116;
  r.z_power = 2 * k * (n - 2) * (n - 2) * (2 * k * (n - 1) - 1) == r.d;
  r.well_formed = r.d % big(inst.ambient_weights[2]) == 0 && (r.d - 1) % order == 0;
  return r;
}

MldReport check_mld(const FamilyInstance& inst) {
  MldReport r;
  r.mld_o1 = mld_of(inst.o1_graph);
  r.mld_o2 = mld_of(inst.o2_graph);
  r.mld = std::min(r.mld_o1, r.mld_o2);
  r.expected = Rational(2 * inst.k, 2 * inst.k * (inst.n - 1) - 1);
  return r;
}

}  // namespace pluricalc
