#include "pluricalc/singularity.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "pluricalc/error.hpp"
#include "pluricalc/parallel.hpp"

namespace pluricalc {

CyclicQuotientType::CyclicQuotientType(std::int64_t order, std::int64_t weight) : order_(order), weight_(weight) {
  if (order < 2 || weight < 1 || weight >= order)
    throw InvalidTypeError("1/" + std::to_string(order) + "(1," + std::to_string(weight) +
                           "): need 1 <= q < n");
  if (std::gcd(order, weight) != 1)
    throw InvalidTypeError("1/" + std::to_string(order) + "(1," + std::to_string(weight) + "): gcd(n, q) != 1");
}

CyclicQuotientType CyclicQuotientType::dual() const {
  BigInt inv;
  const BigInt q(static_cast<long>(weight_)), n(static_cast<long>(order_));
  mpz_invert(inv.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
  return CyclicQuotientType(order_, to_int64(inv));
}

std::vector<std::int64_t> hj_expand(const CyclicQuotientType& t) {
  std::vector<std::int64_t> out;
  std::int64_t n = t.order(), q = t.weight();
  while (q != 0) {
    const std::int64_t b = (n + q - 1) / q;
    out.push_back(b);
    const std::int64_t r = b * q - n;
    n = q;
    q = r;
  }
  return out;
}

CyclicQuotientType chain_type(std::span<const std::int64_t> weights) {
  if (weights.empty()) throw PreconditionError("chain_type: empty chain is a smooth point");
  for (auto w : weights)
    if (w < 2) throw PreconditionError("chain_type: weights must be >= 2");
  // Continuants from the back: after the loop `next` is det(chain), `after` is
  // det(chain minus first vertex).
  BigInt next = 1, after = 0;
  for (std::size_t i = weights.size(); i-- > 0;) {
    BigInt cur = BigInt(static_cast<long>(weights[i])) * next - after;
    after = std::move(next);
    next = std::move(cur);
  }
  return CyclicQuotientType(to_int64(next), to_int64(after));
}

bool equal_up_to_reversal(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end()) ||
         std::equal(a.begin(), a.end(), b.rbegin(), b.rend());
}

namespace {

// Edges only between consecutive indices with multiplicity 1 (a disjoint union
// of ordered chains qualifies).
bool is_ordered_tridiagonal(const DualGraph& g) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [](const GraphEdge& e) { return e.b == e.a + 1 && e.multiplicity == 1; });
}

}  // namespace

std::vector<Rational> discrepancy_coeffs(const DualGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) return {};
  RatVector rhs(n);
  for (std::size_t j = 0; j < n; ++j) rhs[j] = -k_dot_vertex(g, j);

  if (is_ordered_tridiagonal(g)) {
    RatVector diag(n), off(n - 1);
    for (std::size_t i = 0; i < n; ++i) diag[i] = g.vertex(i).self_intersection;
    for (const auto& e : g.edges()) off[e.a] = e.multiplicity;
    if (!is_negative_definite_tridiagonal(off, diag))
      throw NotContractibleError("intersection matrix is not negative definite");
    return solve_tridiagonal(off, diag, off, rhs);
  }
  const RatMatrix m = g.intersection_matrix();
  if (!is_negative_definite(m)) throw NotContractibleError("intersection matrix is not negative definite");
  return solve(m, rhs);
}

std::vector<Rational> pullback_residuals(const DualGraph& g, std::span<const Rational> b) {
  if (b.size() != g.size()) throw DimensionError("pullback_residuals: size mismatch");
  std::vector<Rational> out(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    out[j] = k_dot_vertex(g, j) + b[j] * Rational(g.vertex(j).self_intersection);
  }
  for (const auto& e : g.edges()) {
    out[e.a] += b[e.b] * Rational(e.multiplicity);
    out[e.b] += b[e.a] * Rational(e.multiplicity);
  }
  return out;
}

Rational mld_from_coeffs(std::span<const Rational> b) {
  Rational best = 1;
  for (const auto& bi : b) {
    const Rational ld = Rational(1) - bi;
    if (ld.sign() <= 0) throw NonKltError("log discrepancy " + ld.str() + " <= 0: not klt");
    best = std::min(best, ld);
  }
  return best;
}

Rational mld_of(const DualGraph& g) {
  const auto b = discrepancy_coeffs(g);
  return mld_from_coeffs(b);
}

std::int64_t cartier_index_K(const CyclicQuotientType& t) {
  return t.order() / std::gcd(t.order(), t.weight() + 1);
}

BigInt coefficient_denominator_lcm(std::span<const Rational> b) {
  BigInt acc = 1;
  for (const auto& x : b) acc = lcm(acc, x.denominator());
  return acc;
}

ResolutionData resolve(const CyclicQuotientType& t) {
  auto weights = hj_expand(t);
  DualGraph g = chain(weights);
  auto coeffs = discrepancy_coeffs(g);
  Rational mld = mld_from_coeffs(coeffs);
  return ResolutionData{t, g.with_coeffs(coeffs), std::move(weights), std::move(coeffs), std::move(mld),
                        cartier_index_K(t)};
}

Rational unit_term(std::int64_t k) { return Rational(k, 2 * k + 1); }

namespace {

// Solves k/(2k+1) = r for a positive integer k.
std::optional<std::int64_t> invert_unit_term(const Rational& r) {
  if (r.sign() <= 0 || r >= Rational(1, 2)) return std::nullopt;
  const Rational k = r / (Rational(1) - Rational(2) * r);
  if (!k.is_integer()) return std::nullopt;
  return to_int64(k.numerator());
}

void enumerate_solutions(std::int64_t n0, const Rational& remaining, std::size_t slots, std::int64_t min_k,
                         std::vector<std::int64_t>& ks, std::int64_t l, std::vector<UnitSolution>& out) {
  if (slots == 0) {
    if (remaining.is_zero()) out.push_back(UnitSolution{ks, l});
    return;
  }
  if (slots == 1) {
    if (auto k = invert_unit_term(remaining); k && *k >= min_k) {
      ks.push_back(*k);
      out.push_back(UnitSolution{ks, l});
      ks.pop_back();
    }
    return;
  }
  // Every term is >= 1/3, and a non-final term of a sorted solution has
  // k <= n0 (see the m = 2 bound 2k_1 + 1 <= n0 / l; m = 3 forces k = 1).
  for (std::int64_t k = min_k; k <= n0; ++k) {
    const Rational t = unit_term(k);
    if (t * Rational(static_cast<long>(slots)) > remaining) break;
    ks.push_back(k);
    enumerate_solutions(n0, remaining - t, slots - 1, k, ks, l, out);
    ks.pop_back();
  }
}

struct GammaSearch {
  std::int64_t n0 = 1;
  std::int64_t k_bound = 1;
  Rational best = 1;
  std::optional<UnitSolution> witness;
  bool clipped = false;  // some branch wanted k beyond the window

  static constexpr std::size_t kMaxTerms = 6;

  void offer(const Rational& value, const std::vector<std::int64_t>& ks, std::int64_t l) {
    if (value.sign() > 0 && value < best) {
      best = value;
      witness = UnitSolution{ks, l};
    }
  }

  // partial = -1 + l/n0 + sum of chosen terms, currently <= 0.
  void descend(const Rational& partial, std::int64_t min_k, std::vector<std::int64_t>& ks, std::int64_t l) {
    if (ks.size() == kMaxTerms) return;
    const std::size_t slots_after = kMaxTerms - ks.size() - 1;
    const Rational need = -partial;  // a term larger than this makes the sum positive
    // Smallest k with k/(2k+1) > need.
    std::int64_t k_star;
    if (need < Rational(1, 3)) {
      k_star = min_k;
    } else if (need >= Rational(1, 2)) {
      k_star = k_bound + 1;  // no single term suffices
    } else {
      const Rational x = need / (Rational(1) - Rational(2) * need);
      const BigInt f = x.floor() + 1;
      k_star = f > k_bound ? k_bound + 1 : std::max<std::int64_t>(min_k, to_int64(f));
    }
    if (k_star <= k_bound) {
      ks.push_back(k_star);
      offer(partial + unit_term(k_star), ks, l);
      ks.pop_back();
    } else if (need < Rational(1, 2)) {
      clipped = true;
    }
    // Terms k < k_star keep the sum <= 0; go deeper when more slots remain and
    // the remaining slots can still lift the sum above zero.
    const std::int64_t last = std::min(k_star - 1, k_bound);
    for (std::int64_t k = min_k; k <= last; ++k) {
      const Rational next = partial + unit_term(k);
      if (next + Rational(static_cast<long>(slots_after), 2) <= 0) continue;
      if (next > best) break;
      ks.push_back(k);
      descend(next, k, ks, l);
      ks.pop_back();
    }
  }
};

}  // namespace

UnitEquationData solve_unit_equation(std::int64_t n0) {
  if (n0 < 1) throw PreconditionError("solve_unit_equation: n0 must be >= 1");
  UnitEquationData out;
  out.n0 = n0;
  std::vector<std::int64_t> ks;
  for (std::int64_t l = 0; l <= n0; ++l) {
    const Rational remaining = Rational(1) - Rational(l, n0);
    for (std::size_t m = 0; m <= 3; ++m) enumerate_solutions(n0, remaining, m, 1, ks, l, out.solutions);
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  out.n1 = n0;
  for (const auto& s : out.solutions) out.I0.insert(s.ks.begin(), s.ks.end());
  for (auto g : out.I0) out.n1 *= 2 * g + 1;

  out.k_bound = n0 * n0;
  out.l_bound = 2 * n0;
  GammaSearch search;
  search.n0 = n0;
  search.k_bound = out.k_bound;
  for (std::int64_t l = 0; l <= out.l_bound; ++l) {
    const Rational base = Rational(l, n0) - 1;
    std::vector<std::int64_t> chosen;
    if (base.sign() > 0) {
      search.offer(base, chosen, l);
      continue;
    }
    search.descend(base, 1, chosen, l);
  }
  out.gamma0 = search.best;
  out.gamma0_witness = search.witness;
  if (search.witness) {
    const auto& w = *search.witness;
    out.gamma0_interior = w.l < out.l_bound &&
                          std::all_of(w.ks.begin(), w.ks.end(), [&](auto k) { return k < out.k_bound; });
  }
  return out;
}

namespace {

std::optional<std::int64_t> special_k_of(std::span<const std::int64_t> w) {
  // [2 x (k-1), 3] up to reversal is 1/(2k+1)(1,k).
  const std::size_t threes = std::count(w.begin(), w.end(), 3);
  const std::size_t twos = std::count(w.begin(), w.end(), 2);
  if (threes != 1 || twos + 1 != w.size()) return std::nullopt;
  if (w.front() != 3 && w.back() != 3) return std::nullopt;
  return static_cast<std::int64_t>(w.size());
}

bool passes(const Rational& mld, const ClassifyOptions& o) { return o.strict ? mld > o.epsilon : mld >= o.epsilon; }

}  // namespace

ClassificationReport classify_chains(const ClassifyOptions& opts) {
  if (opts.epsilon.sign() <= 0) throw PreconditionError("classify_chains: epsilon must be positive");
  if (opts.max_weight < 2 || opts.max_len < 1) throw PreconditionError("classify_chains: empty search window");

  const auto num_first = static_cast<std::size_t>(opts.max_weight - 1);
  std::vector<std::vector<ClassifiedChain>> per_first(num_first);

  parallel_for(
      num_first,
      [&](std::size_t slot) {
        std::vector<std::int64_t> w{static_cast<std::int64_t>(slot) + 2};
        auto& sink = per_first[slot];
        // Extending a chain only raises the discrepancy coefficients, so a
        // prefix failing the mld filter prunes its whole subtree.
        std::function<void()> visit = [&] {
          const DualGraph g = chain(w);
          const auto b = discrepancy_coeffs(g);
          const Rational mld = mld_from_coeffs(b);
          if (!passes(mld, opts)) return;
          if (!std::lexicographical_compare(w.rbegin(), w.rend(), w.begin(), w.end())) {
            const auto t = chain_type(w);
            sink.push_back(ClassifiedChain{w, t.order(), t.weight(), mld, cartier_index_K(t), special_k_of(w)});
          }
          if (static_cast<std::int64_t>(w.size()) == opts.max_len) return;
          for (std::int64_t x = 2; x <= opts.max_weight; ++x) {
            w.push_back(x);
            visit();
            w.pop_back();
          }
        };
        visit();
      },
      opts.threads);

  ClassificationReport rep;
  rep.options = opts;
  for (auto& part : per_first)
    for (auto& c : part) rep.chains.push_back(std::move(c));
  std::sort(rep.chains.begin(), rep.chains.end(),
            [](const ClassifiedChain& a, const ClassifiedChain& b) {
              return std::tie(a.weights) < std::tie(b.weights);
            });
  rep.total = rep.chains.size();
  for (const auto& c : rep.chains) {
    if (c.special_k) {
      ++rep.special_count;
      rep.special_ks.insert(*c.special_k);
      continue;
    }
    ++rep.other_count;
    ++rep.other_index_histogram[c.cartier_index];
    if (c.cartier_index > rep.other_max_cartier_index) {
      rep.other_max_cartier_index = c.cartier_index;
      rep.other_max_witness = c;
    }
  }
  return rep;
}

}  // namespace pluricalc
