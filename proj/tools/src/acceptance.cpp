#include "pluricalc_cli/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <mutex>
#include <numeric>

#include "pluricalc/error.hpp"
#include "pluricalc/family.hpp"
#include "pluricalc/nefbuilder.hpp"
#include "pluricalc/parallel.hpp"
#include "pluricalc/singularity.hpp"
#include "pluricalc/toric3.hpp"
#include "pluricalc/zariski.hpp"
#include "pluricalc_cli/random_configs.hpp"

namespace pluricalc::cli {

namespace {

// Collects mismatches; a criterion passes when none were recorded.
struct Tally {
  std::vector<std::string> fails;
  std::vector<std::string> info;
  std::mutex mu;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    std::lock_guard lock(mu);
    if (fails.size() < 20) fails.push_back(what);
  }
  void expect_eq(const std::string& what, const Rational& got, const Rational& want) {
    expect(got == want, what + ": got " + got.str() + ", expected " + want.str());
  }
  void note(std::string s) { info.push_back(std::move(s)); }
};

Rational mutated(const Rational& r, bool mutate) { return mutate ? r - Rational(1, r.denominator()) : r; }

std::vector<std::int64_t> special_chain(std::int64_t k) {
  std::vector<std::int64_t> w(static_cast<std::size_t>(k - 1), 2);
  w.push_back(3);
  return w;
}

bool is_special_shape(const std::vector<std::int64_t>& w) {
  if (w.empty()) return false;
  auto is2 = [](std::int64_t x) { return x == 2; };
  return (w.back() == 3 && std::all_of(w.begin(), w.end() - 1, is2)) ||
         (w.front() == 3 && std::all_of(w.begin() + 1, w.end(), is2));
}

void c1_hj_fixture(const AcceptOptions& o, Tally& t) {
  const auto r = resolve(CyclicQuotientType(7, 2));
  t.expect(r.weights == std::vector<std::int64_t>{4, 2}, "hj_expand(7,2) is not [4,2]");
  t.expect(r.coeffs.size() == 2, "expected two coefficients");
  if (r.coeffs.size() == 2) {
    t.expect_eq("b1", r.coeffs[0], mutated(Rational(4, 7), o.mutate));
    t.expect_eq("b2", r.coeffs[1], Rational(2, 7));
  }
  t.note("weights [4,2], coeffs " + r.coeffs[0].str() + ", " + r.coeffs[1].str());
}

void c2_pullback(const AcceptOptions& o, Tally& t) {
  constexpr std::int64_t kMax = 500;
  std::vector<std::size_t> counts(kMax + 1, 0);
  parallel_for(
      kMax - 1,
      [&](std::size_t idx) {
        const std::int64_t n = static_cast<std::int64_t>(idx) + 2;
        for (std::int64_t q = 1; q < n; ++q) {
          if (std::gcd(n, q) != 1) continue;
          const DualGraph g = chain(hj_expand(CyclicQuotientType(n, q)));
          const auto b = discrepancy_coeffs(g);
          const auto res = pullback_residuals(g, b);
          t.expect(std::all_of(res.begin(), res.end(), [](const Rational& x) { return x.is_zero(); }),
                   "nonzero residual at 1/" + std::to_string(n) + "(1," + std::to_string(q) + ")");
          t.expect(graph_det(g) == Rational(n), "det mismatch at n = " + std::to_string(n));
          ++counts[static_cast<std::size_t>(n)];
        }
      },
      o.threads);
  t.note(std::to_string(std::accumulate(counts.begin(), counts.end(), std::size_t{0})) + " types with n <= 500");
}

void c3_mld(const AcceptOptions& o, Tally& t) {
  for (std::int64_t k = 1; k <= 100; ++k) {
    const Rational want(k + 1, 2 * k + 1);
    t.expect_eq("mld chain k=" + std::to_string(k), mld_of(chain(special_chain(k))), want);
    t.expect_eq("mld type k=" + std::to_string(k), resolve(CyclicQuotientType(2 * k + 1, k)).mld, want);
  }
  for (std::int64_t n = 4; n <= 8; ++n) {
    for (std::int64_t k = 2; k <= 10; ++k) {
      const auto r = check_mld(build_family(n, k));
      t.expect_eq("mld X_{" + std::to_string(n) + "," + std::to_string(k) + "}", r.mld,
                  mutated(Rational(2 * k, 2 * k * (n - 1) - 1), o.mutate));
      t.expect(r.mld_o2 == r.mld && r.mld_o1 > r.mld_o2, "minimum not attained at o2");
    }
  }
  t.note("mld(1/(2k+1)(1,k)) = (k+1)/(2k+1) for k <= 100; mld(X_{4,2}) = " + check_mld(build_family(4, 2)).mld.str());
}

void c4_c_intersection(const AcceptOptions&, Tally& t) {
  for (std::int64_t n = 4; n <= 8; ++n) {
    for (std::int64_t k = 2; k <= 10; ++k) {
      const auto r = check_c_intersection(build_family(n, k));
      const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
      t.expect(r.equal, "f*K.C " + r.value.str() + " != " + r.closed_form.str() + " at " + tag);
      t.expect(r.below_35 && r.below_5_12, "strict inequality fails at " + tag);
    }
  }
  t.note("f*K.C at (4,2) = " + check_c_intersection(build_family(4, 2)).value.str());
}

void c5_non_nef(const AcceptOptions& o, Tally& t) {
  const auto start = std::chrono::steady_clock::now();
  for (std::int64_t n : {4, 5}) {
    const auto r = exhaustive_non_nef(build_family(n, 2), 2, 50'000'000, o.threads);
    t.expect(r.none_nef(), "nef vector found at (" + std::to_string(n) + ",2,2)");
    t.note("(" + std::to_string(n) + ",2,2): " + r.searched.get_str() + " vectors, " + r.nef_count.get_str() +
           " nef");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.expect(secs < 1.0, "exhaustive search took " + std::to_string(secs) + " s");
}

void c6_degrees(const AcceptOptions& o, Tally& t) {
  const auto r = check_ample_degrees(build_family(4, 2));
  t.expect(r.lhs == (o.mutate ? 115 : 116), "d' - 25 = " + r.lhs.get_str() + " at (4,2), expected 116");
  for (std::int64_t n = 4; n <= 8; ++n) {
    for (std::int64_t k = 2; k <= 10; ++k) {
      const auto g = check_ample_degrees(build_family(n, k));
      const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
      t.expect(g.identity, "degree identity fails at " + tag);
      t.expect(g.z_power, "z-power degree fails at " + tag);
      t.expect(g.at_least_116 && g.d_prime > 0, "d' bound fails at " + tag);
      t.expect(g.well_formed, "divisibility fails at " + tag);
    }
  }
  t.note("d' - 25 = " + r.lhs.get_str() + " at (4,2)");
}

void c7_zariski(const AcceptOptions& o, Tally& t) {
  Rng rng(o.seed ^ 0x7a7a7a7aULL);
  std::size_t oracle_runs = 0;
  for (std::size_t trial = 0; trial < o.random_trials; ++trial) {
    const auto cfg = random_configuration(rng, 6);
    const auto d = random_divisor(rng, cfg, false);
    const auto z = zariski_decompose(cfg, d);
    const std::string tag = "trial " + std::to_string(trial);
    const auto pd = dot_vertices(cfg, z.P);
    std::vector<bool> in(cfg.graph.size(), false);
    for (auto i : z.support) in[i] = true;
    for (std::size_t i = 0; i < cfg.graph.size(); ++i) {
      t.expect(z.N.coeffs[i].sign() >= 0, tag + ": N has a negative coefficient");
      t.expect(in[i] || z.N.coeffs[i].is_zero(), tag + ": N outside its support");
      t.expect(pd[i].sign() >= 0, tag + ": P not relatively nef");
      t.expect(!in[i] || pd[i].is_zero(), tag + ": P not orthogonal to the support");
      t.expect(z.P.coeffs[i] + z.N.coeffs[i] == d.coeffs[i], tag + ": P + N != D");
    }
    t.expect(z.P.base == d.base && !z.N.base, tag + ": base part moved");
    t.expect(is_negative_definite(cfg.graph.intersection_matrix().principal(z.support)),
             tag + ": support not negative definite");
    if (cfg.graph.size() <= 4) {
      ++oracle_runs;
      const auto ex = zariski_decompose_exhaustive(cfg, d);
      t.expect(ex.has_value() && ex->P == z.P && ex->N == z.N, tag + ": disagrees with the exhaustive oracle");
    }
  }
  t.note(std::to_string(o.random_trials) + " configurations, " + std::to_string(oracle_runs) + " oracle comparisons");
}

void c8_monotone(const AcceptOptions& o, Tally& t) {
  Rng rng(o.seed ^ 0x3737ULL);
  for (std::size_t trial = 0; trial < o.random_trials; ++trial) {
    const auto cfg = random_nef_base_configuration(rng, 6);
    const auto p = random_pair(rng, cfg, false);
    t.expect(check_monotone(cfg, p.d, p.dtilde), "P >= Dtilde fails on trial " + std::to_string(trial));
  }
  t.note(std::to_string(o.random_trials) + " random (D, Dtilde) pairs");
}

void c9_floor_loop(const AcceptOptions& o, Tally& t) {
  Rng rng(o.seed ^ 0x3939ULL);
  std::size_t max_steps = 0;
  for (std::size_t trial = 0; trial < o.random_trials; ++trial) {
    const auto cfg = random_nef_base_configuration(rng, 6);
    const auto p = random_pair(rng, cfg, true);
    const std::string tag = "trial " + std::to_string(trial);
    const auto r = floor_round_loop(cfg, p.d, p.dtilde);
    max_steps = std::max(max_steps, r.steps);
    t.expect(BigInt(static_cast<unsigned long>(r.steps)) <= r.r0, tag + ": more than r0 steps");
    t.expect(is_relatively_nef(cfg, r.result), tag + ": D' not relatively nef");
    for (std::size_t i = 0; i < cfg.graph.size(); ++i) {
      t.expect(p.d.coeffs[i] >= r.result.coeffs[i] && r.result.coeffs[i] >= p.dtilde.coeffs[i],
               tag + ": D >= D' >= Dtilde fails");
    }
  }
  t.note(std::to_string(o.random_trials) + " integral inputs, max " + std::to_string(max_steps) + " floor steps");
}

void c10_nef_certificate(const AcceptOptions& o, Tally& t) {
  std::vector<std::size_t> cases(11, 0);
  parallel_for(
      9,
      [&](std::size_t idx) {
        const std::int64_t n2 = static_cast<std::int64_t>(idx) + 2;
        const BigInt m0 = BigInt(2) * (2 * n2 + 1);  // even: F = [4] has a = 1/2
        std::vector<std::int64_t> all;
        for (std::int64_t k = n2; k <= 40; ++k) {
          all.push_back(k);
          const auto inp = make_nef_input(m0, n2, {k});
          const auto c = build_coeffs(inp);
          const auto cert = verify_exceptional(inp, c);
          const auto want = expected_chain_profile(m0, n2, k);
          const std::string tag = "(n2=" + std::to_string(n2) + ",k=" + std::to_string(k) + ")";
          t.expect(cert.intersections == want, tag + ": case values differ");
          t.expect(cert.nef && cert.bounds_hold, tag + ": certificate fails");
          for (std::int64_t j = 1; j <= k; ++j) {
            const auto& cj = c[static_cast<std::size_t>(j - 1)];
            t.expect(cj >= 0 && cj <= (Rational(m0) * Rational(j, 2 * k + 1)).floor(), tag + ": bound on c fails");
          }
        }
        const auto inp = make_nef_input(m0, n2, all, chain({4}));
        const auto cert = verify_exceptional(inp, build_coeffs(inp));
        t.expect(cert.nef && cert.bounds_hold, "combined certificate fails at n2 = " + std::to_string(n2));
        t.expect(cert.intersections.back().is_zero(), "F vertex value nonzero at n2 = " + std::to_string(n2));
        cases[static_cast<std::size_t>(n2)] = all.size();
      },
      o.threads);
  const auto total = std::accumulate(cases.begin(), cases.end(), std::size_t{0});
  t.note(std::to_string(total) + " chains; profile (0, 0, m0/(2n2+1), 0) on every chain");
}

void c11_toric(const AcceptOptions& o, Tally& t) {
  const ToricParams p{9, 5, 2};
  const auto r = floored_pullback_check(p, 1);
  const Ray e2(0, 1, 0), e3(0, 0, 1);
  const auto& v = r.r_sigma2.values;
  t.expect_eq("D_u.R", v.at(r.u), mutated(Rational(1, 9), o.mutate));
  t.expect_eq("D_v.R", v.at(r.v), Rational(1, 5));
  t.expect_eq("D_e3.R", v.at(e3), Rational(1, 45));
  t.expect_eq("D_e2.R", v.at(e2), Rational(-23, 45));
  const Rational closed_kr = Rational(2, p.n) - Rational(p.b, p.m);
  t.expect(r.r_sigma2.k_dot == Rational(2, 45), "K.R: got " + r.r_sigma2.k_dot.str() +
                                                    ", expected 2/45 (2/n - b/m evaluates to " + closed_kr.str() +
                                                    ")");
  t.expect_eq("subdivision discrepancy", r.discrepancy_w, Rational(2, 9));
  t.expect(r.sigma1_type.order == 23 && r.sigma1_type.cyclic, "quotient order " + r.sigma1_type.order.get_str());
  const auto want = canonical_weights({BigInt(-1), BigInt(2), BigInt(2 * p.b + 1)}, 23);
  t.expect(r.sigma1_type.canonical == want, "quotient weights not equivalent to (-1,2,5)");
  t.expect_eq("floored pullback . R'", r.floored_value, Rational(-3, 5));
  t.expect(r.negative(), "floored value not negative");
  t.expect(r.equal, "floored value differs from the closed form " + r.closed_form.str());
  t.note("D.R = 1/9, 1/5, " + v.at(e3).str() + ", " + v.at(e2).str() + "; K.R = " + r.r_sigma2.k_dot.str() +
         "; a = " + r.discrepancy_w.str() + "; floored = " + r.floored_value.str());
}

void c12_toric_sweep(const AcceptOptions& o, Tally& t) {
  std::vector<std::size_t> counts(100, 0);
  parallel_for(
      50,
      [&](std::size_t idx) {
        const std::int64_t n = 2 * static_cast<std::int64_t>(idx) + 1;
        for (std::int64_t b = 1; b <= 99; ++b) {
          const std::int64_t m = n * b - 1;
          if (m < 2) continue;
          for (std::int64_t m0 = 1; m0 <= 5; ++m0) {
            const auto r = floored_pullback_check(ToricParams{m, n, b}, m0, false);
            t.expect(r.equal, "(m,n,b,m0) = (" + std::to_string(m) + "," + std::to_string(n) + "," +
                                  std::to_string(b) + "," + std::to_string(m0) + "): " + r.floored_value.str() +
                                  " != " + r.closed_form.str());
            ++counts[idx];
          }
        }
      },
      o.threads);
  t.note(std::to_string(std::accumulate(counts.begin(), counts.end(), std::size_t{0})) + " parameter sets");
}

// Brute force over k_1 <= k_2 <= k_3 <= kWindow, independent of the solver.
std::vector<UnitSolution> unit_oracle(std::int64_t n0) {
  constexpr std::int64_t kWindow = 200;
  std::vector<UnitSolution> out;
  for (std::int64_t l = 0; l <= n0; ++l) {
    const Rational target = Rational(1) - Rational(l, n0);
    if (target.is_zero()) out.push_back(UnitSolution{{}, l});
    for (std::int64_t a = 1; a <= kWindow; ++a) {
      const Rational ta = unit_term(a);
      if (ta == target) out.push_back(UnitSolution{{a}, l});
      if (ta >= target) continue;
      for (std::int64_t b = a; b <= kWindow; ++b) {
        const Rational tb = ta + unit_term(b);
        if (tb == target) out.push_back(UnitSolution{{a, b}, l});
        if (tb >= target) continue;
        for (std::int64_t c = b; c <= kWindow; ++c) {
          const Rational tc = tb + unit_term(c);
          if (tc == target) out.push_back(UnitSolution{{a, b, c}, l});
          if (tc >= target) break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void c13_unit(const AcceptOptions& o, Tally& t) {
  const auto u = solve_unit_equation(6);
  t.expect(u.I0 == std::set<std::int64_t>{1}, "I0 != {1}");
  t.expect(u.n1 == (o.mutate ? 17 : 18), "n1 = " + u.n1.get_str() + ", expected 18");
  t.expect(u.solutions == unit_oracle(6), "solution set differs from the brute-force oracle");
  t.note("I0 = {1}, n1 = " + u.n1.get_str() + ", " + std::to_string(u.solutions.size()) +
         " solutions, gamma0 = " + u.gamma0.str());
}

void c14_classifier(const AcceptOptions& o, Tally& t) {
  const auto start = std::chrono::steady_clock::now();
  ClassifyOptions opts;
  opts.epsilon = Rational(1, 3) + Rational(1, 30);
  opts.strict = true;
  opts.threads = o.threads;
  const auto rep = classify_chains(opts);
  const std::int64_t bound = rep.other_max_cartier_index;
  std::size_t above = 0;
  for (const auto& c : rep.chains) {
    const auto type = chain_type(c.weights);
    const auto index = type.order() / std::gcd(type.order(), type.weight() + 1);
    const auto b = discrepancy_coeffs(chain(c.weights));
    t.expect(mld_from_coeffs(b) > opts.epsilon, "chain below the mld threshold was kept");
    if (index > bound) {
      ++above;
      std::string w;
      for (auto x : c.weights) w += std::to_string(x) + " ";
      t.expect(is_special_shape(c.weights), "index " + std::to_string(index) + " above bound for [" + w + "]");
    }
  }
  // Independent enumeration of short chains through the dense solver.
  std::size_t short_count = 0;
  std::vector<std::int64_t> w;
  std::function<void()> rec = [&] {
    if (!w.empty()) {
      std::vector<std::int64_t> rev(w.rbegin(), w.rend());
      RatMatrix m(w.size(), w.size());
      for (std::size_t i = 0; i < w.size(); ++i) {
        m(i, i) = -w[i];
        if (i + 1 < w.size()) m(i, i + 1) = m(i + 1, i) = 1;
      }
      RatVector rhs(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) rhs[i] = Rational(2 - w[i]);
      const auto b = solve(m, rhs);
      Rational mld = 1;
      for (const auto& x : b) mld = std::min(mld, Rational(1) - x);
      if (mld > opts.epsilon && w <= rev) ++short_count;
    }
    if (w.size() == 5) return;
    for (std::int64_t x = 2; x <= 6; ++x) {
      w.push_back(x);
      rec();
      w.pop_back();
    }
  };
  rec();
  const auto classified_short = std::count_if(rep.chains.begin(), rep.chains.end(),
                                              [](const ClassifiedChain& c) { return c.weights.size() <= 5; });
  t.expect(static_cast<std::size_t>(classified_short) == short_count,
           "short-chain count " + std::to_string(classified_short) + " differs from the oracle's " +
               std::to_string(short_count));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.expect(secs < 30.0, "classification took " + std::to_string(secs) + " s");
  t.note(std::to_string(rep.total) + " chains, bound " + std::to_string(bound) + ", " + std::to_string(above) +
         " above it, all of shape [2,...,2,3]");
}

struct Criterion {
  int id;
  const char* title;
  void (*run)(const AcceptOptions&, Tally&);
};

const Criterion kCriteria[] = {
    {1, "HJ fixture 1/7(1,2)", c1_hj_fixture},
    {2, "pullback identity for n <= 500", c2_pullback},
    {3, "mld closed forms", c3_mld},
    {4, "f*K.C closed form and inequalities", c4_c_intersection},
    {5, "exhaustive non-nefness at (4,2,2), (5,2,2)", c5_non_nef},
    {6, "degree arithmetic", c6_degrees},
    {7, "Zariski decomposition properties and oracle", c7_zariski},
    {8, "P >= Dtilde monotonicity", c8_monotone},
    {9, "floor-rounding loop", c9_floor_loop},
    {10, "nef certificate case values", c10_nef_certificate},
    {11, "toric fixture (9,5,2)", c11_toric},
    {12, "toric closed-form sweep", c12_toric_sweep},
    {13, "unit equation n0 = 6", c13_unit},
    {14, "chain classification by Cartier index", c14_classifier},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptOptions& opts) {
  std::vector<CriterionResult> out;
  for (const auto& c : kCriteria) {
    if (!opts.only.empty() && !opts.only.count(c.id)) continue;
    CriterionResult r;
    r.id = c.id;
    r.title = c.title;
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(opts, t);
    } catch (const std::exception& e) {
      t.fails.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.pass = t.fails.empty();
    r.details = t.fails.empty() ? t.info : t.fails;
    out.push_back(std::move(r));
  }
  return out;
}

json acceptance_json(const std::vector<CriterionResult>& results, bool timings) {
  json cs = json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    json o{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"details", r.details}};
    if (timings) o["seconds"] = std::to_string(r.seconds);
    cs.push_back(std::move(o));
    passed += r.pass ? 1 : 0;
  }
  return json{{"criteria", cs}, {"passed", passed}, {"failed", results.size() - passed}};
}

}  // namespace pluricalc::cli
