#include "pluricalc_cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pluricalc/error.hpp"
#include "pluricalc/family.hpp"
#include "pluricalc/json_io.hpp"
#include "pluricalc/nefbuilder.hpp"
#include "pluricalc/parallel.hpp"
#include "pluricalc/singularity.hpp"
#include "pluricalc/toric3.hpp"
#include "pluricalc/zariski.hpp"
#include "pluricalc_cli/acceptance.hpp"
#include "pluricalc_cli/report.hpp"

namespace pluricalc::cli {

namespace {

struct Globals {
  std::string out_file;
  bool pretty = false;
  std::size_t threads = 0;
  std::uint64_t seed = 20240601;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::size_t thread_count(const Globals& g) { return g.threads ? g.threads : default_thread_count(); }

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

// ---- hj / mld ---------------------------------------------------------------

struct HjArgs {
  std::int64_t n = 0, q = 0;
};

Report cmd_hj(const HjArgs& a) {
  Report r;
  r.command = "hj";
  r.inputs = json{{"n", a.n}, {"q", a.q}};
  const auto res = resolve(CyclicQuotientType(a.n, a.q));
  r.outputs = json{{"weights", res.weights},
                   {"coeffs", rationals_json(res.coeffs)},
                   {"mld", res.mld.str()},
                   {"cartier_index", res.cartier_index}};
  r.check("pullback_identity", all_zero(pullback_residuals(res.graph, res.coeffs)));
  r.expect_eq("det_equals_order", graph_det(res.graph).str(), std::to_string(a.n));
  r.check("round_trip", chain_type(res.weights) == res.type);
  return r;
}

struct MldArgs {
  std::string graph_file;
  std::vector<std::int64_t> chain;
  std::int64_t n = 0, q = 0;
  std::string epsilon;
};

Report cmd_mld(const MldArgs& a) {
  Report r;
  r.command = "mld";
  DualGraph g;
  if (!a.graph_file.empty()) {
    g = graph_from_json(read_json_file(a.graph_file));
    r.inputs["graph"] = a.graph_file;
  } else if (!a.chain.empty()) {
    g = chain(a.chain);
    r.inputs["chain"] = a.chain;
  } else if (a.n > 0) {
    g = chain(hj_expand(CyclicQuotientType(a.n, a.q)));
    r.inputs["n"] = a.n;
    r.inputs["q"] = a.q;
  } else {
    throw UsageError("mld needs --graph, --chain or --n/--q");
  }
  ValidateOptions vo;
  vo.contractible = true;
  if (!a.epsilon.empty()) {
    vo.epsilon = Rational::parse(a.epsilon);
    r.inputs["epsilon"] = a.epsilon;
  }
  json diags = json::array();
  for (const auto& d : validate(g, vo))
    diags.push_back(json{{"kind", std::string(to_string(d.kind))}, {"vertex", d.vertex}, {"message", d.message}});
  r.outputs["diagnostics"] = diags;
  const auto b = discrepancy_coeffs(g);
  r.outputs["coeffs"] = rationals_json(b);
  r.outputs["det"] = graph_det(g).str();
  r.outputs["mld"] = mld_from_coeffs(b).str();
  r.outputs["coefficient_denominator_lcm"] = coefficient_denominator_lcm(b).get_str();
  r.check("pullback_identity", all_zero(pullback_residuals(g, b)));
  return r;
}

// ---- zariski / floorloop / reduce ---------------------------------------------

struct ZariskiArgs {
  std::string config, divisor, target;
  bool oracle = false;
  bool not_birational = false;
};

void decomposition_checks(Report& r, const Configuration& cfg, const LatticeDivisor& d, const ZariskiResult& z) {
  const auto pd = dot_vertices(cfg, z.P);
  std::vector<bool> in(cfg.graph.size(), false);
  for (auto i : z.support) in[i] = true;
  bool n_ok = true, orth = true, nef = true, sum = true;
  for (std::size_t i = 0; i < cfg.graph.size(); ++i) {
    n_ok = n_ok && z.N.coeffs[i].sign() >= 0 && (in[i] || z.N.coeffs[i].is_zero());
    orth = orth && (!in[i] || pd[i].is_zero());
    nef = nef && pd[i].sign() >= 0;
    sum = sum && z.P.coeffs[i] + z.N.coeffs[i] == d.coeffs[i];
  }
  r.check("N_effective_on_support", n_ok);
  r.check("P_orthogonal_to_support", orth);
  r.check("P_relatively_nef", nef);
  r.check("P_plus_N_equals_D", sum);
  r.check("support_negative_definite", is_negative_definite(cfg.graph.intersection_matrix().principal(z.support)));
}

Report cmd_zariski(const ZariskiArgs& a) {
  Report r;
  r.command = "zariski";
  r.inputs = json{{"config", a.config}, {"divisor", a.divisor}};
  const auto cfg = config_from_json(read_json_file(a.config));
  const auto d = divisor_from_json(cfg, read_json_file(a.divisor));
  const auto z = zariski_decompose(cfg, d);
  r.outputs = zariski_json(cfg, z);
  r.outputs["P_dots"] = rationals_json(dot_vertices(cfg, z.P));
  decomposition_checks(r, cfg, d, z);
  if (a.oracle || cfg.graph.size() <= 8) {
    const auto ex = zariski_decompose_exhaustive(cfg, d);
    r.check("agrees_with_exhaustive_oracle", ex && ex->P == z.P && ex->N == z.N);
  }
  return r;
}

Report cmd_floorloop(const ZariskiArgs& a) {
  Report r;
  r.command = "floorloop";
  r.inputs = json{{"config", a.config}, {"divisor", a.divisor}, {"target", a.target}, {"birational", !a.not_birational}};
  const auto cfg = config_from_json(read_json_file(a.config));
  const auto d = divisor_from_json(cfg, read_json_file(a.divisor));
  const auto t = divisor_from_json(cfg, read_json_file(a.target));
  const auto res = floor_round_loop(cfg, d, t, !a.not_birational);
  r.outputs = floor_loop_json(cfg, res);
  r.check("steps_within_r0", BigInt(static_cast<unsigned long>(res.steps)) <= res.r0, std::to_string(res.steps),
          res.r0.get_str());
  bool sandwich = true;
  for (std::size_t i = 0; i < d.coeffs.size(); ++i)
    sandwich = sandwich && d.coeffs[i] >= res.result.coeffs[i] && res.result.coeffs[i] >= t.coeffs[i];
  r.check("D_ge_Dprime_ge_Dtilde", sandwich);
  r.check("Dprime_relatively_nef", is_relatively_nef(cfg, res.result));
  return r;
}

struct ReduceArgs {
  std::string config;
  std::string m = "1";
  std::vector<std::string> coeffs;
  bool loop = false;
  bool no_fixed_part = false;
};

Report cmd_reduce(const ReduceArgs& a) {
  Report r;
  r.command = "reduce";
  r.inputs = json{{"config", a.config}, {"m", a.m}, {"coeffs", a.coeffs}, {"loop", a.loop},
                  {"fixed_part_hypothesis", !a.no_fixed_part}};
  const auto cfg = config_from_json(read_json_file(a.config));
  const BigInt m = big_from_json(json(a.m));
  std::vector<BigInt> c;
  for (const auto& s : a.coeffs) c.push_back(big_from_json(json(s)));
  if (c.size() != cfg.graph.size())
    throw UsageError("--coeffs needs " + std::to_string(cfg.graph.size()) + " entries");
  const auto step = coefficient_reduction(cfg, m, c);
  r.outputs = json{{"next", bigs_json(step.next)}, {"b", rationals_json(step.b)}, {"fixpoint", step.fixpoint},
                   {"bounds", bigs_json(reduction_bounds(cfg, m))}};
  bool mono = true, strict = false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    mono = mono && step.next[i] <= c[i];
    strict = strict || step.next[i] < c[i];
  }
  r.check("non_increasing", mono);
  r.check("strict_unless_fixpoint", step.fixpoint ? !strict : strict);
  if (a.loop) {
    const auto tr = reduction_loop(cfg, m, c, !a.no_fixed_part);
    json its = json::array();
    for (const auto& v : tr.iterates) its.push_back(bigs_json(v));
    r.outputs["trace"] = its;
    r.outputs["left_range"] = tr.left_range;
    r.outputs["fixed_part_hypothesis"] = tr.fixed_part_hypothesis;
    r.outputs["final_nef"] = is_nef(cfg, reduction_divisor(cfg, m, tr.iterates.back()));
  }
  return r;
}

// ---- nefcoeffs ----------------------------------------------------------------

struct NefArgs {
  std::string m0;
  std::int64_t n2 = 2;
  std::vector<std::int64_t> chains;
  std::string f_graph;
  std::string gamma0;
  std::int64_t t = -1;
  std::vector<std::int64_t> k_list;
  bool rational = false;
  std::int64_t n0 = 0;
  std::string m1 = "1";
};

Report cmd_nefcoeffs(const NefArgs& a) {
  Report r;
  r.command = "nefcoeffs";
  r.inputs = json{{"m0", a.m0}, {"n2", a.n2}, {"chains", a.chains}, {"rational", a.rational}};
  std::optional<DualGraph> f;
  if (!a.f_graph.empty()) {
    f = graph_from_json(read_json_file(a.f_graph));
    r.inputs["f_graph"] = a.f_graph;
  }
  const auto inp = make_nef_input(big_from_json(json(a.m0)), a.n2, a.chains, f, a.rational);
  const auto c = build_coeffs(inp);
  const auto cert = verify_exceptional(inp, c);
  r.outputs["graph"] = graph_json(inp.graph());
  r.outputs["certificate"] = certificate_json(cert);
  r.check("exceptional_nef", cert.nef);
  r.check("bounds_hold", cert.bounds_hold);
  std::size_t offset = 0;
  bool profile = true;
  for (auto k : inp.active_chains()) {
    const auto want = expected_chain_profile(inp.m0, inp.n2, k);
    for (std::size_t j = 0; j < want.size(); ++j) profile = profile && cert.intersections[offset + j] == want[j];
    offset += static_cast<std::size_t>(k);
  }
  r.check("case_profile", profile);
  if (a.rational) r.outputs["note"] = "--rational forces s = 0: chains are ignored";
  if (!a.gamma0.empty() || a.t >= 0) {
    if (a.gamma0.empty() || a.t < 0) throw UsageError("--gamma0 and --t go together");
    r.inputs["gamma0"] = a.gamma0;
    r.inputs["t"] = a.t;
    const auto ext = external_inequalities(a.n2, Rational::parse(a.gamma0), a.t,
                                           a.k_list.empty() ? a.chains : a.k_list, inp.m0);
    r.outputs["external"] = external_json(ext);
    r.check("external_inequality", ext.pass(), ext.value.str(), ext.bound.str());
  }
  if (a.n0 > 0) {
    const auto u = solve_unit_equation(a.n0);
    r.inputs["n0"] = a.n0;
    r.inputs["m1"] = a.m1;
    r.outputs["unit_equation"] = unit_equation_json(u);
    r.outputs["constants"] = constants_json(constants_report(u.n1, u.gamma0, big_from_json(json(a.m1))));
  }
  return r;
}

// ---- family -------------------------------------------------------------------

struct FamilyArgs {
  std::int64_t n = 4, k = 2;
  std::string check = "all";
  std::int64_t nonnef_m = 0;
  std::string grid;
  std::uint64_t budget = 50'000'000;
};

json family_instance(Report& r, const FamilyArgs& a, std::int64_t n, std::int64_t k, std::size_t threads,
                     bool full) {
  const auto inst = build_family(n, k);
  const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
  json o = full ? family_json(inst) : json{{"n", n}, {"k", k}, {"d", inst.d.get_str()}};
  r.check("invariants" + tag, inst.invariant_failures.empty(), std::nullopt, std::nullopt,
          inst.invariant_failures.empty() ? std::nullopt : std::optional<std::string>(inst.invariant_failures.front()));
  const bool all = a.check == "all";
  if (all || a.check == "mld") {
    const auto m = check_mld(inst);
    o["mld"] = mld_json(m);
    r.check("mld" + tag, m.pass(), m.mld.str(), m.expected.str());
  }
  if (all || a.check == "intersection") {
    const auto c = check_c_intersection(inst);
    o["intersection"] = c_intersection_json(c);
    r.check("intersection" + tag, c.pass(), c.value.str(), c.closed_form.str());
    const std::int64_t fm = a.nonnef_m > 0 && a.nonnef_m % 2 == 0 && k >= a.nonnef_m / 2 ? a.nonnef_m : 2;
    const auto fr = check_fractional_obstruction(inst, fm);
    o["fractional"] = fractional_json(fr);
    r.check("fractional_obstruction" + tag, fr.holds(), fr.term.str());
  }
  if (all || a.check == "degrees") {
    const auto d = check_ample_degrees(inst);
    o["degrees"] = degrees_json(d);
    r.check("degrees" + tag, d.pass(), d.lhs.get_str(), d.rhs.get_str());
  }
  if (a.nonnef_m > 0) {
    const auto nn = exhaustive_non_nef(inst, a.nonnef_m, a.budget, threads);
    o["non_nef"] = non_nef_json(nn);
    o["verdict"] = nn.none_nef() ? "no admissible coefficient vector is nef" : "some admissible coefficient vector is nef";
    r.check("non_nef" + tag, nn.none_nef(), nn.nef_count.get_str(), "0");
    const auto rc = reduction_cross_check(inst, a.nonnef_m);
    json its = json::array();
    for (const auto& v : rc.trace.iterates) its.push_back(bigs_json(v));
    o["reduction"] = json{{"trace", its}, {"reached_nef", rc.reached_nef}, {"left_range", rc.trace.left_range}};
    r.check("reduction_agrees" + tag, !rc.reached_nef);
  }
  return o;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("range must look like a:b");
  try {
    return {std::stoll(s.substr(0, colon)), std::stoll(s.substr(colon + 1))};
  } catch (const std::exception&) {
    throw UsageError("bad range " + s);
  }
}

Report cmd_family(const FamilyArgs& a, std::size_t threads) {
  Report r;
  r.command = "family";
  const std::set<std::string> checks{"all", "mld", "intersection", "degrees", "none"};
  if (!checks.count(a.check)) throw UsageError("--check must be all|mld|intersection|degrees|none");
  r.inputs = json{{"n", a.n}, {"k", a.k}, {"check", a.check}, {"nonnef_m", a.nonnef_m}};
  if (a.grid.empty()) {
    r.outputs = family_instance(r, a, a.n, a.k, threads, true);
    return r;
  }
  const auto comma = a.grid.find(',');
  if (comma == std::string::npos) throw UsageError("--grid must look like nmin:nmax,kmin:kmax");
  const auto [n0, n1] = parse_range(a.grid.substr(0, comma));
  const auto [k0, k1] = parse_range(a.grid.substr(comma + 1));
  r.inputs["grid"] = a.grid;
  json rows = json::array();
  for (std::int64_t n = n0; n <= n1; ++n)
    for (std::int64_t k = k0; k <= k1; ++k) rows.push_back(family_instance(r, a, n, k, threads, false));
  r.outputs["grid"] = rows;
  return r;
}

// ---- toric --------------------------------------------------------------------

struct ToricArgs {
  std::int64_t m = 9, n = 5, b = 2, m0 = 1;
  std::int64_t sweep = 0;
};

Report cmd_toric(const ToricArgs& a, std::size_t threads) {
  Report r;
  r.command = "toric";
  r.inputs = json{{"m", a.m}, {"n", a.n}, {"b", a.b}, {"m0", a.m0}};
  const ToricParams p{a.m, a.n, a.b};
  const auto bad = p.violations();
  if (!bad.empty()) throw UsageError("invalid parameters: " + bad.front());
  const auto t = floored_pullback_check(p, a.m0);
  r.outputs = toric_json(t);
  r.check("closed_form_equal", t.equal, t.floored_value.str(), t.closed_form.str());
  r.check("relation_residual_zero", all_zero({t.r_sigma2.residual.begin(), t.r_sigma2.residual.end()}) &&
                                        all_zero({t.r_sigma3.residual.begin(), t.r_sigma3.residual.end()}));
  r.check("order_equals_mult", t.sigma1_type.order == cone_mult(t.sigma1.cones.front()));
  if (t.constraint_failures.empty())
    r.check("floored_negative", t.negative(), t.floored_value.str());
  else
    r.outputs["note"] = "negativity not asserted: " + t.constraint_failures.front();
  if (a.sweep > 0) {
    r.inputs["sweep"] = a.sweep;
    std::vector<std::int64_t> ns;
    for (std::int64_t n = 1; n <= a.sweep; n += 2) ns.push_back(n);
    std::vector<std::size_t> counts(ns.size(), 0), fails(ns.size(), 0);
    parallel_for(
        ns.size(),
        [&](std::size_t i) {
          for (std::int64_t b = 1; b <= 99; ++b) {
            const std::int64_t m = ns[i] * b - 1;
            if (m < 2) continue;
            for (std::int64_t m0 = 1; m0 <= 5; ++m0) {
              ++counts[i];
              if (!floored_pullback_check({m, ns[i], b}, m0, false).equal) ++fails[i];
            }
          }
        },
        threads);
    const auto total = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
    const auto failed = std::accumulate(fails.begin(), fails.end(), std::size_t{0});
    r.outputs["sweep"] = json{{"cases", total}, {"mismatches", failed}};
    r.check("sweep_closed_form", failed == 0, std::to_string(failed), "0");
  }
  return r;
}

// ---- classify -----------------------------------------------------------------

struct ClassifyArgs {
  std::string epsilon = "11/30";
  std::int64_t max_weight = 6, max_len = 25;
  bool strict = false;
  bool chains = false;
};

Report cmd_classify(const ClassifyArgs& a, std::size_t threads) {
  Report r;
  r.command = "classify";
  r.inputs = json{{"epsilon", a.epsilon}, {"max_weight", a.max_weight}, {"max_len", a.max_len}, {"strict", a.strict}};
  ClassifyOptions o;
  o.epsilon = Rational::parse(a.epsilon);
  o.max_weight = a.max_weight;
  o.max_len = a.max_len;
  o.strict = a.strict;
  o.threads = threads;
  const auto rep = classify_chains(o);
  r.outputs = classification_json(rep, a.chains);
  bool ok = true;
  for (const auto& c : rep.chains)
    if (c.cartier_index > rep.other_max_cartier_index) ok = ok && c.special_k.has_value();
  r.check("above_bound_only_special", ok, std::to_string(rep.other_max_cartier_index));
  return r;
}

// ---- accept -------------------------------------------------------------------

struct AcceptArgs {
  std::vector<int> only;
  bool mutate = false;
  bool no_timings = false;
  std::size_t trials = 1000;
};

Report cmd_accept(const AcceptArgs& a, const Globals& g) {
  Report r;
  r.command = "accept";
  AcceptOptions o;
  o.seed = g.seed;
  o.threads = thread_count(g);
  o.only = std::set<int>(a.only.begin(), a.only.end());
  o.mutate = a.mutate;
  o.random_trials = a.trials;
  r.inputs = json{{"seed", std::to_string(g.seed)}, {"only", a.only}, {"mutate", a.mutate}, {"trials", a.trials}};
  const auto results = run_acceptance(o);
  r.outputs = acceptance_json(results, !a.no_timings);
  for (const auto& c : results)
    r.check("criterion_" + std::to_string(c.id), c.pass, std::nullopt, std::nullopt,
            c.pass || c.details.empty() ? std::nullopt : std::optional<std::string>(c.details.front()));
  return r;
}

void emit(const Report& rep, const Globals& g, std::ostream& out) {
  const std::string text = rep.to_json().dump(g.pretty ? 2 : -1) + "\n";
  if (g.out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(g.out_file);
  if (!f) throw UsageError("cannot write " + g.out_file);
  f << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for cyclic quotient surface singularities, Zariski decompositions and toric fans",
               "pluricalc"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--out", g.out_file, "Write the JSON report to FILE");
  app.add_flag("--pretty", g.pretty, "Indent JSON output");
  app.add_option("--threads", g.threads, "Worker threads (default: PLURICALC_THREADS or all cores)");
  app.add_option("--seed", g.seed, "Seed for randomized sampling");

  HjArgs hj;
  auto* s_hj = app.add_subcommand("hj", "Hirzebruch-Jung chain and discrepancies of 1/n(1,q)");
  s_hj->add_option("--n", hj.n, "Order n")->required();
  s_hj->add_option("--q", hj.q, "Weight q")->required();

  MldArgs mld;
  auto* s_mld = app.add_subcommand("mld", "Discrepancies and mld of a dual graph");
  s_mld->add_option("--graph", mld.graph_file, "Dual graph JSON file");
  s_mld->add_option("--chain", mld.chain, "Chain weights, comma separated")->delimiter(',');
  s_mld->add_option("--n", mld.n, "Order of 1/n(1,q)");
  s_mld->add_option("--q", mld.q, "Weight of 1/n(1,q)");
  s_mld->add_option("--epsilon", mld.epsilon, "Flag weights above 2/epsilon");

  ZariskiArgs za;
  auto* s_z = app.add_subcommand("zariski", "Relative Zariski decomposition");
  s_z->add_option("--config", za.config, "Configuration JSON")->required();
  s_z->add_option("--divisor", za.divisor, "Divisor JSON")->required();
  s_z->add_flag("--oracle", za.oracle, "Also run the exhaustive-support oracle");

  ZariskiArgs fl;
  auto* s_f = app.add_subcommand("floorloop", "Floor-rounding loop down to a relatively nef divisor");
  s_f->add_option("--config", fl.config, "Configuration JSON")->required();
  s_f->add_option("--divisor", fl.divisor, "Divisor D JSON")->required();
  s_f->add_option("--target", fl.target, "Relatively nef Dtilde JSON")->required();
  s_f->add_flag("--not-birational", fl.not_birational, "Record that |D| is not known to be birational");

  ReduceArgs ra;
  auto* s_r = app.add_subcommand("reduce", "Coefficient reduction c' = floor(c - m b)");
  s_r->add_option("--config", ra.config, "Configuration JSON")->required();
  s_r->add_option("--m", ra.m, "Positive integer m")->required();
  s_r->add_option("--coeffs", ra.coeffs, "Integer coefficients, comma separated")->delimiter(',')->required();
  s_r->add_flag("--loop", ra.loop, "Iterate to a fixpoint");
  s_r->add_flag("--no-fixed-part-hypothesis", ra.no_fixed_part, "Record that the fixed-part hypothesis is not assumed");

  NefArgs na;
  auto* s_n = app.add_subcommand("nefcoeffs", "Nef coefficient construction on 1/(2k+1)(1,k) chains");
  s_n->add_option("--m0", na.m0, "m0, divisible by 2 n2 + 1")->required();
  s_n->add_option("--n2", na.n2, "n2")->required();
  s_n->add_option("--chains", na.chains, "Chain lengths k_i, comma separated")->delimiter(',');
  s_n->add_option("--f-graph", na.f_graph, "Dual graph JSON of the bounded-index part F");
  s_n->add_option("--gamma0", na.gamma0, "gamma0 as p/q for the external inequalities");
  s_n->add_option("--t", na.t, "Number of deep chains met by the external curve");
  s_n->add_option("--k-list", na.k_list, "Chain lengths met by the external curve")->delimiter(',');
  s_n->add_flag("--rational", na.rational, "Surface is rational: force s = 0");
  s_n->add_option("--n0", na.n0, "Also solve the unit equation for n0 and report constants");
  s_n->add_option("--m1", na.m1, "Effective birationality constant m1 for the constants report");

  FamilyArgs fa;
  auto* s_fa = app.add_subcommand("family", "Build and verify the surfaces X_{n,k}");
  s_fa->add_option("--n", fa.n, "n >= 4");
  s_fa->add_option("--k", fa.k, "k >= 2");
  s_fa->add_option("--check", fa.check, "all|mld|intersection|degrees|none");
  s_fa->add_option("--nonnef-m", fa.nonnef_m, "Run the exhaustive non-nefness search at this m");
  s_fa->add_option("--grid", fa.grid, "nmin:nmax,kmin:kmax");
  s_fa->add_option("--budget", fa.budget, "Maximum vectors for the exhaustive search");

  ToricArgs ta;
  auto* s_t = app.add_subcommand("toric", "Toric fan computations for the threefold example");
  s_t->add_option("--m", ta.m, "m")->required();
  s_t->add_option("--n", ta.n, "n (odd)")->required();
  s_t->add_option("--b", ta.b, "b with nb = m + 1")->required();
  s_t->add_option("--m0", ta.m0, "m0 >= 0")->required();
  s_t->add_option("--sweep", ta.sweep, "Also compare fan and closed form for all odd n <= NMAX");

  ClassifyArgs ca;
  auto* s_c = app.add_subcommand("classify", "Enumerate chains with mld above epsilon");
  s_c->add_option("--epsilon", ca.epsilon, "Threshold as p/q");
  s_c->add_option("--max-weight", ca.max_weight, "Largest weight");
  s_c->add_option("--max-len", ca.max_len, "Longest chain");
  s_c->add_flag("--strict", ca.strict, "Keep mld > epsilon instead of mld >= epsilon");
  s_c->add_flag("--chains", ca.chains, "List every chain");

  AcceptArgs aa;
  auto* s_a = app.add_subcommand("accept", "Run the acceptance suite");
  s_a->add_option("--only", aa.only, "Criterion ids, comma separated")->delimiter(',');
  s_a->add_flag("--mutate", aa.mutate, "Perturb the fixtures (the suite must fail)");
  s_a->add_flag("--no-timings", aa.no_timings, "Omit runtimes for byte-stable output");
  s_a->add_option("--trials", aa.trials, "Randomized trials per property");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const std::size_t threads = thread_count(g);
    Report rep;
    if (*s_hj) rep = cmd_hj(hj);
    else if (*s_mld) rep = cmd_mld(mld);
    else if (*s_z) rep = cmd_zariski(za);
    else if (*s_f) rep = cmd_floorloop(fl);
    else if (*s_r) rep = cmd_reduce(ra);
    else if (*s_n) rep = cmd_nefcoeffs(na);
    else if (*s_fa) rep = cmd_family(fa, threads);
    else if (*s_t) rep = cmd_toric(ta, threads);
    else if (*s_c) rep = cmd_classify(ca, threads);
    else if (*s_a) rep = cmd_accept(aa, g);
    emit(rep, g, out);
    return rep.pass() ? kExitPass : kExitCheckFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace pluricalc::cli
