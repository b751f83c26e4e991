#include "pluricalc/json_io.hpp"

#include <fstream>

#include "pluricalc/error.hpp"

namespace pluricalc {

json rational_json(const Rational& r) { return r.str(); }
json big_json(const BigInt& v) { return v.get_str(); }

json rationals_json(std::span<const Rational> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json bigs_json(std::span<const BigInt> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

BigInt big_from_json(const json& j) {
  const Rational r = rational_from_json(j);
  if (!r.is_integer()) throw ParseError("expected an integer, got " + j.dump());
  return r.numerator();
}

json graph_json(const DualGraph& g) {
  json vs = json::array();
  for (const auto& v : g.vertices()) {
    json o{{"id", v.id}, {"self", v.self_intersection}, {"genus", v.genus}};
    if (v.coeff) o["coeff"] = v.coeff->str();
    vs.push_back(std::move(o));
  }
  json es = json::array();
  for (const auto& e : g.edges()) es.push_back(json::array({g.vertex(e.a).id, g.vertex(e.b).id, e.multiplicity}));
  return json{{"vertices", vs}, {"edges", es}};
}

DualGraph graph_from_json(const json& j) {
  try {
    std::vector<CurveVertex> vs;
    for (const auto& v : j.at("vertices")) {
      CurveVertex cv;
      cv.id = v.at("id").get<std::string>();
      cv.self_intersection = v.value("self", std::int64_t{-2});
      cv.genus = v.value("genus", std::int64_t{0});
      if (v.contains("coeff")) cv.coeff = rational_from_json(v.at("coeff"));
      vs.push_back(std::move(cv));
    }
    auto index = [&](const json& id) -> std::size_t {
      const auto s = id.get<std::string>();
      for (std::size_t i = 0; i < vs.size(); ++i)
        if (vs[i].id == s) return i;
      throw ParseError("edge refers to unknown vertex " + s);
    };
    std::vector<GraphEdge> es;
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3) throw ParseError("edge must be [a, b] or [a, b, mult]");
        es.push_back(GraphEdge{index(e[0]), index(e[1]), e.size() == 3 ? e[2].get<std::int64_t>() : 1});
      }
    }
    return DualGraph(std::move(vs), std::move(es));
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph: ") + e.what());
  }
}

json config_json(const Configuration& cfg) {
  json xs = json::array();
  for (const auto& x : cfg.externals) {
    json dots = json::object();
    for (std::size_t i = 0; i < x.dots.size(); ++i) dots[cfg.graph.vertex(i).id] = x.dots[i].str();
    json o{{"id", x.id}, {"dots", dots}};
    if (x.self_sq) o["self"] = x.self_sq->str();
    if (x.k_dot) o["k_dot"] = x.k_dot->str();
    json ed = json::object();
    for (const auto& [k, v] : x.ext_dots) ed[k] = v.str();
    o["ext_dots"] = ed;
    o["test_curve"] = x.test_curve;
    xs.push_back(std::move(o));
  }
  return json{{"graph", graph_json(cfg.graph)}, {"externals", xs}};
}

Configuration config_from_json(const json& j) {
  try {
    Configuration cfg;
    cfg.graph = graph_from_json(j.at("graph"));
    if (j.contains("externals")) {
      for (const auto& x : j.at("externals")) {
        ExternalClass e;
        e.id = x.at("id").get<std::string>();
        e.dots.assign(cfg.graph.size(), Rational(0));
        if (x.contains("dots")) {
          for (const auto& [k, v] : x.at("dots").items()) e.dots[cfg.graph.index_of(k)] = rational_from_json(v);
        }
        if (x.contains("self")) e.self_sq = rational_from_json(x.at("self"));
        if (x.contains("k_dot")) e.k_dot = rational_from_json(x.at("k_dot"));
        if (x.contains("ext_dots"))
          for (const auto& [k, v] : x.at("ext_dots").items()) e.ext_dots[k] = rational_from_json(v);
        e.test_curve = x.value("test_curve", false);
        cfg.externals.push_back(std::move(e));
      }
    }
    cfg.check();
    return cfg;
  } catch (const json::exception& e) {
    throw ParseError(std::string("configuration: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("configuration: ") + e.what());
  }
}

json divisor_json(const Configuration& cfg, const LatticeDivisor& d) {
  json o = json::object();
  if (d.base) o["base"] = json{{"id", d.base->id}, {"multiplier", d.base->multiplier.get_str()}};
  json c = json::object();
  for (std::size_t i = 0; i < d.coeffs.size(); ++i) c[cfg.graph.vertex(i).id] = d.coeffs[i].str();
  o["coeffs"] = c;
  return o;
}

LatticeDivisor divisor_from_json(const Configuration& cfg, const json& j) {
  try {
    LatticeDivisor d;
    d.coeffs.assign(cfg.graph.size(), Rational(0));
    if (j.contains("base") && !j.at("base").is_null()) {
      const auto& b = j.at("base");
      d.base = BaseTerm{b.at("id").get<std::string>(), b.contains("multiplier") ? big_from_json(b.at("multiplier")) : 1};
    }
    if (j.contains("coeffs"))
      for (const auto& [k, v] : j.at("coeffs").items()) d.coeffs[cfg.graph.index_of(k)] = rational_from_json(v);
    return d;
  } catch (const json::exception& e) {
    throw ParseError(std::string("divisor: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("divisor: ") + e.what());
  }
}

json zariski_json(const Configuration& cfg, const ZariskiResult& z) {
  json support = json::array();
  for (auto i : z.support) support.push_back(cfg.graph.vertex(i).id);
  return json{{"P", divisor_json(cfg, z.P)}, {"N", divisor_json(cfg, z.N)}, {"support", support}};
}

json floor_loop_json(const Configuration& cfg, const FloorLoopResult& r) {
  json trace = json::array();
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    trace.push_back(json{{"D", divisor_json(cfg, r.trace[i])}, {"N", divisor_json(cfg, r.decompositions[i].N)}});
  }
  return json{{"result", divisor_json(cfg, r.result)},
              {"steps", r.steps},
              {"r0", r.r0.get_str()},
              {"birational", r.birational},
              {"trace", trace}};
}

json resolution_json(const ResolutionData& r) {
  return json{{"n", r.type.order()},
              {"q", r.type.weight()},
              {"weights", r.weights},
              {"coeffs", rationals_json(r.coeffs)},
              {"mld", r.mld.str()},
              {"cartier_index", r.cartier_index}};
}

json unit_equation_json(const UnitEquationData& u) {
  json sols = json::array();
  for (const auto& s : u.solutions) sols.push_back(json{{"ks", s.ks}, {"l", s.l}});
  json out{{"n0", u.n0},
           {"solutions", sols},
           {"I0", std::vector<std::int64_t>(u.I0.begin(), u.I0.end())},
           {"n1", u.n1.get_str()},
           {"gamma0", u.gamma0.str()},
           {"k_bound", u.k_bound},
           {"l_bound", u.l_bound},
           {"gamma0_interior", u.gamma0_interior}};
  if (u.gamma0_witness) out["gamma0_witness"] = json{{"ks", u.gamma0_witness->ks}, {"l", u.gamma0_witness->l}};
  return out;
}

namespace {

json chain_json(const ClassifiedChain& c) {
  json o{{"weights", c.weights},   {"n", c.order}, {"q", c.q}, {"mld", c.mld.str()},
         {"cartier_index", c.cartier_index}};
  if (c.special_k) o["special_k"] = *c.special_k;
  return o;
}

}  // namespace

json classification_json(const ClassificationReport& r, bool include_chains) {
  json hist = json::object();
  for (const auto& [idx, cnt] : r.other_index_histogram) hist[std::to_string(idx)] = cnt;
  json out{{"epsilon", r.options.epsilon.str()},
           {"strict", r.options.strict},
           {"max_weight", r.options.max_weight},
           {"max_len", r.options.max_len},
           {"total", r.total},
           {"special_count", r.special_count},
           {"other_count", r.other_count},
           {"other_max_cartier_index", r.other_max_cartier_index},
           {"special_ks", std::vector<std::int64_t>(r.special_ks.begin(), r.special_ks.end())},
           {"other_index_histogram", hist}};
  if (r.other_max_witness) out["other_max_witness"] = chain_json(*r.other_max_witness);
  if (include_chains) {
    json cs = json::array();
    for (const auto& c : r.chains) cs.push_back(chain_json(c));
    out["chains"] = cs;
  }
  return out;
}

json certificate_json(const NefCertificate& c) {
  return json{{"coeffs", bigs_json(c.coeffs)},
              {"intersections", rationals_json(c.intersections)},
              {"bound_ok", c.bound_ok},
              {"nef", c.nef},
              {"bounds_hold", c.bounds_hold}};
}

json external_json(const ExternalReport& r) {
  return json{{"t", r.t},
              {"case", r.case_label},
              {"value", r.value.str()},
              {"bound", r.bound.str()},
              {"chain_ok", r.chain_ok},
              {"positive", r.positive},
              {"preconditions_ok", r.preconditions_ok},
              {"notes", r.notes},
              {"pass", r.pass()}};
}

json constants_json(const ConstantsReport& r) {
  return json{{"n1", r.n1.get_str()}, {"gamma0", r.gamma0.str()}, {"n2", r.n2},         {"m0", r.m0.get_str()},
              {"m1", r.m1.get_str()}, {"m2", r.m2.get_str()},     {"m", r.m.get_str()}};
}

json family_json(const FamilyInstance& inst) {
  return json{{"n", inst.n},
              {"k", inst.k},
              {"d", inst.d.get_str()},
              {"ambient_weights", inst.ambient_weights},
              {"o_type", json{{"n", inst.o_type.order()}, {"q", inst.o_type.weight()}}},
              {"y_chain", inst.y_chain.path_weights()},
              {"coeffs_y", rationals_json(inst.coeffs_y)},
              {"w_graph", graph_json(inst.w_graph)},
              {"o1", inst.o1_graph.path_weights()},
              {"o2", inst.o2_graph.path_weights()},
              {"coeffs_x", rationals_json(inst.coeffs_x)},
              {"o2_stated_type", json{{"n", inst.o2_stated_type.order()}, {"q", inst.o2_stated_type.weight()}}},
              {"o2_type_matches", inst.o2_type_matches},
              {"notes", inst.notes},
              {"invariant_failures", inst.invariant_failures}};
}

json c_intersection_json(const CIntersectionReport& r) {
  return json{{"value", r.value.str()},
              {"closed_form", r.closed_form.str()},
              {"equal", r.equal},
              {"below_1_over_35k2", r.below_35},
              {"chain_below_5_over_12k", r.below_5_12},
              {"pass", r.pass()}};
}

json fractional_json(const FractionalReport& r) {
  return json{{"m", r.m},
              {"l", r.l},
              {"term", r.term.str()},
              {"lower_l", r.lower_l.str()},
              {"lower_k", r.lower_k.str()},
              {"intersection", r.intersection.str()},
              {"above_bounds", r.above_bounds},
              {"dominates", r.dominates},
              {"holds", r.holds()}};
}

json non_nef_json(const NonNefReport& r) {
  json out{{"m", r.m},
           {"bounds", bigs_json(r.bounds)},
           {"searched", r.searched.get_str()},
           {"nef_count", r.nef_count.get_str()},
           {"relatively_nef_but_negative_on_C", r.fail_on_c_only.get_str()},
           {"verdict", r.none_nef() ? "no admissible coefficient vector is nef"
                                    : "some admissible coefficient vector is nef"}};
  if (r.witness) out["witness"] = bigs_json(*r.witness);
  return out;
}

json degrees_json(const DegreeReport& r) {
  return json{{"d", r.d.get_str()},          {"d_prime", r.d_prime.get_str()}, {"lhs", r.lhs.get_str()},
              {"rhs", r.rhs.get_str()},      {"identity", r.identity},         {"at_least_116", r.at_least_116},
              {"z_power", r.z_power},        {"well_formed", r.well_formed},   {"pass", r.pass()}};
}

json mld_json(const MldReport& r) {
  return json{{"mld_o1", r.mld_o1.str()},
              {"mld_o2", r.mld_o2.str()},
              {"mld", r.mld.str()},
              {"expected", r.expected.str()},
              {"pass", r.pass()}};
}

json quotient_json(const QuotientType& q) {
  return json{{"order", q.order.get_str()},
              {"snf", bigs_json(q.snf_diag)},
              {"cyclic", q.cyclic},
              {"weights", bigs_json(q.weights)},
              {"canonical", bigs_json(q.canonical)}};
}

namespace {

json fan_json(const Fan3D& f) {
  json out = json::array();
  for (const auto& c : f.cones) {
    json rays = json::array();
    for (const auto& r : c.rays) rays.push_back(r.vec());
    out.push_back(json{{"rays", rays}, {"mult", cone_mult(c).get_str()}});
  }
  return out;
}

json wall_json(const WallIntersections& w) {
  json vals = json::array();
  for (const auto& [r, x] : w.values) vals.push_back(json{{"ray", r.vec()}, {"dot", x.str()}});
  return json{{"intersections", vals}, {"K_dot", w.k_dot.str()}, {"residual", rationals_json(w.residual)}};
}

}  // namespace

json toric_json(const ToricReport& r) {
  json types = json::array();
  for (const auto& [name, q] : r.sigma2_types) types.push_back(json{{"cone", name}, {"type", quotient_json(q)}});
  json floored = json::array();
  for (const auto& [ray, c] : r.floored_pullback) floored.push_back(json{{"ray", ray.vec()}, {"coeff", c.str()}});
  return json{{"m", r.params.m},
              {"n", r.params.n},
              {"b", r.params.b},
              {"m0", r.m0},
              {"sigma1", fan_json(r.sigma1)},
              {"sigma2", fan_json(r.sigma2)},
              {"sigma3", fan_json(r.sigma3)},
              {"sigma1_type", quotient_json(r.sigma1_type)},
              {"sigma2_types", types},
              {"R_sigma2", wall_json(r.r_sigma2)},
              {"R_sigma3", wall_json(r.r_sigma3)},
              {"discrepancy_w", r.discrepancy_w.str()},
              {"discrepancy_e2", r.discrepancy_e2.str()},
              {"floored_pullback", floored},
              {"floored_value", r.floored_value.str()},
              {"closed_form", r.closed_form.str()},
              {"equal", r.equal},
              {"negative", r.negative()},
              {"constraint_failures", r.constraint_failures}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace pluricalc
