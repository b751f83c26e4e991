#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "pluricalc/dualgraph.hpp"
#include "pluricalc/family.hpp"
#include "pluricalc/nefbuilder.hpp"
#include "pluricalc/rational.hpp"
#include "pluricalc/singularity.hpp"
#include "pluricalc/toric3.hpp"
#include "pluricalc/zariski.hpp"

namespace pluricalc {

using json = nlohmann::ordered_json;

// Rationals are written as "p" or "p/q"; big integers as decimal strings.
json rational_json(const Rational& r);
json big_json(const BigInt& v);
json rationals_json(std::span<const Rational> v);
json bigs_json(std::span<const BigInt> v);

// Accepts "p/q" strings and JSON integers. Throws ParseError.
Rational rational_from_json(const json& j);
BigInt big_from_json(const json& j);

// {"vertices":[{"id","self","genus","coeff"}],"edges":[["a","b",mult]]}
json graph_json(const DualGraph& g);
DualGraph graph_from_json(const json& j);

// {"graph":{...},"externals":[{"id","dots":{"E1":"1"},"self","k_dot",
//  "ext_dots":{...},"test_curve":bool}]}
json config_json(const Configuration& cfg);
Configuration config_from_json(const json& j);

// {"base":{"id":"B","multiplier":1},"coeffs":{"E1":"1/2"}}; missing vertices are 0.
json divisor_json(const Configuration& cfg, const LatticeDivisor& d);
LatticeDivisor divisor_from_json(const Configuration& cfg, const json& j);

json zariski_json(const Configuration& cfg, const ZariskiResult& z);
json floor_loop_json(const Configuration& cfg, const FloorLoopResult& r);
json resolution_json(const ResolutionData& r);
json unit_equation_json(const UnitEquationData& u);
json classification_json(const ClassificationReport& r, bool include_chains);
json certificate_json(const NefCertificate& c);
json external_json(const ExternalReport& r);
json constants_json(const ConstantsReport& r);
json family_json(const FamilyInstance& inst);
json c_intersection_json(const CIntersectionReport& r);
json fractional_json(const FractionalReport& r);
json non_nef_json(const NonNefReport& r);
json degrees_json(const DegreeReport& r);
json mld_json(const MldReport& r);
json quotient_json(const QuotientType& q);
json toric_json(const ToricReport& r);

json read_json_file(const std::string& path);

}  // namespace pluricalc
