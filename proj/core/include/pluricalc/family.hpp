#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pluricalc/dualgraph.hpp"
#include "pluricalc/rational.hpp"
#include "pluricalc/singularity.hpp"
#include "pluricalc/zariski.hpp"

namespace pluricalc {

// Numeric shadow of the surfaces X_{n,k}: a degree-d hypersurface Y in
// P(1, 1, 2k(n-2), 2k(n-2)(n-1)+1) with one singular point o, the blow-up W of
// one node of its resolution chain, and the two chains o1, o2 contracted to
// get X.
struct FamilyInstance {
  std::int64_t n = 4;
  std::int64_t k = 2;
  std::int64_t kp = 0;  // K' = k(n-1)
  BigInt d;
  std::array<std::int64_t, 4> ambient_weights{};
  CyclicQuotientType o_type{2, 1};
  DualGraph y_chain;   // resolution of o, E1 at the (-2)-end, with coefficients
  DualGraph w_graph;   // y_chain blown up at E_{K'} cap E_{K'+1}; C appended last
  std::size_t c_index = 0;
  DualGraph o1_graph;  // E1 .. E_{K'}
  DualGraph o2_graph;  // E_{K'+1} .. E_L
  std::vector<Rational> coeffs_y;  // on y_chain
  std::vector<Rational> coeffs_x;  // on w_graph; 0 on C
  CyclicQuotientType o2_stated_type{2, 1};
  bool o2_type_matches = true;
  std::vector<std::string> notes;
  std::vector<std::string> invariant_failures;
};

// Throws PreconditionError for n < 4 or k < 2.
FamilyInstance build_family(std::int64_t n, std::int64_t k);

struct CIntersectionReport {
  Rational value;        // f^*K_X . C from the graph
  Rational closed_form;  // 1/(4k^2(n-1)^2 - 1)
  bool equal = false;
  bool below_35 = false;       // value < 1/(35k^2)
  bool below_5_12 = false;     // 1/(35k^2) < 5/(12k)
  bool pass() const { return equal && below_35 && below_5_12; }
};
CIntersectionReport check_c_intersection(const FamilyInstance& inst);

struct FractionalReport {
  std::int64_t m = 2;
  std::int64_t l = 1;
  Rational term;          // {m K'/(2K'+1)} / m
  Rational lower_l;       // 5/(12l)
  Rational lower_k;       // 5/(12k)
  Rational intersection;  // f^*K_X . C
  bool above_bounds = false;
  bool dominates = false;  // term > f^*K_X . C
  bool holds() const { return above_bounds && dominates; }
};
// Throws PreconditionError for odd m or k < m/2.
FractionalReport check_fractional_obstruction(const FamilyInstance& inst, std::int64_t m);

struct NonNefReport {
  std::int64_t m = 1;
  std::vector<BigInt> bounds;  // per y-chain vertex
  BigInt searched;
  BigInt nef_count;
  BigInt fail_on_c_only;       // relatively nef but negative on C
  std::optional<std::vector<BigInt>> witness;  // some nef vector, if any
  bool none_nef() const { return nef_count == 0; }
};
// Throws SearchTooLargeError when the box exceeds budget.
NonNefReport exhaustive_non_nef(const FamilyInstance& inst, std::int64_t m, std::uint64_t budget = 50'000'000,
                                std::size_t threads = 0);

// The o1 + o2 universe with C as an external test curve.
Configuration family_configuration(const FamilyInstance& inst);

struct ReductionCrossCheck {
  std::int64_t m = 1;
  ReductionTrace trace;
  bool reached_nef = false;  // some iterate passes every vertex and the C test
};
ReductionCrossCheck reduction_cross_check(const FamilyInstance& inst, std::int64_t m);

struct DegreeReport {
  BigInt d;
  BigInt d_prime;  // d - sum of weights
  BigInt lhs;      // d' - (2k(n-2)(n-1)+1)
  BigInt rhs;      // -4 + 2k(n-2)(n-1)(2k(n-2)-3)
  bool identity = false;
  bool at_least_116 = false;
  bool z_power = false;  // 2k(n-2) (n-2)(2k(n-1)-1) = d
  bool well_formed = false;
  bool pass() const { return identity && at_least_116 && z_power && well_formed; }
};
DegreeReport check_ample_degrees(const FamilyInstance& inst);

struct MldReport {
  Rational mld_o1;
  Rational mld_o2;
  Rational mld;
  Rational expected;  // 2k/(2k(n-1)-1)
  bool pass() const { return mld == expected && mld_o2 == mld && mld_o1 > mld_o2; }
};
MldReport check_mld(const FamilyInstance& inst);

}  // namespace pluricalc
