#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pluricalc/dualgraph.hpp"
#include "pluricalc/rational.hpp"

namespace pluricalc {

// Chains of type 1/(2k+1)(1,k), weights [2 x (k-1), 3], plus an optional
// bounded-index part F carrying its own pullback coefficients.
struct NefInput {
  BigInt m0;
  std::int64_t n2 = 1;
  std::vector<std::int64_t> chains;  // k_i
  DualGraph f_graph;
  std::vector<Rational> f_coeffs;    // pullback coefficients a on F
  // Forces s = 0 (no deep chains), as when the surface is rational.
  bool rational = false;

  DualGraph graph() const;  // chains first (ids E<i>_<j>), then F
  std::vector<Rational> pullback() const;
  // Throws PreconditionError for the structural invariants and InvalidM0Error
  // when (2 n2 + 1) does not divide m0 or m0 a is not integral on F.
  void check() const;
  std::vector<std::int64_t> active_chains() const { return rational ? std::vector<std::int64_t>{} : chains; }
};

// Builds F from a graph, taking a from discrepancy_coeffs.
NefInput make_nef_input(BigInt m0, std::int64_t n2, std::vector<std::int64_t> chains,
                        std::optional<DualGraph> f = std::nullopt, bool rational = false);

std::vector<BigInt> build_coeffs(const NefInput& inp);

struct NefCertificate {
  std::vector<BigInt> coeffs;
  std::vector<Rational> intersections;  // (m0 K + sum c E) . E_j
  std::vector<bool> bound_ok;           // 0 <= c_j <= floor(m0 a_j)
  bool nef = false;
  bool bounds_hold = false;
};

NefCertificate verify_exceptional(const NefInput& inp, const std::vector<BigInt>& c);

// Values the canonical coefficients must produce on chain k: index j-1 holds
// the value at E_j.
std::vector<Rational> expected_chain_profile(const BigInt& m0, std::int64_t n2, std::int64_t k);

struct ExternalReport {
  std::int64_t t = 0;
  std::string case_label;  // "t<=2" or "t>=3"
  Rational value;          // lower estimate of (m0 K_Y + sum c E) . C_Y
  Rational bound;          // the closed-form bound value >= bound
  bool chain_ok = false;   // value >= bound
  bool positive = false;   // bound > 0
  bool preconditions_ok = true;
  std::vector<std::string> notes;
  bool pass() const { return chain_ok && positive && preconditions_ok; }
};

// Never throws on violated preconditions; they are reported in notes.
ExternalReport external_inequalities(std::int64_t n2, const Rational& gamma0, std::int64_t t,
                                     const std::vector<std::int64_t>& k_list, const BigInt& m0);

struct ConstantsReport {
  BigInt n1;
  Rational gamma0;
  std::int64_t n2 = 0;
  BigInt m0;
  BigInt m1;
  BigInt m2;
  BigInt m;  // 192 m2
};

// n2 = max(10, n1, ceil(1/gamma0)); m0 = n1 prod_{i<=n2} (2i+1); m2 = m0 m1.
std::int64_t choose_n2(const BigInt& n1, const Rational& gamma0);
ConstantsReport constants_report(const BigInt& n1, const Rational& gamma0, const BigInt& m1);

}  // namespace pluricalc
