#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pluricalc/dualgraph.hpp"
#include "pluricalc/rational.hpp"

namespace pluricalc {

// A divisor class outside the vertex universe (a "base" part, or a test curve).
struct ExternalClass {
  std::string id;
  std::vector<Rational> dots;  // X . C_j for every vertex j
  std::optional<Rational> self_sq;
  std::optional<Rational> k_dot;                // K . X
  std::map<std::string, Rational> ext_dots;     // X . Y for other externals
  bool test_curve = false;                      // nefness is also tested on X
};

struct Configuration {
  DualGraph graph;
  std::vector<ExternalClass> externals;

  // Throws PreconditionError when dots sizes disagree with the graph.
  void check() const;
  const ExternalClass* find_external(const std::string& id) const;
};

// Multiple of a base class. The id "K" means the canonical class (K . C_j by
// adjunction) unless an external with that id is declared.
struct BaseTerm {
  std::string id;
  BigInt multiplier = 1;
  friend bool operator==(const BaseTerm&, const BaseTerm&) = default;
};

struct LatticeDivisor {
  std::optional<BaseTerm> base;
  std::vector<Rational> coeffs;  // one per vertex
  friend bool operator==(const LatticeDivisor&, const LatticeDivisor&) = default;
};

inline constexpr const char* kCanonicalId = "K";

// D . C_j for vertex j.
Rational dot_vertex(const Configuration& cfg, const LatticeDivisor& d, std::size_t j);
std::vector<Rational> dot_vertices(const Configuration& cfg, const LatticeDivisor& d);
// D . X for an external class X; throws PreconditionError when the base part
// has no declared intersection with X.
Rational dot_external(const Configuration& cfg, const LatticeDivisor& d, const ExternalClass& x);

// Non-negative against every vertex.
bool is_relatively_nef(const Configuration& cfg, const LatticeDivisor& d);
// Non-negative against every vertex and every external flagged test_curve.
bool is_nef(const Configuration& cfg, const LatticeDivisor& d);

struct ZariskiResult {
  LatticeDivisor P;
  LatticeDivisor N;  // base-free
  std::vector<std::size_t> support;  // sorted vertex indices
};

// Relative Zariski decomposition over the vertex universe by growing support.
// Throws DecompositionError when the support stops being negative definite or
// a negative-part coefficient turns negative.
ZariskiResult zariski_decompose(const Configuration& cfg, const LatticeDivisor& d);

// Exhaustive reference: tries every negative definite support. Intended for
// universes of a handful of vertices; throws SearchTooLargeError above 16.
std::optional<ZariskiResult> zariski_decompose_exhaustive(const Configuration& cfg, const LatticeDivisor& d);

// Whether P >= Dtilde on vertex coefficients. Throws PreconditionError unless
// D and Dtilde share their base, D - Dtilde >= 0 and Dtilde is relatively nef.
bool check_monotone(const Configuration& cfg, const LatticeDivisor& d, const LatticeDivisor& dtilde);

struct FloorLoopResult {
  LatticeDivisor result;
  std::size_t steps = 0;
  BigInt r0;                           // sum of the coefficients of D - Dtilde
  std::vector<LatticeDivisor> trace;   // D_0, D_1, ..., D_steps
  std::vector<ZariskiResult> decompositions;
  bool birational = true;              // carried through unchanged
};

// D_{k+1} = floor(P_k) on vertex coefficients until N_k = 0. Requires integral
// vertex coefficients on D and Dtilde, D - Dtilde >= 0, Dtilde relatively nef.
FloorLoopResult floor_round_loop(const Configuration& cfg, const LatticeDivisor& d, const LatticeDivisor& dtilde,
                                 bool birational = true);

struct ReductionStep {
  std::vector<BigInt> next;  // c'
  std::vector<Rational> b;   // negative part of K + sum (c_i/m) E_i
  bool fixpoint = false;
};

// Upper bounds floor(m b_i) from the pullback coefficients of the graph.
std::vector<BigInt> reduction_bounds(const Configuration& cfg, const BigInt& m);

// One step c'_i = floor(c_i - m b_i). Throws PreconditionError when
// 0 <= c_i <= floor(m b_i) fails, b the pullback coefficients.
ReductionStep coefficient_reduction(const Configuration& cfg, const BigInt& m, const std::vector<BigInt>& c);

struct ReductionTrace {
  std::vector<std::vector<BigInt>> iterates;  // starting vector first, fixpoint last
  bool fixed_part_hypothesis = true;          // declared, not verified
  bool left_range = false;  // last iterate fell outside [0, floor(m b)]; loop stopped
};

ReductionTrace reduction_loop(const Configuration& cfg, const BigInt& m, const std::vector<BigInt>& c,
                              bool fixed_part_hypothesis = true);

// K + sum (c_i/m) E_i as a lattice divisor.
LatticeDivisor reduction_divisor(const Configuration& cfg, const BigInt& m, const std::vector<BigInt>& c);

}  // namespace pluricalc
