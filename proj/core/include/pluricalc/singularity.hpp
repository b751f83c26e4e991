#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "pluricalc/dualgraph.hpp"
#include "pluricalc/rational.hpp"

namespace pluricalc {

// The cyclic quotient singularity 1/n(1,q): 1 <= q < n, gcd(n, q) = 1.
class CyclicQuotientType {
 public:
  // Throws InvalidTypeError when the invariants fail.
  CyclicQuotientType(std::int64_t order, std::int64_t weight);

  std::int64_t order() const { return order_; }
  std::int64_t weight() const { return weight_; }
  // 1/n(1,q') with q q' = 1 mod n; its chain is the reverse of this one's.
  CyclicQuotientType dual() const;

  friend bool operator==(const CyclicQuotientType&, const CyclicQuotientType&) = default;

 private:
  std::int64_t order_;
  std::int64_t weight_;
};

// Hirzebruch-Jung expansion n/q = b1 - 1/(b2 - 1/(...)), every b_i >= 2.
std::vector<std::int64_t> hj_expand(const CyclicQuotientType& t);

// Inverse of hj_expand: n = det(chain), q = det(chain without its first vertex).
// Throws PreconditionError for an empty chain or a weight < 2.
CyclicQuotientType chain_type(std::span<const std::int64_t> weights);

bool equal_up_to_reversal(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

// Unique b with (K + sum b_i E_i) . E_j = 0 for every vertex j, K . E_j by
// adjunction. Throws NotContractibleError unless the intersection matrix is
// negative definite.
std::vector<Rational> discrepancy_coeffs(const DualGraph& g);

// (K + sum b_i E_i) . E_j for every j; all zero exactly when b is the pullback.
std::vector<Rational> pullback_residuals(const DualGraph& g, std::span<const Rational> b);

// min over vertices of the log discrepancy 1 - b_i, capped at 1. Throws
// NonKltError if some log discrepancy is <= 0.
Rational mld_of(const DualGraph& g);
Rational mld_from_coeffs(std::span<const Rational> b);

// Least r >= 1 with r K Cartier: n / gcd(n, q + 1).
std::int64_t cartier_index_K(const CyclicQuotientType& t);

// lcm of the denominators of the discrepancy coefficients.
BigInt coefficient_denominator_lcm(std::span<const Rational> b);

struct ResolutionData {
  CyclicQuotientType type;
  DualGraph graph;
  std::vector<std::int64_t> weights;
  std::vector<Rational> coeffs;
  Rational mld;
  std::int64_t cartier_index;
};

ResolutionData resolve(const CyclicQuotientType& t);

// One solution of sum_i k_i/(2k_i+1) + l/n0 = 1 (k sorted ascending).
struct UnitSolution {
  std::vector<std::int64_t> ks;
  std::int64_t l = 0;
  friend auto operator<=>(const UnitSolution&, const UnitSolution&) = default;
};

struct UnitEquationData {
  std::int64_t n0 = 1;
  std::vector<UnitSolution> solutions;  // complete, sorted
  std::set<std::int64_t> I0;
  BigInt n1;
  Rational gamma0;
  // Minimiser of gamma0 (empty ks and l = 0 when gamma0 = 1 is the cap).
  std::optional<UnitSolution> gamma0_witness;
  std::int64_t k_bound = 0;  // search window: k_i <= k_bound
  std::int64_t l_bound = 0;  //                l <= l_bound
  // True when the witness lies strictly inside the window.
  bool gamma0_interior = true;
};

// k/(2k+1) as an exact fraction.
Rational unit_term(std::int64_t k);

UnitEquationData solve_unit_equation(std::int64_t n0);

struct ClassifyOptions {
  Rational epsilon;
  std::int64_t max_weight = 6;
  std::int64_t max_len = 25;
  // Keep mld > epsilon instead of the epsilon-lc condition mld >= epsilon.
  bool strict = false;
  std::size_t threads = 0;
};

struct ClassifiedChain {
  std::vector<std::int64_t> weights;  // canonical: lexicographically <= its reversal
  std::int64_t order = 1;
  std::int64_t q = 1;
  Rational mld;
  std::int64_t cartier_index = 1;
  // k when the chain is 1/(2k+1)(1,k) up to reversal.
  std::optional<std::int64_t> special_k;
};

struct ClassificationReport {
  ClassifyOptions options;
  std::size_t total = 0;
  std::size_t special_count = 0;  // class (a): [2,...,2,3]
  std::size_t other_count = 0;    // class (b)
  std::int64_t other_max_cartier_index = 0;
  std::optional<ClassifiedChain> other_max_witness;
  std::set<std::int64_t> special_ks;
  std::map<std::int64_t, std::size_t> other_index_histogram;
  std::vector<ClassifiedChain> chains;  // all, sorted by weights
};

// Enumerates every chain (up to reversal) with weights in [2, max_weight] and
// length in [1, max_len] passing the mld filter, and splits it into
// 1/(2k+1)(1,k) chains and the rest.
ClassificationReport classify_chains(const ClassifyOptions& opts);

}  // namespace pluricalc
