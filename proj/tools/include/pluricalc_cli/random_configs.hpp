#pragma once

#include <cstddef>
#include <random>

#include "pluricalc/zariski.hpp"

namespace pluricalc::cli {

using Rng = std::mt19937_64;

// Random negative definite curve universe on 1..max_vertices vertices with one
// external base class "B" (integer dots in [-3, 3]).
Configuration random_configuration(Rng& rng, std::size_t max_vertices);

// B plus random coefficients with denominators up to 3 in [-2, 3].
LatticeDivisor random_divisor(Rng& rng, const Configuration& cfg, bool integral);

struct DivisorPair {
  LatticeDivisor d;
  LatticeDivisor dtilde;  // relatively nef, D - Dtilde >= 0
};

// Configuration whose base class meets every vertex non-negatively, so that
// relatively nef targets are plentiful.
Configuration random_nef_base_configuration(Rng& rng, std::size_t max_vertices);
DivisorPair random_pair(Rng& rng, const Configuration& cfg, bool integral);

}  // namespace pluricalc::cli
