#pragma once

#include <random>
#include <utility>

#include "maxconv/measure.hpp"

namespace maxconv {

// Deterministic generators used by the verification suites and the tests.
// All randomness flows through the caller's engine, so a fixed seed fixes
// every measure produced.

// Up to max_atoms atoms at well separated positions in [lo, hi], weights
// drawn positive and normalized.
DiscreteMeasure random_measure(std::mt19937_64& rng, int max_atoms = 8,
                               double lo = -4.0, double hi = 4.0);

DiscreteMeasure random_nonnegative_measure(std::mt19937_64& rng,
                                           int max_atoms = 8, double hi = 4.0);

// Input pairs cycling through shapes that stress the convolution formulas:
//   variant % 4 == 0  generic independent measures
//   variant % 4 == 1  disjoint supports (one entirely left of the other)
//   variant % 4 == 2  identical atom positions, independent weights
//   variant % 4 == 3  second measure far right of the first, so the first
//                     factor's CDF is zero across most of the other's support
std::pair<DiscreteMeasure, DiscreteMeasure> random_pair(std::mt19937_64& rng,
                                                        int variant);

// Same shapes, supports kept in [0, hi].
std::pair<DiscreteMeasure, DiscreteMeasure> random_nonnegative_pair(
    std::mt19937_64& rng, int variant);

}  // namespace maxconv
