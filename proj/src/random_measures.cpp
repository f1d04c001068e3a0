#include "maxconv/random_measures.hpp"

#include <algorithm>
#include <cmath>

namespace maxconv {

namespace {

// Distinct positions with gaps far above the merge tolerance.
std::vector<double> spread_positions(std::mt19937_64& rng, int count,
                                     double lo, double hi) {
  std::uniform_real_distribution<double> pos(lo, hi);
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(count));
  const double min_gap = (hi - lo) * 1e-4;
  while (static_cast<int>(xs.size()) < count) {
    double x = pos(rng);
    bool ok = true;
    for (double seen : xs) {
      if (std::abs(x - seen) < min_gap) {
        ok = false;
        break;
      }
    }
    if (ok) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  return xs;
}

std::vector<double> positive_weights(std::mt19937_64& rng, std::size_t count) {
  std::exponential_distribution<double> mass(1.0);
  std::vector<double> ws(count);
  double total = 0.0;
  for (double& w : ws) {
    w = mass(rng) + 1e-3;  // keep every atom clearly above the prune cutoff
    total += w;
  }
  for (double& w : ws) w /= total;
  return ws;
}

DiscreteMeasure measure_on(std::mt19937_64& rng, int max_atoms, double lo,
                           double hi) {
  std::uniform_int_distribution<int> natoms(1, max_atoms);
  int n = natoms(rng);
  auto xs = spread_positions(rng, n, lo, hi);
  auto ws = positive_weights(rng, xs.size());
  return DiscreteMeasure(std::move(xs), std::move(ws));
}

std::pair<DiscreteMeasure, DiscreteMeasure> pair_on(std::mt19937_64& rng,
                                                    int variant, double lo,
                                                    double hi) {
  const double mid = lo + (hi - lo) / 2;
  switch (variant % 4) {
    case 1: {
      // Disjoint supports; flip which side comes first.
      bool swap = (rng() & 1) != 0;
      auto left = measure_on(rng, 6, lo, mid - (hi - lo) * 0.05);
      auto right = measure_on(rng, 6, mid + (hi - lo) * 0.05, hi);
      if (swap) return {std::move(right), std::move(left)};
      return {std::move(left), std::move(right)};
    }
    case 2: {
      // Shared atom positions, independent weights.
      std::uniform_int_distribution<int> natoms(2, 8);
      auto xs = spread_positions(rng, natoms(rng), lo, hi);
      auto wa = positive_weights(rng, xs.size());
      auto wb = positive_weights(rng, xs.size());
      auto xs2 = xs;
      return {DiscreteMeasure(std::move(xs), std::move(wa)),
              DiscreteMeasure(std::move(xs2), std::move(wb))};
    }
    case 3: {
      // First factor sits far right, so its CDF is 0 over most of the
      // second factor's support.
      auto sigma = measure_on(rng, 4, hi - (hi - lo) * 0.1, hi);
      auto mu = measure_on(rng, 8, lo, mid);
      return {std::move(sigma), std::move(mu)};
    }
    default:
      return {measure_on(rng, 8, lo, hi), measure_on(rng, 8, lo, hi)};
  }
}

}  // namespace

DiscreteMeasure random_measure(std::mt19937_64& rng, int max_atoms, double lo,
                               double hi) {
  return measure_on(rng, max_atoms, lo, hi);
}

DiscreteMeasure random_nonnegative_measure(std::mt19937_64& rng, int max_atoms,
                                           double hi) {
  return measure_on(rng, max_atoms, 0.0, hi);
}

std::pair<DiscreteMeasure, DiscreteMeasure> random_pair(std::mt19937_64& rng,
                                                        int variant) {
  return pair_on(rng, variant, -4.0, 4.0);
}

std::pair<DiscreteMeasure, DiscreteMeasure> random_nonnegative_pair(
    std::mt19937_64& rng, int variant) {
  return pair_on(rng, variant, 0.0, 4.0);
}

}  // namespace maxconv
