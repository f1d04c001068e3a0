#include "maxconv/subordination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "maxconv/max_conv.hpp"

namespace maxconv {

SupportRegion::SupportRegion(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
  if (intervals_.empty()) {
    throw std::domain_error("support region: needs at least one interval");
  }
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto& iv = intervals_[i];
    if (std::isnan(iv.lo) || std::isnan(iv.hi) || !(iv.lo < iv.hi)) {
      throw std::domain_error("support region: interval " + std::to_string(i) +
                              " is empty or unordered");
    }
    if (i > 0 && !(intervals_[i - 1].hi < iv.lo)) {
      throw std::domain_error("support region: intervals overlap or touch");
    }
  }
  if (!std::isinf(intervals_.back().hi)) {
    throw std::domain_error(
        "support region: must extend to +infinity on the right");
  }
}

bool SupportRegion::contains(double x) const {
  for (const auto& iv : intervals_) {
    if (x < iv.lo || (x == iv.lo && !iv.lo_closed)) continue;
    if (x < iv.hi || (x == iv.hi && iv.hi_closed)) return true;
  }
  return false;
}

SupportRegion u_set(const DiscreteMeasure& sigma, const DiscreteMeasure& mu) {
  auto grid = merged_atom_grid(sigma, mu);
  const double inf = std::numeric_limits<double>::infinity();

  std::vector<Interval> blocks;
  bool open = false;
  double start = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    // Both CDFs are constant on [grid[i], grid[i+1]), so membership of the
    // whole block is decided at its left endpoint.
    bool in = mu.tail(grid[i]) < sigma.cdf(grid[i]);
    if (in && !open) {
      open = true;
      start = grid[i];
    } else if (!in && open) {
      blocks.push_back({start, grid[i], true, false});
      open = false;
    }
  }
  // Beyond the last atom the tail is 0 and F_sigma is 1, so the final block
  // is always open and reaches +infinity.
  blocks.push_back({open ? start : grid.back(), inf, true, false});
  return SupportRegion(std::move(blocks));
}

DiscreteMeasure subordinate(const DiscreteMeasure& sigma,
                            const DiscreteMeasure& mu) {
  auto grid = merged_atom_grid(sigma, mu);
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double fs = sigma.cdf(grid[i]);
    if (fs < kCdfZeroGuard) {
      values[i] = 0.0;
    } else {
      values[i] = std::max(1.0 - mu.tail(grid[i]) / fs, 0.0);
    }
  }
  return DiscreteMeasure::from_cdf_grid(grid, values);
}

namespace {

VerifyReport compare(const DiscreteMeasure& lhs, const DiscreteMeasure& rhs) {
  auto ks = ks_distance_witness(lhs, rhs);
  return {ks.distance, ks.witness_x, ks.distance <= kCdfIdentityTol};
}

}  // namespace

VerifyReport verify_decomposition(const DiscreteMeasure& sigma,
                                  const DiscreteMeasure& mu) {
  auto lhs = classical_max(sigma, subordinate(sigma, mu));
  auto rhs = free_max(sigma, mu);
  return compare(lhs, rhs);
}

VerifyReport verify_composition(const DiscreteMeasure& sigma1,
                                const DiscreteMeasure& sigma2,
                                const DiscreteMeasure& mu) {
  auto lhs = subordinate(sigma1, subordinate(sigma2, mu));
  auto rhs = subordinate(classical_max(sigma1, sigma2), mu);
  return compare(lhs, rhs);
}

VerifyReport verify_free_distributivity(const DiscreteMeasure& sigma,
                                        const DiscreteMeasure& mu1,
                                        const DiscreteMeasure& mu2) {
  auto lhs = subordinate(sigma, free_max(mu1, mu2));
  auto rhs = free_max(subordinate(sigma, mu1), subordinate(sigma, mu2));
  return compare(lhs, rhs);
}

VerifyReport verify_power_commutation(const DiscreteMeasure& sigma,
                                      const DiscreteMeasure& mu, double t) {
  auto lhs = subordinate(sigma, free_max_power(mu, t));
  auto rhs = free_max_power(subordinate(sigma, mu), t);
  return compare(lhs, rhs);
}

BooleanDecomposition boolean_decomposition(const DiscreteMeasure& sigma,
                                           const DiscreteMeasure& mu) {
  if (sigma.min_atom() < 0.0 || mu.min_atom() < 0.0) {
    throw std::domain_error(
        "boolean decomposition needs nonnegative supports; smallest atom at " +
        std::to_string(std::min(sigma.min_atom(), mu.min_atom())));
  }
  auto left = subordinate(sigma, mu);
  auto right = subordinate(mu, sigma);
  auto report = compare(boolean_max(left, right), free_max(sigma, mu));
  return {std::move(left), std::move(right), report};
}

}  // namespace maxconv
