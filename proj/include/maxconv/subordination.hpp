#pragma once

#include <vector>

#include "maxconv/measure.hpp"
#include "maxconv/report.hpp"

namespace maxconv {

// CDF values below this count as zero when they appear in a denominator.
inline constexpr double kCdfZeroGuard = 1e-15;

// Largest CDF deviation tolerated by the identity verifiers.
inline constexpr double kCdfIdentityTol = 1e-12;

struct Interval {
  double lo;
  double hi;  // +infinity marks an unbounded interval
  bool lo_closed;
  bool hi_closed;

  bool operator==(const Interval&) const = default;
};

// A finite union of disjoint intervals that always includes a neighborhood
// of +infinity (the last interval is unbounded above).
class SupportRegion {
 public:
  explicit SupportRegion(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool contains(double x) const;

  bool operator==(const SupportRegion&) const = default;

 private:
  std::vector<Interval> intervals_;
};

// The set {x : 1 - F_mu(x) < F_sigma(x)}, assembled from the union grid of
// the two atom sets.  Both CDFs are constant between grid points, so the
// region is a union of half-open blocks [grid point, next change).
SupportRegion u_set(const DiscreteMeasure& sigma, const DiscreteMeasure& mu);

// The subordinated law: F(x) = max{1 - (1 - F_mu(x)) / F_sigma(x), 0},
// taken as 0 where F_sigma vanishes.  Supported inside u_set(sigma, mu).
DiscreteMeasure subordinate(const DiscreteMeasure& sigma,
                            const DiscreteMeasure& mu);

// sigma (x)free mu  ==  classical max of sigma with subordinate(sigma, mu).
VerifyReport verify_decomposition(const DiscreteMeasure& sigma,
                                  const DiscreteMeasure& mu);

// Subordinating twice composes through the classical max of the sigmas.
VerifyReport verify_composition(const DiscreteMeasure& sigma1,
                                const DiscreteMeasure& sigma2,
                                const DiscreteMeasure& mu);

// Subordination distributes over the free max.
VerifyReport verify_free_distributivity(const DiscreteMeasure& sigma,
                                        const DiscreteMeasure& mu1,
                                        const DiscreteMeasure& mu2);

// Subordination commutes with free max powers.
VerifyReport verify_power_commutation(const DiscreteMeasure& sigma,
                                      const DiscreteMeasure& mu, double t);

struct BooleanDecomposition {
  DiscreteMeasure left;   // subordinate(sigma, mu)
  DiscreteMeasure right;  // subordinate(mu, sigma)
  VerifyReport report;    // boolean_max(left, right) vs free_max(sigma, mu)
};

// On nonnegative supports the free max factors through the boolean max of
// the two one-sided subordinations.
BooleanDecomposition boolean_decomposition(const DiscreteMeasure& sigma,
                                           const DiscreteMeasure& mu);

}  // namespace maxconv
