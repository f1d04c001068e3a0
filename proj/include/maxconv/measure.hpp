#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxconv {

// Tolerances shared by the measure layer.
inline constexpr double kAtomMergeTol = 1e-12;      // atoms closer than this are one atom
inline constexpr double kWeightPruneTol = 1e-15;    // weights at or below this are dropped
inline constexpr double kNormalizationTol = 1e-9;   // accepted |sum(w) - 1| before renormalizing

// Thrown when internally produced values violate an invariant they ought to
// satisfy (e.g. a CDF assembled from step values that decrease).  Callers
// never trigger this with valid inputs; it signals a numerical failure.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

struct CdfPoint {
  double x;
  double f;  // CDF value at x, in [0, 1]
};

// A finitely supported probability measure on the real line.
//
// Atoms are strictly increasing, weights strictly positive, and the weights
// sum to 1 exactly: after renormalization the last weight is rewritten as
// 1 - (sum of the others) so the running prefix sum ends at 1.0.  Instances
// are immutable after construction.
class DiscreteMeasure {
 public:
  // Sorts, merges atoms within kAtomMergeTol, drops weights below
  // kWeightPruneTol, and renormalizes.  Rejects empty input, non-finite
  // values, negative weights, and total mass off from 1 by more than
  // kNormalizationTol.
  DiscreteMeasure(std::vector<double> atoms, std::vector<double> weights);

  static DiscreteMeasure dirac(double location);

  // Measure whose CDF equals values[i] on [grid[i], grid[i+1]) and
  // values.back() from grid.back() on.  grid must be strictly increasing and
  // values nondecreasing (within kNormalizationTol; smaller wobble is
  // clamped) with values.back() == 1 to the same tolerance.
  static DiscreteMeasure from_cdf_grid(std::span<const double> grid,
                                       std::span<const double> values);

  std::size_t size() const { return atoms_.size(); }
  const std::vector<double>& atoms() const { return atoms_; }
  const std::vector<double>& weights() const { return weights_; }
  double min_atom() const { return atoms_.front(); }
  double max_atom() const { return atoms_.back(); }

  // F(x): mass of (-inf, x].  Right continuous; cdf(max_atom()) == 1.0.
  double cdf(double x) const;
  // F(x-): mass of (-inf, x).
  double cdf_left(double x) const;
  // 1 - F(x).
  double tail(double x) const;
  // Generalized inverse: the smallest atom with F(atom) >= u, for u in (0, 1].
  double quantile(double u) const;

  bool operator==(const DiscreteMeasure&) const = default;

 private:
  DiscreteMeasure() = default;

  std::vector<double> atoms_;
  std::vector<double> weights_;
  std::vector<double> cum_;  // cum_[i] = weights_[0] + ... + weights_[i]; back() == 1.0
};

// n inverse-CDF draws, fully determined by the seed.
std::vector<double> sample(const DiscreteMeasure& m, std::size_t n,
                           std::uint64_t seed);

// Measure putting mass k/n on each value that appears k times among the n
// inputs.  Input order is irrelevant.
DiscreteMeasure empirical_from_samples(std::span<const double> xs);

struct Uniform01 {};

struct TruncatedExponential {
  double rate;
  double cap;
};

// n equally weighted atoms at the (k + 1/2)/n quantiles of the family,
// k = 0..n-1.  Requires n >= 2.
DiscreteMeasure discretize(Uniform01, std::size_t n);
DiscreteMeasure discretize(const TruncatedExponential& family, std::size_t n);

// Family spelled as "uniform01" or "truncated_exponential(rate,cap)".
DiscreteMeasure discretize_named(const std::string& family, std::size_t n);

struct KsResult {
  double distance;
  double witness_x;
};

// sup_x |F_a(x) - F_b(x)|, taken over atoms of both measures and their left
// limits (where the sup of two step functions lives).
KsResult ks_distance_witness(const DiscreteMeasure& a, const DiscreteMeasure& b);
double ks_distance(const DiscreteMeasure& a, const DiscreteMeasure& b);

// Same sup, but atoms closer than location_tol count as sitting at the same
// point.  For measures whose atom positions carry numerical error of their
// own (eigenvalues from separate solves), the exact comparison would charge
// the full weight to a last-ulp position difference.
KsResult ks_distance_witness(const DiscreteMeasure& a, const DiscreteMeasure& b,
                             double location_tol);
double ks_distance(const DiscreteMeasure& a, const DiscreteMeasure& b,
                   double location_tol);

// Sorted union of both atom sets, exact duplicates collapsed.
std::vector<double> merged_atom_grid(const DiscreteMeasure& a,
                                     const DiscreteMeasure& b);

// The CDF as a step curve: one point just before the support at height 0,
// then one point per atom.
std::vector<CdfPoint> cdf_points(const DiscreteMeasure& m);

}  // namespace maxconv
