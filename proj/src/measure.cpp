#include "maxconv/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <utility>

namespace maxconv {

namespace {

void require_finite(std::span<const double> xs, const char* what) {
  for (double x : xs) {
    if (!std::isfinite(x)) {
      throw std::domain_error(std::string("measure: ") + what + " " +
                              std::to_string(x) + " is not finite");
    }
  }
}

// Uniform draw on (0, 1]; never returns 0, so quantile() accepts it.
double unit_draw(std::mt19937_64& rng) {
  return 1.0 - static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(std::vector<double> atoms,
                                 std::vector<double> weights) {
  if (atoms.size() != weights.size()) {
    throw std::domain_error("measure: got " + std::to_string(atoms.size()) +
                            " atoms but " + std::to_string(weights.size()) +
                            " weights");
  }
  if (atoms.empty()) {
    throw std::domain_error("measure: needs at least one atom");
  }
  require_finite(atoms, "atom");
  require_finite(weights, "weight");
  for (double w : weights) {
    if (w < 0.0) {
      throw std::domain_error("measure: negative weight " + std::to_string(w));
    }
  }

  std::vector<std::pair<double, double>> entries(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    entries[i] = {atoms[i], weights[i]};
  }
  std::sort(entries.begin(), entries.end());

  // Merge runs of nearly identical atoms, then drop negligible weights.
  for (const auto& [x, w] : entries) {
    if (!atoms_.empty() && x - atoms_.back() <= kAtomMergeTol) {
      weights_.back() += w;
    } else {
      atoms_.push_back(x);
      weights_.push_back(w);
    }
  }
  std::size_t kept = 0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (weights_[i] > kWeightPruneTol) {
      atoms_[kept] = atoms_[i];
      weights_[kept] = weights_[i];
      ++kept;
    }
  }
  atoms_.resize(kept);
  weights_.resize(kept);
  if (atoms_.empty()) {
    throw std::domain_error("measure: all weights are negligible");
  }

  double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(total - 1.0) > kNormalizationTol) {
    throw std::domain_error("measure: weights sum to " + std::to_string(total));
  }
  for (double& w : weights_) {
    w /= total;
  }

  // Pin the top of the CDF to exactly 1: the last weight absorbs whatever
  // rounding slack the prefix sum accumulated.
  cum_.resize(atoms_.size());
  double run = 0.0;
  for (std::size_t i = 0; i + 1 < atoms_.size(); ++i) {
    run += weights_[i];
    cum_[i] = run;
  }
  if (atoms_.size() > 1) {
    weights_.back() = 1.0 - run;
    if (weights_.back() <= 0.0) {
      throw ConsistencyError("measure: prefix sums exhausted the total mass");
    }
  } else {
    weights_.back() = 1.0;
  }
  cum_.back() = 1.0;
}

DiscreteMeasure DiscreteMeasure::dirac(double location) {
  return DiscreteMeasure({location}, {1.0});
}

DiscreteMeasure DiscreteMeasure::from_cdf_grid(std::span<const double> grid,
                                               std::span<const double> values) {
  if (grid.size() != values.size() || grid.empty()) {
    throw std::domain_error("from_cdf_grid: grid and values must match and be nonempty");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw std::domain_error("from_cdf_grid: grid must be strictly increasing");
    }
  }
  if (std::abs(values.back() - 1.0) > kNormalizationTol) {
    throw ConsistencyError("from_cdf_grid: final value " +
                           std::to_string(values.back()) + " is not 1");
  }

  std::vector<double> atoms;
  std::vector<double> weights;
  atoms.reserve(grid.size());
  weights.reserve(grid.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double v = std::clamp(values[i], 0.0, 1.0);
    double d = v - prev;
    if (d < -kNormalizationTol) {
      throw ConsistencyError("from_cdf_grid: value drops by " +
                             std::to_string(-d) + " at x = " +
                             std::to_string(grid[i]));
    }
    if (d > 0.0) {
      atoms.push_back(grid[i]);
      weights.push_back(d);
      prev = v;
    }
  }
  if (atoms.empty()) {
    throw ConsistencyError("from_cdf_grid: no mass anywhere on the grid");
  }
  return DiscreteMeasure(std::move(atoms), std::move(weights));
}

double DiscreteMeasure::cdf(double x) const {
  auto it = std::upper_bound(atoms_.begin(), atoms_.end(), x);
  if (it == atoms_.begin()) return 0.0;
  return cum_[static_cast<std::size_t>(it - atoms_.begin()) - 1];
}

double DiscreteMeasure::cdf_left(double x) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x);
  if (it == atoms_.begin()) return 0.0;
  return cum_[static_cast<std::size_t>(it - atoms_.begin()) - 1];
}

double DiscreteMeasure::tail(double x) const { return 1.0 - cdf(x); }

double DiscreteMeasure::quantile(double u) const {
  if (!(u > 0.0) || u > 1.0) {
    throw std::domain_error("quantile: u = " + std::to_string(u) +
                            " is outside (0, 1]");
  }
  auto it = std::lower_bound(cum_.begin(), cum_.end(), u);
  // cum_.back() == 1.0 >= u, so the search always lands on an atom.
  return atoms_[static_cast<std::size_t>(it - cum_.begin())];
}

std::vector<double> sample(const DiscreteMeasure& m, std::size_t n,
                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> out(n);
  for (double& x : out) {
    x = m.quantile(unit_draw(rng));
  }
  return out;
}

DiscreteMeasure empirical_from_samples(std::span<const double> xs) {
  if (xs.empty()) {
    throw std::domain_error("empirical_from_samples: no samples");
  }
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> atoms;
  std::vector<double> weights;
  const double unit = 1.0 / static_cast<double>(sorted.size());
  for (double x : sorted) {
    if (!atoms.empty() && x == atoms.back()) {
      weights.back() += unit;
    } else {
      atoms.push_back(x);
      weights.push_back(unit);
    }
  }
  return DiscreteMeasure(std::move(atoms), std::move(weights));
}

DiscreteMeasure discretize(Uniform01, std::size_t n) {
  if (n < 2) {
    throw std::domain_error("discretize: need at least 2 atoms");
  }
  std::vector<double> atoms(n);
  std::vector<double> weights(n, 1.0 / static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    atoms[k] = (static_cast<double>(k) + 0.5) / static_cast<double>(n);
  }
  return DiscreteMeasure(std::move(atoms), std::move(weights));
}

DiscreteMeasure discretize(const TruncatedExponential& family, std::size_t n) {
  if (n < 2) {
    throw std::domain_error("discretize: need at least 2 atoms");
  }
  if (!(family.rate > 0.0) || !(family.cap > 0.0)) {
    throw std::domain_error("discretize: rate and cap must be positive");
  }
  const double z = -std::expm1(-family.rate * family.cap);  // P(X <= cap) untruncated
  std::vector<double> atoms(n);
  std::vector<double> weights(n, 1.0 / static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    double p = (static_cast<double>(k) + 0.5) / static_cast<double>(n);
    atoms[k] = -std::log1p(-p * z) / family.rate;
  }
  return DiscreteMeasure(std::move(atoms), std::move(weights));
}

DiscreteMeasure discretize_named(const std::string& family, std::size_t n) {
  if (family == "uniform01") {
    return discretize(Uniform01{}, n);
  }
  const std::string prefix = "truncated_exponential(";
  if (family.starts_with(prefix) && family.ends_with(")")) {
    std::string args = family.substr(prefix.size(),
                                     family.size() - prefix.size() - 1);
    auto comma = args.find(',');
    if (comma != std::string::npos) {
      try {
        std::size_t used1 = 0;
        std::size_t used2 = 0;
        std::string first = args.substr(0, comma);
        std::string second = args.substr(comma + 1);
        double rate = std::stod(first, &used1);
        double cap = std::stod(second, &used2);
        if (used1 == first.size() && used2 == second.size()) {
          return discretize(TruncatedExponential{rate, cap}, n);
        }
      } catch (const std::invalid_argument&) {
      } catch (const std::out_of_range&) {
      }
    }
  }
  throw std::domain_error("discretize: unknown family \"" + family + "\"");
}

KsResult ks_distance_witness(const DiscreteMeasure& a,
                             const DiscreteMeasure& b) {
  KsResult best{0.0, a.min_atom()};
  for (double g : merged_atom_grid(a, b)) {
    double at = std::abs(a.cdf(g) - b.cdf(g));
    double before = std::abs(a.cdf_left(g) - b.cdf_left(g));
    double d = std::max(at, before);
    if (d > best.distance) {
      best = {d, g};
    }
  }
  return best;
}

double ks_distance(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  return ks_distance_witness(a, b).distance;
}

KsResult ks_distance_witness(const DiscreteMeasure& a, const DiscreteMeasure& b,
                             double location_tol) {
  if (!(location_tol > 0.0)) {
    return ks_distance_witness(a, b);
  }
  auto grid = merged_atom_grid(a, b);
  KsResult best{0.0, grid.front()};
  std::size_t i = 0;
  while (i < grid.size()) {
    // Chain grid points closer than the tolerance into one cluster and
    // probe the CDFs just outside it on both sides.
    std::size_t j = i;
    while (j + 1 < grid.size() && grid[j + 1] - grid[j] <= location_tol) ++j;
    double lo = grid[i] - location_tol;
    double hi = grid[j] + location_tol;
    double after = std::abs(a.cdf(hi) - b.cdf(hi));
    double before = std::abs(a.cdf(lo) - b.cdf(lo));
    double d = std::max(after, before);
    if (d > best.distance) {
      best = {d, grid[i]};
    }
    i = j + 1;
  }
  return best;
}

double ks_distance(const DiscreteMeasure& a, const DiscreteMeasure& b,
                   double location_tol) {
  return ks_distance_witness(a, b, location_tol).distance;
}

std::vector<double> merged_atom_grid(const DiscreteMeasure& a,
                                     const DiscreteMeasure& b) {
  std::vector<double> grid;
  grid.reserve(a.size() + b.size());
  std::merge(a.atoms().begin(), a.atoms().end(), b.atoms().begin(),
             b.atoms().end(), std::back_inserter(grid));
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::vector<CdfPoint> cdf_points(const DiscreteMeasure& m) {
  std::vector<CdfPoint> pts;
  pts.reserve(m.size() + 1);
  pts.push_back({m.min_atom() - 1.0, 0.0});
  for (double x : m.atoms()) {
    pts.push_back({x, m.cdf(x)});
  }
  return pts;
}

}  // namespace maxconv
