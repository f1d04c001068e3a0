#include "maxconv/max_conv.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace maxconv {

namespace {

void require_nonnegative_support(const DiscreteMeasure& m, const char* which) {
  if (m.min_atom() < 0.0) {
    throw std::domain_error(
        std::string("boolean max-convolution needs nonnegative support; ") +
        which + " has an atom at " + std::to_string(m.min_atom()));
  }
}

template <typename Combine>
DiscreteMeasure combine_on_union(const DiscreteMeasure& a,
                                 const DiscreteMeasure& b, Combine&& f) {
  auto grid = merged_atom_grid(a, b);
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = f(a.cdf(grid[i]), b.cdf(grid[i]));
  }
  return DiscreteMeasure::from_cdf_grid(grid, values);
}

}  // namespace

DiscreteMeasure classical_max(const DiscreteMeasure& a,
                              const DiscreteMeasure& b) {
  return combine_on_union(a, b, [](double fa, double fb) { return fa * fb; });
}

DiscreteMeasure free_max(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  return combine_on_union(
      a, b, [](double fa, double fb) { return std::max(fa + fb - 1.0, 0.0); });
}

DiscreteMeasure boolean_max(const DiscreteMeasure& a,
                            const DiscreteMeasure& b) {
  require_nonnegative_support(a, "first factor");
  require_nonnegative_support(b, "second factor");
  return combine_on_union(a, b, [](double fa, double fb) {
    if (fa == 0.0 || fb == 0.0) return 0.0;
    return fa * fb / (fa + fb - fa * fb);
  });
}

DiscreteMeasure monotone_max(const DiscreteMeasure& a,
                             const DiscreteMeasure& b) {
  return classical_max(a, b);
}

DiscreteMeasure free_max_power(const DiscreteMeasure& m, double t) {
  if (!(t >= 1.0)) {
    throw std::domain_error("free_max_power: t = " + std::to_string(t) +
                            " is below 1");
  }
  const auto& grid = m.atoms();
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = std::max(t * m.cdf(grid[i]) - (t - 1.0), 0.0);
  }
  return DiscreteMeasure::from_cdf_grid(grid, values);
}

}  // namespace maxconv
