#pragma once

#include "maxconv/measure.hpp"

namespace maxconv {

// Max-convolutions of two finitely supported laws, computed at the CDF
// level on the union of the atom grids.

// F(x) = F_a(x) F_b(x): the law of max(X, Y) for independent X ~ a, Y ~ b.
DiscreteMeasure classical_max(const DiscreteMeasure& a,
                              const DiscreteMeasure& b);

// F(x) = max{F_a(x) + F_b(x) - 1, 0}.
DiscreteMeasure free_max(const DiscreteMeasure& a, const DiscreteMeasure& b);

// F(x) = F_a F_b / (F_a + F_b - F_a F_b), and 0 wherever either factor's
// CDF is 0.  Defined for measures supported in [0, inf) only.
DiscreteMeasure boolean_max(const DiscreteMeasure& a, const DiscreteMeasure& b);

// Coincides with classical_max: for monotone pairs the distribution of the
// spectral maximum factors through the marginal CDFs the same way it does
// for independent random variables.
DiscreteMeasure monotone_max(const DiscreteMeasure& a, const DiscreteMeasure& b);

// F(x) = max{t F_m(x) - (t - 1), 0} for real t >= 1; t = 1 returns m itself
// and integer t matches free_max iterated t times.
DiscreteMeasure free_max_power(const DiscreteMeasure& m, double t);

}  // namespace maxconv
