#pragma once

#include <complex>

#include "maxconv/measure.hpp"

namespace maxconv {

using Complex = std::complex<double>;

// How far below the real axis an intermediate value may drift before the
// additive composition refuses to continue.
inline constexpr double kHalfPlaneSlack = 1e-14;

// G(z) = sum_i w_i / (z - x_i), for z in the open upper half-plane.
Complex cauchy_transform(const DiscreteMeasure& m, Complex z);

// H(z) = 1 / G(z).
Complex reciprocal_cauchy(const DiscreteMeasure& m, Complex z);

// The reciprocal Cauchy transform of p*delta_0 + (1-p)*delta_1 in closed
// form: z(z - 1) / (z - p).
Complex bernoulli_h(double p, Complex z);

// H_mu(H_nu(z)): the additive composition that realizes the sum of a
// monotone pair at the transform level.
Complex monotone_additive_h(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                            Complex z);

// Mass at 0 of the sum of two monotonically coupled projections with
// traces 1-p and 1-q: the limit of i*y*G(i*y) as y drops to 0, extracted
// from probes at y = 1e-3, 1e-4, 1e-5 by Richardson extrapolation.
// Equals p*q.
double atom_at_zero_monotone_projections(double p, double q);

}  // namespace maxconv
