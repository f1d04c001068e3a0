#include "maxconv/transforms.hpp"

#include <string>

namespace maxconv {

namespace {

void require_upper_half(Complex z, const char* what) {
  if (!(z.imag() > 0.0)) {
    throw std::domain_error(std::string(what) +
                            ": z must lie in the open upper half-plane");
  }
}

Complex cauchy_sum(const DiscreteMeasure& m, Complex z) {
  Complex g = 0.0;
  const auto& xs = m.atoms();
  const auto& ws = m.weights();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    g += ws[i] / (z - xs[i]);
  }
  return g;
}

}  // namespace

Complex cauchy_transform(const DiscreteMeasure& m, Complex z) {
  require_upper_half(z, "cauchy_transform");
  return cauchy_sum(m, z);
}

Complex reciprocal_cauchy(const DiscreteMeasure& m, Complex z) {
  require_upper_half(z, "reciprocal_cauchy");
  return 1.0 / cauchy_sum(m, z);
}

Complex bernoulli_h(double p, Complex z) {
  if (!(p >= 0.0) || p > 1.0) {
    throw std::domain_error("bernoulli_h: p = " + std::to_string(p) +
                            " is outside [0, 1]");
  }
  require_upper_half(z, "bernoulli_h");
  return z * (z - 1.0) / (z - p);
}

Complex monotone_additive_h(const DiscreteMeasure& mu,
                            const DiscreteMeasure& nu, Complex z) {
  require_upper_half(z, "monotone_additive_h");
  Complex inner = 1.0 / cauchy_sum(nu, z);
  // H maps the upper half-plane into itself; a visibly negative imaginary
  // part means the value is garbage, not roundoff.
  if (inner.imag() < -kHalfPlaneSlack) {
    throw std::domain_error(
        "monotone_additive_h: inner transform left the upper half-plane");
  }
  return 1.0 / cauchy_sum(mu, inner);
}

double atom_at_zero_monotone_projections(double p, double q) {
  if (!(p >= 0.0) || p > 1.0 || !(q >= 0.0) || q > 1.0) {
    throw std::domain_error("atom_at_zero: p and q must lie in [0, 1]");
  }
  // z G(z) for the sum, with G obtained from the closed-form H's:
  // G = 1 / H_P(H_Q(z)).
  auto zg = [&](double y) {
    Complex z(0.0, y);
    Complex w = bernoulli_h(q, z);
    return z / bernoulli_h(p, w);
  };
  // Two rounds of Richardson in the probe scale (ratio 10) remove the
  // O(y) and O(y^2) terms of the expansion around 0.
  Complex f0 = zg(1e-3);
  Complex f1 = zg(1e-4);
  Complex f2 = zg(1e-5);
  Complex g1 = (10.0 * f1 - f0) / 9.0;
  Complex g2 = (10.0 * f2 - f1) / 9.0;
  Complex h = (100.0 * g2 - g1) / 99.0;
  return h.real();
}

}  // namespace maxconv
