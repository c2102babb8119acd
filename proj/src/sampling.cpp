#include "lfh/sampling.hpp"

#include <cmath>
#include <numbers>

#include "lfh/smirnov.hpp"

namespace lfh {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Complex random_in_disc(Rng& rng, double radius) {
  const double r = radius * std::sqrt(uniform(rng, 0.0, 1.0));
  return std::polar(r, uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

Complex random_unimodular(Rng& rng) {
  return std::polar(1.0, uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

MobiusMap random_disc_selfmap(Rng& rng, double min_pole) {
  const Complex a = random_in_disc(rng, 1.0 / min_pole);
  const Complex rot = random_unimodular(rng);
  const double rad = uniform(rng, 0.2, 0.9);
  const Complex centre = random_in_disc(rng, 1.0 - rad);
  // rad * rot (z - a)/(1 - conj(a) z) + centre over the common denominator.
  return MobiusMap(rad * rot - centre * std::conj(a), centre - rad * rot * a, -std::conj(a), 1.0);
}

RiemannMap random_bounded_tau(Rng& rng) {
  for (;;) {
    const Complex d = std::polar(uniform(rng, 0.5, 2.0), uniform(rng, 0.0, 2.0 * std::numbers::pi));
    const Complex c = d * random_in_disc(rng, 0.7);
    const Complex a = random_in_disc(rng, 2.0);
    const Complex b = random_in_disc(rng, 2.0);
    if (std::abs(a * d - b * c) > 0.2 * std::abs(d) * std::abs(d)) return RiemannMap(a, b, c, d);
  }
}

RiemannMap random_halfplane_tau(Rng& rng) {
  for (;;) {
    const Complex d = std::polar(uniform(rng, 0.5, 2.0), uniform(rng, 0.0, 2.0 * std::numbers::pi));
    const Complex c = d * random_unimodular(rng);
    const Complex a = random_in_disc(rng, 2.0);
    const Complex b = random_in_disc(rng, 2.0);
    if (std::abs(a * d - b * c) > 0.2 * std::abs(d) * std::abs(d)) return RiemannMap(a, b, c, d);
  }
}

RiemannMap random_real_tau(Rng& rng, bool equal_modulus) {
  for (;;) {
    const double d = (uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0) * uniform(rng, 0.5, 2.0);
    const double c = equal_modulus ? (uniform(rng, 0.0, 1.0) < 0.5 ? -d : d)
                                   : d * uniform(rng, -0.7, 0.7);
    const double a = uniform(rng, -2.0, 2.0);
    const double b = uniform(rng, -2.0, 2.0);
    if (std::abs(a * d - b * c) > 0.2 * d * d) return RiemannMap(a, b, c, d);
  }
}

AffineSymbol random_halfplane_symbol(Rng& rng, const RiemannMap& tau, HalfPlaneSymbolKind kind) {
  // Omega = {A + 2 Re(conj(B) u) > 0}; mu u + r keeps it iff the slack
  // (1 - mu) A + 2 Re(conj(B) r) is nonnegative.
  const KernelScalars k = kernel_scalars(tau);
  double mu = 1.0;
  if (kind != HalfPlaneSymbolKind::translation) {
    mu = uniform(rng, 0.0, 1.0) < 0.5 ? uniform(rng, 0.4, 0.8) : uniform(rng, 1.5, 2.5);
  }
  const double slack = kind == HalfPlaneSymbolKind::automorphic ? 0.0 : uniform(rng, 0.2, 2.0);
  const double along = uniform(rng, -2.0, 2.0);
  const double nb = std::abs(k.bd_ac);
  const Complex r = k.bd_ac * ((slack - (1.0 - mu) * k.aa_bb) / (2.0 * nb * nb)) +
                    Complex(0.0, along) * k.bd_ac / nb;
  return AffineSymbol(mu, r);
}

AffineSymbol random_centred_symbol(Rng& rng, const RiemannMap& tau, double max_modulus) {
  const KernelScalars k = kernel_scalars(tau);
  const Complex r = random_in_disc(rng, max_modulus);
  return AffineSymbol(r, (r - 1.0) * k.bd_ac / k.cc_dd);
}

AffineSymbol random_unitary_symbol(Rng& rng, const RiemannMap& tau, double max_image_of_zero) {
  const KernelScalars k = kernel_scalars(tau);
  for (;;) {
    AffineSymbol psi(1.0, 0.0);
    if (tau.equal_modulus()) {
      const double s = uniform(rng, -2.0, 2.0) * k.det_abs;
      psi = AffineSymbol(1.0, Complex(0.0, s) * k.bd_ac / std::abs(k.bd_ac));
    } else {
      const Complex r = random_unimodular(rng);
      psi = AffineSymbol(r, (r - 1.0) * k.bd_ac / k.cc_dd);
    }
    if (std::abs(symbol_conjugate_to_disc(tau, psi)(0.0)) <= max_image_of_zero) return psi;
  }
}

Complex random_point(Rng& rng, const RiemannMap& tau, double radius) {
  return tau(random_in_disc(rng, radius));
}

TruncatedSeries random_polynomial(Rng& rng, int degree, int order) {
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex{});
  for (int k = 0; k <= degree && k <= order; ++k) {
    c[static_cast<std::size_t>(k)] = Complex(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
  }
  return TruncatedSeries(order, std::move(c));
}

}  // namespace lfh
