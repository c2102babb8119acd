#pragma once

#include <random>

#include "lfh/mobius.hpp"
#include "lfh/series.hpp"

namespace lfh {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);
/// Uniform on the disc of the given radius.
Complex random_in_disc(Rng& rng, double radius);
Complex random_unimodular(Rng& rng);

/// C + R e^{it} (z - a)/(1 - conj(a) z) with |C| + R <= 1, so the map sends
/// the disc into itself and its pole 1/conj(a) has modulus >= min_pole.
MobiusMap random_disc_selfmap(Rng& rng, double min_pole = 1.2);

/// Random quadruple with |c|/|d| <= 0.7, so Omega is a bounded disc.
RiemannMap random_bounded_tau(Rng& rng);

/// Random quadruple with |c| = |d|, so Omega is a half-plane.
RiemannMap random_halfplane_tau(Rng& rng);

/// tau(z) for z uniform in the disc of the given radius.
Complex random_point(Rng& rng, const RiemannMap& tau, double radius = 0.8);

/// Random quadruple with real coefficients; |c| = |d| when equal_modulus,
/// else |c|/|d| <= 0.7.
RiemannMap random_real_tau(Rng& rng, bool equal_modulus);

enum class HalfPlaneSymbolKind { translation, automorphic, generic };

/// An affine self-map mu w + r of the half-plane tau(U). Translations have
/// mu = 1; automorphic symbols have mu != 1 and map the boundary line onto
/// itself; generic ones have mu != 1 and push the boundary line inward.
AffineSymbol random_halfplane_symbol(Rng& rng, const RiemannMap& tau, HalfPlaneSymbolKind kind);

/// Phi(w) = u0 + r (w - u0) about the centre u0 of a bounded tau(U), with
/// |r| <= max_modulus.
AffineSymbol random_centred_symbol(Rng& rng, const RiemannMap& tau, double max_modulus = 0.95);

/// A unitary-inducing symbol of tau(U): a translation along the boundary line
/// of a half-plane, or a rotation about the centre of a bounded domain. The
/// disc map phi it induces keeps |phi(0)| <= max_image_of_zero.
AffineSymbol random_unitary_symbol(Rng& rng, const RiemannMap& tau, double max_image_of_zero = 0.5);

/// Random polynomial of the given degree with coefficients in the unit square.
TruncatedSeries random_polynomial(Rng& rng, int degree, int order);

}  // namespace lfh
