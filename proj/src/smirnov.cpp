#include "lfh/smirnov.hpp"

#include <algorithm>
#include <cmath>

#include "lfh/error.hpp"

namespace lfh {

namespace {

Complex preimage_in_disc(const RiemannMap& tau, Complex w) {
  if (!tau.contains(w)) throw Error(ErrorCode::PointOutsideDomain, "point lies outside Omega");
  return tau.inverse(w);
}

// D / (c g + d)^2 for a series g.
TruncatedSeries derivative_along(const RiemannMap& tau, const TruncatedSeries& g) {
  const int deg = g.order();
  const TruncatedSeries den = tau.c() * g + tau.d();
  return tau.map().det() * (TruncatedSeries::constant(deg, 1.0) / (den * den));
}

}  // namespace

TruncatedSeries tau_prime_series(const RiemannMap& tau, int n) {
  return derivative_along(tau, TruncatedSeries::monomial(n - 1, 1));
}

TruncatedSeries sqrt_derivative_series(const RiemannMap& tau, int n) {
  return series_sqrt(tau_prime_series(tau, n));
}

Complex sqrt_derivative(const RiemannMap& tau, Complex z) {
  const Complex d = tau.d();
  const Complex s0 = principal_sqrt(tau.map().det() / (d * d));
  const Complex den = tau.c() * z + d;
  if (den == Complex{}) throw Error(ErrorCode::DenominatorVanishes, "at the pole of tau");
  return s0 * d / den;
}

SmirnovFunction v_forward(const RiemannMap& tau, const ComplexFn& f, int n, int samples,
                          double radius) {
  if (samples == 0) samples = 16 * n;
  const auto g = [&](Complex z) { return f(tau(z)) * sqrt_derivative(tau, z); };
  return {tau, to_series(fourier_coefficients(g, n, samples, radius))};
}

SmirnovFunction v_forward_polynomial(const RiemannMap& tau, const std::vector<Complex>& p, int n) {
  const TruncatedSeries t = mobius_taylor(tau.map(), n - 1);
  TruncatedSeries acc(n - 1);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return {tau, acc * sqrt_derivative_series(tau, n)};
}

Complex v_inverse_eval(const SmirnovFunction& g, Complex w) {
  const Complex z = preimage_in_disc(g.tau, w);
  if (std::abs(z) > 0.9) {
    throw Error(ErrorCode::EvaluationPointTooNearBoundary, "|tau^{-1}(w)| exceeds 0.9");
  }
  return series_eval(g.vcoeffs, z) / sqrt_derivative(g.tau, z);
}

KernelScalars kernel_scalars(const RiemannMap& tau) {
  const Complex a = tau.a(), b = tau.b(), c = tau.c(), d = tau.d();
  return {std::abs(a * d - b * c), std::norm(a) - std::norm(b),
          b * std::conj(d) - a * std::conj(c), std::norm(c) - std::norm(d),
          std::conj(b) * d - std::conj(a) * c};
}

Complex kernel_k_omega(const RiemannMap& tau, Complex u, Complex w) {
  preimage_in_disc(tau, u);
  preimage_in_disc(tau, w);
  const KernelScalars k = kernel_scalars(tau);
  const Complex ub = std::conj(u);
  const Complex den = k.aa_bb + k.bd_ac * ub + (k.cc_dd * ub + k.bd_ac_conj) * w;
  if (std::abs(den) <= 1e-300) throw Error(ErrorCode::DenominatorVanishes, "kernel denominator");
  return k.det_abs / den;
}

Complex kernel_v_route(const RiemannMap& tau, Complex u, Complex w) {
  const Complex zu = preimage_in_disc(tau, u);
  const Complex zw = preimage_in_disc(tau, w);
  return 1.0 / (std::conj(sqrt_derivative(tau, zu)) * sqrt_derivative(tau, zw) *
                (1.0 - std::conj(zu) * zw));
}

KernelVectorOmega kernel_vector(const RiemannMap& tau, Complex u, int n) {
  const Complex zu = preimage_in_disc(tau, u);
  const Complex scale = 1.0 / std::conj(sqrt_derivative(tau, zu));
  return {u, scale * kernel_K(zu, n).coeffs, kernel_scalars(tau)};
}

SmirnovFunction kernel_function(const RiemannMap& tau, Complex u, int n) {
  return {tau, kernel_vector(tau, u, n).vcoeffs};
}

TruncatedSeries w_phi_weight(const RiemannMap& tau, const MobiusMap& phi, int n) {
  const TruncatedSeries phis = mobius_taylor(phi, n - 1);
  return series_sqrt(tau_prime_series(tau, n) / derivative_along(tau, phis));
}

OperatorMatrix w_phi_matrix(const RiemannMap& tau, const AffineSymbol& phi, int n) {
  if (phi.is_constant()) {
    if (!tau.contains(phi.offset())) {
      throw Error(ErrorCode::SymbolNotSelfMap, "constant value lies outside Omega");
    }
    const Complex alpha = tau.inverse(phi.offset());
    const TruncatedSeries psi =
        series_sqrt((1.0 / tau.derivative(alpha)) * tau_prime_series(tau, n));
    OperatorMatrix w = weighted_composition_matrix(
        psi, TruncatedSeries::constant(n - 1, alpha), n);
    return OperatorMatrix(w.entries(), w.trusted_block(), "W_Phi constant");
  }
  const MobiusMap disc = symbol_conjugate_to_disc(tau, phi);
  if (mobius_is_disc_selfmap(disc).verdict == SelfMapVerdict::no) {
    throw Error(ErrorCode::SymbolNotSelfMap, "Phi does not map Omega into itself");
  }
  OperatorMatrix w = weighted_composition_matrix(w_phi_weight(tau, disc, n), disc, n);
  return OperatorMatrix(w.entries(), w.trusted_block(), "W_Phi");
}

double reproducing_residual(const RiemannMap& tau, Complex u, const SmirnovFunction& f) {
  const int n = static_cast<int>(f.vcoeffs.size());
  const TruncatedSeries k = kernel_vector(tau, u, n).vcoeffs;
  return std::abs(inner_product(f.vcoeffs, k) - v_inverse_eval(f, u));
}

double adjoint_kernel_action_residual(const RiemannMap& tau, const AffineSymbol& phi, Complex u,
                                      int n) {
  const OperatorMatrix w = w_phi_matrix(tau, phi, n);
  const Vector lhs = w.entries().adjoint() * to_vector(kernel_vector(tau, u, n).vcoeffs);
  const Vector rhs = to_vector(kernel_vector(tau, phi(u), n).vcoeffs);
  return (lhs - rhs).head(w.trusted_block()).norm();
}

}  // namespace lfh
