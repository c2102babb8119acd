#pragma once

#include <vector>

#include "lfh/hardy.hpp"
#include "lfh/mobius.hpp"

namespace lfh {

/// An element f of H^2(Omega) held by the coefficients of
/// Vf = (f o tau) (tau')^{1/2}.
struct SmirnovFunction {
  RiemannMap tau;
  TruncatedSeries vcoeffs;
};

/// Coefficients of tau' = (ad-bc)/(cz+d)^2, formally, with n coefficients.
TruncatedSeries tau_prime_series(const RiemannMap& tau, int n);

/// series_sqrt of tau_prime_series.
TruncatedSeries sqrt_derivative_series(const RiemannMap& tau, int n);

/// The analytic branch of (tau')^{1/2} that is principal at 0:
/// s(z) = s(0) d/(cz+d).
Complex sqrt_derivative(const RiemannMap& tau, Complex z);

/// Vf for a black-box f, by quadrature on |z| = radius.
SmirnovFunction v_forward(const RiemannMap& tau, const ComplexFn& f, int n, int samples = 0,
                          double radius = 0.75);

/// Vf for the polynomial f(w) = sum p_k w^k, by series arithmetic. Needs the
/// pole of tau strictly outside the closed disc.
SmirnovFunction v_forward_polynomial(const RiemannMap& tau, const std::vector<Complex>& p, int n);

/// s(tau^{-1} w)^{-1} (Vf)(tau^{-1} w). Throws EvaluationPointTooNearBoundary
/// when |tau^{-1} w| > 0.9.
Complex v_inverse_eval(const SmirnovFunction& g, Complex w);

/// |ad-bc|, |a|^2-|b|^2, b conj(d) - a conj(c), |c|^2-|d|^2 and
/// conj(b) d - conj(a) c.
struct KernelScalars {
  double det_abs;
  double aa_bb;
  Complex bd_ac;
  double cc_dd;
  Complex bd_ac_conj;
};

KernelScalars kernel_scalars(const RiemannMap& tau);

/// Closed form |ad-bc| / (A + B conj(u) + [Cc conj(u) + E] w).
/// PointOutsideDomain unless both points lie in Omega.
Complex kernel_k_omega(const RiemannMap& tau, Complex u, Complex w);

/// The same value through the isometry:
/// conj(s(z_u))^{-1} s(z_w)^{-1} / (1 - conj(z_u) z_w).
Complex kernel_v_route(const RiemannMap& tau, Complex u, Complex w);

struct KernelVectorOmega {
  Complex u;
  TruncatedSeries vcoeffs;
  KernelScalars scalars;
};

/// V k_u = conj(s(z_u))^{-1} K_{z_u} with n coefficients.
KernelVectorOmega kernel_vector(const RiemannMap& tau, Complex u, int n);
SmirnovFunction kernel_function(const RiemannMap& tau, Complex u, int n);

/// psi = (tau' / tau' o phi)^{1/2} with n coefficients.
TruncatedSeries w_phi_weight(const RiemannMap& tau, const MobiusMap& phi, int n);

/// V C_Phi V^{-1} = W_{psi, phi} with phi = tau^{-1} o Phi o tau. A constant
/// symbol w0 gives f -> (tau'/tau'(alpha))^{1/2} f(alpha), alpha = tau^{-1} w0.
/// Throws SymbolNotSelfMap when Phi does not map Omega into itself.
OperatorMatrix w_phi_matrix(const RiemannMap& tau, const AffineSymbol& phi, int n);

/// |<Vf, V k_u> - f(u)|.
double reproducing_residual(const RiemannMap& tau, Complex u, const SmirnovFunction& f);

/// Block norm of W_Phi^* V k_u - V k_{Phi(u)}.
double adjoint_kernel_action_residual(const RiemannMap& tau, const AffineSymbol& phi, Complex u,
                                      int n);

}  // namespace lfh
