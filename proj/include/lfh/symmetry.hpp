#pragma once

#include <string>
#include <vector>

#include "lfh/hardy.hpp"
#include "lfh/smirnov.hpp"

namespace lfh {

/// A conjugate-linear map in coefficient coordinates: x -> A conj(x).
struct ConjugationRep {
  Matrix a;
  int trusted_block;
  std::string label;

  Vector apply(const Vector& x) const { return a * x.conjugate(); }
};

struct ConjugationAxioms {
  double isometry;     // block norm of A^* A - I
  double involution;   // block norm of A conj(A) - I
};

ConjugationAxioms conjugation_axioms(const ConjugationRep& c);

/// Entrywise conjugation of Maclaurin coefficients.
ConjugationRep conj_J(int n);

/// J_Omega = V^{-1} J V, which is again plain conjugation of V-coefficients.
ConjugationRep conj_J_omega(const RiemannMap& tau, int n);

/// tau(conj(tau^{-1} w)) written out in the coefficients of tau.
Complex j_omega_target(const RiemannMap& tau, Complex w);

struct PointwiseCheck {
  double value;   // max over the grid of the two-route value gap
  double target;  // max gap between the two ways of writing the target point
};

/// conj(s(conj z_w)) / s(z_w) with z_w = tau^{-1}(w). For real coefficients
/// this is the sign of ad - bc; -i for the upper half-plane map i(1+z)/(1-z).
Complex j_omega_factor(const RiemannMap& tau, Complex w);

/// Compares (J_Omega f)(w) from the coefficient route against
/// j_omega_factor(w) conj(f(j_omega_target(w))), with f read pointwise from
/// f_values.
PointwiseCheck j_omega_pointwise_check(const SmirnovFunction& f, const ComplexFn& f_values,
                                       const std::vector<Complex>& grid);

/// W_Psi conj(W_{Psi^{-1}}) at dimension n. NotUnitarySymbol unless Psi
/// induces a unitary composition operator.
ConjugationRep conj_J_omega_psi(const RiemannMap& tau, const AffineSymbol& psi, int n);

/// Psi^{-1}(conj(Psi(w))), the point at which J_{Omega,Psi} f is read off for
/// real-coefficient tau.
Complex j_omega_psi_target(const AffineSymbol& psi, Complex w);

/// The closed forms conj(w) - 2si (equal moduli) and
/// (conj r / r) conj(w) - 2 Im(r)(bd-ac) i / (r (|c|^2-|d|^2)).
/// InvalidArgument for complex coefficients.
Complex j_omega_psi_closed_form(const RiemannMap& tau, const AffineSymbol& psi, Complex w);

/// Max gap between (C f)(w) from the matrix route and
/// j_omega_factor(w) conj(f(target)) with f a kernel function, over the grid.
double j_omega_psi_pointwise_residual(const RiemannMap& tau, const AffineSymbol& psi,
                                      const ConjugationRep& c, Complex u,
                                      const std::vector<Complex>& grid);

/// Block norm of A conj(T) - T^* A.
double c_symmetry_residual(const OperatorMatrix& t, const ConjugationRep& c);

/// max over eigenpairs (l, f) of the trusted block of
/// |(T^* - conj l) A conj(f)| / |f|.
double spectral_symmetry_residual(const OperatorMatrix& t, const ConjugationRep& c);

}  // namespace lfh
