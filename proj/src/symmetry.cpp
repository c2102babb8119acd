#include "lfh/symmetry.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "lfh/classify.hpp"
#include "lfh/error.hpp"

namespace lfh {

ConjugationAxioms conjugation_axioms(const ConjugationRep& c) {
  const Matrix eye = Matrix::Identity(c.a.rows(), c.a.cols());
  return {block_norm(c.a.adjoint() * c.a - eye, c.trusted_block),
          block_norm(c.a * c.a.conjugate() - eye, c.trusted_block)};
}

ConjugationRep conj_J(int n) { return {Matrix::Identity(n, n), n, "J"}; }

ConjugationRep conj_J_omega(const RiemannMap& /*tau*/, int n) {
  return {Matrix::Identity(n, n), n, "J_Omega"};
}

Complex j_omega_target(const RiemannMap& tau, Complex w) {
  const Complex a = tau.a(), b = tau.b(), c = tau.c(), d = tau.d();
  const Complex wb = std::conj(w);
  const Complex num = a * std::conj(b) - b * std::conj(a) - a * std::conj(d) * wb +
                      b * std::conj(c) * wb;
  const Complex den = c * std::conj(b) - d * std::conj(a) - c * std::conj(d) * wb +
                      d * std::conj(c) * wb;
  return num / den;
}

Complex j_omega_factor(const RiemannMap& tau, Complex w) {
  const Complex zw = tau.inverse(w);
  return std::conj(sqrt_derivative(tau, std::conj(zw))) / sqrt_derivative(tau, zw);
}

PointwiseCheck j_omega_pointwise_check(const SmirnovFunction& f, const ComplexFn& f_values,
                                       const std::vector<Complex>& grid) {
  const RiemannMap& tau = f.tau;
  std::vector<Complex> conj_coeffs(f.vcoeffs.coeffs().begin(), f.vcoeffs.coeffs().end());
  for (Complex& x : conj_coeffs) x = std::conj(x);
  const SmirnovFunction jf{tau, TruncatedSeries(f.vcoeffs.order(), std::move(conj_coeffs))};
  PointwiseCheck out{0.0, 0.0};
  for (Complex w : grid) {
    const Complex target = j_omega_target(tau, w);
    out.target = std::max(out.target, std::abs(target - tau(std::conj(tau.inverse(w)))));
    const Complex direct = j_omega_factor(tau, w) * std::conj(f_values(target));
    out.value = std::max(out.value, std::abs(v_inverse_eval(jf, w) - direct));
  }
  return out;
}

ConjugationRep conj_J_omega_psi(const RiemannMap& tau, const AffineSymbol& psi, int n) {
  if (psi.is_constant() || is_unitary_symbol(tau, psi).value != Tri::yes) {
    throw Error(ErrorCode::NotUnitarySymbol, "Psi does not induce a unitary operator");
  }
  const OperatorMatrix w = w_phi_matrix(tau, psi, n);
  const OperatorMatrix winv = w_phi_matrix(tau, psi.inverse(), n);
  Matrix a = w.entries() * winv.entries().conjugate();
  const int b = std::min({w.trusted_block(), winv.trusted_block(), estimate_trusted_block(a)});
  return {std::move(a), b, "J_Omega_Psi"};
}

Complex j_omega_psi_target(const AffineSymbol& psi, Complex w) {
  return psi.inverse()(std::conj(psi(w)));
}

Complex j_omega_psi_closed_form(const RiemannMap& tau, const AffineSymbol& psi, Complex w) {
  if (!tau.map().has_real_coefficients()) {
    throw Error(ErrorCode::InvalidArgument, "closed form needs real coefficients");
  }
  const Complex i(0.0, 1.0);
  if (tau.equal_modulus()) return std::conj(w) - 2.0 * psi.offset().imag() * i;
  const double a = tau.a().real(), b = tau.b().real(), c = tau.c().real(), d = tau.d().real();
  const Complex r = psi.slope();
  return std::conj(r) / r * std::conj(w) -
         2.0 * r.imag() * (b * d - a * c) * i / (r * (c * c - d * d));
}

double j_omega_psi_pointwise_residual(const RiemannMap& tau, const AffineSymbol& psi,
                                      const ConjugationRep& c, Complex u,
                                      const std::vector<Complex>& grid) {
  const int n = static_cast<int>(c.a.rows());
  const Vector f = to_vector(kernel_vector(tau, u, n).vcoeffs);
  const SmirnovFunction cf{tau, to_series(c.apply(f))};
  double worst = 0.0;
  for (Complex w : grid) {
    const Complex expected =
        j_omega_factor(tau, w) * std::conj(kernel_k_omega(tau, u, j_omega_psi_closed_form(tau, psi, w)));
    worst = std::max(worst, std::abs(v_inverse_eval(cf, w) - expected));
  }
  return worst;
}

double c_symmetry_residual(const OperatorMatrix& t, const ConjugationRep& c) {
  if (t.order() != c.a.rows()) throw Error(ErrorCode::OrderMismatch, "operator vs conjugation");
  const int b = std::min(t.trusted_block(), c.trusted_block);
  const Matrix& m = t.entries();
  return block_norm(c.a * m.conjugate() - m.adjoint() * c.a, b);
}

double spectral_symmetry_residual(const OperatorMatrix& t, const ConjugationRep& c) {
  const int b = std::min(t.trusted_block(), c.trusted_block);
  const Matrix tb = t.block(b);
  const Matrix ab = c.a.topLeftCorner(b, b);
  const Eigen::ComplexEigenSolver<Matrix> es(tb);
  double worst = 0.0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const Vector f = es.eigenvectors().col(k);
    const Complex l = es.eigenvalues()(k);
    const Vector g = ab * f.conjugate();
    const Vector r = tb.adjoint() * g - std::conj(l) * g;
    worst = std::max(worst, r.norm() / f.norm());
  }
  return worst;
}

}  // namespace lfh
