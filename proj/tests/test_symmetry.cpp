#include <doctest.h>

#include "lfh/classify.hpp"
#include "lfh/error.hpp"
#include "lfh/sampling.hpp"
#include "lfh/symmetry.hpp"
#include "test_util.hpp"

using namespace lfh;

namespace {

constexpr int kN = 64;
const Complex kI(0.0, 1.0);
const RiemannMap kTau1(1.0, 1.0, -1.0, 1.0);
const RiemannMap kTau2(kI, kI, -1.0, 1.0);
const RiemannMap kDisc(1.0, 3.0, 1.0, 2.0);  // (z+3)/(z+2)

std::vector<Complex> grid(const RiemannMap& tau, int count, double radius = 0.6) {
  std::vector<Complex> out;
  Rng rng(99);
  for (int i = 0; i < count; ++i) out.push_back(random_point(rng, tau, radius));
  return out;
}

AffineSymbol centred(const RiemannMap& tau, Complex r) {
  const KernelScalars k = kernel_scalars(tau);
  return AffineSymbol(r, (r - 1.0) * k.bd_ac / k.cc_dd);
}

double jomega(const RiemannMap& tau, const AffineSymbol& phi, int dim = kPadding * kN) {
  return c_symmetry_residual(w_phi_matrix(tau, phi, dim).capped(kN / 2), conj_J_omega(tau, dim));
}

}  // namespace

TEST_CASE("plain conjugation") {
  const ConjugationRep j = conj_J(4);
  Vector x = Vector::Zero(4);
  x(0) = kI;
  CHECK(j.apply(x)(0) == -kI);

  Rng rng(1);
  Vector v(16);
  for (auto& e : v) e = random_in_disc(rng, 1.0);
  const ConjugationRep j16 = conj_J(16);
  CHECK((j16.apply(j16.apply(v)) - v).norm() == 0.0);
  const auto ax = conjugation_axioms(j16);
  CHECK(ax.isometry == 0.0);
  CHECK(ax.involution == 0.0);

  // real coefficients: (Jf)(z) = conj(f(conj z))
  const auto f = mobius_taylor(MobiusMap(0.0, 1.0, -0.5, 1.0), 63);
  const auto jf = to_series(conj_J(64).apply(to_vector(f)));
  for (int i = 0; i < 20; ++i) {
    const Complex z = random_in_disc(rng, 0.9);
    CHECK(std::abs(series_eval(jf, z) - std::conj(series_eval(f, std::conj(z)))) <= 1e-12);
  }
}

TEST_CASE("J_Omega pointwise") {
  const Complex u = 2.0;
  const auto f = kernel_function(kTau1, u, 4 * kN);
  const auto check = j_omega_pointwise_check(f, [&](Complex w) { return kernel_k_omega(kTau1, u, w); }, grid(kTau1, 20));
  CHECK(check.value <= 1e-9);
  CHECK(check.target <= 1e-12);
  for (Complex w : grid(kTau1, 5)) {
    CHECK(std::abs(j_omega_target(kTau1, w) - std::conj(w)) <= 1e-12);
    CHECK(std::abs(j_omega_factor(kTau1, w) - 1.0) <= 1e-12);
  }

  Rng rng(2);
  const auto real = random_polynomial(rng, 5, kN - 1);
  std::vector<Complex> re(real.coeffs().begin(), real.coeffs().end());
  for (auto& x : re) x = x.real();
  const Vector rv = to_vector(TruncatedSeries(kN - 1, re));
  CHECK((conj_J_omega(kTau1, kN).apply(rv) - rv).norm() == 0.0);

  // upper half-plane: complex coefficients, a constant factor -i appears
  const Complex w = 2.0 * kI;
  const auto g = kernel_function(kTau2, kI, 4 * kN);
  const auto c2 = j_omega_pointwise_check(g, [&](Complex x) { return kernel_k_omega(kTau2, kI, x); }, {w});
  CHECK(c2.value <= 1e-9);
  CHECK(c2.target <= 1e-12);
  CHECK(std::abs(j_omega_factor(kTau2, w) + kI) <= 1e-12);
}

TEST_CASE("J_Omega_Psi") {
  const int dim = 2 * kPadding * kN;
  const auto id = conj_J_omega_psi(kTau1, AffineSymbol(1.0, 0.0), dim);
  CHECK((id.a - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() <= 1e-14);

  const AffineSymbol shift(1.0, 2.0 * kI);
  const auto c = conj_J_omega_psi(kTau1, shift, dim);
  const auto ax = conjugation_axioms(c);
  CHECK(c.trusted_block >= 8);
  CHECK(ax.isometry <= 1e-8);
  CHECK(ax.involution <= 1e-8);
  for (Complex w : grid(kTau1, 20)) {
    CHECK(std::abs(j_omega_psi_closed_form(kTau1, shift, w) - (std::conj(w) - 4.0 * kI)) <= 1e-14);
    CHECK(std::abs(j_omega_psi_target(shift, w) - (std::conj(w) - 4.0 * kI)) <= 1e-14);
  }
  CHECK(j_omega_psi_pointwise_residual(kTau1, shift, c, 1.5, grid(kTau1, 20)) <= 1e-8);

  const AffineSymbol turn = centred(kDisc, std::polar(1.0, 0.9));
  CHECK(is_unitary_symbol(kDisc, turn).value == Tri::yes);
  const auto d = conj_J_omega_psi(kDisc, turn, dim);
  const auto dx = conjugation_axioms(d);
  CHECK(std::max(dx.isometry, dx.involution) <= 1e-8);
  for (Complex w : grid(kDisc, 20)) {
    CHECK(std::abs(j_omega_psi_closed_form(kDisc, turn, w) - j_omega_psi_target(turn, w)) <= 1e-12);
  }
  CHECK(j_omega_psi_pointwise_residual(kDisc, turn, d, kDisc(0.2), grid(kDisc, 20)) <= 1e-8);

  CHECK_THROWS_AS(conj_J_omega_psi(kTau1, AffineSymbol(2.0, 0.0), 16), Error);
}

TEST_CASE("symmetry residuals of single operators") {
  Matrix s = Matrix::Random(12, 12).real().cast<Complex>();
  s = (s + s.transpose()).eval();
  CHECK(c_symmetry_residual(OperatorMatrix(s, 12), conj_J(12)) <= 1e-14);

  CHECK(jomega(kTau1, AffineSymbol(1.0, kI)) <= 1e-8);
  // 2w + 1 is outside the translation family; so is 2w + i.
  CHECK(jomega(kTau1, AffineSymbol(2.0, 1.0)) > 1e-3);
  CHECK(jomega(kTau1, AffineSymbol(2.0, kI)) > 1e-3);
  CHECK(jomega_symmetric_symbol(kTau1, AffineSymbol(2.0, 1.0)).value == Tri::no);
}

TEST_CASE("spectral symmetry follows from C-symmetry") {
  const int dim = kPadding * kN;
  const auto w = w_phi_matrix(kDisc, centred(kDisc, Complex(0.5, 0.3)), dim).capped(16);
  const auto jo = conj_J_omega(kDisc, dim);
  const double tol = 1e-7;
  REQUIRE(c_symmetry_residual(w, jo) <= tol);
  CHECK(spectral_symmetry_residual(w, jo) <= 10.0 * tol);
}

TEST_CASE("transported conjugations and their families") {
  Rng rng(3);
  const int dim = 2 * kPadding * kN;
  for (int t = 0; t < 6; ++t) {
    const bool half = t % 2 == 0;
    const RiemannMap tau = random_real_tau(rng, half);
    const AffineSymbol psi = random_unitary_symbol(rng, tau);
    const ConjugationRep c = conj_J_omega_psi(tau, psi, dim);
    const auto ax = conjugation_axioms(c);
    CHECK(std::max(ax.isometry, ax.involution) <= 1e-7);

    const AffineSymbol phi = half ? random_halfplane_symbol(rng, tau, HalfPlaneSymbolKind::translation)
                                  : random_centred_symbol(rng, tau, 0.8);
    const auto w = w_phi_matrix(tau, phi, dim).capped(kN / 2);
    const double under_psi = c_symmetry_residual(w, c);
    const double under_omega = c_symmetry_residual(w, conj_J_omega(tau, dim));
    CHECK(under_psi <= 1e-7);
    CHECK(under_omega <= 1e-7);
    CHECK(std::abs(under_psi - under_omega) <= 1e-7);
  }
}
