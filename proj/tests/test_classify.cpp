#include <doctest.h>

#include <numbers>

#include "lfh/classify.hpp"
#include "lfh/error.hpp"
#include "lfh/sampling.hpp"
#include "lfh/symmetry.hpp"
#include "lfh/verify.hpp"

using namespace lfh;

namespace {

constexpr int kN = 64;
const Complex kI(0.0, 1.0);
const RiemannMap kTau1(1.0, 1.0, -1.0, 1.0);
const RiemannMap kTau2(kI, kI, -1.0, 1.0);
const RiemannMap kId(MobiusMap::identity());
const RiemannMap kDisc(1.0, 3.0, 0.5, 2.0);  // (z+3)/(0.5z+2)

bool same_symbol(const AffineSymbol& p, const AffineSymbol& q, double tol = 1e-10) {
  return std::abs(p.slope() - q.slope()) <= tol && std::abs(p.offset() - q.offset()) <= tol;
}

Matrix wmat(const RiemannMap& tau, const AffineSymbol& phi) {
  return w_phi_matrix(tau, phi, kPadding * kN).entries();
}

}  // namespace

TEST_CASE("case detection and the kernel-norm identity") {
  CHECK(detect_case(kTau1) == CaseTag::equal_modulus);
  CHECK(detect_case(kId) == CaseTag::unequal_modulus_generic);
  CHECK(detect_case(kDisc) == CaseTag::unequal_modulus_generic);

  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    const RiemannMap tau = t % 2 ? random_bounded_tau(rng) : random_halfplane_tau(rng);
    const double det2 = std::norm(tau.map().det());
    CHECK(std::abs(kernel_norm_gap(kernel_scalars(tau)) - det2) <= 1e-12 * std::max(1.0, det2));
  }
}

TEST_CASE("adjoint symbols") {
  // upper half-plane, lambda = 2, r = 1 + i
  const AdjointSymbol a = adjoint_symbol(kTau2, AffineSymbol(2.0, Complex(1, 1)));
  CHECK(a.case_tag == CaseTag::equal_modulus);
  CHECK(std::abs(a.lambda - 0.5) <= 1e-14);
  CHECK(same_symbol(a.phi_star, AffineSymbol(0.5, Complex(-0.5, 0.5))));
  const Matrix w = wmat(kTau2, AffineSymbol(2.0, Complex(1, 1)));
  const Matrix ws = wmat(kTau2, a.phi_star);
  CHECK(block_norm(w.adjoint() - a.lambda * ws, kN / 2) <= 1e-7);
  // the printed sign: w/2 + (1 - i)/2 leaves the upper half-plane
  CHECK(symbol_self_map(kTau2, AffineSymbol(0.5, Complex(0.5, -0.5))) == SelfMapVerdict::no);

  for (const RiemannMap& tau : {kTau1, kTau2, kId, kDisc}) {
    const AdjointSymbol id = adjoint_symbol(tau, AffineSymbol(1.0, 0.0));
    CHECK(std::abs(id.lambda - 1.0) <= 1e-14);
    CHECK(same_symbol(id.phi_star, AffineSymbol(1.0, 0.0)));
  }

  const Complex r(0.4, 0.5);
  const AdjointSymbol d = adjoint_symbol(kId, AffineSymbol(r, 0.0));
  CHECK(d.case_tag == CaseTag::unequal_modulus_generic);
  CHECK(same_symbol(d.phi_star, AffineSymbol(std::conj(r), 0.0)));
  const Matrix c = composition_matrix(MobiusMap::affine(r, 0.0), 16).entries();
  const Matrix cs = composition_matrix(MobiusMap::affine(std::conj(r), 0.0), 16).entries();
  CHECK((c.adjoint() - cs).cwiseAbs().maxCoeff() <= 1e-15);

  try {
    (void)adjoint_symbol(kDisc, AffineSymbol(0.5, 0.1));
    FAIL("expected SymbolNotInAdjointFamily");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SymbolNotInAdjointFamily);
  }
}

TEST_CASE("middle-case identity on quadruples with ad = bc") {
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    const Complex p = random_in_disc(rng, 2.0), q = random_in_disc(rng, 2.0);
    const Complex x = random_in_disc(rng, 2.0), y = 1.5 * x + random_in_disc(rng, 0.2) + 0.3;
    const Complex a = p * x, b = p * y, c = q * x, d = q * y;
    const KernelScalars k{0.0, std::norm(a) - std::norm(b), b * std::conj(d) - a * std::conj(c),
                          std::norm(c) - std::norm(d), std::conj(b) * d - std::conj(a) * c};
    REQUIRE(std::abs(k.aa_bb * k.cc_dd - std::norm(k.bd_ac)) <= 1e-9 * (1.0 + std::norm(k.bd_ac)));
    const Complex slope = random_in_disc(rng, 1.5), lambda = random_in_disc(rng, 2.0);
    const AffineSymbol phi(slope, (slope - 1.0) * k.bd_ac / k.cc_dd);
    const AffineSymbol star = kernel_norm_eq_star(k, slope, lambda);
    const Complex u = random_in_disc(rng, 2.0), w = random_in_disc(rng, 2.0);
    CHECK(std::abs(adjoint_identity_gap(a, b, c, d, phi, lambda, star, u, w)) <= 1e-9);
  }
}

TEST_CASE("Hermitian verdicts") {
  // On the right half-plane real shifts are Hermitian and imaginary shifts unitary.
  CHECK(is_hermitian_symbol(kTau1, AffineSymbol(1.0, 1.0)).value == Tri::yes);
  CHECK(is_hermitian_symbol(kTau1, AffineSymbol(1.0, 0.7 * kI)).value == Tri::no);
  CHECK(is_hermitian_symbol(kTau2, AffineSymbol(1.0, 0.7 * kI)).value == Tri::yes);
  CHECK(is_hermitian_symbol(kId, AffineSymbol(-0.5, 0.0)).value == Tri::yes);
  CHECK(is_hermitian_symbol(kId, AffineSymbol(0.5 * kI, 0.0)).value == Tri::no);

  const auto rep = classify_symbol(kTau1, AffineSymbol(1.0, 1.0), kN);
  CHECK(rep.hermitian.value == Tri::yes);
  REQUIRE(rep.hermitian.matrix_residual);
  CHECK(*rep.hermitian.matrix_residual <= 1e-7);
  CHECK(rep.hermitian.consistent);
}

TEST_CASE("unitary verdicts") {
  CHECK(is_unitary_symbol(kTau1, AffineSymbol(1.0, -3.0 * kI)).value == Tri::yes);
  CHECK(is_unitary_symbol(kId, AffineSymbol(std::polar(1.0, std::numbers::pi / 3), 0.0)).value == Tri::yes);
  CHECK(is_unitary_symbol(kTau1, AffineSymbol(1.0, 1.0)).value == Tri::no);

  const auto yes = classify_symbol(kTau1, AffineSymbol(1.0, 2.0 * kI), kN);
  const auto no = classify_symbol(kTau1, AffineSymbol(1.0, 1.0), kN);
  REQUIRE(yes.unitary.matrix_residual);
  REQUIRE(no.unitary.matrix_residual);
  CHECK(*yes.unitary.matrix_residual <= 1e-7);
  CHECK(*no.unitary.matrix_residual >= 100.0 * std::max(*yes.unitary.matrix_residual, 1e-7));
}

TEST_CASE("normal verdicts") {
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    const RiemannMap tau = random_halfplane_tau(rng);
    const AffineSymbol phi = random_halfplane_symbol(rng, tau, HalfPlaneSymbolKind::translation);
    CHECK(is_normal_symbol(tau, phi).value == Tri::yes);
  }
  const auto d = classify_symbol(kId, AffineSymbol(0.5, 0.0), kN);
  CHECK(d.normal.value == Tri::yes);
  CHECK(*d.normal.matrix_residual <= 1e-14);

  const auto n = classify_symbol(kTau1, AffineSymbol(2.0, kI), kN);
  CHECK(n.normal.value == Tri::yes);
  CHECK(*n.normal.matrix_residual <= 1e-7);
}

TEST_CASE("interior fixed point of the adjoint family") {
  const auto id = cohyponormal_fixed_point(kId);
  CHECK(std::abs(id.u) <= 1e-15);
  CHECK(std::abs(id.z_u) <= 1e-15);

  const auto p = cohyponormal_fixed_point(kDisc);
  CHECK(std::abs(p.u - 22.0 / 15.0) <= 1e-14);
  CHECK(std::abs(p.z_u + 0.25) <= 1e-14);
  CHECK(std::abs(kDisc(p.z_u) - p.u) <= 1e-14);

  try {
    (void)cohyponormal_fixed_point(kTau1);
    FAIL("expected EqualModulusNoInteriorFixedPoint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EqualModulusNoInteriorFixedPoint);
  }
}

TEST_CASE("boundedness on half-planes") {
  CHECK(bounded_halfplane(kTau2, AffineSymbol(2.0, kI)) == Boundedness::yes);
  CHECK(bounded_halfplane(kTau1, AffineSymbol(kI, 0.0)) == Boundedness::no);
  CHECK(bounded_halfplane(kTau1, AffineSymbol(1.0, 1.0)) == Boundedness::yes);
  CHECK(bounded_halfplane(kDisc, AffineSymbol(0.5, 0.0)) == Boundedness::assumed);
}

TEST_CASE("obstruction to complex symmetry") {
  const auto ob = cs_obstruction(kTau1, AffineSymbol(0.5, 0.5), kN);
  CHECK(ob.status == Obstruction::obstructed);
  REQUIRE(ob.fixed_point);
  CHECK(std::abs(*ob.fixed_point - 1.0) <= 1e-14);
  REQUIRE(ob.partial_sums.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::abs(ob.partial_sums[i] - 2.0 * (ob.partial_sum_orders[i] + 1)) <= 1e-12 * ob.partial_sums[i]);
  }
  CHECK(ob.sums_diverge);

  const auto cw = cs_obstruction(kTau1, AffineSymbol(2.0, 1.0), kN);
  CHECK(cw.status == Obstruction::not_obstructed);
  CHECK(cw.constant_weight_flag);
  CHECK(std::abs(cw.weight_constant - 0.5) <= 1e-14);
  CHECK(cw.constant_weight_residual <= 1e-10);

  CHECK(cs_obstruction(RiemannMap(0.5, 0.0, 0.0, 1.0), AffineSymbol(0.5, 0.0), kN).status ==
        Obstruction::inapplicable);
}

TEST_CASE("full reports") {
  const auto a = classify_symbol(kTau1, AffineSymbol(1.0, 2.0 * kI), kN);
  CHECK(a.hermitian.value == Tri::no);
  CHECK(a.unitary.value == Tri::yes);
  CHECK(a.jomega_symmetric.value == Tri::yes);
  CHECK(a.hermitian.consistent);
  CHECK(a.unitary.consistent);
  CHECK(a.jomega_symmetric.consistent);

  const auto b = classify_symbol(kId, AffineSymbol(0.5, 0.0), kN);
  CHECK(b.hermitian.value == Tri::yes);
  CHECK(b.normal.value == Tri::yes);
  CHECK(b.unitary.value == Tri::no);

  const auto c = classify_symbol(kTau1, AffineSymbol(2.0, 1.0), kN);
  REQUIRE(c.adjoint);
  CHECK(std::abs(c.adjoint->lambda - 0.5) <= 1e-14);
  CHECK(same_symbol(c.adjoint->phi_star, AffineSymbol(0.5, 0.5)));
  REQUIRE(c.adjoint_residual);
  CHECK(*c.adjoint_residual <= 1e-7);

  const auto off = classify_symbol(kTau1, AffineSymbol(-1.0, 0.0), kN);
  CHECK(off.self_map == SelfMapVerdict::no);
  CHECK_FALSE(off.adjoint);

  const auto k = classify_symbol(kDisc, AffineSymbol::constant(kDisc(0.3)), kN);
  REQUIRE(k.rank_one_ratio);
  CHECK(*k.rank_one_ratio <= 1e-8);
}

TEST_CASE("verdict properties on random families") {
  Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    const bool half = t % 2 == 0;
    const RiemannMap tau = t % 3 == 0 ? random_real_tau(rng, half) : (half ? random_halfplane_tau(rng) : random_bounded_tau(rng));
    const AffineSymbol phi = half ? random_halfplane_symbol(rng, tau, static_cast<HalfPlaneSymbolKind>(t % 3))
                                  : random_centred_symbol(rng, tau);
    const auto rep = classify_symbol(tau, phi, 32);
    CHECK(rep.hermitian.consistent);
    CHECK(rep.unitary.consistent);
    CHECK(rep.normal.consistent);
    CHECK(rep.jomega_symmetric.consistent);
    REQUIRE(rep.adjoint);

    if (rep.hermitian.value == Tri::yes) {
      const auto a = adjoint_symbol(tau, phi, Complex(1.0));
      CHECK(same_symbol(a.phi_star, phi));
    }
    if (rep.unitary.value == Tri::yes) CHECK(same_symbol(rep.adjoint->phi_star, phi.inverse()));
    if (tau.map().has_real_coefficients() &&
        (rep.hermitian.value == Tri::yes || rep.unitary.value == Tri::yes)) {
      CHECK(rep.jomega_symmetric.value == Tri::yes);
    }

    // the adjoint symbol commutes with phi exactly when the commutator vanishes
    const AffineSymbol& s = rep.adjoint->phi_star;
    const bool commute = std::abs(phi.slope() * s.offset() + phi.offset() - (s.slope() * phi.offset() + s.offset())) <=
                         1e-10 * (1.0 + std::abs(phi.offset()) + std::abs(s.offset()));
    CHECK(commute == (*rep.normal.matrix_residual <= 1e-7));

    if (half) {
      const Complex k = random_in_disc(rng, 3.0) + 0.5;
      const RiemannMap scaled(k * tau.a(), k * tau.b(), k * tau.c(), k * tau.d());
      CHECK(is_hermitian_symbol(scaled, phi).value == rep.hermitian.value);
      CHECK(is_unitary_symbol(scaled, phi).value == rep.unitary.value);
      CHECK(is_normal_symbol(scaled, phi).value == rep.normal.value);
    }
  }
}

TEST_CASE("suites pass at a small order") {
  RunConfig cfg;
  cfg.order = 32;
  cfg.seed = 5;
  CHECK(verify_kernels(cfg, 10).ok());
  CHECK(verify_adjoints(cfg, 8).ok());
  CHECK(verify_symmetry(cfg, 6).ok());
  CHECK(verify_oracle(cfg, 10).ok());
  CHECK(verify_obstruction(cfg).ok());
}
