#include <doctest.h>

#include <numbers>

#include "lfh/error.hpp"
#include "lfh/mobius.hpp"
#include "lfh/sampling.hpp"
#include "test_util.hpp"

using namespace lfh;

namespace {

const MobiusMap kTau1(1.0, 1.0, -1.0, 1.0);

bool same_map(const MobiusMap& m, const MobiusMap& n, double tol = 1e-12) {
  return std::abs(m.a() - n.a()) + std::abs(m.b() - n.b()) + std::abs(m.c() - n.c()) +
             std::abs(m.d() - n.d()) <=
         tol;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an lfh::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("normalization and degeneracy") {
  const MobiusMap m(2.0, 4.0, Complex(0, 2), 6.0);
  CHECK(m.d() == Complex(1.0));
  CHECK(same_map(m, MobiusMap(1.0, 2.0, Complex(0, 1), 3.0)));
  CHECK(code_of([] { MobiusMap(1.0, 2.0, 2.0, 4.0); }) == ErrorCode::DegenerateMap);
  CHECK(code_of([] { RiemannMap(1.0, 0.0, 1.0, 0.5); }) == ErrorCode::PoleInsideDisc);
}

TEST_CASE("composition and inversion") {
  Rng rng(5);
  const MobiusMap m = random_disc_selfmap(rng);
  CHECK(same_map(mobius_compose(MobiusMap::identity(), m), m));
  CHECK(mobius_compose(mobius_inverse(kTau1), kTau1).is_identity());
  CHECK(mobius_inverse(MobiusMap::identity()).is_identity());
  CHECK(same_map(mobius_inverse(kTau1), MobiusMap(1.0, -1.0, 1.0, 1.0)));

  const Complex l(0.5, 0.25), r(1.0, -2.0);
  const MobiusMap inv = mobius_inverse(MobiusMap::affine(l, r));
  const Complex z(0.3, 0.7);
  CHECK(std::abs(inv(z) - (z - r) / l) <= 1e-14);

  const double lam = 0.5;
  const MobiusMap big = MobiusMap::affine(1.0 / lam, (1.0 - lam) / lam);
  const MobiusMap conj = mobius_compose(mobius_inverse(kTau1), mobius_compose(big, kTau1));
  CHECK(same_map(conj, MobiusMap::affine(lam, 1.0 - lam)));
}

TEST_CASE("fixed points") {
  auto fp = mobius_fixed_points(MobiusMap::affine(0.5, 0.0));
  REQUIRE(fp.size() == 2);
  CHECK(std::abs(fp[0].value) <= 1e-15);
  CHECK(fp[1].at_infinity);

  fp = mobius_fixed_points(MobiusMap::affine(0.5, 0.5));
  REQUIRE(fp.size() == 2);
  CHECK(std::abs(fp[0].value - 1.0) <= 1e-15);
  CHECK(fp[1].at_infinity);

  // z/(2-z) fixes both 0 and 1; 1/(2-z) has the double point 1.
  fp = mobius_fixed_points(MobiusMap(1.0, 0.0, -1.0, 2.0));
  REQUIRE(fp.size() == 2);
  CHECK(std::abs(fp[0].value) <= 1e-15);
  CHECK(std::abs(fp[1].value - 1.0) <= 1e-15);
  fp = mobius_fixed_points(MobiusMap(0.0, 1.0, -1.0, 2.0));
  REQUIRE(fp.size() == 1);
  CHECK(std::abs(fp[0].value - 1.0) <= 1e-12);

  CHECK(code_of([] { mobius_fixed_points(MobiusMap::identity()); }) == ErrorCode::IdentityMap);
}

TEST_CASE("disc self-map certificates") {
  auto c = mobius_is_disc_selfmap(MobiusMap::affine(0.5, 0.0));
  CHECK(c.verdict == SelfMapVerdict::yes);
  CHECK(std::abs(c.radius - 0.5) <= 1e-15);
  CHECK(std::abs(c.center) <= 1e-15);

  c = mobius_is_disc_selfmap(MobiusMap::affine(0.5, 0.5));
  CHECK(c.verdict == SelfMapVerdict::boundary);
  CHECK(std::abs(c.center - 0.5) <= 1e-15);
  CHECK(std::abs(c.radius - 0.5) <= 1e-15);

  CHECK(mobius_is_disc_selfmap(MobiusMap::affine(2.0, 0.0)).verdict == SelfMapVerdict::no);

  const auto rot = mobius_is_disc_selfmap(MobiusMap::affine(std::polar(1.0, 1.0), 0.0));
  CHECK(rot.automorphism);
  CHECK(rot.elliptic_automorphism);
}

TEST_CASE("symbols conjugated to the disc") {
  const RiemannMap tau1(kTau1);
  const MobiusMap phi = symbol_conjugate_to_disc(tau1, AffineSymbol(2.0, 1.0));
  CHECK(std::abs(phi(0.0) - 0.5) <= 1e-15);
  CHECK(std::abs(tau1.inverse(3.0) - 0.5) <= 1e-15);

  const MobiusMap half = symbol_conjugate_to_disc(tau1, AffineSymbol(2.0, 1.0));
  CHECK(same_map(half, MobiusMap::affine(0.5, 0.5)));

  const RiemannMap tau(Complex(1, 2), 3.0, 0.5, Complex(2, 1));
  CHECK(symbol_conjugate_to_disc(tau, AffineSymbol(1.0, 0.0)).is_identity());
}

TEST_CASE("Maclaurin coefficients") {
  const auto id = mobius_taylor(MobiusMap::identity(), 6);
  CHECK(id == TruncatedSeries::monomial(6, 1));

  const auto g = mobius_taylor(MobiusMap(0.0, 1.0, -0.5, 1.0), 20);
  for (int k = 0; k <= 20; ++k) CHECK(std::abs(g[k] - std::pow(0.5, k)) <= 1e-15);

  const auto h = mobius_taylor(MobiusMap(1.0, 0.0, -1.0, 2.0), 20);
  CHECK(h[0] == Complex(0.0));
  for (int k = 1; k <= 20; ++k) CHECK(std::abs(h[k] - std::pow(0.5, k)) <= 1e-15);

  CHECK(code_of([] { mobius_taylor(MobiusMap(1.0, 0.0, -1.0, 1.0), 4); }) == ErrorCode::PoleInClosedDisc);
}

TEST_CASE("Denjoy-Wolff iteration") {
  auto r = denjoy_wolff_iterate(MobiusMap::affine(0.5, 0.0), 0.9);
  CHECK(std::abs(r.limit) <= 1e-12);

  r = denjoy_wolff_iterate(MobiusMap::affine(0.5, 0.5), 0.0);
  CHECK(std::abs(r.limit - 1.0) <= 1e-12);

  // z/(2-z) attracts to its interior fixed point 0.
  r = denjoy_wolff_iterate(MobiusMap(1.0, 0.0, -1.0, 2.0), 0.5);
  CHECK(std::abs(r.limit) <= 1e-12);
  Complex z = 0.5;
  const MobiusMap m(1.0, 0.0, -1.0, 2.0);
  for (int k = 0; k < 10000; ++k) z = m(z);
  CHECK(std::abs(z) <= 1e-12);

  // 1/(2-z) is parabolic with boundary point 1; convergence is like 1/n.
  r = denjoy_wolff_iterate(MobiusMap(0.0, 1.0, -1.0, 2.0), 0.0);
  CHECK(std::abs(r.limit - 1.0) <= 1e-6);
  CHECK(r.trail.size() <= (std::size_t{1} << 20));

  CHECK(code_of([] { denjoy_wolff_point(MobiusMap::affine(Complex(0, 1), 0.0)); }) ==
        ErrorCode::EllipticAutomorphism);
}

TEST_CASE("scaling a quadruple changes nothing") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const MobiusMap m = random_disc_selfmap(rng);
    const Complex t = random_in_disc(rng, 5.0) + 0.1;
    const MobiusMap s(t * m.a(), t * m.b(), t * m.c(), t * m.d());
    CHECK(same_map(m, s));
    const MobiusMap other = random_disc_selfmap(rng);
    CHECK(same_map(mobius_compose(m, other), mobius_compose(s, other)));
    CHECK(mobius_is_disc_selfmap(m).verdict == mobius_is_disc_selfmap(s).verdict);
    CHECK(lfh::test::max_gap(mobius_taylor(m, 16), mobius_taylor(s, 16)) <= 1e-12);
    const auto f1 = mobius_fixed_points(m), f2 = mobius_fixed_points(s);
    REQUIRE(f1.size() == f2.size());
    for (std::size_t i = 0; i < f1.size(); ++i) CHECK(std::abs(f1[i].value - f2[i].value) <= 1e-12);
  }
}

TEST_CASE("half-plane maps keep b conj(d) away from a conj(c)") {
  Rng rng(23);
  for (int trial = 0; trial < 10000; ++trial) {
    const RiemannMap tau = random_halfplane_tau(rng);
    const double gap = std::abs(tau.b() * std::conj(tau.d()) - tau.a() * std::conj(tau.c()));
    // |b conj(d) - a conj(c)| = |ad - bc| once |c| = |d|.
    REQUIRE(gap > 0.0);
    REQUIRE(std::abs(gap - std::abs(tau.map().det())) <= 1e-12);
  }
}

TEST_CASE("bounded exactly when the pole leaves the circle") {
  Rng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const bool half = trial % 2 == 0;
    const RiemannMap tau = half ? random_halfplane_tau(rng) : random_bounded_tau(rng);
    CHECK(tau.domain_bounded() == !half);
    // Approach the boundary point nearest the pole.
    const Complex dir = tau.c() == Complex{} ? Complex(1.0) : -tau.d() / tau.c() / std::abs(tau.d() / tau.c());
    const double big = std::abs(tau((1.0 - 1e-9) * dir));
    CHECK((big > 1e6) == half);
  }
}
