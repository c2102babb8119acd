#include "lfh/mobius.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "lfh/error.hpp"

namespace lfh {

namespace {

constexpr double kDegenerate = 1e-12;
constexpr double kCaseTol = 1e-10;
constexpr double kGeometryTol = 1e-10;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

MobiusMap::MobiusMap(Complex a, Complex b, Complex c, Complex d) {
  std::array<Complex, 4> q{a, b, c, d};
  for (const Complex& x : q) {
    if (!finite(x)) throw Error(ErrorCode::NonFiniteValue, "Mobius coefficient is not finite");
  }
  std::size_t pivot = 0;
  for (std::size_t k = 1; k < q.size(); ++k) {
    if (std::abs(q[k]) > std::abs(q[pivot])) pivot = k;
  }
  if (std::abs(q[pivot]) == 0.0) throw Error(ErrorCode::DegenerateMap, "all coefficients zero");
  const Complex scale = q[pivot];
  for (Complex& x : q) x /= scale;
  q[pivot] = 1.0;
  a_ = q[0];
  b_ = q[1];
  c_ = q[2];
  d_ = q[3];
  if (std::abs(det()) < kDegenerate) throw Error(ErrorCode::DegenerateMap, "ad - bc vanishes");
}

MobiusMap MobiusMap::identity() { return MobiusMap(1.0, 0.0, 0.0, 1.0); }

MobiusMap MobiusMap::affine(Complex slope, Complex offset) {
  return MobiusMap(slope, offset, 0.0, 1.0);
}

Complex MobiusMap::operator()(Complex z) const {
  const Complex den = c_ * z + d_;
  if (den == Complex{}) throw Error(ErrorCode::DenominatorVanishes, "evaluation at the pole");
  return (a_ * z + b_) / den;
}

Complex MobiusMap::derivative(Complex z) const {
  const Complex den = c_ * z + d_;
  if (den == Complex{}) throw Error(ErrorCode::DenominatorVanishes, "derivative at the pole");
  return det() / (den * den);
}

std::optional<Complex> MobiusMap::pole() const {
  if (is_affine()) return std::nullopt;
  return -d_ / c_;
}

bool MobiusMap::is_affine(double tol) const { return std::abs(c_) <= tol * std::abs(d_); }

bool MobiusMap::has_real_coefficients(double tol) const {
  return std::abs(a_.imag()) <= tol && std::abs(b_.imag()) <= tol &&
         std::abs(c_.imag()) <= tol && std::abs(d_.imag()) <= tol;
}

bool MobiusMap::is_identity(double tol) const {
  return std::abs(b_) <= tol && std::abs(c_) <= tol && std::abs(a_ - d_) <= tol;
}

MobiusMap mobius_compose(const MobiusMap& m1, const MobiusMap& m2) {
  const Complex a = m1.a() * m2.a() + m1.b() * m2.c();
  const Complex b = m1.a() * m2.b() + m1.b() * m2.d();
  const Complex c = m1.c() * m2.a() + m1.d() * m2.c();
  const Complex d = m1.c() * m2.b() + m1.d() * m2.d();
  try {
    return MobiusMap(a, b, c, d);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateMap) {
      throw Error(ErrorCode::DegenerateComposition, "composed quadruple is degenerate");
    }
    throw;
  }
}

MobiusMap mobius_inverse(const MobiusMap& m) { return MobiusMap(m.d(), -m.b(), -m.c(), m.a()); }

std::vector<FixedPoint> mobius_fixed_points(const MobiusMap& m) {
  if (m.is_identity()) throw Error(ErrorCode::IdentityMap, "every point is fixed");
  const Complex a = m.a(), b = m.b(), c = m.c(), d = m.d();
  std::vector<FixedPoint> out;
  if (m.is_affine()) {
    // (a - d) z + b = 0 together with infinity.
    if (std::abs(a - d) > 1e-14) out.push_back({b / (d - a), false});
    out.push_back({Complex{}, true});
    return out;
  }
  // c z^2 + (d - a) z - b = 0, solved without cancellation.
  const Complex p = d - a;
  const Complex disc = std::sqrt(p * p + 4.0 * c * b);
  const double scale = std::max({std::abs(p), std::abs(c), std::abs(b), 1.0});
  if (std::abs(disc) <= 1e-8 * scale) {
    out.push_back({-p / (2.0 * c), false});
    return out;
  }
  const Complex q = (std::real(std::conj(p) * disc) >= 0.0) ? -0.5 * (p + disc)
                                                            : -0.5 * (p - disc);
  const Complex z1 = q / c;
  const Complex z2 = (q != Complex{}) ? -b / q : -p / c;
  out.push_back({z1, false});
  out.push_back({z2, false});
  std::sort(out.begin(), out.end(), [](const FixedPoint& x, const FixedPoint& y) {
    return std::abs(x.value) < std::abs(y.value);
  });
  return out;
}

DiscSelfMapCertificate mobius_is_disc_selfmap(const MobiusMap& m) {
  DiscSelfMapCertificate cert{};
  const double dd = std::norm(m.d()) - std::norm(m.c());
  cert.image_of_zero = (std::abs(m.d()) > 0.0) ? m.b() / m.d() : Complex{INFINITY, 0.0};
  if (dd <= kGeometryTol * std::max(1.0, std::norm(m.d()))) {
    cert.verdict = SelfMapVerdict::no;
    cert.image_is_disc = false;
    cert.center = Complex{};
    cert.radius = INFINITY;
    cert.margin = -INFINITY;
    return cert;
  }
  cert.image_is_disc = true;
  cert.center = (m.b() * std::conj(m.d()) - m.a() * std::conj(m.c())) / dd;
  cert.radius = std::abs(m.det()) / dd;
  cert.margin = 1.0 - std::abs(cert.center) - cert.radius;
  if (cert.margin > kGeometryTol) {
    cert.verdict = SelfMapVerdict::yes;
  } else if (cert.margin >= -kGeometryTol) {
    cert.verdict = SelfMapVerdict::boundary;
  } else {
    cert.verdict = SelfMapVerdict::no;
  }
  cert.automorphism =
      std::abs(cert.center) <= kGeometryTol && std::abs(cert.radius - 1.0) <= kGeometryTol;
  if (cert.automorphism) {
    if (m.is_identity()) {
      cert.elliptic_automorphism = true;
    } else {
      for (const FixedPoint& p : mobius_fixed_points(m)) {
        if (!p.at_infinity && std::abs(p.value) < 1.0 - kGeometryTol) {
          cert.elliptic_automorphism = true;
        }
      }
    }
  }
  return cert;
}

RiemannMap::RiemannMap(const MobiusMap& tau) : tau_(tau) {
  if (std::norm(tau_.d()) - std::norm(tau_.c()) < -kCaseTol) {
    throw Error(ErrorCode::PoleInsideDisc, "pole of tau lies in the open unit disc");
  }
}

RiemannMap::RiemannMap(Complex a, Complex b, Complex c, Complex d)
    : RiemannMap(MobiusMap(a, b, c, d)) {}

Complex RiemannMap::inverse(Complex w) const { return mobius_inverse(tau_)(w); }

bool RiemannMap::equal_modulus() const {
  return std::abs(std::norm(tau_.c()) - std::norm(tau_.d())) <= kCaseTol;
}

bool RiemannMap::contains(Complex w) const {
  const MobiusMap inv = mobius_inverse(tau_);
  const Complex den = inv.c() * w + inv.d();
  if (den == Complex{}) return false;
  return std::abs((inv.a() * w + inv.b()) / den) < 1.0 - 1e-12;
}

AffineSymbol::AffineSymbol(Complex slope, Complex offset, bool constant)
    : slope_(slope), offset_(offset), constant_(constant) {
  if (!finite(slope) || !finite(offset)) {
    throw Error(ErrorCode::NonFiniteValue, "symbol coefficient is not finite");
  }
}

AffineSymbol::AffineSymbol(Complex slope, Complex offset) : AffineSymbol(slope, offset, false) {
  if (std::abs(slope) < kDegenerate) {
    throw Error(ErrorCode::DegenerateMap, "zero slope; build constant symbols explicitly");
  }
}

AffineSymbol AffineSymbol::constant(Complex value) { return AffineSymbol(0.0, value, true); }

MobiusMap AffineSymbol::as_mobius() const {
  if (constant_) throw Error(ErrorCode::InvalidArgument, "constant symbol is not a Mobius map");
  return MobiusMap::affine(slope_, offset_);
}

AffineSymbol AffineSymbol::inverse() const {
  if (constant_) throw Error(ErrorCode::InvalidArgument, "constant symbol has no inverse");
  return AffineSymbol(1.0 / slope_, -offset_ / slope_);
}

MobiusMap symbol_conjugate_to_disc(const RiemannMap& tau, const AffineSymbol& phi) {
  return mobius_compose(mobius_inverse(tau.map()), mobius_compose(phi.as_mobius(), tau.map()));
}

TruncatedSeries mobius_taylor(const MobiusMap& m, int degree) {
  if (auto p = m.pole(); p && std::abs(*p) <= 1.0) {
    throw Error(ErrorCode::PoleInClosedDisc, "Maclaurin series does not converge on the disc");
  }
  const auto num = TruncatedSeries::from_coefficients(degree, {m.b(), m.a()});
  const auto den = TruncatedSeries::from_coefficients(degree, {m.d(), m.c()});
  return num / den;
}

Complex denjoy_wolff_point(const MobiusMap& phi) {
  const DiscSelfMapCertificate cert = mobius_is_disc_selfmap(phi);
  if (cert.verdict == SelfMapVerdict::no) {
    throw Error(ErrorCode::NotDiscSelfMap, "map does not send the disc into itself");
  }
  if (cert.elliptic_automorphism) {
    throw Error(ErrorCode::EllipticAutomorphism, "iterates rotate about an interior point");
  }
  std::optional<Complex> best;
  double best_mult = INFINITY;
  for (const FixedPoint& p : mobius_fixed_points(phi)) {
    if (p.at_infinity) continue;
    const double mod = std::abs(p.value);
    const double mult = std::abs(phi.derivative(p.value));
    if (mod < 1.0 - kGeometryTol && mult < 1.0) return p.value;
    if (std::abs(mod - 1.0) <= 1e-8 && mult <= 1.0 + 1e-8 && mult < best_mult) {
      best = p.value;
      best_mult = mult;
    }
  }
  if (!best) throw Error(ErrorCode::NoConvergence, "no attracting fixed point in the closed disc");
  return *best;
}

DenjoyWolffResult denjoy_wolff_iterate(const MobiusMap& phi, Complex z0, long n_max, double tol,
                                       std::size_t trail_cap) {
  if (std::abs(z0) >= 1.0) throw Error(ErrorCode::InvalidArgument, "start point outside the disc");
  DenjoyWolffResult res{};
  res.predicted = denjoy_wolff_point(phi);
  Complex z = z0;
  res.trail.push_back(z);
  for (long n = 1; n <= n_max; ++n) {
    const Complex next = phi(z);
    if (res.trail.size() < trail_cap) res.trail.push_back(next);
    const double step = std::abs(next - z);
    z = next;
    if (step < tol) {
      res.limit = z;
      res.iterations = n;
      if (std::abs(res.limit - res.predicted) > 1e-6) {
        throw Error(ErrorCode::NoConvergence, "iterates stalled away from the attracting point");
      }
      return res;
    }
  }
  throw Error(ErrorCode::NoConvergence, "iteration budget exhausted");
}

}  // namespace lfh
