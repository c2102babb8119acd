#pragma once

#include <optional>
#include <vector>

#include "lfh/series.hpp"

namespace lfh {

/// z -> (az+b)/(cz+d), stored with the first coefficient of largest modulus
/// scaled to exactly 1.
class MobiusMap {
 public:
  /// Normalizes and rejects |ad-bc| < 1e-12 with DegenerateMap.
  MobiusMap(Complex a, Complex b, Complex c, Complex d);

  static MobiusMap identity();
  static MobiusMap affine(Complex slope, Complex offset);

  Complex a() const noexcept { return a_; }
  Complex b() const noexcept { return b_; }
  Complex c() const noexcept { return c_; }
  Complex d() const noexcept { return d_; }
  Complex det() const noexcept { return a_ * d_ - b_ * c_; }

  /// Throws DenominatorVanishes at the pole.
  Complex operator()(Complex z) const;
  Complex derivative(Complex z) const;

  /// -d/c, absent when the map is affine.
  std::optional<Complex> pole() const;
  bool is_affine(double tol = 1e-14) const;
  bool has_real_coefficients(double tol = 1e-12) const;
  bool is_identity(double tol = 1e-12) const;

 private:
  Complex a_, b_, c_, d_;
};

MobiusMap mobius_compose(const MobiusMap& m1, const MobiusMap& m2);
MobiusMap mobius_inverse(const MobiusMap& m);

/// A fixed point on the Riemann sphere.
struct FixedPoint {
  Complex value;
  bool at_infinity = false;
};

/// Roots of c z^2 + (d-a) z - b = 0, plus infinity when c = 0. A double root
/// is reported once.
std::vector<FixedPoint> mobius_fixed_points(const MobiusMap& m);

enum class SelfMapVerdict { yes, no, boundary };

/// Exact geometry of the image of the unit circle.
struct DiscSelfMapCertificate {
  SelfMapVerdict verdict;
  bool image_is_disc;  // false when the pole lies in the closed disc
  Complex center;
  double radius;
  Complex image_of_zero;
  double margin;  // 1 - |center| - radius
  bool automorphism;
  bool elliptic_automorphism;
};

DiscSelfMapCertificate mobius_is_disc_selfmap(const MobiusMap& m);

/// tau with its pole off the open unit disc.
class RiemannMap {
 public:
  /// Throws PoleInsideDisc when |d|^2 - |c|^2 < -1e-10.
  explicit RiemannMap(const MobiusMap& tau);
  RiemannMap(Complex a, Complex b, Complex c, Complex d);

  const MobiusMap& map() const noexcept { return tau_; }
  Complex a() const noexcept { return tau_.a(); }
  Complex b() const noexcept { return tau_.b(); }
  Complex c() const noexcept { return tau_.c(); }
  Complex d() const noexcept { return tau_.d(); }

  Complex operator()(Complex z) const { return tau_(z); }
  Complex inverse(Complex w) const;
  Complex derivative(Complex z) const { return tau_.derivative(z); }

  /// |c| and |d| agree to 1e-10: the pole sits on the unit circle.
  bool equal_modulus() const;
  bool domain_bounded() const { return !equal_modulus(); }
  /// |tau^{-1}(w)| < 1 - 1e-12.
  bool contains(Complex w) const;

 private:
  MobiusMap tau_;
};

/// Phi(w) = lambda w + r. The slope is nonzero except for constant symbols.
class AffineSymbol {
 public:
  /// Rejects a zero slope; use constant() for that.
  AffineSymbol(Complex slope, Complex offset);
  static AffineSymbol constant(Complex value);

  Complex slope() const noexcept { return slope_; }
  Complex offset() const noexcept { return offset_; }
  bool is_constant() const noexcept { return constant_; }
  Complex operator()(Complex w) const { return slope_ * w + offset_; }

  /// Throws InvalidArgument for constant symbols.
  MobiusMap as_mobius() const;
  AffineSymbol inverse() const;

 private:
  AffineSymbol(Complex slope, Complex offset, bool constant);
  Complex slope_;
  Complex offset_;
  bool constant_;
};

/// tau^{-1} o Phi o tau.
MobiusMap symbol_conjugate_to_disc(const RiemannMap& tau, const AffineSymbol& phi);

/// Maclaurin coefficients up to degree `degree`; PoleInClosedDisc when
/// |pole| <= 1.
TruncatedSeries mobius_taylor(const MobiusMap& m, int degree);

struct DenjoyWolffResult {
  Complex limit;
  Complex predicted;
  long iterations;
  std::vector<Complex> trail;  // capped at trail_cap entries
};

/// Iterates phi from z0 until successive iterates differ by less than tol.
DenjoyWolffResult denjoy_wolff_iterate(const MobiusMap& phi, Complex z0, long n_max = 10'000'000,
                                       double tol = 1e-13, std::size_t trail_cap = 1u << 20);

/// The attracting fixed point in the closed disc of a non-elliptic self-map.
Complex denjoy_wolff_point(const MobiusMap& phi);

}  // namespace lfh
