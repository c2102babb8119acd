#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lfh/mobius.hpp"
#include "lfh/smirnov.hpp"

namespace lfh {

/// Three cases for the adjoint symbol:
/// |c| = |d|; |c| != |d| with (|a|^2-|b|^2)(|c|^2-|d|^2) = |b conj(d) - a conj(c)|^2;
/// and the remaining generic case.
enum class CaseTag { equal_modulus, unequal_modulus_kernel_norm_eq, unequal_modulus_generic };

std::string_view to_string(CaseTag tag);

struct Tolerances {
  double case_tol = 1e-10;
  double scalar = 1e-10;
  double matrix = 1e-7;
  double separation = 100.0;
};

CaseTag detect_case(const RiemannMap& tau, double case_tol = 1e-10);

/// |B|^2 - A Cc in the notation of kernel_scalars; equals |ad-bc|^2 for every
/// quadruple, so the middle case never occurs for a nondegenerate tau.
double kernel_norm_gap(const KernelScalars& k);

struct AdjointSymbol {
  CaseTag case_tag;
  Complex lambda;
  AffineSymbol phi_star;
};

/// C_Phi^* = lambda C_{Phi_star}. lambda is forced in the first and third
/// cases and free (default 1) in the middle one. Throws
/// SymbolNotInAdjointFamily when Phi lacks the form the case requires and
/// StarNotSelfMap when Phi_star leaves Omega.
AdjointSymbol adjoint_symbol(const RiemannMap& tau, const AffineSymbol& phi,
                             std::optional<Complex> lambda = std::nullopt,
                             const Tolerances& tol = {});

/// Phi_star of the middle case for slope r: lambda conj(r) w + (lambda conj(r) - 1) B / Cc.
AffineSymbol kernel_norm_eq_star(const KernelScalars& k, Complex slope, Complex lambda);

/// Left minus right side of the kernel identity
/// lambda {A + B conj(Phi(u)) + [Cc conj(Phi(u)) + E] w}
///   = A + B conj(u) + [Cc conj(u) + E] Phi_star(w),
/// evaluated for a raw quadruple (no validity checks).
Complex adjoint_identity_gap(Complex a, Complex b, Complex c, Complex d, const AffineSymbol& phi,
                             Complex lambda, const AffineSymbol& phi_star, Complex u, Complex w);

enum class Tri { yes, no, not_applicable };
std::string_view to_string(Tri t);

struct Verdict {
  Tri value = Tri::not_applicable;
  std::string basis;
  double witness = 0.0;  // deviation of the closed-form condition
  std::optional<double> matrix_residual;
  bool consistent = true;
};

/// Whether Phi maps Omega into itself (the conjugated disc map is a self-map).
SelfMapVerdict symbol_self_map(const RiemannMap& tau, const AffineSymbol& phi);
bool is_automorphism(const RiemannMap& tau, const AffineSymbol& phi);
/// The finite fixed point of Phi when it lies in Omega.
std::optional<Complex> interior_fixed_point(const RiemannMap& tau, const AffineSymbol& phi);

/// Closed-form verdicts; matrix residuals are attached by classify_symbol.
Verdict is_hermitian_symbol(const RiemannMap& tau, const AffineSymbol& phi,
                            const Tolerances& tol = {});
Verdict is_unitary_symbol(const RiemannMap& tau, const AffineSymbol& phi,
                          const Tolerances& tol = {});
Verdict is_normal_symbol(const RiemannMap& tau, const AffineSymbol& phi,
                         const Tolerances& tol = {});
/// Complex coefficients only get not-applicable: the form is then necessary
/// but not known to be sufficient.
Verdict jomega_symmetric_symbol(const RiemannMap& tau, const AffineSymbol& phi,
                                const Tolerances& tol = {});

struct CenterPoint {
  Complex u;
  Complex z_u;
};

/// u = (a conj(c) - b conj(d))/(|c|^2-|d|^2) and z_u = -conj(c)/conj(d).
/// EqualModulusNoInteriorFixedPoint unless |c| < |d|.
CenterPoint cohyponormal_fixed_point(const RiemannMap& tau);

enum class HalfPlane { none, right, upper };
HalfPlane detect_half_plane(const RiemannMap& tau);

enum class Boundedness { yes, no, assumed };
std::string_view to_string(Boundedness b);

/// Affine symbols on the right or upper half-plane: bounded iff the slope is
/// real positive and the offset keeps the half-plane. Other domains: assumed.
Boundedness bounded_halfplane(const RiemannMap& tau, const AffineSymbol& phi);

enum class Obstruction { obstructed, not_obstructed, inapplicable };
std::string_view to_string(Obstruction o);

struct ObstructionReport {
  Obstruction status;
  std::string reason;
  bool unbounded_domain;
  bool automorphism;
  std::optional<Complex> fixed_point;
  std::vector<int> partial_sum_orders;
  std::vector<double> partial_sums;  // sum_{k<=M} |coeff_k((tau')^{1/2})|^2
  bool sums_diverge;
  /// Constant weight psi and no fixed point of phi in the disc: W = psi(0) C_phi
  /// with C_phi not complex symmetric.
  bool constant_weight_flag;
  Complex weight_constant;
  double constant_weight_residual;
};

ObstructionReport cs_obstruction(const RiemannMap& tau, const AffineSymbol& phi, int n,
                                 double delta = 0.25);

struct ClassificationReport {
  RiemannMap tau;
  AffineSymbol phi;
  int order;
  CaseTag case_tag;
  SelfMapVerdict self_map;
  bool automorphism;
  std::optional<AdjointSymbol> adjoint;
  std::string adjoint_note;
  std::optional<double> adjoint_residual;
  Verdict hermitian;
  Verdict unitary;
  Verdict normal;
  Verdict jomega_symmetric;
  std::optional<Complex> fixed_point;
  std::optional<CenterPoint> center;
  Boundedness bounded;
  ObstructionReport obstruction;
  std::optional<double> rank_one_ratio;  // second over first singular value
  int trusted_block;
};

/// Every closed-form verdict, cross-checked by matrix residuals at order n
/// (matrices are built at kPadding * n, compared on at most n/2).
ClassificationReport classify_symbol(const RiemannMap& tau, const AffineSymbol& phi, int n,
                                     const Tolerances& tol = {});

}  // namespace lfh
