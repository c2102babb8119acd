#include "lfh/classify.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "lfh/error.hpp"
#include "lfh/symmetry.hpp"

namespace lfh {

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::equal_modulus: return "equal_modulus";
    case CaseTag::unequal_modulus_kernel_norm_eq: return "unequal_modulus_kernel_norm_eq";
    case CaseTag::unequal_modulus_generic: return "unequal_modulus_generic";
  }
  return "unknown";
}

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::not_applicable: return "not-applicable";
  }
  return "unknown";
}

std::string_view to_string(Boundedness b) {
  switch (b) {
    case Boundedness::yes: return "yes";
    case Boundedness::no: return "no";
    case Boundedness::assumed: return "assumed";
  }
  return "unknown";
}

std::string_view to_string(Obstruction o) {
  switch (o) {
    case Obstruction::obstructed: return "obstructed";
    case Obstruction::not_obstructed: return "not_obstructed";
    case Obstruction::inapplicable: return "inapplicable";
  }
  return "unknown";
}

double kernel_norm_gap(const KernelScalars& k) {
  return std::norm(k.bd_ac) - k.aa_bb * k.cc_dd;
}

CaseTag detect_case(const RiemannMap& tau, double case_tol) {
  const KernelScalars k = kernel_scalars(tau);
  if (std::abs(k.cc_dd) <= case_tol) return CaseTag::equal_modulus;
  if (std::abs(kernel_norm_gap(k)) <= case_tol) return CaseTag::unequal_modulus_kernel_norm_eq;
  return CaseTag::unequal_modulus_generic;
}

namespace {

// Offset making Phi a dilation by `slope` about the centre -B/Cc.
Complex centred_offset(const KernelScalars& k, Complex slope) {
  return (slope - 1.0) * k.bd_ac / k.cc_dd;
}

bool in_centred_family(const KernelScalars& k, const AffineSymbol& phi, double tol) {
  const Complex want = centred_offset(k, phi.slope());
  return std::abs(phi.offset() - want) <= tol * std::max(1.0, std::abs(want));
}

// Scale for scalar identities built from the kernel scalars.
double scalar_scale(const KernelScalars& k, const AffineSymbol& phi) {
  return std::max({1.0, std::abs(k.bd_ac) * std::max(1.0, std::abs(phi.offset())),
                   std::abs(k.aa_bb)});
}

}  // namespace

AffineSymbol kernel_norm_eq_star(const KernelScalars& k, Complex slope, Complex lambda) {
  const Complex m = lambda * std::conj(slope);
  return AffineSymbol(m, (m - 1.0) * k.bd_ac / k.cc_dd);
}

Complex adjoint_identity_gap(Complex a, Complex b, Complex c, Complex d, const AffineSymbol& phi,
                             Complex lambda, const AffineSymbol& phi_star, Complex u, Complex w) {
  const double aa = std::norm(a) - std::norm(b);
  const double cc = std::norm(c) - std::norm(d);
  const Complex bb = b * std::conj(d) - a * std::conj(c);
  const Complex e = std::conj(b) * d - std::conj(a) * c;
  const Complex pu = std::conj(phi(u));
  const Complex lhs = lambda * (aa + bb * pu + (cc * pu + e) * w);
  const Complex ub = std::conj(u);
  const Complex rhs = aa + bb * ub + (cc * ub + e) * phi_star(w);
  return lhs - rhs;
}

SelfMapVerdict symbol_self_map(const RiemannMap& tau, const AffineSymbol& phi) {
  if (phi.is_constant()) return tau.contains(phi.offset()) ? SelfMapVerdict::yes : SelfMapVerdict::no;
  return mobius_is_disc_selfmap(symbol_conjugate_to_disc(tau, phi)).verdict;
}

bool is_automorphism(const RiemannMap& tau, const AffineSymbol& phi) {
  if (phi.is_constant()) return false;
  return mobius_is_disc_selfmap(symbol_conjugate_to_disc(tau, phi)).automorphism;
}

std::optional<Complex> interior_fixed_point(const RiemannMap& tau, const AffineSymbol& phi) {
  if (phi.is_constant()) {
    if (tau.contains(phi.offset())) return phi.offset();
    return std::nullopt;
  }
  if (std::abs(phi.slope() - 1.0) <= 1e-14) return std::nullopt;
  const Complex w0 = phi.offset() / (1.0 - phi.slope());
  if (tau.contains(w0)) return w0;
  return std::nullopt;
}

AdjointSymbol adjoint_symbol(const RiemannMap& tau, const AffineSymbol& phi,
                             std::optional<Complex> lambda, const Tolerances& tol) {
  if (phi.is_constant()) {
    throw Error(ErrorCode::SymbolNotInAdjointFamily, "constant symbols have rank-one adjoints");
  }
  const KernelScalars k = kernel_scalars(tau);
  const CaseTag tag = detect_case(tau, tol.case_tol);
  AdjointSymbol out{tag, 1.0, AffineSymbol(1.0, 0.0)};
  switch (tag) {
    case CaseTag::equal_modulus: {
      const Complex lam = 1.0 / std::conj(phi.slope());
      if (lambda && std::abs(*lambda - lam) > tol.scalar * std::abs(lam)) {
        throw Error(ErrorCode::SymbolNotInAdjointFamily, "slope must equal 1/conj(lambda)");
      }
      const Complex r = phi.offset();
      out.lambda = lam;
      out.phi_star = AffineSymbol(
          lam, ((lam - 1.0) * k.aa_bb + lam * std::conj(r) * k.bd_ac) / k.bd_ac_conj);
      break;
    }
    case CaseTag::unequal_modulus_kernel_norm_eq: {
      if (!in_centred_family(k, phi, tol.scalar)) {
        throw Error(ErrorCode::SymbolNotInAdjointFamily, "offset must be (r-1)B/Cc");
      }
      out.lambda = lambda.value_or(1.0);
      out.phi_star = kernel_norm_eq_star(k, phi.slope(), out.lambda);
      break;
    }
    case CaseTag::unequal_modulus_generic: {
      if (lambda && std::abs(*lambda - 1.0) > tol.scalar) {
        throw Error(ErrorCode::SymbolNotInAdjointFamily, "lambda is forced to 1");
      }
      if (!in_centred_family(k, phi, tol.scalar)) {
        throw Error(ErrorCode::SymbolNotInAdjointFamily, "offset must be (r-1)B/Cc");
      }
      const Complex rb = std::conj(phi.slope());
      out.lambda = 1.0;
      out.phi_star = AffineSymbol(rb, centred_offset(k, rb));
      break;
    }
  }
  if (symbol_self_map(tau, out.phi_star) == SelfMapVerdict::no) {
    throw Error(ErrorCode::StarNotSelfMap, "Phi_star does not map Omega into itself");
  }
  return out;
}

namespace {

Verdict from_condition(bool holds, double witness, std::string basis) {
  Verdict v;
  v.value = holds ? Tri::yes : Tri::no;
  v.witness = witness;
  v.basis = std::move(basis);
  return v;
}

Verdict not_applicable(std::string basis) {
  Verdict v;
  v.basis = std::move(basis);
  return v;
}

}  // namespace

Verdict is_hermitian_symbol(const RiemannMap& tau, const AffineSymbol& phi, const Tolerances& tol) {
  if (phi.is_constant()) return not_applicable("constant symbol");
  if (symbol_self_map(tau, phi) == SelfMapVerdict::no) return not_applicable("not a self-map");
  const KernelScalars k = kernel_scalars(tau);
  if (detect_case(tau, tol.case_tol) == CaseTag::equal_modulus) {
    const double slope_gap = std::abs(phi.slope() - 1.0);
    const double im = std::abs((std::conj(phi.offset()) * k.bd_ac).imag());
    const double w = std::max(slope_gap, im / scalar_scale(k, phi));
    return from_condition(w <= tol.scalar, w, "slope 1 and Im(conj(r) B) = 0");
  }
  const double im = std::abs(phi.slope().imag());
  const Complex want = centred_offset(k, phi.slope());
  const double off = std::abs(phi.offset() - want) / std::max(1.0, std::abs(want));
  const double w = std::max(im, off);
  return from_condition(w <= tol.scalar, w, "real slope and centred offset");
}

Verdict is_unitary_symbol(const RiemannMap& tau, const AffineSymbol& phi, const Tolerances& tol) {
  if (phi.is_constant()) return not_applicable("constant symbol");
  if (symbol_self_map(tau, phi) == SelfMapVerdict::no) return not_applicable("not a self-map");
  const KernelScalars k = kernel_scalars(tau);
  if (detect_case(tau, tol.case_tol) == CaseTag::equal_modulus) {
    const double slope_gap = std::abs(phi.slope() - 1.0);
    const double re = std::abs((std::conj(phi.offset()) * k.bd_ac).real());
    const double w = std::max(slope_gap, re / scalar_scale(k, phi));
    return from_condition(w <= tol.scalar, w, "slope 1 and Re(conj(r) B) = 0");
  }
  const double mod = std::abs(std::abs(phi.slope()) - 1.0);
  const Complex want = centred_offset(k, phi.slope());
  const double off = std::abs(phi.offset() - want) / std::max(1.0, std::abs(want));
  const double w = std::max(mod, off);
  return from_condition(w <= tol.scalar, w, "unimodular slope and centred offset");
}

Verdict is_normal_symbol(const RiemannMap& tau, const AffineSymbol& phi, const Tolerances& tol) {
  if (phi.is_constant()) return not_applicable("constant symbol");
  if (symbol_self_map(tau, phi) == SelfMapVerdict::no) return not_applicable("not a self-map");
  AdjointSymbol adj{CaseTag::equal_modulus, 1.0, AffineSymbol(1.0, 0.0)};
  try {
    adj = adjoint_symbol(tau, phi, std::nullopt, tol);
  } catch (const Error& e) {
    return not_applicable(std::string("no adjoint symbol: ") + e.what());
  }
  const KernelScalars k = kernel_scalars(tau);
  if (adj.case_tag == CaseTag::equal_modulus) {
    const Complex l = adj.lambda;
    const Complex r = phi.offset();
    const Complex lhs = (l - 1.0) * (1.0 - std::conj(l)) * k.aa_bb;
    const double rhs = 2.0 * (l * std::conj(r) * k.bd_ac * (std::conj(l) - 1.0)).real();
    const double scale = std::max({1.0, std::abs(l) * std::abs(l) * std::abs(k.aa_bb),
                                   std::abs(l) * std::abs(l) * std::abs(r) * std::abs(k.bd_ac)});
    const double w = std::abs(lhs - rhs) / scale;
    return from_condition(w <= tol.scalar, w,
                          "(l-1)(1-conj l)A = 2 Re(l conj(r) B (conj l - 1))");
  }
  return from_condition(true, 0.0, "dilation about the centre of a bounded domain");
}

Verdict jomega_symmetric_symbol(const RiemannMap& tau, const AffineSymbol& phi,
                                const Tolerances& tol) {
  if (phi.is_constant()) return not_applicable("constant symbol");
  if (symbol_self_map(tau, phi) == SelfMapVerdict::no) return not_applicable("not a self-map");
  if (!tau.map().has_real_coefficients()) {
    return not_applicable("necessary-form only for complex coefficients");
  }
  const KernelScalars k = kernel_scalars(tau);
  if (detect_case(tau, tol.case_tol) == CaseTag::equal_modulus) {
    const double w = std::abs(phi.slope() - 1.0);
    return from_condition(w <= tol.scalar, w, "translation w + r");
  }
  const Complex want = centred_offset(k, phi.slope());
  const double w = std::abs(phi.offset() - want) / std::max(1.0, std::abs(want));
  return from_condition(w <= tol.scalar, w, "r w + (r-1)(bd-ac)/(|c|^2-|d|^2)");
}

CenterPoint cohyponormal_fixed_point(const RiemannMap& tau) {
  const KernelScalars k = kernel_scalars(tau);
  if (k.cc_dd >= -1e-10) {
    throw Error(ErrorCode::EqualModulusNoInteriorFixedPoint, "needs |c| < |d|");
  }
  const CenterPoint p{-k.bd_ac / k.cc_dd, -std::conj(tau.c()) / std::conj(tau.d())};
  if (std::abs(tau(p.z_u) - p.u) > 1e-10 * std::max(1.0, std::abs(p.u)) ||
      std::abs(p.z_u) >= 1.0) {
    throw Error(ErrorCode::NoConvergence, "centre check failed");
  }
  return p;
}

HalfPlane detect_half_plane(const RiemannMap& tau) {
  if (!tau.equal_modulus()) return HalfPlane::none;
  const KernelScalars k = kernel_scalars(tau);
  if (std::abs(k.aa_bb) > 1e-10) return HalfPlane::none;
  const Complex dir = k.bd_ac / std::abs(k.bd_ac);
  if (std::abs(dir - 1.0) <= 1e-10) return HalfPlane::right;
  if (std::abs(dir - Complex(0.0, 1.0)) <= 1e-10) return HalfPlane::upper;
  return HalfPlane::none;
}

Boundedness bounded_halfplane(const RiemannMap& tau, const AffineSymbol& phi) {
  const HalfPlane h = detect_half_plane(tau);
  if (h == HalfPlane::none) return Boundedness::assumed;
  if (phi.is_constant()) return Boundedness::no;
  const Complex l = phi.slope();
  if (std::abs(l.imag()) > 1e-12 || l.real() <= 0.0) return Boundedness::no;
  const double keep = (h == HalfPlane::right) ? phi.offset().real() : phi.offset().imag();
  return keep >= -1e-12 ? Boundedness::yes : Boundedness::no;
}

ObstructionReport cs_obstruction(const RiemannMap& tau, const AffineSymbol& phi, int n,
                                 double delta) {
  ObstructionReport rep{};
  rep.unbounded_domain = !tau.domain_bounded();
  rep.automorphism = is_automorphism(tau, phi);
  rep.fixed_point = interior_fixed_point(tau, phi);

  if (rep.unbounded_domain) {
    const TruncatedSeries s = sqrt_derivative_series(tau, n + 1);
    double acc = 0.0;
    std::vector<double> running(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
      acc += std::norm(s[k]);
      running[k] = acc;
    }
    rep.partial_sum_orders = {n / 4, n / 2, n};
    rep.sums_diverge = true;
    for (int m : rep.partial_sum_orders) {
      rep.partial_sums.push_back(running[static_cast<std::size_t>(m)]);
    }
    for (std::size_t j = 1; j < rep.partial_sums.size(); ++j) {
      if (rep.partial_sums[j] < (1.0 + delta) * rep.partial_sums[j - 1]) rep.sums_diverge = false;
    }
  }

  if (!phi.is_constant() && symbol_self_map(tau, phi) != SelfMapVerdict::no) {
    const MobiusMap disc = symbol_conjugate_to_disc(tau, phi);
    const TruncatedSeries psi = w_phi_weight(tau, disc, n);
    double tail = 0.0;
    for (std::size_t k = 1; k < psi.size(); ++k) tail = std::max(tail, std::abs(psi[k]));
    bool disc_fixed = disc.is_identity();
    if (!disc_fixed) {
      for (const FixedPoint& p : mobius_fixed_points(disc)) {
        if (!p.at_infinity && std::abs(p.value) < 1.0 - 1e-10) disc_fixed = true;
      }
    }
    if (tail <= 1e-12 * std::abs(psi[0]) && !disc_fixed) {
      rep.constant_weight_flag = true;
      rep.weight_constant = psi[0];
      const OperatorMatrix w = w_phi_matrix(tau, phi, n);
      const OperatorMatrix c = composition_matrix(disc, n);
      rep.constant_weight_residual = (w.entries() - psi[0] * c.entries()).cwiseAbs().maxCoeff();
    }
  }

  if (!rep.unbounded_domain) {
    rep.status = Obstruction::inapplicable;
    rep.reason = "Omega is bounded";
  } else if (rep.automorphism) {
    rep.status = Obstruction::not_obstructed;
    rep.reason = "Phi is an automorphism of Omega";
  } else if (!rep.fixed_point) {
    rep.status = Obstruction::not_obstructed;
    rep.reason = "Phi has no fixed point in Omega";
  } else {
    rep.status = Obstruction::obstructed;
    rep.reason = "unbounded Omega, non-automorphic Phi with a fixed point in Omega";
  }
  if (rep.constant_weight_flag) {
    rep.reason += "; constant weight and no fixed point of phi in the disc: not complex symmetric";
  }
  return rep;
}

namespace {

void attach(Verdict& v, double residual, const Tolerances& tol) {
  v.matrix_residual = residual;
  switch (v.value) {
    case Tri::yes: v.consistent = residual <= tol.matrix; break;
    case Tri::no: v.consistent = residual >= tol.separation * tol.matrix; break;
    case Tri::not_applicable: v.consistent = true; break;
  }
}

}  // namespace

ClassificationReport classify_symbol(const RiemannMap& tau, const AffineSymbol& phi, int n,
                                     const Tolerances& tol) {
  ClassificationReport rep{tau, phi, n, detect_case(tau, tol.case_tol),
                           symbol_self_map(tau, phi), is_automorphism(tau, phi),
                           std::nullopt, {}, std::nullopt, {}, {}, {}, {},
                           interior_fixed_point(tau, phi), std::nullopt,
                           bounded_halfplane(tau, phi), {}, std::nullopt, 0};
  rep.hermitian = is_hermitian_symbol(tau, phi, tol);
  rep.unitary = is_unitary_symbol(tau, phi, tol);
  rep.normal = is_normal_symbol(tau, phi, tol);
  rep.jomega_symmetric = jomega_symmetric_symbol(tau, phi, tol);
  try {
    rep.center = cohyponormal_fixed_point(tau);
  } catch (const Error&) {
    rep.center.reset();
  }
  rep.obstruction = cs_obstruction(tau, phi, n);

  if (rep.self_map == SelfMapVerdict::no) {
    rep.adjoint_note = "Phi is not a self-map of Omega";
    return rep;
  }
  const int dim = kPadding * n;
  const OperatorMatrix w = w_phi_matrix(tau, phi, dim).capped(n / 2);
  rep.trusted_block = w.trusted_block();

  if (phi.is_constant()) {
    const Eigen::JacobiSVD<Matrix> svd(w.block());
    const auto& s = svd.singularValues();
    rep.rank_one_ratio = s.size() > 1 ? s(1) / s(0) : 0.0;
    rep.adjoint_note = "constant symbol";
    return rep;
  }

  try {
    rep.adjoint = adjoint_symbol(tau, phi, std::nullopt, tol);
    const OperatorMatrix ws = w_phi_matrix(tau, rep.adjoint->phi_star, dim);
    const int b = std::min(w.trusted_block(), ws.trusted_block());
    rep.adjoint_residual =
        block_norm(w.entries().adjoint() - rep.adjoint->lambda * ws.entries(), b);
  } catch (const Error& e) {
    rep.adjoint_note = e.what();
  }

  attach(rep.hermitian, probe_operator(w, OperatorProperty::hermitian).residual, tol);
  attach(rep.unitary, probe_operator(w, OperatorProperty::unitary).residual, tol);
  attach(rep.normal, probe_operator(w, OperatorProperty::normal).residual, tol);
  if (tau.map().has_real_coefficients()) {
    attach(rep.jomega_symmetric, c_symmetry_residual(w, conj_J_omega(tau, dim)), tol);
  } else {
    rep.jomega_symmetric.matrix_residual = c_symmetry_residual(w, conj_J_omega(tau, dim));
  }
  return rep;
}

}  // namespace lfh
