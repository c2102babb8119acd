#include "lfh/verify.hpp"

#include <algorithm>
#include <cmath>

#include "lfh/error.hpp"
#include "lfh/sampling.hpp"
#include "lfh/symmetry.hpp"

namespace lfh {

void SuiteResult::record(double residual, bool pass, Json instance) {
  ++instances;
  if (std::isnan(residual) || !pass) {
    instance["residual"] = residual;
    failures.push_back(std::move(instance));
  } else {
    ++passed;
  }
  if (std::isnan(residual) || residual > max_residual) max_residual = residual;
}

Json suite_to_json(const SuiteResult& r, const RunConfig& cfg) {
  return Json{{"suite", r.suite},
              {"config", config_to_json(cfg)},
              {"instances", r.instances},
              {"passed", r.passed},
              {"max_residual", r.max_residual},
              {"tolerance", r.tolerance},
              {"ok", r.ok()},
              {"failures", r.failures},
              {"notes", r.notes}};
}

namespace {

const RiemannMap kRight(1.0, 1.0, -1.0, 1.0);
const RiemannMap kUpper(Complex(0, 1), Complex(0, 1), -1.0, 1.0);

Json instance_json(const RiemannMap& tau, const AffineSymbol& phi) {
  return Json{{"tau", tau_to_json(tau)}, {"symbol", symbol_to_json(phi)}};
}

/// Block norm of W^* - lambda W_star at kPadding * n, block capped at n/2.
double adjoint_certificate(const RiemannMap& tau, const AffineSymbol& phi, const AdjointSymbol& adj,
                           int n) {
  const int dim = kPadding * n;
  const OperatorMatrix w = w_phi_matrix(tau, phi, dim).capped(n / 2);
  const OperatorMatrix ws = w_phi_matrix(tau, adj.phi_star, dim);
  const int b = std::min(w.trusted_block(), ws.trusted_block());
  return block_norm(w.entries().adjoint() - adj.lambda * ws.entries(), b);
}

}  // namespace

SuiteResult verify_kernels(const RunConfig& cfg, int count) {
  SuiteResult out;
  out.suite = "kernels";
  out.tolerance = 1e-9;
  Rng rng(cfg.seed);
  for (int family = 0; family < 5; ++family) {
    for (int i = 0; i < count; ++i) {
      const RiemannMap tau = family == 0   ? RiemannMap(MobiusMap::identity())
                             : family == 1 ? kRight
                             : family == 2 ? kUpper
                             : family == 3 ? random_bounded_tau(rng)
                                           : random_halfplane_tau(rng);
      const Complex u = random_point(rng, tau), w = random_point(rng, tau);
      const Complex closed = kernel_k_omega(tau, u, w);
      double res = std::abs(closed - kernel_v_route(tau, u, w)) / std::max(1.0, std::abs(closed));
      if (family == 1) res = std::max(res, std::abs(closed - 1.0 / (std::conj(u) + w)));
      out.record(res, Json{{"tau", tau_to_json(tau)}, {"u", complex_to_json(u)}, {"w", complex_to_json(w)}});
    }
  }
  return out;
}

SuiteResult verify_adjoints(const RunConfig& cfg, int per_case) {
  SuiteResult out;
  out.suite = "adjoints";
  out.tolerance = cfg.tol.matrix;
  Rng rng(cfg.seed);
  const int n = cfg.order;
  int skipped = 0;

  auto certify = [&](const RiemannMap& tau, const AffineSymbol& phi) {
    Json inst = instance_json(tau, phi);
    if (symbol_self_map(tau, phi) == SelfMapVerdict::no) {
      ++skipped;
      return;
    }
    try {
      const AdjointSymbol adj = adjoint_symbol(tau, phi, std::nullopt, cfg.tol);
      inst["lambda"] = complex_to_json(adj.lambda);
      inst["phi_star"] = symbol_to_json(adj.phi_star);
      out.record(adjoint_certificate(tau, phi, adj, n), std::move(inst));
    } catch (const Error& e) {
      inst["error"] = e.what();
      out.record(std::nan(""), std::move(inst));
    }
  };

  for (int i = 0; i < per_case; ++i) {
    const RiemannMap tau = random_halfplane_tau(rng);
    certify(tau, random_halfplane_symbol(rng, tau, static_cast<HalfPlaneSymbolKind>(i % 3)));
  }
  for (int i = 0; i < per_case; ++i) {
    const RiemannMap tau = random_bounded_tau(rng);
    certify(tau, random_centred_symbol(rng, tau));
  }
  certify(kUpper, AffineSymbol(2.0, Complex(1, 1)));

  // Quadruples with ad = bc satisfy the middle-case relation exactly; the
  // identity is polynomial in (a, b, c, d), so it is checked there directly.
  for (int i = 0; i < per_case; ++i) {
    const Complex p = random_in_disc(rng, 2.0), q = random_in_disc(rng, 2.0);
    Complex x = random_in_disc(rng, 2.0), y = random_in_disc(rng, 2.0);
    if (std::abs(std::abs(x) - std::abs(y)) < 0.1) y *= 1.5;
    const Complex a = p * x, b = p * y, c = q * x, d = q * y;
    const KernelScalars k{0.0, std::norm(a) - std::norm(b), b * std::conj(d) - a * std::conj(c),
                          std::norm(c) - std::norm(d), std::conj(b) * d - std::conj(a) * c};
    const Complex slope = random_in_disc(rng, 1.5), lambda = random_in_disc(rng, 2.0);
    const AffineSymbol phi(slope, (slope - 1.0) * k.bd_ac / k.cc_dd);
    const AffineSymbol star = kernel_norm_eq_star(k, slope, lambda);
    const Complex u = random_in_disc(rng, 2.0), w = random_in_disc(rng, 2.0);
    const double scale = 1.0 + std::abs(k.aa_bb) + std::abs(k.bd_ac) * (1.0 + std::abs(u) + std::abs(w)) +
                         std::abs(k.cc_dd) * std::abs(u) * std::abs(w);
    const double gap = std::abs(adjoint_identity_gap(a, b, c, d, phi, lambda, star, u, w)) /
                       (scale * (1.0 + std::abs(lambda)) * (1.0 + std::abs(slope)));
    out.record(gap, gap <= 1e-12,
               Json{{"quadruple", {complex_to_json(a), complex_to_json(b), complex_to_json(c), complex_to_json(d)}},
                    {"slope", complex_to_json(slope)},
                    {"lambda", complex_to_json(lambda)}});
  }
  out.notes["skipped_not_self_map"] = skipped;
  return out;
}

SuiteResult verify_symmetry(const RunConfig& cfg, int count) {
  SuiteResult out;
  out.suite = "symmetry";
  out.tolerance = cfg.tol.matrix;
  Rng rng(cfg.seed);
  const int n = cfg.order, dim = kPadding * n;
  const int min_block = std::min(8, n / 2);
  double worst_ratio = 1e300;
  int redraws = 0;

  // J_Omega residual, or nothing when the trusted block is too small to say
  // anything (a 1 x 1 block is symmetric for every operator).
  auto residual = [&](const RiemannMap& tau, const AffineSymbol& phi) -> std::optional<double> {
    const OperatorMatrix w = w_phi_matrix(tau, phi, dim).capped(n / 2);
    if (w.trusted_block() < min_block) return std::nullopt;
    return c_symmetry_residual(w, conj_J_omega(tau, dim));
  };

  for (int i = 0; i < count; ++i) {
    const bool half = i % 2 == 0;
    RiemannMap tau = random_real_tau(rng, half);
    std::optional<AffineSymbol> phi, bent;
    std::optional<double> res, bent_res;
    for (int attempt = 0; attempt < 100 && !(res && bent_res); ++attempt) {
      if (attempt > 0) ++redraws;
      if (attempt % 10 == 9) tau = random_real_tau(rng, half);
      phi = half ? random_halfplane_symbol(rng, tau, HalfPlaneSymbolKind::translation)
                 : random_centred_symbol(rng, tau, 0.8);
      res = residual(tau, *phi);
      if (!res) continue;
      if (half) {
        bent = random_halfplane_symbol(rng, tau, HalfPlaneSymbolKind::generic);
      } else {
        bent = AffineSymbol(phi->slope(), phi->offset() + 0.1 * random_unimodular(rng));
        if (symbol_self_map(tau, *bent) == SelfMapVerdict::no) continue;
      }
      bent_res = residual(tau, *bent);
    }
    if (!(res && bent_res)) {
      out.record(std::nan(""), false, Json{{"tau", tau_to_json(tau)}, {"error", "no symbol with a usable block"}});
      continue;
    }
    const double ratio = *bent_res / std::max(*res, 1e-16);
    worst_ratio = std::min(worst_ratio, ratio);
    Json inst = instance_json(tau, *phi);
    inst["perturbed"] = symbol_to_json(*bent);
    inst["separation"] = ratio;
    out.record(*res, *res <= out.tolerance && ratio >= cfg.tol.separation, std::move(inst));

    // A unitary symbol on the same domain gives a conjugation J_{Omega,Psi}.
    const AffineSymbol psi = random_unitary_symbol(rng, tau);
    const ConjugationAxioms ax = conjugation_axioms(conj_J_omega_psi(tau, psi, 2 * dim));
    const double axioms = std::max(ax.isometry, ax.involution);
    out.record(axioms, axioms <= 1e-8,
               Json{{"tau", tau_to_json(tau)}, {"psi", symbol_to_json(psi)}, {"check", "axioms"}});
  }
  out.notes["min_separation"] = worst_ratio;
  out.notes["redraws"] = redraws;
  return out;
}

SuiteResult verify_oracle(const RunConfig& cfg, int count, double tolerance) {
  SuiteResult out;
  out.suite = "oracle";
  out.tolerance = tolerance;
  Rng rng(cfg.seed);
  const int n = cfg.order, dim = kPadding * n;
  for (int i = 0; i < count; ++i) {
    Json inst;
    OperatorMatrix m(Matrix(), 0);
    ComplexFn psi_fn, phi_fn;
    if (i % 2 == 0) {
      const MobiusMap phi = random_disc_selfmap(rng);
      const TruncatedSeries psi = random_polynomial(rng, 4, dim - 1);
      m = weighted_composition_matrix(psi, phi, dim).capped(n / 2);
      psi_fn = [psi](Complex z) { return series_eval(psi, z); };
      phi_fn = [phi](Complex z) { return phi(z); };
      inst = Json{{"phi", {complex_to_json(phi.a()), complex_to_json(phi.b()), complex_to_json(phi.c()),
                           complex_to_json(phi.d())}},
                  {"psi_degree", 4}};
    } else {
      RiemannMap tau = random_bounded_tau(rng);
      AffineSymbol sym = random_centred_symbol(rng, tau);
      MobiusMap phi = symbol_conjugate_to_disc(tau, sym);
      while (phi.pole() && std::abs(*phi.pole()) < 1.2) {
        tau = random_bounded_tau(rng);
        sym = random_centred_symbol(rng, tau);
        phi = symbol_conjugate_to_disc(tau, sym);
      }
      m = w_phi_matrix(tau, sym, dim).capped(n / 2);
      psi_fn = [tau, phi](Complex z) { return sqrt_derivative(tau, z) / sqrt_derivative(tau, phi(z)); };
      phi_fn = [phi](Complex z) { return phi(z); };
      inst = instance_json(tau, sym);
    }
    const OperatorMatrix oracle = quadrature_matrix_oracle(psi_fn, phi_fn, n, cfg.effective_samples(), cfg.radius);
    const int b = std::min(m.trusted_block(), oracle.trusted_block());
    const double res = (m.entries().topLeftCorner(b, b) - oracle.entries().topLeftCorner(b, b)).cwiseAbs().maxCoeff();
    inst["block"] = b;
    out.record(res, std::move(inst));
  }
  return out;
}

SuiteResult verify_obstruction(const RunConfig& cfg, const std::optional<RiemannMap>& tau_in) {
  SuiteResult out;
  out.suite = "obstruction";
  out.tolerance = 1e-10;
  const RiemannMap tau = tau_in.value_or(kRight);
  const int n = cfg.order;
  const TruncatedSeries s = sqrt_derivative_series(tau, n + 1);
  const bool right = std::abs(tau.a() - kRight.a()) + std::abs(tau.b() - kRight.b()) +
                         std::abs(tau.c() - kRight.c()) + std::abs(tau.d() - kRight.d()) < 1e-14;
  Json sums = Json::array();
  double acc = 0.0, prev = -1.0;
  for (int m = 0; m <= n; ++m) {
    acc += std::norm(s[static_cast<std::size_t>(m)]);
    double res = 0.0;
    if (tau.equal_modulus() && !(acc > prev)) res = 1.0;
    if (right) res = std::max(res, std::abs(acc - 2.0 * (m + 1)) / (m + 1));
    out.record(res, Json{{"M", m}, {"sum", acc}});
    if (m == n / 4 || m == n / 2 || m == n) sums.push_back(Json{{"M", m}, {"sum", acc}});
    prev = acc;
  }
  out.notes["partial_sums"] = sums;

  const ObstructionReport rep = cs_obstruction(tau, AffineSymbol(1.0, 0.0), n);
  out.notes["unbounded_domain"] = rep.unbounded_domain;
  if (rep.unbounded_domain) {
    out.record(rep.sums_diverge ? 0.0 : 1.0, Json{{"check", "growth by factor 1.25 at N/4, N/2, N"}});
  }
  if (right) {
    const AffineSymbol phi(2.0, 1.0);
    const ObstructionReport cw = cs_obstruction(tau, phi, n);
    out.notes["constant_weight"] = Json{{"symbol", symbol_to_json(phi)},
                                        {"flag", cw.constant_weight_flag},
                                        {"weight", complex_to_json(cw.weight_constant)}};
    out.record(cw.constant_weight_flag ? cw.constant_weight_residual : 1.0,
               Json{{"check", "constant weight"}, {"symbol", symbol_to_json(phi)}});
  }
  return out;
}

SuiteResult run_suite(const std::string& name, const RunConfig& cfg, const std::optional<RiemannMap>& tau) {
  if (name == "kernels") return verify_kernels(cfg);
  if (name == "adjoints") return verify_adjoints(cfg);
  if (name == "symmetry") return verify_symmetry(cfg);
  if (name == "oracle") return verify_oracle(cfg);
  if (name == "obstruction") return verify_obstruction(cfg, tau);
  throw Error(ErrorCode::InvalidArgument, "unknown suite: " + name);
}

}  // namespace lfh
