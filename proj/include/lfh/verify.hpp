#pragma once

#include <optional>
#include <string>

#include "lfh/report.hpp"

namespace lfh {

/// Outcome of one randomized property suite. Failing instances are kept with
/// enough data to replay them.
struct SuiteResult {
  std::string suite;
  int instances = 0;
  int passed = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  Json failures = Json::array();
  Json notes = Json::object();

  bool ok() const { return instances > 0 && passed == instances; }
  /// Counts the instance, tracks the worst residual and keeps the instance
  /// when it fails.
  void record(double residual, bool pass, Json instance);
  /// Passes when residual <= tolerance.
  void record(double residual, Json instance) { record(residual, residual <= tolerance, std::move(instance)); }
};

Json suite_to_json(const SuiteResult& r, const RunConfig& cfg);

/// Closed-form kernel against the V-route on identity, right and upper
/// half-plane maps and random bounded and half-plane maps, count pairs each.
SuiteResult verify_kernels(const RunConfig& cfg, int count = 25);

/// Matrix certificate of W_Phi^* = lambda W_{Phi_star} on random half-plane
/// and bounded domains, plus the middle-case identity checked algebraically.
SuiteResult verify_adjoints(const RunConfig& cfg, int per_case = 30);

/// Conjugation axioms and J_Omega-symmetry of the affine families on random
/// real-coefficient domains, with perturbed symbols required to separate.
SuiteResult verify_symmetry(const RunConfig& cfg, int count = 20);

/// Weighted composition matrices against the quadrature oracle.
SuiteResult verify_oracle(const RunConfig& cfg, int count = 50, double tolerance = 1e-8);

/// Coefficient energy of (tau')^{1/2} up to M = order: strictly increasing
/// and growing by a fixed factor on half-planes, equal to 2(M+1) for the right
/// half-plane map, and the constant-weight instance 2w + 1 there.
SuiteResult verify_obstruction(const RunConfig& cfg, const std::optional<RiemannMap>& tau = std::nullopt);

/// Dispatch by name; InvalidArgument for an unknown suite.
SuiteResult run_suite(const std::string& name, const RunConfig& cfg,
                      const std::optional<RiemannMap>& tau = std::nullopt);

}  // namespace lfh
