#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "lfh/classify.hpp"

namespace lfh {

using Json = nlohmann::ordered_json;

enum class OutputFormat { json, table };

struct RunConfig {
  int order = 64;
  Tolerances tol;
  double radius = 0.75;
  int samples = 0;  // 0 means 16 * order
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::json;

  int effective_samples() const { return samples > 0 ? samples : 16 * order; }
  /// InvalidArgument unless order is in [8, 512], radius in (0, 1) and
  /// samples >= 8 * order.
  void validate() const;
};

Json complex_to_json(Complex z);
/// ParseError unless j is a two-element numeric array.
Complex complex_from_json(const Json& j);

Json config_to_json(const RunConfig& cfg);
RunConfig config_from_json(const Json& j);

Json tau_to_json(const RiemannMap& tau);
Json symbol_to_json(const AffineSymbol& phi);

/// {config, tau, symbol, verdicts[], residuals{}, witnesses{}, branch_choices[]}.
Json classification_to_json(const ClassificationReport& rep, const RunConfig& cfg);

/// Compact, key-ordered text; identical inputs give identical bytes.
std::string serialize_report(const Json& j);
/// ParseError on malformed text.
Json parse_report(const std::string& text);

/// Flattened "path  value" lines.
std::string render_table(const Json& j);
std::string render(const Json& j, OutputFormat format);

}  // namespace lfh
