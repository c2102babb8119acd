#include "lfh/report.hpp"

#include <cmath>
#include <sstream>

#include "lfh/error.hpp"

namespace lfh {

void RunConfig::validate() const {
  if (order < 8 || order > 512) throw Error(ErrorCode::InvalidArgument, "order must lie in [8, 512]");
  if (!(radius > 0.0 && radius < 1.0)) throw Error(ErrorCode::InvalidArgument, "radius must lie in (0, 1)");
  if (effective_samples() < 8 * order) {
    throw Error(ErrorCode::InvalidArgument, "samples must be at least 8 * order");
  }
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::ParseError, "complex number must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json config_to_json(const RunConfig& cfg) {
  return Json{{"order", cfg.order},
              {"tol",
               {{"case", cfg.tol.case_tol},
                {"scalar", cfg.tol.scalar},
                {"matrix", cfg.tol.matrix},
                {"separation", cfg.tol.separation}}},
              {"radius", cfg.radius},
              {"samples", cfg.effective_samples()},
              {"seed", cfg.seed},
              {"format", cfg.format == OutputFormat::json ? "json" : "table"}};
}

RunConfig config_from_json(const Json& j) {
  try {
    RunConfig cfg;
    cfg.order = j.at("order").get<int>();
    const Json& t = j.at("tol");
    cfg.tol = {t.at("case").get<double>(), t.at("scalar").get<double>(),
               t.at("matrix").get<double>(), t.at("separation").get<double>()};
    cfg.radius = j.at("radius").get<double>();
    cfg.samples = j.at("samples").get<int>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.format = j.at("format").get<std::string>() == "table" ? OutputFormat::table : OutputFormat::json;
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json tau_to_json(const RiemannMap& tau) {
  return Json{{"a", complex_to_json(tau.a())},
              {"b", complex_to_json(tau.b())},
              {"c", complex_to_json(tau.c())},
              {"d", complex_to_json(tau.d())},
              {"bounded", tau.domain_bounded()}};
}

Json symbol_to_json(const AffineSymbol& phi) {
  return Json{{"slope", complex_to_json(phi.slope())},
              {"offset", complex_to_json(phi.offset())},
              {"constant", phi.is_constant()}};
}

namespace {

Json optional_number(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

Json verdict_json(std::string_view name, const Verdict& v) {
  return Json{{"name", name},
              {"value", to_string(v.value)},
              {"basis", v.basis},
              {"witness", v.witness},
              {"matrix_residual", optional_number(v.matrix_residual)},
              {"consistent", v.consistent}};
}

std::string_view self_map_name(SelfMapVerdict v) {
  switch (v) {
    case SelfMapVerdict::yes: return "yes";
    case SelfMapVerdict::no: return "no";
    case SelfMapVerdict::boundary: return "boundary";
  }
  return "?";
}

}  // namespace

Json classification_to_json(const ClassificationReport& rep, const RunConfig& cfg) {
  Json out;
  out["config"] = config_to_json(cfg);
  out["tau"] = tau_to_json(rep.tau);
  out["symbol"] = symbol_to_json(rep.phi);

  Json verdicts = Json::array();
  verdicts.push_back(Json{{"name", "self_map"}, {"value", self_map_name(rep.self_map)}});
  verdicts.push_back(Json{{"name", "automorphism"}, {"value", rep.automorphism ? "yes" : "no"}});
  verdicts.push_back(verdict_json("hermitian", rep.hermitian));
  verdicts.push_back(verdict_json("unitary", rep.unitary));
  verdicts.push_back(verdict_json("normal", rep.normal));
  verdicts.push_back(verdict_json("jomega_symmetric", rep.jomega_symmetric));
  verdicts.push_back(Json{{"name", "bounded"}, {"value", to_string(rep.bounded)}});
  verdicts.push_back(Json{{"name", "cs_obstruction"},
                          {"value", to_string(rep.obstruction.status)},
                          {"basis", rep.obstruction.reason}});
  out["verdicts"] = std::move(verdicts);

  Json adjoint = nullptr;
  if (rep.adjoint) {
    adjoint = Json{{"case", to_string(rep.adjoint->case_tag)},
                   {"lambda", complex_to_json(rep.adjoint->lambda)},
                   {"phi_star", symbol_to_json(rep.adjoint->phi_star)}};
  }
  out["adjoint"] = std::move(adjoint);
  out["adjoint_note"] = rep.adjoint_note;

  out["residuals"] = Json{{"adjoint", optional_number(rep.adjoint_residual)},
                          {"hermitian", optional_number(rep.hermitian.matrix_residual)},
                          {"unitary", optional_number(rep.unitary.matrix_residual)},
                          {"normal", optional_number(rep.normal.matrix_residual)},
                          {"jomega_symmetric", optional_number(rep.jomega_symmetric.matrix_residual)},
                          {"rank_one_ratio", optional_number(rep.rank_one_ratio)},
                          {"trusted_block", rep.trusted_block}};

  const KernelScalars k = kernel_scalars(rep.tau);
  Json w;
  w["case"] = to_string(rep.case_tag);
  w["kernel_scalars"] = Json{{"det_abs", k.det_abs},
                             {"aa_bb", k.aa_bb},
                             {"bd_ac", complex_to_json(k.bd_ac)},
                             {"cc_dd", k.cc_dd}};
  w["kernel_norm_gap"] = kernel_norm_gap(k);
  w["fixed_point"] = rep.fixed_point ? complex_to_json(*rep.fixed_point) : Json(nullptr);
  w["center"] = rep.center ? Json{{"u", complex_to_json(rep.center->u)},
                                  {"z_u", complex_to_json(rep.center->z_u)}}
                           : Json(nullptr);
  const ObstructionReport& ob = rep.obstruction;
  Json sums = Json::array();
  for (std::size_t i = 0; i < ob.partial_sums.size(); ++i) {
    sums.push_back(Json{{"M", ob.partial_sum_orders[i]}, {"sum", ob.partial_sums[i]}});
  }
  w["obstruction"] = Json{{"unbounded_domain", ob.unbounded_domain},
                          {"automorphism", ob.automorphism},
                          {"partial_sums", std::move(sums)},
                          {"sums_diverge", ob.sums_diverge},
                          {"constant_weight", ob.constant_weight_flag},
                          {"weight_constant", complex_to_json(ob.weight_constant)},
                          {"constant_weight_residual", ob.constant_weight_residual}};
  out["witnesses"] = std::move(w);

  const Complex s0 = sqrt_derivative(rep.tau, 0.0);
  out["branch_choices"] = Json::array(
      {Json{{"quantity", "sqrt(tau')"}, {"rule", "principal at z = 0"}, {"value_at_0", complex_to_json(s0)}}});
  return out;
}

std::string serialize_report(const Json& j) { return j.dump(2); }

Json parse_report(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

namespace {

void flatten(const Json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
    }
  } else if (j.is_array() && !(j.size() == 2 && j[0].is_number() && j[1].is_number())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << path << "  " << j.dump() << '\n';
  }
}

}  // namespace

std::string render_table(const Json& j) {
  std::ostringstream os;
  flatten(j, "", os);
  return os.str();
}

std::string render(const Json& j, OutputFormat format) {
  return format == OutputFormat::json ? serialize_report(j) + "\n" : render_table(j);
}

}  // namespace lfh
