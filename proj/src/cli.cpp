#include "lfh/cli.hpp"

#include <CLI11.hpp>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include "lfh/error.hpp"
#include "lfh/symmetry.hpp"
#include "lfh/verify.hpp"

namespace lfh {

Complex parse_complex(const std::string& text) {
  static const std::string num = R"((?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)";
  static const std::regex real_only("^([+-]?" + num + ")$");
  static const std::regex imag_only("^([+-]?)(" + num + ")?i$");
  static const std::regex both("^([+-]?" + num + ")([+-])(" + num + ")?i$");
  std::smatch m;
  if (std::regex_match(text, m, real_only)) return {std::stod(m[1]), 0.0};
  if (std::regex_match(text, m, imag_only)) {
    const double mag = m[2].matched ? std::stod(m[2]) : 1.0;
    return {0.0, m[1] == "-" ? -mag : mag};
  }
  if (std::regex_match(text, m, both)) {
    const double mag = m[3].matched ? std::stod(m[3]) : 1.0;
    return {std::stod(m[1]), m[2] == "-" ? -mag : mag};
  }
  throw Error(ErrorCode::ParseError, "not a complex literal: '" + text + "'");
}

std::vector<Complex> parse_complex_list(const std::string& text, std::size_t count) {
  std::vector<Complex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
  if (!text.empty() && text.back() == ',') out.clear();
  if (out.size() != count) {
    throw Error(ErrorCode::ParseError,
                "expected " + std::to_string(count) + " comma-separated values in '" + text + "'");
  }
  return out;
}

RiemannMap parse_tau(const std::string& text) {
  const auto q = parse_complex_list(text, 4);
  return RiemannMap(q[0], q[1], q[2], q[3]);
}

AffineSymbol parse_symbol(const std::string& text) {
  const auto p = parse_complex_list(text, 2);
  return p[0] == Complex{} ? AffineSymbol::constant(p[1]) : AffineSymbol(p[0], p[1]);
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument: return 2;
    case ErrorCode::DegenerateMap:
    case ErrorCode::PoleInsideDisc: return 3;
    case ErrorCode::PointOutsideDomain: return 4;
    default: return 5;
  }
}

namespace {

struct Options {
  RunConfig cfg;
  std::string tau = "1,0,0,1";
  std::string symbol;
  std::string map;
  std::string psi;
  std::string u, w, z0 = "0", lambda;
  std::string format = "json";
  std::string suite;
  double tol = 0.0;
  bool tau_given = false;
};

Json kernel_json(const Options& o) {
  const RiemannMap tau = parse_tau(o.tau);
  const Complex u = parse_complex(o.u), w = parse_complex(o.w);
  const Complex closed = kernel_k_omega(tau, u, w);
  const Complex vroute = kernel_v_route(tau, u, w);
  return Json{{"config", config_to_json(o.cfg)},
              {"tau", tau_to_json(tau)},
              {"u", complex_to_json(u)},
              {"w", complex_to_json(w)},
              {"closed_form", complex_to_json(closed)},
              {"v_route", complex_to_json(vroute)},
              {"difference", std::abs(closed - vroute)}};
}

Json adjoint_json(const Options& o) {
  const RiemannMap tau = parse_tau(o.tau);
  const AffineSymbol phi = parse_symbol(o.symbol);
  std::optional<Complex> lambda;
  if (!o.lambda.empty()) lambda = parse_complex(o.lambda);
  const AdjointSymbol adj = adjoint_symbol(tau, phi, lambda, o.cfg.tol);
  const int n = o.cfg.order, dim = kPadding * n;
  const OperatorMatrix w = w_phi_matrix(tau, phi, dim).capped(n / 2);
  const OperatorMatrix ws = w_phi_matrix(tau, adj.phi_star, dim);
  const int b = std::min(w.trusted_block(), ws.trusted_block());
  const double res = block_norm(w.entries().adjoint() - adj.lambda * ws.entries(), b);
  return Json{{"config", config_to_json(o.cfg)},
              {"tau", tau_to_json(tau)},
              {"symbol", symbol_to_json(phi)},
              {"case", to_string(adj.case_tag)},
              {"lambda", complex_to_json(adj.lambda)},
              {"phi_star", symbol_to_json(adj.phi_star)},
              {"certificate_residual", res},
              {"trusted_block", b},
              {"certified", res <= o.cfg.tol.matrix}};
}

Json symmetry_json(const Options& o) {
  const RiemannMap tau = parse_tau(o.tau);
  const AffineSymbol phi = parse_symbol(o.symbol);
  const int n = o.cfg.order;
  const int dim = (o.psi.empty() ? 1 : 2) * kPadding * n;
  const OperatorMatrix w = w_phi_matrix(tau, phi, dim).capped(n / 2);
  const Verdict v = jomega_symmetric_symbol(tau, phi, o.cfg.tol);
  const ConjugationRep jo = conj_J_omega(tau, dim);
  Json out{{"config", config_to_json(o.cfg)},
           {"tau", tau_to_json(tau)},
           {"symbol", symbol_to_json(phi)},
           {"jomega",
            {{"verdict", to_string(v.value)},
             {"basis", v.basis},
             {"witness", v.witness},
             {"residual", c_symmetry_residual(w, jo)},
             {"spectral_residual", spectral_symmetry_residual(w, jo)}}}};
  if (!o.psi.empty()) {
    const AffineSymbol psi = parse_symbol(o.psi);
    const ConjugationRep c = conj_J_omega_psi(tau, psi, dim);
    const ConjugationAxioms ax = conjugation_axioms(c);
    out["jomega_psi"] = Json{{"psi", symbol_to_json(psi)},
                             {"isometry", ax.isometry},
                             {"involution", ax.involution},
                             {"trusted_block", c.trusted_block},
                             {"residual", c_symmetry_residual(w, c)}};
  }
  return out;
}

Json iterate_json(const Options& o) {
  std::optional<MobiusMap> phi;
  Json source;
  if (!o.map.empty()) {
    const auto q = parse_complex_list(o.map, 4);
    phi = MobiusMap(q[0], q[1], q[2], q[3]);
  } else {
    const RiemannMap tau = parse_tau(o.tau);
    const AffineSymbol sym = parse_symbol(o.symbol);
    phi = symbol_conjugate_to_disc(tau, sym);
    source = Json{{"tau", tau_to_json(tau)}, {"symbol", symbol_to_json(sym)}};
  }
  const Complex z0 = parse_complex(o.z0);
  const DenjoyWolffResult r = denjoy_wolff_iterate(*phi, z0);
  Json trail = Json::array();
  const std::size_t shown = std::min<std::size_t>(r.trail.size(), 8);
  for (std::size_t i = r.trail.size() - shown; i < r.trail.size(); ++i) trail.push_back(complex_to_json(r.trail[i]));
  return Json{{"config", config_to_json(o.cfg)},
              {"source", source},
              {"phi", {complex_to_json(phi->a()), complex_to_json(phi->b()), complex_to_json(phi->c()),
                       complex_to_json(phi->d())}},
              {"z0", complex_to_json(z0)},
              {"limit", complex_to_json(r.limit)},
              {"predicted", complex_to_json(r.predicted)},
              {"iterations", r.iterations},
              {"trail_length", r.trail.size()},
              {"trail_tail", trail}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Composition operators on Hardy-Smirnov spaces of linear-fractional domains", "lfh"};
  app.require_subcommand(1);

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--order", o.cfg.order, "Workspace order N");
    sub->add_option("--tol", o.tol, "Matrix residual tolerance");
    sub->add_option("--radius", o.cfg.radius, "Quadrature radius");
    sub->add_option("--samples", o.cfg.samples, "Quadrature samples (default 16N)");
    sub->add_option("--seed", o.cfg.seed, "Seed for randomized suites");
    sub->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  };

  auto* classify = app.add_subcommand("classify", "Every verdict for a symbol");
  classify->add_option("--tau", o.tau, "a,b,c,d")->required();
  classify->add_option("--symbol", o.symbol, "lambda,r")->required();
  common(classify);

  auto* kernel = app.add_subcommand("kernel", "Reproducing kernel k_u(w) by two routes");
  kernel->add_option("--tau", o.tau, "a,b,c,d")->required();
  kernel->add_option("--u", o.u)->required();
  kernel->add_option("--w", o.w)->required();
  common(kernel);

  auto* adjoint = app.add_subcommand("adjoint", "Adjoint symbol and its matrix certificate");
  adjoint->add_option("--tau", o.tau, "a,b,c,d")->required();
  adjoint->add_option("--symbol", o.symbol, "lambda,r")->required();
  adjoint->add_option("--lambda", o.lambda, "Free multiplier of the middle case");
  common(adjoint);

  auto* symmetry = app.add_subcommand("symmetry", "Complex symmetry residuals");
  symmetry->add_option("--tau", o.tau, "a,b,c,d")->required();
  symmetry->add_option("--symbol", o.symbol, "lambda,r")->required();
  symmetry->add_option("--psi", o.psi, "Unitary symbol defining J_{Omega,Psi}");
  common(symmetry);

  auto* iterate = app.add_subcommand("iterate", "Denjoy-Wolff iteration");
  iterate->add_option("--map", o.map, "Disc self-map a,b,c,d");
  iterate->add_option("--tau", o.tau, "a,b,c,d");
  iterate->add_option("--symbol", o.symbol, "lambda,r");
  iterate->add_option("--z0", o.z0, "Starting point");
  common(iterate);

  auto* verify = app.add_subcommand("verify", "Randomized property suite");
  verify->add_option("suite", o.suite, "kernels, adjoints, symmetry, oracle or obstruction")
      ->required()
      ->check(CLI::IsMember({"kernels", "adjoints", "symmetry", "oracle", "obstruction"}));
  auto* verify_tau = verify->add_option("--tau", o.tau, "a,b,c,d (obstruction)");
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::ostringstream ignored;
    app.exit(e, ignored, err);
    return 2;
  }

  try {
    o.cfg.format = o.format == "table" ? OutputFormat::table : OutputFormat::json;
    if (o.tol > 0.0) o.cfg.tol.matrix = o.tol;
    o.cfg.validate();

    Json report;
    int code = 0;
    if (*classify) {
      report = classification_to_json(classify_symbol(parse_tau(o.tau), parse_symbol(o.symbol), o.cfg.order, o.cfg.tol),
                                      o.cfg);
    } else if (*kernel) {
      report = kernel_json(o);
    } else if (*adjoint) {
      report = adjoint_json(o);
    } else if (*symmetry) {
      report = symmetry_json(o);
    } else if (*iterate) {
      if (o.map.empty() && o.symbol.empty()) {
        throw Error(ErrorCode::InvalidArgument, "iterate needs --map or --tau with --symbol");
      }
      report = iterate_json(o);
    } else {
      std::optional<RiemannMap> tau;
      if (verify_tau->count() > 0) tau = parse_tau(o.tau);
      const SuiteResult r = run_suite(o.suite, o.cfg, tau);
      report = suite_to_json(r, o.cfg);
      if (!r.ok()) {
        err << "suite " << r.suite << ": " << r.passed << "/" << r.instances << " passed\n";
        code = 1;
      }
    }
    out << render(report, o.cfg.format);
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 5;
  }
}

}  // namespace lfh
