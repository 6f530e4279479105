#include "sphdim/cli.hpp"

#include <CLI11.hpp>

#include "sphdim/io.hpp"

namespace sphdim {

namespace {

// Resolves a pair reference: an exact family id with parameters, or a
// parameter-free family, or a default-catalog instance id like
// "slpq(p=2,q=4)".
SphericalPair resolve_pair(const std::string& id,
                           const std::map<std::string, long>& params) {
  for (const auto& f : families()) {
    if (f.id != id) continue;
    if (f.param_names.empty() || !params.empty())
      return instantiate(id, params);
    // Parameters omitted: fall back to the default instantiations.
    std::vector<SphericalPair> candidates;
    for (auto& p : catalog())
      if (p.family == id) candidates.push_back(std::move(p));
    if (candidates.size() == 1) return candidates.front();
    std::string msg = "family " + id + " needs parameters (" + f.constraints +
                      "); defaults:";
    for (const auto& c : candidates) msg += " " + c.id;
    throw std::invalid_argument(msg);
  }
  for (auto& p : catalog())
    if (p.id == id) return p;
  throw std::invalid_argument("unknown pair: " + id);
}

int run_verify(const CliConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<SphericalPair> pairs;
  if (config.all)
    pairs = catalog();
  else
    pairs.push_back(resolve_pair(config.pair_id, config.parameters));
  bool ok = true;
  nlohmann::json jout = nlohmann::json::array();
  for (const auto& pair : pairs) {
    PairAnalysis a = analyze(pair);
    auto structural = check_all(a);
    for (const auto& s : structural) err << "structural: " << s << "\n";
    ok = ok && structural.empty();
    SweepResult sweep = verify_sweep(a, config.max_total, config.parallel);
    if (config.format == "csv") {
      out << sweep_csv(a, sweep.reports);
    } else if (config.format == "json") {
      for (const auto& r : sweep.reports)
        jout.push_back(report_json(a, r));
    } else {
      out << pair.id << ": " << sweep.reports.size() << " weights, "
          << (sweep.all_match ? "all match" : "MISMATCH") << "\n";
    }
    if (!sweep.all_match) {
      ok = false;
      for (const auto& r : sweep.reports)
        if (!r.matches) {
          err << "mismatch: " << report_text(a, r);
          break;
        }
    }
  }
  if (config.format == "json") out << render_json(jout);
  return ok ? 0 : 1;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "list") {
      auto pairs = catalog();
      if (config.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& p : pairs) j.push_back(pair_json(p));
        out << render_json(j);
      } else {
        out << catalog_text(pairs);
      }
      return 0;
    }
    if (config.command == "describe") {
      PairAnalysis a =
          analyze(resolve_pair(config.pair_id, config.parameters));
      if (config.format == "json")
        out << render_json(analysis_json(a));
      else
        out << describe_text(a);
      return 0;
    }
    if (config.command == "dim") {
      PairAnalysis a =
          analyze(resolve_pair(config.pair_id, config.parameters));
      DimensionReport r = dim_restricted(a, config.lambda_coeffs);
      if (config.format == "json")
        out << render_json(report_json(a, r));
      else
        out << report_text(a, r);
      return r.matches ? 0 : 1;
    }
    if (config.command == "verify") return run_verify(config, out, err);
    if (config.command == "table") {
      PairAnalysis a =
          analyze(resolve_pair(config.pair_id, config.parameters));
      SweepResult sweep = verify_sweep(a, config.max_total, config.parallel);
      if (config.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : sweep.reports) j.push_back(report_json(a, r));
        out << render_json(j);
      } else {
        out << sweep_csv(a, sweep.reports);
      }
      return sweep.all_match ? 0 : 1;
    }
    err << "unknown command: " << config.command << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"restricted roots and spherical dimension formulas"};
  app.require_subcommand(1);
  CliConfig config;

  std::vector<std::string> param_flags;
  auto add_pair_opts = [&](CLI::App* cmd, bool need_pair) {
    auto* arg = cmd->add_option("pair", config.pair_id, "pair or family id");
    if (need_pair) arg->required();
    cmd->add_option("--param", param_flags,
                    "family parameter, e.g. --param l=4");
  };

  auto* list = app.add_subcommand("list", "print the catalog");
  auto* describe =
      app.add_subcommand("describe", "restricted-root table and markings");
  add_pair_opts(describe, true);
  auto* dim = app.add_subcommand("dim", "dimension of one spherical weight");
  add_pair_opts(dim, true);
  dim->add_option("--lambda", config.lambda_coeffs,
                  "coefficients k1,k2,... of the generators")
      ->required()
      ->delimiter(',');
  auto* verify =
      app.add_subcommand("verify", "sweep weights and cross-check dimensions");
  add_pair_opts(verify, false);
  verify->add_flag("--all", config.all, "verify every catalog instance");
  verify->add_option("--max-total", config.max_total,
                     "max coefficient sum of the sweep")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--parallel", config.parallel, "use worker threads");
  auto* table = app.add_subcommand("table", "emit dimensions over a sweep");
  add_pair_opts(table, true);
  table->add_option("--max-total", config.max_total,
                    "max coefficient sum of the sweep")
      ->check(CLI::NonNegativeNumber);
  table->add_flag("--parallel", config.parallel, "use worker threads");
  for (auto* cmd : {list, describe, dim, verify, table})
    cmd->add_option("--format", config.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  for (const auto& s : param_flags) {
    auto eq = s.find('=');
    if (eq == std::string::npos) {
      err << "bad --param (expected name=value): " << s << "\n";
      return 2;
    }
    try {
      config.parameters[s.substr(0, eq)] = std::stol(s.substr(eq + 1));
    } catch (const std::exception&) {
      err << "bad --param value: " << s << "\n";
      return 2;
    }
  }
  config.command = app.get_subcommands().front()->get_name();
  if (config.command == "verify" && !config.all && config.pair_id.empty()) {
    err << "verify: give a pair id or --all\n";
    return 2;
  }
  return run(config, out, err);
}

}  // namespace sphdim
