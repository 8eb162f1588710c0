#include "qramsey/app.hpp"

#include "qramsey/fixtures.hpp"
#include "qramsey/interference.hpp"
#include "qramsey/jacobi.hpp"
#include "qramsey/matrix_oracle.hpp"
#include "qramsey/oplang.hpp"
#include "qramsey/serialize.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

namespace qramsey {

namespace {

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(csv);
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

struct AnalysisContext {
  Catalog catalog;
  RuleTable rules = RuleTable::central_field();
  std::vector<std::string> names;
  std::vector<Claim> claims;
};

AnalysisContext load_context(const std::string& set_csv, const std::string& config_path,
                             const std::string& claims_path, bool allow_override) {
  AnalysisContext ctx;
  if (!set_csv.empty() && !config_path.empty())
    throw std::invalid_argument("--set and --config are mutually exclusive");
  if (!set_csv.empty()) ctx.names = split_csv(set_csv);
  if (!config_path.empty()) {
    AnalysisConfig cfg = parse_analysis_config(read_file(config_path));
    for (const auto& obs : cfg.observables) {
      if (obs.expression) {
        // The expression may simply name an existing observable, which
        // re-registers it (typically under another particle label).
        if (ctx.catalog.known(*obs.expression)) {
          ctx.catalog.register_clone(obs.name, ctx.catalog.resolve(*obs.expression),
                                     obs.particle);
        } else {
          ctx.catalog.register_symbolic(obs.name, parse_operator(*obs.expression),
                                        obs.particle);
        }
      } else if (!ctx.catalog.known(obs.name)) {
        // Unknown and no defining expression: a new declared symbol whose
        // edges must come from a rules overlay.
        ctx.catalog.register_declared(obs.name, obs.particle);
      } else if (!obs.particle.empty()) {
        throw std::invalid_argument(
            "observable " + obs.name +
            ": relabeling an existing observable needs a new name (use <new> = <old> "
            "@particle <label>)");
      }
      ctx.names.push_back(obs.name);
    }
    if (cfg.rules_path) ctx.rules.apply_overlay(read_file(*cfg.rules_path), allow_override);
    if (cfg.claims_path) ctx.claims = parse_claims(read_file(*cfg.claims_path));
  }
  if (!claims_path.empty()) ctx.claims = parse_claims(read_file(claims_path));
  if (ctx.names.empty()) throw std::invalid_argument("no observables given (use --set or --config)");
  return ctx;
}

void emit_text(const std::string& text, const std::string& path) {
  if (path.empty())
    std::cout << text;
  else
    write_file(path, text);
}

void emit_json(const ordered_json& j, const std::string& path) {
  emit_text(j.dump(2) + "\n", path);
}

int run_graph_command(bool with_audit, const std::string& set_csv, const std::string& config_path,
                      const std::string& claims_path, bool allow_override, bool strict,
                      const std::string& json_path, const std::string& dot_path) {
  AnalysisContext ctx = load_context(set_csv, config_path, claims_path, allow_override);
  ColoredGraph g = build_graph(ctx.names, ctx.catalog, ctx.rules);
  CliqueReport report = clique_report(g);
  DiscrepancyReport disc;
  if (with_audit) {
    if (ctx.claims.empty())
      throw std::invalid_argument("audit needs claims (--claims or a config 'claims' line)");
    disc = audit(g, ctx.claims);
  }
  emit_json(graph_report_json(g, report, with_audit ? &disc : nullptr), json_path);
  if (!dot_path.empty()) write_file(dot_path, export_dot(g, report));
  if (strict)
    for (const auto& e : disc.entries)
      if (e.verdict == "refuted") return 3;
  return 0;
}

std::string summarize(const std::vector<DiscrepancyEntry>& entries) {
  int confirmed = 0, refuted = 0, unverifiable = 0;
  std::ostringstream out;
  out << "figure claim audit\n==================\n\n";
  for (const auto& e : entries) {
    out << "[" << e.tag << "] " << e.verdict << "\n";
    out << "  claimed: " << e.claimed << "\n";
    out << "  derived: " << e.derived << "\n\n";
    if (e.verdict == "confirmed")
      ++confirmed;
    else if (e.verdict == "refuted")
      ++refuted;
    else
      ++unverifiable;
  }
  out << "totals: confirmed=" << confirmed << " refuted=" << refuted
      << " unverifiable=" << unverifiable << "\n";
  return out.str();
}

int run_figures(const std::string& out_dir, bool strict) {
  std::filesystem::create_directories(out_dir);
  std::vector<DiscrepancyEntry> all_entries;
  auto process = [&](const FigureFixture& fx, bool write_files) {
    AnalysisContext ctx;
    ColoredGraph g = build_graph(fx.vertices, ctx.catalog, ctx.rules);
    CliqueReport report = clique_report(g);
    DiscrepancyReport disc = audit(g, parse_claims(fx.claims_text));
    all_entries.insert(all_entries.end(), disc.entries.begin(), disc.entries.end());
    if (write_files) {
      const std::filesystem::path dir(out_dir);
      write_file((dir / (fx.tag + ".dot")).string(), export_dot(g, report, fx.tag));
      write_file((dir / (fx.tag + ".json")).string(),
                 graph_report_json(g, report, &disc).dump(2) + "\n");
    }
  };
  for (const auto& fx : figure_fixtures()) process(fx, true);
  // Cross-check: the fig3b claim under the generic Hamiltonian rule set.
  process(fig3b_generic_variant(), false);
  write_file((std::filesystem::path(out_dir) / "discrepancy_summary.txt").string(),
             summarize(all_entries));
  if (strict)
    for (const auto& e : all_entries)
      if (e.verdict == "refuted") return 3;
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Exact commutator engine and Ramsey-graph analyzer for quantum observables"};
  app.require_subcommand(1);

  std::string set_csv, config_path, claims_path, json_path, dot_path, out_dir, csv_path;
  bool allow_override = false, strict = false;
  int N = 8, slits = 2;
  double tol = 1e-9, gamma = -1.0, width = 1.0, spacing = 5.0;

  auto add_graph_options = [&](CLI::App* cmd) {
    cmd->add_option("--set", set_csv, "comma-separated observable names");
    cmd->add_option("--config", config_path, "analysis config file");
    cmd->add_option("--json", json_path, "write the JSON report here instead of stdout");
    cmd->add_option("--dot", dot_path, "also write a DOT rendering here");
    cmd->add_flag("--allow-override", allow_override,
                  "let a rules overlay recolor built-in pairs");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "color a graph and enumerate cliques");
  add_graph_options(analyze);

  CLI::App* audit_cmd = app.add_subcommand("audit", "analyze plus claim checking");
  add_graph_options(audit_cmd);
  audit_cmd->add_option("--claims", claims_path, "claims file (overrides the config's)");
  audit_cmd->add_flag("--strict-claims", strict, "exit 3 when any claim is refuted");

  CLI::App* ramsey = app.add_subcommand("ramsey", "emit the R(3,3)=6 certificate");
  ramsey->add_option("--json", json_path, "write the JSON certificate here instead of stdout");

  CLI::App* jacobi_cmd = app.add_subcommand("jacobi", "Jacobi-identity hypergraph");
  jacobi_cmd->add_option("--set", set_csv, "comma-separated observable names");
  jacobi_cmd->add_option("--config", config_path, "analysis config file");
  jacobi_cmd->add_option("--json", json_path, "write the JSON report here instead of stdout");

  CLI::App* oracle = app.add_subcommand("oracle", "matrix-oracle agreement check");
  oracle->add_option("--set", set_csv, "comma-separated symbolic observable names");
  oracle->add_option("--N", N, "oscillator truncation per axis")->check(CLI::PositiveNumber);
  oracle->add_option("--tol", tol, "zero threshold")->check(CLI::PositiveNumber);
  oracle->add_option("--json", json_path, "write the JSON report here instead of stdout");

  CLI::App* interfere = app.add_subcommand("interfere", "multi-slit pattern CSV");
  interfere->add_option("--slits", slits, "number of slits (1..8)");
  interfere->add_option("--gamma", gamma, "decoherence exponent (>= 0)")
      ->check(CLI::NonNegativeNumber);
  interfere->add_option("--width", width, "slit width")->check(CLI::PositiveNumber);
  interfere->add_option("--spacing", spacing, "slit spacing")->check(CLI::PositiveNumber);
  interfere->add_option("--csv", csv_path, "write the CSV here instead of stdout");

  CLI::App* figures = app.add_subcommand("figures", "reproduce all built-in figure fixtures");
  figures->add_option("--out", out_dir, "output directory")->required();
  figures->add_flag("--strict-claims", strict, "exit 3 when any claim is refuted");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand(analyze))
      return run_graph_command(false, set_csv, config_path, "", allow_override, false, json_path,
                               dot_path);
    if (app.got_subcommand(audit_cmd))
      return run_graph_command(true, set_csv, config_path, claims_path, allow_override, strict,
                               json_path, dot_path);
    if (app.got_subcommand(ramsey)) {
      emit_json(ramsey_certificate_json(verify_r33()), json_path);
      return 0;
    }
    if (app.got_subcommand(jacobi_cmd)) {
      AnalysisContext ctx;
      std::vector<std::string> names = Catalog::symbolic_builtin_names();
      if (!set_csv.empty() || !config_path.empty()) {
        ctx = load_context(set_csv, config_path, "", false);
        names = ctx.names;
      }
      emit_json(jacobi_json(build_jacobi_hypergraph(names, ctx.catalog)), json_path);
      return 0;
    }
    if (app.got_subcommand(oracle)) {
      AnalysisContext ctx;
      std::vector<std::string> names = Catalog::symbolic_builtin_names();
      if (!set_csv.empty()) names = split_csv(set_csv);
      emit_json(agreement_json(agreement_check(names, ctx.catalog, N, tol)), json_path);
      return 0;
    }
    if (app.got_subcommand(interfere)) {
      InterferenceConfig cfg = InterferenceConfig::make_centered(slits, spacing);
      cfg.slit_width = width;
      Pattern p = gamma < 0 ? pattern(cfg) : decohered_pattern(cfg, gamma);
      emit_text(pattern_csv(p), csv_path);
      return 0;
    }
    if (app.got_subcommand(figures)) return run_figures(out_dir, strict);
  } catch (const unclassifiable_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace qramsey
