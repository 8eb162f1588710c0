#pragma once

#include "qramsey/interference.hpp"
#include "qramsey/jacobi.hpp"
#include "qramsey/matrix_oracle.hpp"
#include "qramsey/ramsey_graph.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qramsey {

// ordered_json keeps insertion order, which pins the key order of every
// report for golden-file comparison.
using ordered_json = nlohmann::ordered_json;

// {vertices, edges, red_triangles, green_triangles, max_red_cliques,
//  max_green_cliques, discrepancies} in exactly that key order.
ordered_json graph_report_json(const ColoredGraph& g, const CliqueReport& report,
                               const DiscrepancyReport* discrepancies = nullptr);

// {vertices, hyperedges, counts}
ordered_json jacobi_json(const JacobiHypergraph& h);

// {k6_colorings_checked, k6_all_contain_mono_triangle, k5_witness,
//  k5_witness_mono_triangles}
ordered_json ramsey_certificate_json(const RamseyCertificate& cert);

// {N, tol, pairs, mismatches}
ordered_json agreement_json(const AgreementReport& report);

// Header s,intensity; 15 significant digits.
std::string pattern_csv(const Pattern& p);

struct ConfigObservable {
  std::string name;
  std::optional<std::string> expression;
  std::string particle;  // "" = shared default
};

struct AnalysisConfig {
  std::vector<ConfigObservable> observables;
  std::optional<std::string> rules_path;
  std::optional<std::string> claims_path;
};

// Line format: observable <name> [= <expression>] [@particle <label>],
// rules <path>, claims <path>; '#' comments.
AnalysisConfig parse_analysis_config(const std::string& text);

std::string read_file(const std::string& path);                      // throws on failure
void write_file(const std::string& path, const std::string& text);   // throws on failure

}  // namespace qramsey
