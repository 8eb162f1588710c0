#include "qramsey/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qramsey {

namespace {

ordered_json name_array(const ColoredGraph& g, const std::vector<int>& idx) {
  ordered_json a = ordered_json::array();
  for (int i : idx) a.push_back(g.vertices()[i]);
  return a;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

ordered_json graph_report_json(const ColoredGraph& g, const CliqueReport& report,
                               const DiscrepancyReport* discrepancies) {
  ordered_json j;
  j["vertices"] = g.vertices();
  ordered_json edges = ordered_json::array();
  for (int a = 0; a < g.size(); ++a)
    for (int b = a + 1; b < g.size(); ++b) {
      const EdgeInfo& e = g.edge(a, b);
      ordered_json je;
      je["a"] = g.vertices()[a];
      je["b"] = g.vertices()[b];
      je["color"] = color_name(e.color);
      je["basis"] = e.basis;
      je["citation"] = e.citation;
      edges.push_back(std::move(je));
    }
  j["edges"] = std::move(edges);
  auto triangles = [&](const std::vector<std::array<int, 3>>& list) {
    ordered_json a = ordered_json::array();
    for (const auto& t : list) a.push_back(name_array(g, {t[0], t[1], t[2]}));
    return a;
  };
  j["red_triangles"] = triangles(report.red_triangles);
  j["green_triangles"] = triangles(report.green_triangles);
  auto cliques = [&](const std::vector<std::vector<int>>& list) {
    ordered_json a = ordered_json::array();
    for (const auto& c : list) a.push_back(name_array(g, c));
    return a;
  };
  j["max_red_cliques"] = cliques(report.max_red_cliques);
  j["max_green_cliques"] = cliques(report.max_green_cliques);
  ordered_json disc = ordered_json::array();
  if (discrepancies) {
    for (const auto& d : discrepancies->entries) {
      ordered_json jd;
      jd["tag"] = d.tag;
      jd["claimed"] = d.claimed;
      jd["derived"] = d.derived;
      jd["verdict"] = d.verdict;
      disc.push_back(std::move(jd));
    }
  }
  j["discrepancies"] = std::move(disc);
  return j;
}

ordered_json jacobi_json(const JacobiHypergraph& h) {
  ordered_json j;
  j["vertices"] = h.vertices;
  ordered_json edges = ordered_json::array();
  for (const auto& e : h.hyperedges) {
    ordered_json je;
    ordered_json triple = ordered_json::array();
    for (int v : e.triple) triple.push_back(h.vertices[v]);
    je["triple"] = std::move(triple);
    je["status"] = jacobi_status_name(e.status);
    edges.push_back(std::move(je));
  }
  j["hyperedges"] = std::move(edges);
  ordered_json counts;
  counts["holds"] = h.holds;
  counts["fails"] = h.fails;
  counts["unverifiable"] = h.unverifiable;
  j["counts"] = std::move(counts);
  return j;
}

ordered_json ramsey_certificate_json(const RamseyCertificate& cert) {
  ordered_json j;
  j["k6_colorings_checked"] = cert.k6_colorings_checked;
  j["k6_all_contain_mono_triangle"] = cert.k6_all_contain_mono_triangle;
  ordered_json witness = ordered_json::array();
  for (const auto& e : cert.k5_witness) {
    ordered_json je;
    je["a"] = e.a;
    je["b"] = e.b;
    je["color"] = color_name(e.color);
    witness.push_back(std::move(je));
  }
  j["k5_witness"] = std::move(witness);
  j["k5_witness_mono_triangles"] = cert.k5_witness_mono_triangles;
  return j;
}

ordered_json agreement_json(const AgreementReport& report) {
  ordered_json j;
  j["N"] = report.N;
  j["tol"] = report.tol;
  ordered_json pairs = ordered_json::array();
  for (const auto& p : report.pairs) {
    ordered_json jp;
    jp["a"] = p.a;
    jp["b"] = p.b;
    jp["symbolic"] = color_name(p.symbolic);
    jp["numeric"] = color_name(p.numeric);
    jp["defect"] = p.defect;
    pairs.push_back(std::move(jp));
  }
  j["pairs"] = std::move(pairs);
  j["mismatches"] = report.mismatches;
  return j;
}

std::string pattern_csv(const Pattern& p) {
  std::string out = "s,intensity\n";
  char buf[80];
  for (size_t i = 0; i < p.positions.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.15g,%.15g\n", p.positions[i], p.intensities[i]);
    out += buf;
  }
  return out;
}

AnalysisConfig parse_analysis_config(const std::string& text) {
  AnalysisConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    auto fail = [lineno](const std::string& msg) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + msg);
    };
    if (word == "rules" || word == "claims") {
      std::string rest;
      std::getline(ls, rest);
      rest = trim(rest);
      if (rest.empty()) fail(word + " needs a file path");
      (word == "rules" ? cfg.rules_path : cfg.claims_path) = rest;
      continue;
    }
    if (word != "observable") fail("expected observable/rules/claims, got '" + word + "'");
    ConfigObservable obs;
    if (!(ls >> obs.name)) fail("observable needs a name");
    std::string rest;
    std::getline(ls, rest);
    auto at = rest.find("@particle");
    if (at != std::string::npos) {
      std::istringstream ps(rest.substr(at + 9));
      if (!(ps >> obs.particle)) fail("@particle needs a label");
      std::string extra;
      if (ps >> extra) fail("unexpected trailing token '" + extra + "'");
      rest.erase(at);
    }
    rest = trim(rest);
    if (!rest.empty()) {
      if (rest[0] != '=') fail("expected '=' before the expression");
      std::string expr = trim(rest.substr(1));
      if (expr.empty()) fail("empty expression");
      obs.expression = expr;
    }
    cfg.observables.push_back(std::move(obs));
  }
  return cfg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

}  // namespace qramsey
