#pragma once

#include "qramsey/catalog.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qramsey {

struct EdgeInfo {
  EdgeColor color;
  std::string basis;  // "computed" or "declared"
  std::string citation;
};

// Complete bi-colored graph over named observables. Vertex order is the
// construction order; edges are stored once per unordered pair.
class ColoredGraph {
 public:
  explicit ColoredGraph(std::vector<std::string> vertices);

  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  int index_of(const std::string& name) const;  // -1 when absent

  void set_edge(int i, int j, EdgeInfo info);
  const EdgeInfo& edge(int i, int j) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::optional<EdgeInfo>> edges_;  // upper triangle, row-major
  int slot(int i, int j) const;
};

// Builds the complete graph, classifying every pair; vertex order = input
// order. Throws on duplicates, unknown names, or unclassifiable pairs.
ColoredGraph build_graph(const std::vector<std::string>& names, const Catalog& catalog,
                         const RuleTable& rules);

struct CliqueReport {
  std::vector<std::array<int, 3>> red_triangles;
  std::vector<std::array<int, 3>> green_triangles;
  std::vector<std::vector<int>> max_red_cliques;    // size >= 2 only
  std::vector<std::vector<int>> max_green_cliques;  // size >= 2 only
};

// Exhaustive over all C(n,3) triples, ascending index order.
CliqueReport monochromatic_triangles(const ColoredGraph& g);
// All maximal cliques of one color (exact search, n <= 16), each sorted,
// list ordered lexicographically; singletons omitted.
std::vector<std::vector<int>> max_monochromatic_cliques(const ColoredGraph& g, EdgeColor color);
// Triangles plus maximal cliques for both colors.
CliqueReport clique_report(const ColoredGraph& g);

struct WitnessEdge {
  int a, b;
  EdgeColor color;
};

struct RamseyCertificate {
  int k6_colorings_checked = 0;  // 2^15
  bool k6_all_contain_mono_triangle = false;
  std::vector<WitnessEdge> k5_witness;  // pentagon: 5-cycle red, diagonals green
  int k5_witness_mono_triangles = -1;   // 0 when the witness verifies
};

// Sweeps every 2-coloring of K6 and checks the K5 pentagon witness.
RamseyCertificate verify_r33();

enum class ClaimKind { mono, none };

struct Claim {
  std::string tag;
  ClaimKind kind = ClaimKind::none;
  // mono: the asserted color, or nullopt when the source states no color.
  // none: restrict "no monochromatic triangle" to one color when set.
  std::optional<EdgeColor> color;
  std::vector<std::string> vertices;  // mono claims only
};

// Line format:
//   claim <tag> mono <red|green|any> <v1> <v2> <v3> [more...]
//   claim <tag> none [red|green]
// '#' starts a comment. Mono claims with more than three vertices are kept
// (they audit as unverifiable: the source wording for such sets is ambiguous).
std::vector<Claim> parse_claims(const std::string& text);

struct DiscrepancyEntry {
  std::string tag;
  std::string claimed;
  std::string derived;
  std::string verdict;  // confirmed | refuted | unverifiable
};

struct DiscrepancyReport {
  std::vector<DiscrepancyEntry> entries;
};

// Checks every claim against the derived coloring; no claim is dropped.
// Refutations carry the contradicting edge colors in `derived`.
DiscrepancyReport audit(const ColoredGraph& g, const std::vector<Claim>& claims);

// Deterministic DOT text; red edges color=red, green edges color=green.
std::string export_dot(const ColoredGraph& g, const CliqueReport& report,
                       const std::string& graph_name = "ramsey");

}  // namespace qramsey
