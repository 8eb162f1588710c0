#include "qramsey/ramsey_graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qramsey {

ColoredGraph::ColoredGraph(std::vector<std::string> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2)
    throw std::invalid_argument("a commutation graph needs at least 2 vertices");
  std::set<std::string> seen;
  for (const auto& v : vertices_)
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate vertex name: " + v);
  edges_.resize(vertices_.size() * (vertices_.size() - 1) / 2);
}

int ColoredGraph::index_of(const std::string& name) const {
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == name) return static_cast<int>(i);
  return -1;
}

int ColoredGraph::slot(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 0 || i == j || j >= size()) throw std::out_of_range("bad edge index");
  const int n = size();
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

void ColoredGraph::set_edge(int i, int j, EdgeInfo info) { edges_[slot(i, j)] = std::move(info); }

const EdgeInfo& ColoredGraph::edge(int i, int j) const {
  const auto& e = edges_[slot(i, j)];
  if (!e) throw std::logic_error("edge not colored yet");
  return *e;
}

ColoredGraph build_graph(const std::vector<std::string>& names, const Catalog& catalog,
                         const RuleTable& rules) {
  std::vector<std::string> canon;
  canon.reserve(names.size());
  for (const auto& n : names) canon.push_back(catalog.resolve(n).name);
  ColoredGraph g(canon);
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j) {
      Classification c =
          classify(catalog.resolve(canon[i]), catalog.resolve(canon[j]), rules);
      g.set_edge(i, j, EdgeInfo{c.color, c.basis, c.citation});
    }
  return g;
}

CliqueReport monochromatic_triangles(const ColoredGraph& g) {
  CliqueReport r;
  const int n = g.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        EdgeColor a = g.edge(i, j).color;
        if (g.edge(i, k).color != a || g.edge(j, k).color != a) continue;
        auto& list = a == EdgeColor::red ? r.red_triangles : r.green_triangles;
        list.push_back({i, j, k});
      }
  return r;
}

namespace {

void bron_kerbosch(uint32_t R, uint32_t P, uint32_t X, const std::vector<uint32_t>& adj,
                   std::vector<uint32_t>& out) {
  if (P == 0 && X == 0) {
    out.push_back(R);
    return;
  }
  uint32_t PX = P | X;
  int pivot = std::countr_zero(PX);
  int best = -1;
  for (uint32_t m = PX; m; m &= m - 1) {
    int u = std::countr_zero(m);
    int deg = std::popcount(P & adj[u]);
    if (deg > best) {
      best = deg;
      pivot = u;
    }
  }
  uint32_t candidates = P & ~adj[pivot];
  for (uint32_t m = candidates; m; m &= m - 1) {
    int v = std::countr_zero(m);
    uint32_t vb = uint32_t{1} << v;
    bron_kerbosch(R | vb, P & adj[v], X & adj[v], adj, out);
    P &= ~vb;
    X |= vb;
  }
}

}  // namespace

std::vector<std::vector<int>> max_monochromatic_cliques(const ColoredGraph& g, EdgeColor color) {
  const int n = g.size();
  if (n > 31) throw std::invalid_argument("clique search supports at most 31 vertices");
  std::vector<uint32_t> adj(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.edge(i, j).color == color) {
        adj[i] |= uint32_t{1} << j;
        adj[j] |= uint32_t{1} << i;
      }
  std::vector<uint32_t> masks;
  bron_kerbosch(0, (uint32_t{1} << n) - 1, 0, adj, masks);
  std::vector<std::vector<int>> cliques;
  for (uint32_t m : masks) {
    if (std::popcount(m) < 2) continue;  // singletons are vacuous
    std::vector<int> c;
    for (uint32_t rest = m; rest; rest &= rest - 1) c.push_back(std::countr_zero(rest));
    cliques.push_back(std::move(c));
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

CliqueReport clique_report(const ColoredGraph& g) {
  CliqueReport r = monochromatic_triangles(g);
  r.max_red_cliques = max_monochromatic_cliques(g, EdgeColor::red);
  r.max_green_cliques = max_monochromatic_cliques(g, EdgeColor::green);
  return r;
}

namespace {

// Edge slot within K6 (i<j<6), matching the bit layout of the sweep.
constexpr int k6_edge(int i, int j) { return i * 6 - i * (i + 1) / 2 + (j - i - 1); }

}  // namespace

RamseyCertificate verify_r33() {
  RamseyCertificate cert;

  // Precompute the 20 triples as edge-slot triards.
  std::vector<std::array<int, 3>> triples;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k)
        triples.push_back({k6_edge(i, j), k6_edge(i, k), k6_edge(j, k)});

  bool all = true;
  int checked = 0;
  for (uint32_t mask = 0; mask < (uint32_t{1} << 15); ++mask) {
    ++checked;
    bool mono = false;
    for (const auto& t : triples) {
      unsigned a = (mask >> t[0]) & 1, b = (mask >> t[1]) & 1, c = (mask >> t[2]) & 1;
      if (a == b && b == c) {
        mono = true;
        break;
      }
    }
    if (!mono) {
      all = false;
      break;
    }
  }
  cert.k6_colorings_checked = checked;
  cert.k6_all_contain_mono_triangle = all;

  // Pentagon witness on K5: cycle edges red, diagonals green.
  auto is_cycle_edge = [](int i, int j) { return (j - i) == 1 || (i == 0 && j == 4); };
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      cert.k5_witness.push_back(
          {i, j, is_cycle_edge(i, j) ? EdgeColor::red : EdgeColor::green});
  auto witness_color = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    for (const auto& e : cert.k5_witness)
      if (e.a == i && e.b == j) return e.color;
    throw std::logic_error("missing witness edge");
  };
  int mono = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int k = j + 1; k < 5; ++k) {
        EdgeColor a = witness_color(i, j);
        if (witness_color(i, k) == a && witness_color(j, k) == a) ++mono;
      }
  cert.k5_witness_mono_triangles = mono;
  return cert;
}

std::vector<Claim> parse_claims(const std::string& text) {
  std::vector<Claim> claims;
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
      throw std::invalid_argument("claims line " + std::to_string(lineno) + ": " + msg);
    };
    if (word != "claim") fail("expected 'claim', got '" + word + "'");
    Claim c;
    std::string kind;
    if (!(ls >> c.tag >> kind)) fail("expected: claim <tag> mono|none ...");
    if (kind == "mono") {
      c.kind = ClaimKind::mono;
      std::string colorword;
      if (!(ls >> colorword)) fail("mono claim needs a color (red, green, or any)");
      if (colorword == "red")
        c.color = EdgeColor::red;
      else if (colorword == "green")
        c.color = EdgeColor::green;
      else if (colorword != "any")
        fail("mono color must be red, green, or any; got '" + colorword + "'");
      std::string v;
      while (ls >> v) c.vertices.push_back(v);
      if (c.vertices.size() < 3) fail("mono claim needs at least 3 vertices");
    } else if (kind == "none") {
      c.kind = ClaimKind::none;
      std::string colorword;
      if (ls >> colorword) {
        if (colorword == "red")
          c.color = EdgeColor::red;
        else if (colorword == "green")
          c.color = EdgeColor::green;
        else
          fail("none claim color must be red or green; got '" + colorword + "'");
        std::string extra;
        if (ls >> extra) fail("unexpected trailing token '" + extra + "'");
      }
    } else {
      fail("claim kind must be mono or none, got '" + kind + "'");
    }
    claims.push_back(std::move(c));
  }
  return claims;
}

namespace {

std::string vertex_list(const ColoredGraph& g, const std::vector<int>& idx) {
  std::string s = "(";
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ", ";
    s += g.vertices()[idx[i]];
  }
  return s + ")";
}

std::string edge_colors_text(const ColoredGraph& g, const std::vector<int>& idx) {
  std::string s;
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j) {
      if (!s.empty()) s += ", ";
      s += "(" + g.vertices()[idx[i]] + "," + g.vertices()[idx[j]] +
           ")=" + color_name(g.edge(idx[i], idx[j]).color);
    }
  return s;
}

DiscrepancyEntry audit_mono(const ColoredGraph& g, const Claim& c) {
  DiscrepancyEntry e;
  e.tag = c.tag;
  std::string set_text = "(";
  for (size_t i = 0; i < c.vertices.size(); ++i) {
    if (i) set_text += ", ";
    set_text += c.vertices[i];
  }
  set_text += ")";
  std::string noun = c.vertices.size() == 3 ? "triangle " : "set ";
  e.claimed = noun + set_text + " is monochromatic";
  if (c.color) e.claimed += std::string(" ") + color_name(*c.color);

  std::vector<int> idx;
  for (const auto& v : c.vertices) {
    int i = g.index_of(v);
    if (i < 0) {
      std::vector<int> all(g.size());
      for (int k = 0; k < g.size(); ++k) all[k] = k;
      e.verdict = "unverifiable";
      e.derived = "vertex '" + v + "' is not in the graph " + vertex_list(g, all);
      return e;
    }
    idx.push_back(i);
  }

  const std::string edges = edge_colors_text(g, idx);
  if (c.vertices.size() > 3) {
    // The source wording for >3-vertex "monochromatic" figures is ambiguous
    // (cycle vs clique), so we report the derived colors without a verdict.
    bool clique_red = true, clique_green = true;
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = i + 1; j < idx.size(); ++j) {
        EdgeColor col = g.edge(idx[i], idx[j]).color;
        clique_red &= col == EdgeColor::red;
        clique_green &= col == EdgeColor::green;
      }
    e.verdict = "unverifiable";
    e.derived = std::string("ambiguous claim for a ") + std::to_string(idx.size()) +
                "-vertex set (cycle or clique?); it is " +
                (clique_red || clique_green ? "" : "not ") +
                "a monochromatic clique; edges: " + edges;
    return e;
  }

  EdgeColor c0 = g.edge(idx[0], idx[1]).color;
  bool mono = g.edge(idx[0], idx[2]).color == c0 && g.edge(idx[1], idx[2]).color == c0;
  bool ok = c.color ? (mono && c0 == *c.color) : mono;
  e.verdict = ok ? "confirmed" : "refuted";
  e.derived = "edges: " + edges;
  return e;
}

DiscrepancyEntry audit_none(const ColoredGraph& g, const Claim& c) {
  DiscrepancyEntry e;
  e.tag = c.tag;
  e.claimed = std::string("graph contains no monochromatic ") +
              (c.color ? std::string(color_name(*c.color)) + " " : "") + "triangle";
  CliqueReport r = monochromatic_triangles(g);
  std::vector<std::array<int, 3>> offending;
  if (!c.color || *c.color == EdgeColor::red)
    offending.insert(offending.end(), r.red_triangles.begin(), r.red_triangles.end());
  if (!c.color || *c.color == EdgeColor::green)
    offending.insert(offending.end(), r.green_triangles.begin(), r.green_triangles.end());
  if (offending.empty()) {
    e.verdict = "confirmed";
    e.derived = "no such monochromatic triangle exists in the derived coloring";
    return e;
  }
  e.verdict = "refuted";
  std::string s;
  for (const auto& t : offending) {
    if (!s.empty()) s += "; ";
    std::vector<int> idx(t.begin(), t.end());
    s += "monochromatic " + std::string(color_name(g.edge(t[0], t[1]).color)) + " triangle " +
         vertex_list(g, idx) + " with edges: " + edge_colors_text(g, idx);
  }
  e.derived = s;
  return e;
}

}  // namespace

DiscrepancyReport audit(const ColoredGraph& g, const std::vector<Claim>& claims) {
  DiscrepancyReport report;
  for (const auto& c : claims)
    report.entries.push_back(c.kind == ClaimKind::mono ? audit_mono(g, c) : audit_none(g, c));
  return report;
}

std::string export_dot(const ColoredGraph& g, const CliqueReport& report,
                       const std::string& graph_name) {
  std::ostringstream out;
  out << "graph \"" << graph_name << "\" {\n";
  out << "  // red triangles: " << report.red_triangles.size() << "\n";
  out << "  // green triangles: " << report.green_triangles.size() << "\n";
  out << "  node [shape=circle];\n";
  for (const auto& v : g.vertices()) out << "  \"" << v << "\";\n";
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      out << "  \"" << g.vertices()[i] << "\" -- \"" << g.vertices()[j] << "\" [color="
          << color_name(g.edge(i, j).color) << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace qramsey
