#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qramsey/ramsey_graph.hpp"

using namespace qramsey;

namespace {

ColoredGraph graph_of(const std::vector<std::string>& names, const Catalog& cat) {
  return build_graph(names, cat, RuleTable::central_field());
}

bool has_mono_triangle(const ColoredGraph& g) {
  CliqueReport r = monochromatic_triangles(g);
  return !r.red_triangles.empty() || !r.green_triangles.empty();
}

// Independent maximal-clique oracle: enumerate every vertex subset.
std::vector<std::vector<int>> brute_max_cliques(const ColoredGraph& g, EdgeColor color) {
  const int n = g.size();
  auto is_clique = [&](uint32_t m) {
    for (int i = 0; i < n; ++i) {
      if (!(m >> i & 1)) continue;
      for (int j = i + 1; j < n; ++j)
        if ((m >> j & 1) && g.edge(i, j).color != color) return false;
    }
    return true;
  };
  std::vector<std::vector<int>> out;
  for (uint32_t m = 1; m < (uint32_t{1} << n); ++m) {
    if (std::popcount(m) < 2 || !is_clique(m)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!(m >> v & 1) && is_clique(m | (uint32_t{1} << v))) maximal = false;
    if (!maximal) continue;
    std::vector<int> c;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) c.push_back(i);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("three momenta-and-angular vertices color as expected") {
  Catalog cat;
  ColoredGraph g = graph_of({"px", "py", "lx"}, cat);
  CHECK(g.size() == 3);
  CHECK(g.vertices() == std::vector<std::string>{"px", "py", "lx"});
  CHECK(g.edge(0, 1).color == EdgeColor::red);
  CHECK(g.edge(0, 1).basis == "computed");
  CHECK(g.edge(0, 2).color == EdgeColor::red);  // [px, lx] = 0
  CHECK(g.edge(1, 2).color == EdgeColor::green);
  CHECK(g.edge(2, 1).color == EdgeColor::green);  // symmetric accessor
  CHECK_FALSE(has_mono_triangle(g));
  CHECK(g.index_of("lx") == 2);
  CHECK(g.index_of("nope") == -1);
}

TEST_CASE("construction rejects bad vertex sets") {
  Catalog cat;
  CHECK_THROWS_AS(graph_of({"x", "x"}, cat), std::invalid_argument);
  CHECK_THROWS_AS(graph_of({"x", "p_x", "px"}, cat), std::invalid_argument);  // alias dup
  CHECK_THROWS_AS(graph_of({"x"}, cat), std::invalid_argument);
  CHECK_THROWS_AS(graph_of({"x", "mystery"}, cat), std::out_of_range);
  ColoredGraph g = graph_of({"p_x", "l_z"}, cat);  // aliases canonicalize
  CHECK(g.vertices() == std::vector<std::string>{"px", "lz"});
  ColoredGraph bare({"a", "b"});
  CHECK_THROWS_AS(bare.edge(0, 1), std::logic_error);  // not colored yet
  CHECK_THROWS_AS(bare.edge(0, 0), std::out_of_range);
}

TEST_CASE("the angular momentum triple is a green triangle") {
  Catalog cat;
  ColoredGraph g = graph_of({"lx", "ly", "lz"}, cat);
  CliqueReport r = clique_report(g);
  CHECK(r.red_triangles.empty());
  CHECK(r.green_triangles == std::vector<std::array<int, 3>>{{0, 1, 2}});
  CHECK(r.max_green_cliques == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(r.max_red_cliques.empty());  // no red edge at all
}

TEST_CASE("two conjugate pairs give a triangle-free coloring") {
  Catalog cat;
  ColoredGraph g = graph_of({"px", "py", "x", "y"}, cat);
  CHECK_FALSE(has_mono_triangle(g));
  CliqueReport r = clique_report(g);
  // green edges are exactly the conjugate pairs
  CHECK(r.max_green_cliques == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
}

TEST_CASE("six canonical operators: eight red triangles and no green ones") {
  Catalog cat;
  const std::vector<std::string> names = {"px", "py", "pz", "x", "y", "z"};
  ColoredGraph g = graph_of(names, cat);

  // Independent recount straight from the commutators, bypassing classify().
  std::vector<OperatorPoly> ops;
  for (const auto& n : names) ops.push_back(builtin_poly(n));
  int red_expected = 0, green_expected = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) {
        bool cij = commutator(ops[i], ops[j]).is_zero();
        bool cik = commutator(ops[i], ops[k]).is_zero();
        bool cjk = commutator(ops[j], ops[k]).is_zero();
        if (cij && cik && cjk) ++red_expected;
        if (!cij && !cik && !cjk) ++green_expected;
      }
  CHECK(red_expected == 8);
  CHECK(green_expected == 0);

  CliqueReport r = clique_report(g);
  CHECK(r.red_triangles.size() == 8);
  CHECK(r.green_triangles.empty());
  // px py pz | x y z at indices 0..5
  std::vector<std::array<int, 3>> expected = {{0, 1, 2}, {0, 1, 5}, {0, 2, 4}, {0, 4, 5},
                                              {1, 2, 3}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}};
  CHECK(r.red_triangles == expected);
  // every maximal red clique is one of the 2^3 transversals of the matching
  CHECK(r.max_red_cliques.size() == 8);
  for (const auto& c : r.max_red_cliques) CHECK(c.size() == 3);
  CHECK(r.max_green_cliques ==
        std::vector<std::vector<int>>{{0, 3}, {1, 4}, {2, 5}});  // px-x, py-y, pz-z
}

TEST_CASE("central-field vertex set reproduces the known triangles") {
  Catalog cat;
  ColoredGraph g = graph_of({"r", "pr", "lz", "H_central", "L2"}, cat);
  CliqueReport r = clique_report(g);
  CHECK(r.green_triangles == std::vector<std::array<int, 3>>{{0, 1, 3}});  // r, pr, H
  CHECK(r.red_triangles ==
        std::vector<std::array<int, 3>>{{0, 2, 4}, {1, 2, 4}, {2, 3, 4}});
  CHECK(r.max_red_cliques ==
        std::vector<std::vector<int>>{{0, 2, 4}, {1, 2, 4}, {2, 3, 4}});
  CHECK(r.max_green_cliques == std::vector<std::vector<int>>{{0, 1, 3}});
}

TEST_CASE("maximal cliques match a subset-enumeration oracle") {
  Catalog cat;
  for (const auto& names : std::vector<std::vector<std::string>>{
           {"px", "py", "pz", "x", "y", "z"},
           {"r", "pr", "lz", "H_central", "L2"},
           {"px", "py", "lx", "ly", "lz"},
           {"x", "y", "z", "lx", "ly", "lz", "L2"}}) {
    ColoredGraph g = graph_of(names, cat);
    for (EdgeColor c : {EdgeColor::red, EdgeColor::green}) {
      CAPTURE(names.size());
      CHECK(max_monochromatic_cliques(g, c) == brute_max_cliques(g, c));
    }
  }
  // and on arbitrary colorings, not just physical ones
  std::mt19937 rng(23);
  std::vector<std::string> pool = {"a", "b", "c", "d", "e", "f", "g", "h"};
  for (int t = 0; t < 40; ++t) {
    int n = 4 + static_cast<int>(rng() % 5);
    ColoredGraph g(std::vector<std::string>(pool.begin(), pool.begin() + n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        g.set_edge(i, j,
                   EdgeInfo{(rng() & 1) ? EdgeColor::red : EdgeColor::green, "computed", ""});
    for (EdgeColor c : {EdgeColor::red, EdgeColor::green})
      CHECK(max_monochromatic_cliques(g, c) == brute_max_cliques(g, c));
  }
}

TEST_CASE("triangle search agrees with clique structure on random colorings") {
  std::mt19937 rng(29);
  std::vector<std::string> pool = {"a", "b", "c", "d", "e", "f", "g"};
  for (int t = 0; t < 30; ++t) {
    int n = 3 + static_cast<int>(rng() % 5);
    ColoredGraph g(std::vector<std::string>(pool.begin(), pool.begin() + n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        g.set_edge(i, j,
                   EdgeInfo{(rng() & 1) ? EdgeColor::red : EdgeColor::green, "computed", ""});
    CliqueReport r = monochromatic_triangles(g);
    // every triangle is inside some maximal clique of its color
    for (EdgeColor c : {EdgeColor::red, EdgeColor::green}) {
      const auto& tris = c == EdgeColor::red ? r.red_triangles : r.green_triangles;
      auto cliques = max_monochromatic_cliques(g, c);
      for (const auto& tri : tris) {
        bool contained = false;
        for (const auto& cl : cliques) {
          bool all = true;
          for (int v : tri)
            all &= std::find(cl.begin(), cl.end(), v) != cl.end();
          if (all) contained = true;
        }
        CHECK(contained);
      }
      // and every clique of size >= 3 contributes triangles
      for (const auto& cl : cliques)
        if (cl.size() >= 3) {
          std::array<int, 3> probe = {cl[0], cl[1], cl[2]};
          CHECK(std::find(tris.begin(), tris.end(), probe) != tris.end());
        }
    }
  }
}

TEST_CASE("R(3,3) certificate: exhaustive K6 sweep and pentagon witness") {
  RamseyCertificate cert = verify_r33();
  CHECK(cert.k6_colorings_checked == 32768);
  CHECK(cert.k6_all_contain_mono_triangle);
  CHECK(cert.k5_witness.size() == 10);
  int red = 0;
  for (const auto& e : cert.k5_witness) red += e.color == EdgeColor::red;
  CHECK(red == 5);
  CHECK(cert.k5_witness_mono_triangles == 0);

  // Oracle: count all triangle-free 2-colorings of K5 by brute force. The
  // triangle-free colorings are exactly the labeled 5-cycles (red cycle,
  // green complement), and there are 4!/2 = 12 of them.
  auto slot = [](int i, int j) { return i * 5 - i * (i + 1) / 2 + (j - i - 1); };
  std::vector<std::array<int, 3>> triples;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int k = j + 1; k < 5; ++k) triples.push_back({slot(i, j), slot(i, k), slot(j, k)});
  uint32_t witness_mask = 0;
  for (const auto& e : cert.k5_witness)
    if (e.color == EdgeColor::red) witness_mask |= uint32_t{1} << slot(e.a, e.b);
  int triangle_free = 0;
  bool witness_seen = false;
  for (uint32_t m = 0; m < (uint32_t{1} << 10); ++m) {
    bool mono = false;
    for (const auto& t : triples) {
      unsigned a = m >> t[0] & 1, b = m >> t[1] & 1, c = m >> t[2] & 1;
      if (a == b && b == c) {
        mono = true;
        break;
      }
    }
    if (!mono) {
      ++triangle_free;
      if (m == witness_mask) witness_seen = true;
    }
  }
  CHECK(triangle_free == 12);
  CHECK(witness_seen);
}

TEST_CASE("every six observables contain a monochromatic triangle") {
  Catalog cat;
  ColoredGraph full = graph_of(Catalog::builtin_names(), cat);
  const int n = full.size();
  REQUIRE(n == 14);
  int subsets = 0;
  for (uint32_t m = 0; m < (uint32_t{1} << n); ++m) {
    if (std::popcount(m) != 6) continue;
    ++subsets;
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) v.push_back(i);
    bool mono = false;
    for (int a = 0; a < 6 && !mono; ++a)
      for (int b = a + 1; b < 6 && !mono; ++b)
        for (int c = b + 1; c < 6 && !mono; ++c) {
          EdgeColor col = full.edge(v[a], v[b]).color;
          mono = full.edge(v[a], v[c]).color == col && full.edge(v[b], v[c]).color == col;
        }
    CHECK(mono);
    if (!mono) break;
  }
  CHECK(subsets == 3003);
}

TEST_CASE("claim parsing") {
  auto claims = parse_claims(
      "# header comment\n"
      "\n"
      "claim t1 mono green lx ly lz\n"
      "claim t2 mono any px py pz x   # trailing comment\n"
      "claim t3 none\n"
      "claim t4 none red\n");
  REQUIRE(claims.size() == 4);
  CHECK(claims[0].tag == "t1");
  CHECK(claims[0].kind == ClaimKind::mono);
  CHECK(claims[0].color == EdgeColor::green);
  CHECK(claims[0].vertices == std::vector<std::string>{"lx", "ly", "lz"});
  CHECK(claims[1].kind == ClaimKind::mono);
  CHECK_FALSE(claims[1].color.has_value());
  CHECK(claims[1].vertices.size() == 4);
  CHECK(claims[2].kind == ClaimKind::none);
  CHECK_FALSE(claims[2].color.has_value());
  CHECK(claims[3].kind == ClaimKind::none);
  CHECK(claims[3].color == EdgeColor::red);

  CHECK(parse_claims("# nothing\n\n").empty());
  CHECK_THROWS_AS(parse_claims("assert t mono red a b c"), std::invalid_argument);
  CHECK_THROWS_AS(parse_claims("claim t mono red a b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_claims("claim t mono blue a b c"), std::invalid_argument);
  CHECK_THROWS_AS(parse_claims("claim t triangle a b c"), std::invalid_argument);
  CHECK_THROWS_AS(parse_claims("claim t none purple"), std::invalid_argument);
  CHECK_THROWS_AS(parse_claims("claim t none red extra"), std::invalid_argument);
  CHECK_THROWS_AS(parse_claims("claim t mono red"), std::invalid_argument);
  bool threw = false;
  try {
    parse_claims("claim ok none\nclaim bad mono red a b\n");
  } catch (const std::invalid_argument& e) {
    threw = true;
    CHECK(std::string(e.what()).find("claims line 2") != std::string::npos);
  }
  CHECK(threw);
}

TEST_CASE("auditing produces one verdict per claim with evidence") {
  Catalog cat;
  ColoredGraph g = graph_of({"lx", "ly", "lz", "px"}, cat);
  auto claims = parse_claims(
      "claim good mono green lx ly lz\n"
      "claim anycolor mono any lx ly lz\n"
      "claim wrongcolor mono red lx ly lz\n"
      "claim notmono mono any lx ly px\n"
      "claim ghost mono green lx ly qq\n"
      "claim big mono any lx ly lz px\n"
      "claim nothing none\n"
      "claim nored none red\n");
  DiscrepancyReport rep = audit(g, claims);
  REQUIRE(rep.entries.size() == claims.size());

  CHECK(rep.entries[0].verdict == "confirmed");
  CHECK(rep.entries[0].tag == "good");
  CHECK(rep.entries[0].claimed == "triangle (lx, ly, lz) is monochromatic green");
  CHECK(rep.entries[0].derived.find("(lx,ly)=green") != std::string::npos);

  CHECK(rep.entries[1].verdict == "confirmed");
  CHECK(rep.entries[1].claimed == "triangle (lx, ly, lz) is monochromatic");

  CHECK(rep.entries[2].verdict == "refuted");
  CHECK(rep.entries[2].derived.find("green") != std::string::npos);

  CHECK(rep.entries[3].verdict == "refuted");
  // [lx, px] = 0: the evidence must show the red edge that breaks the triangle
  CHECK(rep.entries[3].derived.find("(lx,px)=red") != std::string::npos);

  CHECK(rep.entries[4].verdict == "unverifiable");
  CHECK(rep.entries[4].derived.find("'qq' is not in the graph") != std::string::npos);

  CHECK(rep.entries[5].verdict == "unverifiable");
  CHECK(rep.entries[5].derived.find("4-vertex set") != std::string::npos);
  CHECK(rep.entries[5].derived.find("not a monochromatic clique") != std::string::npos);

  CHECK(rep.entries[6].verdict == "refuted");  // the lx-ly-lz green triangle exists
  CHECK(rep.entries[6].claimed == "graph contains no monochromatic triangle");
  CHECK(rep.entries[6].derived.find("(lx, ly, lz)") != std::string::npos);

  CHECK(rep.entries[7].verdict == "confirmed");  // but no red one
  CHECK(rep.entries[7].claimed == "graph contains no monochromatic red triangle");
}

TEST_CASE("a genuine monochromatic 4-clique is still reported as ambiguous") {
  Catalog cat;
  cat.register_clone("x_b", cat.resolve("x"), "b");
  cat.register_clone("y_b", cat.resolve("y"), "b");
  ColoredGraph g = graph_of({"x", "y", "x_b", "y_b"}, cat);
  auto rep = audit(g, parse_claims("claim quad mono red x y x_b y_b\n"));
  REQUIRE(rep.entries.size() == 1);
  CHECK(rep.entries[0].verdict == "unverifiable");
  CHECK(rep.entries[0].derived.find("it is a monochromatic clique") != std::string::npos);
}

TEST_CASE("DOT export is exact and deterministic") {
  Catalog cat;
  ColoredGraph g = graph_of({"x", "y"}, cat);
  std::string dot = export_dot(g, clique_report(g));
  CHECK(dot ==
        "graph \"ramsey\" {\n"
        "  // red triangles: 0\n"
        "  // green triangles: 0\n"
        "  node [shape=circle];\n"
        "  \"x\";\n"
        "  \"y\";\n"
        "  \"x\" -- \"y\" [color=red];\n"
        "}\n");

  ColoredGraph ang = graph_of({"lx", "ly", "lz"}, cat);
  std::string d1 = export_dot(ang, clique_report(ang), "fig1b");
  std::string d2 = export_dot(ang, clique_report(ang), "fig1b");
  CHECK(d1 == d2);
  CHECK(d1.find("graph \"fig1b\" {") != std::string::npos);
  CHECK(d1.find("// green triangles: 1") != std::string::npos);
  CHECK(d1.find("\"lx\" -- \"ly\" [color=green];") != std::string::npos);
  CHECK(d1.find("\"lx\" -- \"lz\" [color=green];") != std::string::npos);
  CHECK(d1.find("\"ly\" -- \"lz\" [color=green];") != std::string::npos);
  CHECK(d1.find("color=red") == std::string::npos);
}
