#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "spherelink/canonical.hpp"
#include "spherelink/catalog.hpp"
#include "spherelink/dart_map.hpp"
#include "spherelink/io.hpp"
#include "spherelink/minor.hpp"
#include "spherelink/render.hpp"
#include "spherelink/search.hpp"

using namespace spherelink;

namespace {

Graph k(std::initializer_list<int> parts) {
  std::vector<int> p(parts);
  return complete_multipartite(p);
}

int count_of(const std::string& s, const std::string& needle) {
  int n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("builtin graphs") {
  const Graph d2 = builtin("D2");
  CHECK(d2.vertex_count() == 8);
  CHECK(d2.edge_count() == 10);
  int leaves = 0;
  for (Vertex v = 0; v < 8; ++v) leaves += d2.degree(v) == 1;
  CHECK(leaves == 4);

  const Graph d3 = builtin("D3");
  CHECK(d3.vertex_count() == 7);
  CHECK(d3.edge_count() == 10);

  CHECK(is_isomorphic(builtin("D6"), with_isolated(k({4, 2}), 2)));
  CHECK(is_isomorphic(builtin("D9a"), with_isolated(delete_edge(complete(5), Edge(0, 1)), 3)));
  const Graph d10 = builtin("D10a");
  CHECK(d10.vertex_count() == 12);
  CHECK(d10.edge_count() == 9);
  CHECK(is_isomorphic(builtin("D9b"), disjoint_union(delete_edge(complete(5), Edge(0, 1)), complete(2))));
  CHECK(builtin("D3p").vertex_count() == 7);

  CHECK_THROWS_AS(builtin("D1"), PendingDefinitionError);
  CHECK_THROWS_AS(builtin("D99"), UnknownEntryError);
}

TEST_CASE("catalog invariants") {
  const Catalog& c = Catalog::builtin();
  for (const auto& name : c.names()) {
    const CatalogEntry& e = c.entry(name);
    CHECK((e.provenance == "paper" || e.provenance == "derived" || e.provenance == "pending-figure"));
    if (e.pending()) {
      CHECK_FALSE(e.graph.has_value());
      CHECK_FALSE(e.notes.empty());
    } else {
      REQUIRE(e.graph.has_value());
      CHECK(build_recipe(e.recipe) == *e.graph);
      CHECK(is_planar(*e.graph));
    }
  }
  CHECK_THROWS_AS(Catalog::from_json(R"({"entries":[{"name":"x","provenance":"paper","recipe":[{"op":"complete","n":3}],
                                         "graph":{"n":3,"edges":[[0,1]]}}]})"),
                  CatalogError);
  CHECK_THROWS_AS(Catalog::from_json(R"({"entries":[{"name":"x","provenance":"guess"}]})"), CatalogError);
  CHECK_THROWS_AS(build_recipe(R"([{"op":"teleport"}])"), CatalogError);
}

TEST_CASE("claim manifest") {
  const Catalog& c = Catalog::builtin();
  const ClaimManifest m = ClaimManifest::builtin();
  CHECK_NOTHROW(m.validate(c));
  std::set<std::string> counted;
  for (const Claim& cl : m.claims)
    if (cl.kind == ClaimKind::embedding_count) counted.insert(cl.name);
  for (const char* name : {"K4uK4", "K32uK32", "D2", "D6", "D8a", "D9a", "D10a", "D11a", "D13"})
    CHECK(counted.count(name) == 1);

  ClaimManifest bad;
  bad.claims.push_back({"nope", ClaimKind::embedding_count, "anchor"});
  CHECK_THROWS_AS(bad.validate(c), CatalogError);
  ClaimManifest unanchored;
  unanchored.claims.push_back({"D6", ClaimKind::embedding_count, ""});
  CHECK_THROWS_AS(unanchored.validate(c), CatalogError);
}

TEST_CASE("verify a small manifest") {
  const ClaimManifest m = ClaimManifest::from_json(R"({"claims":[
    {"name":"K4uK4","kind":"embedding-count","expected":1,"anchor":"a"},
    {"name":"D6","kind":"embedding-count","expected":3,"anchor":"a"},
    {"name":"K4uK4","kind":"minor-minimal","property":"type1","expected":true,"anchor":"a"},
    {"name":"D1","kind":"embedding-count","expected":1,"anchor":"a"},
    {"name":"D6","kind":"embedding-count","expected":4,"anchor":"a"}]})");
  VerifyOptions o;
  o.jobs = 2;
  const ClaimReport r = verify_claims(m, Catalog::builtin(), o);
  REQUIRE(r.results.size() == 5);
  CHECK(r.results[0].status == ClaimStatus::pass);
  CHECK(r.results[1].status == ClaimStatus::pass);
  CHECK(r.results[2].status == ClaimStatus::pass);
  CHECK(r.results[3].status == ClaimStatus::skipped);
  CHECK(r.results[4].status == ClaimStatus::fail);
  CHECK(r.results[4].computed == "3");
  CHECK_FALSE(r.ok());
  CHECK(r.text().find("reflection=on") != std::string::npos);
}

TEST_CASE("catalog directory override") {
  const std::string dir = (std::filesystem::temp_directory_path() / "spherelink_catalog_test").string();
  std::filesystem::create_directories(dir);
  std::ofstream(dir + "/catalog.json") << R"({"entries":[{"name":"T","provenance":"derived","recipe":[{"op":"cycle","n":5}]}]})";
  const Catalog c = Catalog::load_dir(dir);
  CHECK(c.names() == std::vector<std::string>{"T"});
  CHECK(c.graph("T") == cycle_graph(5));
  std::filesystem::remove_all(dir);
}

TEST_CASE("graph text format") {
  CHECK(load_graph("n 2\ne 0 1\n") == complete(2));
  CHECK(load_graph("# three points\nn 3\n") == Graph(3));
  CHECK_THROWS_AS(load_graph("n 2\ne 0 1\ne 0 1\n"), ParseError);
  try {
    load_graph("n 2\ne 0 1\ne 0 1\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(load_graph("n 2\ne 0 2\n"), ParseError);
  CHECK_THROWS_AS(load_graph("n 2\ne 1 0\n"), ParseError);
  CHECK_THROWS_AS(load_graph("e 0 1\n"), ParseError);
  CHECK_THROWS_AS(load_graph(""), ParseError);
  CHECK_THROWS_AS(load_graph("n 3\nx 1 2\n"), ParseError);
  CHECK(load_graph("C~") == complete(4));

  for (const std::string& name : Catalog::builtin().names()) {
    if (Catalog::builtin().entry(name).pending()) continue;
    const Graph g = builtin(name);
    CHECK(load_graph(save_graph(g)) == g);
    CHECK(graph6_decode(graph6_encode(g)) == g);
  }
}

TEST_CASE("graph6") {
  CHECK(graph6_encode(complete(4)) == "C~");
  CHECK(graph6_encode(Graph(0)) == "?");
  CHECK(graph6_encode(path_graph(3)) == "Bg");
  CHECK(graph6_decode(">>graph6<<C~") == complete(4));
  CHECK_THROWS_AS(graph6_decode("C~~"), GraphError);
  const auto many = load_graph6_lines(">>graph6<<\nC~\n\nBg\n");
  REQUIRE(many.size() == 2);
  CHECK(many[1] == path_graph(3));
  std::mt19937 rng(9);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + static_cast<int>(rng() % 14);
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) es.emplace_back(i, j);
    const Graph g(n, es);
    CHECK(graph6_decode(graph6_encode(g)) == g);
  }
}

TEST_CASE("arrangement json round trip") {
  for (const auto& a : spherical_arrangements(builtin("D6"))) {
    const auto b = arrangement_from_json(a.graph(), arrangement_to_json(a));
    CHECK(certificate(a) == certificate(b));
  }
}

TEST_CASE("certificates replay") {
  const Graph kk = builtin("K4uK4");
  const auto m = is_minor_minimal(kk, LinkShape::type1);
  const std::string doc = minimality_certificate(kk, LinkShape::type1, m, {});
  const auto rep = replay_certificate(doc);
  CHECK(rep.ok);
  CHECK(rep.checked == 1 + static_cast<int>(immediate_minors(kk).size()));

  const Graph d6 = builtin("D6");
  const auto v = is_intrinsically_linked(d6, LinkShape::type2);
  CHECK(replay_certificate(intrinsic_certificate(d6, v, {})).ok);

  const Graph free = builtin("K4uK4-e");
  const auto f = is_intrinsically_linked(free, LinkShape::type1);
  CHECK(replay_certificate(intrinsic_certificate(free, f, {})).ok);

  // a forged verdict: claim the link-free arrangement of K4uK4-e is linked
  std::string forged = intrinsic_certificate(free, f, {});
  auto pos = forged.find("\"verdict\": false");
  REQUIRE(pos != std::string::npos);
  forged.replace(pos, 16, "\"verdict\": true");
  CHECK_FALSE(replay_certificate(forged).ok);

  // a refutation whose steps no longer reproduce its minor
  std::string tampered = doc;
  const auto del = tampered.find("\"delete-edge\"", tampered.find("\"refutations\""));
  REQUIRE(del != std::string::npos);
  tampered.replace(del, 13, "\"contract-edge\"");
  CHECK_FALSE(replay_certificate(tampered).ok);
  CHECK_FALSE(replay_certificate("not json").ok);
}

TEST_CASE("move reports serialise") {
  const auto r = check_sub_dangle({builtin("D3"), Edge(2, 3), 5, 6});
  const std::string j = move_report_json(r);
  CHECK(count_of(j, "\"id\"") == 5);
  CHECK(j.find("\"all_passed\": true") != std::string::npos);
}

TEST_CASE("barycentric subdivision") {
  for (const Graph& g : {complete(4), complete(2), path_graph(4), builtin("D3"), k({3, 2})}) {
    const auto base = map_from_rotation(*find_spherical_rotation(g), g.components().front());
    CHECK(base.map.euler_characteristic() == 2);
    const DartMap once = barycentric_subdivision(base.map);
    CHECK(once.euler_characteristic() == 2);
    CHECK(once.vertex_count == g.vertex_count() + g.edge_count() + static_cast<int>(base.map.faces().size()));
    CHECK(once.faces().size() == 4 * static_cast<std::size_t>(g.edge_count()));
    const DartMap twice = barycentric_subdivision(once);
    CHECK(twice.euler_characteristic() == 2);
    // the second subdivision is simple
    for (int v = 0; v < twice.vertex_count; ++v) {
      std::set<int> heads;
      for (int d : twice.rot[v]) heads.insert(twice.head[d]);
      CHECK(heads.size() == twice.rot[v].size());
    }
  }
}

TEST_CASE("drawings are planar") {
  const Graph tri = complete(3);
  const auto svg = render_svg(spherical_arrangements(tri).front());
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count_of(svg, "<polyline") == 3);
  CHECK(count_of(svg, "<circle") == 3);
  CHECK(svg.find("</svg>") != std::string::npos);

  const Drawing k4 = layout(spherical_arrangements(complete(4)).front());
  CHECK_FALSE(has_crossings(k4));

  for (const std::string& name : Catalog::builtin().names()) {
    if (Catalog::builtin().entry(name).pending()) continue;
    for (const auto& a : spherical_arrangements(builtin(name))) {
      const Drawing d = layout(a);
      CHECK_FALSE(has_crossings(d));
      std::set<std::pair<double, double>> spots;
      for (const Point& p : d.vertices) spots.insert({p.x, p.y});
      CHECK(spots.size() == d.vertices.size());
    }
  }
  for (int n = 3; n <= 6; ++n)
    for (const Graph& g : planar_graphs(n))
      for (const auto& a : spherical_arrangements(g)) CHECK_FALSE(has_crossings(layout(a)));

  Drawing crossed;
  crossed.vertices = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
  crossed.edge_paths = {{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}};
  CHECK(has_crossings(crossed));
}

TEST_CASE("nested drawing of K4 and K4") {
  const auto a = spherical_arrangements(builtin("K4uK4")).front();
  const Drawing d = layout(a);
  const auto pl = a.placements().front();
  // the host face boundary, traced along the drawn edge paths
  std::vector<Point> boundary;
  std::set<Vertex> on_face;
  for (int lid : a.parts()[pl.parent_part].faces) {
    if (a.local_faces()[lid].global != pl.host_global) continue;
    for (const Dart& dt : a.local_faces()[lid].face.walk) {
      on_face.insert(dt.from);
      auto path = d.edge_paths[a.graph().edge_index(Edge(dt.from, dt.to))];
      if (dt.from > dt.to) std::reverse(path.begin(), path.end());
      boundary.insert(boundary.end(), path.begin(), path.end() - 1);
    }
  }
  REQUIRE(boundary.size() >= 3);
  auto inside = [&](Point p) {
    bool in = false;
    for (std::size_t i = 0, j = boundary.size() - 1; i < boundary.size(); j = i++) {
      const Point s = boundary[i], t = boundary[j];
      if ((s.y > p.y) != (t.y > p.y) && p.x < (t.x - s.x) * (p.y - s.y) / (t.y - s.y) + s.x) in = !in;
    }
    return in;
  };
  for (Vertex v : a.parts()[pl.part].vertices) CHECK(inside(d.vertices[v]));
  for (Vertex v : a.parts()[pl.parent_part].vertices)
    if (!on_face.count(v)) CHECK_FALSE(inside(d.vertices[v]));
  CHECK(render_svg(a) == render_svg(a));
}

TEST_CASE("search resumes from a checkpoint") {
  const std::string path = (std::filesystem::temp_directory_path() / "spherelink_checkpoint_test.jsonl").string();
  std::filesystem::remove(path);
  SearchOptions o;
  o.property = LinkShape::two_link;
  o.max_vertices = 5;
  o.checkpoint_path = path;
  const SearchResult first = search_minor_minimal(o);
  CHECK(first.evaluated > 0);
  const SearchResult second = search_minor_minimal(o);
  CHECK(second.evaluated == 0);
  REQUIRE(second.hits.size() == first.hits.size());
  for (std::size_t i = 0; i < first.hits.size(); ++i) CHECK(first.hits[i].graph == second.hits[i].graph);
  CHECK(first.hits.size() == 2);

  std::ofstream(path, std::ios::app) << "garbage line\n";
  o.intrinsic.reflection = false;
  const SearchResult other = search_minor_minimal(o);
  CHECK(other.evaluated > 0);
  CHECK(other.hits.size() == first.hits.size());
  std::filesystem::remove(path);
}

TEST_CASE("arrangement text") {
  const auto a = spherical_arrangements(builtin("K4uK1")).front();
  const std::string t = arrangement_to_text(a);
  CHECK(count_of(t, "rot ") == 5);
  CHECK(count_of(t, "place ") == 1);
  CHECK(count_of(t, "\nface ") == 4);
  CHECK(t.find("rot 4:\n") != std::string::npos);
  CHECK(t.find("0>") != std::string::npos);
}

TEST_CASE("move certificates replay") {
  const auto good = check_sub_dangle({builtin("D3"), Edge(2, 3), 5, 6});
  const auto rep = replay_certificate(move_report_json(good));
  CHECK(rep.ok);
  CHECK(rep.checked >= 2);

  // K4 with three isolated vertices fails hypothesis iii, and the failing face is a witness
  const auto bad = check_vert_bar({complete(4), 3});
  CHECK_FALSE(bad.all_passed());
  CHECK(replay_certificate(move_report_json(bad)).ok);
}
