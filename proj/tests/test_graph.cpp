#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

#include "spherelink/canonical.hpp"
#include "spherelink/graph.hpp"
#include "spherelink/minor.hpp"

using namespace spherelink;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) es.emplace_back(i, j);
  return Graph(n, es);
}

Graph shuffled(const Graph& g, std::mt19937& rng) {
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabeled(perm);
}

Graph star(int leaves) {
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return Graph(leaves + 1, es);
}

// Every graph on n vertices, as edge masks over the upper triangle.
std::vector<Graph> all_graphs(int n) {
  std::vector<Edge> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<Edge> es;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1) es.push_back(slots[k]);
    out.emplace_back(n, es);
  }
  return out;
}

// Isomorphism classes of all minors, by breadth-first closure of single steps.
std::unordered_set<std::string> minor_closure(const Graph& g) {
  std::unordered_set<std::string> seen{canonical_form(g)};
  std::vector<Graph> frontier{g};
  while (!frontier.empty()) {
    std::vector<Graph> next;
    for (const Graph& x : frontier) {
      std::vector<MinorStep> steps;
      for (const Edge& e : x.edges()) {
        steps.push_back(MinorStep::delete_edge(e));
        steps.push_back(MinorStep::contract_edge(e));
      }
      for (Vertex v = 0; v < x.vertex_count(); ++v) steps.push_back(MinorStep::delete_vertex(v));
      for (const auto& s : steps) {
        Graph m = apply_minor_step(x, s);
        if (seen.insert(canonical_form(m)).second) next.push_back(m);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("constructors") {
  CHECK(complete(4).edge_count() == 6);
  CHECK(complete(1).vertex_count() == 1);
  CHECK(complete(1).edge_count() == 0);
  CHECK(complete(5).edge_count() == 10);
  const int p32[] = {3, 2}, p311[] = {3, 1, 1}, p42[] = {4, 2};
  CHECK(complete_multipartite(p32).edge_count() == 6);
  CHECK(complete_multipartite(p311).edge_count() == 7);
  CHECK(complete_multipartite(p42).vertex_count() == 6);
  CHECK(complete_multipartite(p42).edge_count() == 8);

  const Graph kk = disjoint_union(complete(4), complete(4));
  CHECK(kk.vertex_count() == 8);
  CHECK(kk.edge_count() == 12);
  const Graph k4k1 = disjoint_union(complete(4), complete(1));
  CHECK(k4k1.vertex_count() == 5);
  CHECK(k4k1.isolated_count() == 1);
  CHECK(disjoint_union(Graph(0), Graph(0)).vertex_count() == 0);
}

TEST_CASE("subdivide and pendants") {
  const Graph k4 = complete(4);
  auto one = subdivide(k4, Edge(0, 1), 1);
  CHECK(one.graph.vertex_count() == 5);
  CHECK(one.graph.edge_count() == 7);
  auto two = subdivide(k4, Edge(0, 1), 2);
  CHECK(two.graph.vertex_count() == 6);
  CHECK(two.graph.edge_count() == 8);
  REQUIRE(two.new_vertices.size() == 2);
  CHECK(two.graph.has_edge(0, two.new_vertices[0]));
  CHECK(two.graph.has_edge(two.new_vertices[0], two.new_vertices[1]));
  CHECK(two.graph.has_edge(two.new_vertices[1], 1));
  CHECK_FALSE(two.graph.has_edge(0, 1));
  CHECK(is_isomorphic(subdivide(complete(3), Edge(0, 1), 1).graph, cycle_graph(4)));
  CHECK_THROWS_AS(subdivide(path_graph(3), Edge(0, 2), 1), GraphError);

  Graph d2 = k4;
  for (Vertex v = 0; v < 4; ++v) d2 = attach_pendant(d2, v);
  CHECK(d2.vertex_count() == 8);
  CHECK(d2.edge_count() == 10);
  CHECK(is_isomorphic(attach_pendant(complete(1), 0), complete(2)));
  CHECK(attach_pendant(complete(3), 0).edge_count() == 4);
  CHECK_THROWS_AS(attach_pendant(complete(3), 3), GraphError);
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(Graph(3, {Edge(0, 0)}), GraphError);
  CHECK_THROWS_AS(Graph(3, {Edge(0, 1), Edge(1, 0)}), GraphError);
  CHECK_THROWS_AS(Graph(3, {Edge(0, 3)}), GraphError);
  CHECK_THROWS_AS(Graph(65), GraphError);
}

TEST_CASE("minor steps") {
  const Graph k4 = complete(4);
  for (const Edge& e : k4.edges()) CHECK(is_isomorphic(contract_edge(k4, e), complete(3)));
  const Graph k2 = complete(2);
  const Graph two = delete_edge(k2, Edge(0, 1));
  CHECK(two.vertex_count() == 2);
  CHECK(two.edge_count() == 0);
  CHECK(delete_vertex(disjoint_union(k4, complete(1)), 4) == k4);
  CHECK_THROWS_AS(delete_edge(path_graph(3), Edge(0, 2)), GraphError);
  CHECK_THROWS_AS(delete_vertex(k4, 4), GraphError);

  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    Graph g = random_graph(rng, 7, 0.5);
    for (const Edge& e : g.edges()) CHECK(contract_edge(g, e).vertex_count() == g.vertex_count() - 1);
  }
}

TEST_CASE("vertex tracking through steps") {
  const Graph g = path_graph(5);
  const auto step = MinorStep::contract_edge(Edge(1, 2));
  CHECK(vertex_after_step(g, step, 2) == 1);
  CHECK(vertex_after_step(g, step, 4) == 3);
  CHECK(vertex_after_step(g, MinorStep::delete_vertex(0), 0) == -1);
  CHECK(vertex_after_step(g, MinorStep::delete_vertex(0), 3) == 2);
}

TEST_CASE("immediate minors") {
  const auto k4 = immediate_minors(complete(4));
  REQUIRE(k4.size() == 2);
  std::set<std::string> forms;
  for (const auto& m : k4) forms.insert(canonical_form(m.minor));
  CHECK(forms.count(canonical_form(delete_edge(complete(4), Edge(0, 1)))) == 1);
  CHECK(forms.count(canonical_form(complete(3))) == 1);

  const auto k1 = immediate_minors(complete(1));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0].minor.vertex_count() == 0);

  const auto kk = immediate_minors(disjoint_union(complete(4), complete(4)));
  int k3k4 = 0;
  for (const auto& m : kk)
    if (is_isomorphic(m.minor, disjoint_union(complete(3), complete(4)))) ++k3k4;
  CHECK(k3k4 == 1);
  CHECK(kk.size() == 2);
}

TEST_CASE("isomorphism") {
  std::mt19937 rng(11);
  CHECK(is_isomorphic(complete(4), shuffled(complete(4), rng)));
  const int p32[] = {3, 2};
  CHECK_FALSE(is_isomorphic(complete_multipartite(p32), delete_edge(complete(4), Edge(0, 1))));
  CHECK_FALSE(is_isomorphic(path_graph(4), star(3)));
  CHECK(canonical_form(Graph(0)) == canonical_form(Graph(0)));

  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 9;
    Graph g = random_graph(rng, n, 0.45);
    Graph h = shuffled(g, rng);
    CHECK(canonical_form(g) == canonical_form(h));
    const Graph c = canonical_graph(g);
    CHECK(canonical_graph(h) == c);
  }
}

TEST_CASE("canonical form separates all graphs on 6 vertices") {
  // 156 isomorphism classes of graphs on 6 vertices
  std::set<std::string> forms;
  for (const Graph& g : all_graphs(6)) forms.insert(canonical_form(g));
  CHECK(forms.size() == 156);
  std::set<std::string> five;
  for (const Graph& g : all_graphs(5)) five.insert(canonical_form(g));
  CHECK(five.size() == 34);
}

TEST_CASE("has_minor examples") {
  CHECK(has_minor(complete(5), complete(4)));
  const int p33[] = {3, 3}, p311[] = {3, 1, 1}, p32[] = {3, 2};
  CHECK_FALSE(has_minor(complete_multipartite(p33), complete(5)));
  const auto path = find_minor(complete_multipartite(p311), complete_multipartite(p32));
  REQUIRE(path.has_value());
  CHECK(is_isomorphic(apply_minor_steps(complete_multipartite(p311), *path), complete_multipartite(p32)));
  CHECK(has_minor(complete(3), Graph(0)));
}

TEST_CASE("has_minor agrees with breadth-first closure") {
  std::vector<Graph> reps;
  std::set<std::string> seen;
  for (int n = 0; n <= 5; ++n)
    for (const Graph& g : all_graphs(n))
      if (seen.insert(canonical_form(g)).second) reps.push_back(g);
  std::mt19937 rng(3);
  std::vector<Graph> hosts = reps;
  for (int t = 0; t < 12; ++t) hosts.push_back(random_graph(rng, 6, 0.5));
  std::vector<Graph> targets;
  for (const Graph& h : reps)
    if (h.vertex_count() <= 4) targets.push_back(h);
  for (std::size_t i = 0; i < hosts.size(); i += 3) {
    const auto closure = minor_closure(hosts[i]);
    for (const Graph& h : targets) {
      const bool expected = closure.count(canonical_form(h)) > 0;
      auto path = find_minor(hosts[i], h);
      CHECK(path.has_value() == expected);
      if (path) CHECK(is_isomorphic(apply_minor_steps(hosts[i], *path), h));
    }
  }
}

TEST_CASE("has_minor is transitive on samples") {
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    Graph g = random_graph(rng, 6, 0.6);
    Graph h = random_graph(rng, 5, 0.5);
    Graph k = random_graph(rng, 4, 0.5);
    if (has_minor(g, h) && has_minor(h, k)) CHECK(has_minor(g, k));
  }
}
