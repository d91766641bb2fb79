#include "spherelink/minor.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "spherelink/canonical.hpp"

namespace spherelink {

std::string to_string(MinorKind kind) {
  switch (kind) {
    case MinorKind::delete_edge: return "delete-edge";
    case MinorKind::contract_edge: return "contract-edge";
    case MinorKind::delete_vertex: return "delete-vertex";
  }
  return "?";
}

MinorKind minor_kind_from_string(const std::string& s) {
  if (s == "delete-edge") return MinorKind::delete_edge;
  if (s == "contract-edge") return MinorKind::contract_edge;
  if (s == "delete-vertex") return MinorKind::delete_vertex;
  throw GraphError("unknown minor step kind '" + s + "'");
}

std::string to_string(const MinorStep& step) {
  if (step.kind == MinorKind::delete_vertex) return "delete-vertex " + std::to_string(step.vertex);
  return to_string(step.kind) + " " + std::to_string(step.edge.u) + " " + std::to_string(step.edge.v);
}

Graph delete_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e)) {
    throw GraphError("cannot delete missing edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  }
  std::vector<Edge> es;
  for (const Edge& f : g.edges())
    if (f != e) es.push_back(f);
  return Graph(g.vertex_count(), std::move(es));
}

Graph contract_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e)) {
    throw GraphError("cannot contract missing edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  }
  auto relabel = [&](Vertex x) {
    if (x == e.v) x = e.u;
    return x > e.v ? x - 1 : x;
  };
  std::set<Edge> es;
  for (const Edge& f : g.edges()) {
    Vertex a = relabel(f.u), b = relabel(f.v);
    if (a != b) es.emplace(a, b);
  }
  return Graph(g.vertex_count() - 1, {es.begin(), es.end()});
}

Graph delete_vertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw GraphError("cannot delete missing vertex " + std::to_string(v));
  std::vector<Edge> es;
  for (const Edge& f : g.edges()) {
    if (f.u == v || f.v == v) continue;
    es.emplace_back(f.u > v ? f.u - 1 : f.u, f.v > v ? f.v - 1 : f.v);
  }
  return Graph(g.vertex_count() - 1, std::move(es));
}

Graph apply_minor_step(const Graph& g, const MinorStep& step) {
  switch (step.kind) {
    case MinorKind::delete_edge: return delete_edge(g, step.edge);
    case MinorKind::contract_edge: return contract_edge(g, step.edge);
    case MinorKind::delete_vertex: return delete_vertex(g, step.vertex);
  }
  throw GraphError("bad minor step");
}

Graph apply_minor_steps(const Graph& g, const std::vector<MinorStep>& steps) {
  Graph cur = g;
  for (const MinorStep& s : steps) cur = apply_minor_step(cur, s);
  return cur;
}

Vertex vertex_after_step(const Graph& g, const MinorStep& step, Vertex v) {
  if (!g.has_vertex(v)) return -1;
  switch (step.kind) {
    case MinorKind::delete_edge: return v;
    case MinorKind::contract_edge:
      if (v == step.edge.v) v = step.edge.u;
      return v > step.edge.v ? v - 1 : v;
    case MinorKind::delete_vertex:
      if (v == step.vertex) return -1;
      return v > step.vertex ? v - 1 : v;
  }
  return -1;
}

namespace {

std::vector<MinorStep> all_steps(const Graph& g) {
  std::vector<MinorStep> steps;
  for (const Edge& e : g.edges()) steps.push_back(MinorStep::delete_edge(e));
  for (const Edge& e : g.edges()) steps.push_back(MinorStep::contract_edge(e));
  for (Vertex v = 0; v < g.vertex_count(); ++v) steps.push_back(MinorStep::delete_vertex(v));
  return steps;
}

}  // namespace

std::vector<MinorClass> immediate_minors(const Graph& g) {
  std::vector<MinorClass> out;
  std::unordered_set<std::string> seen;
  for (const MinorStep& step : all_steps(g)) {
    Graph m = apply_minor_step(g, step);
    if (seen.insert(canonical_form(m)).second) out.push_back({std::move(m), step});
  }
  return out;
}

std::vector<MinorPath> minors_to_depth(const Graph& g, int depth) {
  std::vector<MinorPath> out;
  std::unordered_set<std::string> seen{canonical_form(g)};
  std::vector<MinorPath> frontier{{g, {}}};
  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<MinorPath> next;
    for (const MinorPath& p : frontier) {
      for (const MinorStep& step : all_steps(p.minor)) {
        Graph m = apply_minor_step(p.minor, step);
        if (!seen.insert(canonical_form(m)).second) continue;
        MinorPath child{std::move(m), p.steps};
        child.steps.push_back(step);
        next.push_back(child);
        out.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

namespace {

class MinorFinder {
 public:
  MinorFinder(const Graph& h) : target_(canonical_form(h)), nh_(h.vertex_count()), mh_(h.edge_count()) {}

  bool search(const Graph& g) {
    if (g.vertex_count() < nh_ || g.edge_count() < mh_) return false;
    if (g.vertex_count() == nh_ && g.edge_count() == mh_) return canonical_form(g) == target_;
    if (!visited_.insert(canonical_form(g)).second) return false;
    std::vector<MinorStep> steps;
    if (g.vertex_count() > nh_) {
      for (Vertex v = 0; v < g.vertex_count(); ++v) steps.push_back(MinorStep::delete_vertex(v));
      for (const Edge& e : g.edges()) steps.push_back(MinorStep::contract_edge(e));
    }
    if (g.edge_count() > mh_) {
      for (const Edge& e : g.edges()) steps.push_back(MinorStep::delete_edge(e));
    }
    for (const MinorStep& step : steps) {
      path_.push_back(step);
      if (search(apply_minor_step(g, step))) return true;
      path_.pop_back();
    }
    return false;
  }

  std::vector<MinorStep> path_;

 private:
  std::string target_;
  int nh_;
  int mh_;
  std::unordered_set<std::string> visited_;
};

}  // namespace

std::optional<std::vector<MinorStep>> find_minor(const Graph& g, const Graph& h) {
  MinorFinder finder(h);
  if (finder.search(g)) return finder.path_;
  return std::nullopt;
}

bool has_minor(const Graph& g, const Graph& h) { return find_minor(g, h).has_value(); }

}  // namespace spherelink
