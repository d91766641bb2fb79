#include "spherelink/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace spherelink {

Graph::Graph(int vertex_count) : Graph(vertex_count, {}) {}

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw GraphError("negative vertex count");
  if (n_ > max_vertices) throw GraphError("graph exceeds " + std::to_string(max_vertices) + " vertices");
  adj_.assign(n_, {});
  mask_.assign(n_, 0);
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n_) {
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw GraphError("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
  }
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    mask_[e.u] |= std::uint64_t{1} << e.v;
    mask_[e.v] |= std::uint64_t{1} << e.u;
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  return (mask_[u] >> v) & 1U;
}

int Graph::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_) throw GraphError("label count mismatch");
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(n_, 0);
  for (Vertex s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : adj_[comp[i]]) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const { return components().size() <= 1; }

int Graph::isolated_count() const {
  return static_cast<int>(std::count_if(adj_.begin(), adj_.end(), [](const auto& a) { return a.empty(); }));
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> index(n_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  for (const Edge& e : edges_) {
    if (index[e.u] >= 0 && index[e.v] >= 0) es.emplace_back(index[e.u], index[e.v]);
  }
  Graph g(static_cast<int>(keep.size()), std::move(es));
  if (!labels_.empty()) {
    std::vector<std::string> ls;
    for (Vertex v : keep) ls.push_back(labels_[v]);
    g.labels_ = std::move(ls);
  }
  return g;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw GraphError("permutation size mismatch");
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (const Edge& e : edges_) es.emplace_back(perm[e.u], perm[e.v]);
  Graph g(n_, std::move(es));
  if (!labels_.empty()) {
    std::vector<std::string> ls(n_);
    for (Vertex v = 0; v < n_; ++v) ls[perm[v]] = labels_[v];
    g.labels_ = std::move(ls);
  }
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete(int n) {
  if (n < 1) throw GraphError("complete graph needs n >= 1");
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, std::move(es));
}

Graph complete_multipartite(std::span<const int> parts) {
  if (parts.empty()) throw GraphError("complete multipartite graph needs at least one part");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] < 1) throw GraphError("parts must be positive");
    part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (part_of[i] != part_of[j]) es.emplace_back(i, j);
  return Graph(n, std::move(es));
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs n >= 3");
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(es));
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, std::move(es));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int off = g.vertex_count();
  std::vector<Edge> es = g.edges();
  for (const Edge& e : h.edges()) es.emplace_back(e.u + off, e.v + off);
  return Graph(off + h.vertex_count(), std::move(es));
}

Graph with_isolated(const Graph& g, int count) {
  if (count < 0) throw GraphError("negative isolated vertex count");
  return Graph(g.vertex_count() + count, g.edges());
}

Subdivision subdivide(const Graph& g, Edge e, int k) {
  if (!g.has_edge(e)) {
    throw GraphError("cannot subdivide missing edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  }
  if (k < 1) throw GraphError("subdivision count must be positive");
  std::vector<Edge> es;
  for (const Edge& f : g.edges())
    if (f != e) es.push_back(f);
  Subdivision out;
  Vertex prev = e.u;
  for (int i = 0; i < k; ++i) {
    Vertex s = g.vertex_count() + i;
    out.new_vertices.push_back(s);
    es.emplace_back(prev, s);
    prev = s;
  }
  es.emplace_back(prev, e.v);
  out.graph = Graph(g.vertex_count() + k, std::move(es));
  return out;
}

Graph attach_pendant(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw GraphError("cannot attach pendant to missing vertex " + std::to_string(v));
  std::vector<Edge> es = g.edges();
  es.emplace_back(v, g.vertex_count());
  return Graph(g.vertex_count() + 1, std::move(es));
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.vertex_count() << " e=" << g.edge_count() << " {";
  bool first = true;
  for (const Edge& e : g.edges()) {
    os << (first ? "" : " ") << e.u << "-" << e.v;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace spherelink
