#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spherelink {

using Vertex = int;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite simple graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  static constexpr int max_vertices = 64;

  Graph() = default;
  explicit Graph(int vertex_count);
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return n_ == 0; }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  std::uint64_t neighbor_mask(Vertex v) const { return mask_[v]; }

  bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }
  bool has_edge(Vertex u, Vertex v) const;
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
  // Position of `e` in edges(), or -1.
  int edge_index(Edge e) const;

  const std::vector<std::string>& labels() const { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;

  // Connected components, each sorted, ordered by smallest vertex.
  std::vector<std::vector<Vertex>> components() const;
  bool is_connected() const;
  int isolated_count() const;

  // Subgraph induced on `keep`; vertex keep[i] becomes i.
  Graph induced(std::span<const Vertex> keep) const;
  // perm[old] = new.
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> mask_;
  std::vector<std::string> labels_;
};

Graph empty_graph(int n);
Graph complete(int n);
Graph complete_multipartite(std::span<const int> parts);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph with_isolated(const Graph& g, int count);

struct Subdivision {
  Graph graph;
  std::vector<Vertex> new_vertices;  // in order from edge.u to edge.v
};

Subdivision subdivide(const Graph& g, Edge e, int k);
Graph attach_pendant(const Graph& g, Vertex v);

std::string describe(const Graph& g);

}  // namespace spherelink
