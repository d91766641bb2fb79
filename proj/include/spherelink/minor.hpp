#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spherelink/graph.hpp"

namespace spherelink {

enum class MinorKind { delete_edge, contract_edge, delete_vertex };

// One minor operation. Edge steps use `edge`, vertex deletion uses `vertex`.
// Deleting vertex v shifts every larger index down by one. Contracting u-v (u < v)
// merges v into u, drops v, and simplifies away loops and parallel edges.
struct MinorStep {
  MinorKind kind = MinorKind::delete_edge;
  Edge edge;
  Vertex vertex = -1;

  static MinorStep delete_edge(Edge e) { return {MinorKind::delete_edge, e, -1}; }
  static MinorStep contract_edge(Edge e) { return {MinorKind::contract_edge, e, -1}; }
  static MinorStep delete_vertex(Vertex v) { return {MinorKind::delete_vertex, {}, v}; }

  friend bool operator==(const MinorStep&, const MinorStep&) = default;
};

std::string to_string(const MinorStep& step);
std::string to_string(MinorKind kind);
MinorKind minor_kind_from_string(const std::string& s);

Graph delete_edge(const Graph& g, Edge e);
Graph contract_edge(const Graph& g, Edge e);
Graph delete_vertex(const Graph& g, Vertex v);
Graph apply_minor_step(const Graph& g, const MinorStep& step);
Graph apply_minor_steps(const Graph& g, const std::vector<MinorStep>& steps);

// Index the surviving vertex takes after `step` (or -1 if it was deleted).
Vertex vertex_after_step(const Graph& g, const MinorStep& step, Vertex v);

struct MinorClass {
  Graph minor;
  MinorStep step;
};

// One representative per isomorphism class of single-step minors, in a fixed order:
// edge deletions, then contractions, then vertex deletions, each by index.
std::vector<MinorClass> immediate_minors(const Graph& g);

struct MinorPath {
  Graph minor;
  std::vector<MinorStep> steps;
};

// All isomorphism classes of proper minors reachable in at most `depth` steps,
// breadth first, each with the step sequence that first reached it.
std::vector<MinorPath> minors_to_depth(const Graph& g, int depth);

// Step sequence turning g into a graph isomorphic to h, if one exists.
std::optional<std::vector<MinorStep>> find_minor(const Graph& g, const Graph& h);
bool has_minor(const Graph& g, const Graph& h);

}  // namespace spherelink
