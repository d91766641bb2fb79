#pragma once

#include <string>
#include <vector>

#include "spherelink/graph.hpp"

namespace spherelink {

struct CanonicalLabeling {
  // order[i] is the vertex of the input graph placed at canonical position i.
  std::vector<Vertex> order;
  // Vertex count byte followed by the upper-triangle adjacency bits in canonical order.
  std::string code;
};

// Colour refinement + individualisation search for the lexicographically smallest
// adjacency code. Twins and already-discovered automorphisms prune the search tree.
CanonicalLabeling canonical_labeling(const Graph& g);

std::string canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace spherelink
