#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spherelink/intrinsic.hpp"

namespace spherelink {

// Every planar graph on exactly n vertices with at most max_edges edges (negative means
// no bound), one per isomorphism class, in canonical form. Generated by canonical
// augmentation: a child G + e is kept only when its canonical deletion gives back the parent.
// `visit` returns false to stop.
void for_each_planar_graph(int n, int max_edges, const std::function<bool(const Graph&)>& visit);
std::vector<Graph> planar_graphs(int n, int max_edges = -1);

struct SearchOptions {
  LinkShape property = LinkShape::type1;
  int max_vertices = 0;
  int max_edges = -1;
  IntrinsicOptions intrinsic;
  // JSON lines file; existing verdicts in it are reused, new ones are appended.
  std::string checkpoint_path;
  std::function<void(const std::string&)> progress;
};

struct SearchHit {
  Graph graph;  // canonical form
  MinimalityResult certificate;
};

struct SearchResult {
  std::vector<SearchHit> hits;  // canonical order
  long scanned = 0;
  long prefiltered = 0;  // rejected by the cycle counting bound
  long evaluated = 0;    // intrinsic verdicts computed (not reused)
};

// Scans the bounded class (or only `input` when given) for minor-minimal intrinsic graphs.
SearchResult search_minor_minimal(const SearchOptions& opts, const std::vector<Graph>* input = nullptr);

}  // namespace spherelink
