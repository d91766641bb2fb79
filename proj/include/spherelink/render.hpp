#pragma once

#include <string>
#include <vector>

#include "spherelink/embedding.hpp"

namespace spherelink {

struct Point {
  double x = 0, y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Drawing {
  std::vector<Point> vertices;                 // per graph vertex
  std::vector<std::vector<Point>> edge_paths;  // per graph edge, from the smaller endpoint
};

// Straight-line drawing of every part on its doubly subdivided map with a Tutte layout.
// Parts sit inside small disks in a triangle of their host face. Coordinates lie in the
// unit disk.
Drawing layout(const SphericalArrangement& a);

struct RenderOptions {
  int size = 480;
  bool labels = true;
};

std::string render_svg(const SphericalArrangement& a, const RenderOptions& opts = {});

// True when two segments of different edges, or non-adjacent segments of one edge, meet
// anywhere other than a shared endpoint.
bool has_crossings(const Drawing& d);

}  // namespace spherelink
