#pragma once

#include <span>
#include <vector>

#include "spherelink/embedding.hpp"

namespace spherelink {

// Plane map on half-edges. Edge k owns darts 2k (tail to head) and 2k+1 (its twin), so
// parallel edges are allowed. rot[v] lists the darts leaving v in cyclic order.
struct DartMap {
  int vertex_count = 0;
  std::vector<int> head;  // per dart
  std::vector<std::vector<int>> rot;

  int edge_count() const { return static_cast<int>(head.size()) / 2; }
  int tail(int d) const { return head[d ^ 1]; }
  int add_edge(int a, int b);  // returns the edge id, rotations untouched
  // Face successor, matching trace_faces: d = u->v is followed by v -> successor of u at v.
  int next_in_face(int d) const;
  std::vector<std::vector<int>> faces() const;
  std::vector<int> face_of_dart() const;
  int euler_characteristic() const;
};

struct MapFromRotation {
  DartMap map;
  std::vector<Vertex> original;  // map vertex -> graph vertex
  std::vector<int> local;        // graph vertex -> map vertex, -1 outside
  int dart(Vertex from, Vertex to) const;
  std::vector<std::vector<int>> dart_index;  // per map vertex, parallel to rot
};

// Map of one connected part of a rotation system; `vertices` fixes the vertex order.
MapFromRotation map_from_rotation(const Rotation& rot, std::span<const Vertex> vertices);

// Barycentric subdivision: vertices keep their ids, edge k gains midpoint vertex_count + k,
// face f gains centre vertex_count + edge_count + f (faces in faces() order). Edge k
// becomes edges 2k (tail to midpoint) and 2k + 1 (midpoint to head). Every face of the
// result is a triangle and the result is spherical when the input is.
DartMap barycentric_subdivision(const DartMap& m);

}  // namespace spherelink
