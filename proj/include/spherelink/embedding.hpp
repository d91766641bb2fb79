#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spherelink/graph.hpp"

namespace spherelink {

// Cyclic neighbour order per vertex, indexed by vertex id. Vertices outside the
// described part keep an empty list.
using Rotation = std::vector<std::vector<Vertex>>;

struct Dart {
  Vertex from = 0;
  Vertex to = 0;
  auto operator<=>(const Dart&) const = default;
};

// Faces are traced with next(u->v) = (v -> successor of u in the rotation at v).
struct Face {
  std::vector<Dart> walk;        // empty for an isolated vertex
  std::vector<Vertex> vertices;  // sorted, unique
};

class EmbeddingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Vertex rotation_successor(const Rotation& rot, Vertex at, Vertex from);
Vertex rotation_predecessor(const Rotation& rot, Vertex at, Vertex from);

// Faces of the part spanned by `vertices` (a connected vertex set). Faces are
// discovered by scanning vertices in the given order and their darts in rotation order.
std::vector<Face> trace_faces(const Rotation& rot, std::span<const Vertex> vertices);
// All faces of a rotation system of a connected graph.
std::vector<Face> trace_faces(const Graph& connected, const Rotation& rot);

bool is_valid_rotation(const Graph& g, const Rotation& rot, std::span<const Vertex> vertices);
bool is_spherical(const Graph& connected, const Rotation& rot);

// Every rotation system of a connected graph, prod over v of (deg(v)-1)!, in
// lexicographic order. `visit` returns false to stop early.
void for_each_rotation_system(const Graph& connected, const std::function<bool(const Rotation&)>& visit);
std::uint64_t rotation_system_count(const Graph& connected);

// Genus-0 rotation systems only, generated by inserting edges into faces of a growing
// plane map (spanning tree first, then chords). Each one is produced exactly once.
std::vector<Rotation> spherical_rotation_systems(const Graph& connected);
std::optional<Rotation> find_spherical_rotation(const Graph& connected);

struct ArrangementPart {
  std::vector<Vertex> vertices;  // sorted
  std::vector<int> faces;        // local face ids, in trace order
};

struct LocalFace {
  Face face;
  int part = -1;
  int global = -1;
};

// Embedding of a (possibly disconnected) graph in the sphere: a genus-0 rotation per
// part plus the assignment of every local face to a global face. The incidence graph
// parts <-> global faces is a tree. Parts may cover only some of the vertices while an
// arrangement is being built.
class SphericalArrangement {
 public:
  struct Placement {
    int part = -1;
    int parent_part = -1;
    int host_global = -1;  // global face the part sits in
    int outward = -1;      // index into the part's own faces
  };

  // The empty arrangement: no parts, one global face (the whole sphere).
  explicit SphericalArrangement(std::shared_ptr<const Graph> g);
  // global_of_local is indexed by local faces in trace order (parts in order).
  SphericalArrangement(std::shared_ptr<const Graph> g, Rotation rot, std::vector<std::vector<Vertex>> parts,
                       std::vector<int> global_of_local);

  // Adds a part whose face number `outward` merges into global face `host`.
  SphericalArrangement with_part(std::span<const Vertex> part, const Rotation& part_rot, int host, int outward) const;

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  const Rotation& rotation() const { return rot_; }
  const std::vector<ArrangementPart>& parts() const { return parts_; }
  const std::vector<LocalFace>& local_faces() const { return faces_; }
  int global_face_count() const { return static_cast<int>(globals_.size()); }
  const std::vector<int>& global_face(int g) const { return globals_[g]; }

  int part_of_vertex(Vertex v) const { return part_of_[v]; }
  bool is_placed(Vertex v) const { return part_of_[v] >= 0; }
  bool is_complete() const;

  int local_face_of_dart(Vertex from, Vertex to) const;
  int global_face_of_dart(Vertex from, Vertex to) const { return faces_[local_face_of_dart(from, to)].global; }
  // A global face containing v (the unique one when v is isolated).
  int global_face_of_vertex(Vertex v) const;
  std::vector<Vertex> global_face_vertices(int g) const;

  int euler_characteristic() const;
  SphericalArrangement reflected() const;
  std::vector<Placement> placements() const;

  // Throws EmbeddingError when an invariant fails.
  void validate() const;

 private:
  void index_faces();

  std::shared_ptr<const Graph> graph_;
  Rotation rot_;
  std::vector<ArrangementPart> parts_;
  std::vector<LocalFace> faces_;
  std::vector<std::vector<int>> globals_;
  std::vector<int> part_of_;
  std::vector<std::vector<int>> dart_face_;  // parallel to rot_
};

// Canonical encoding of an arrangement up to relabelling, and optionally reflection.
struct ArrangementCertificate {
  std::vector<std::int32_t> code;
  auto operator<=>(const ArrangementCertificate&) const = default;
  std::string hex() const;
};

ArrangementCertificate certificate(const SphericalArrangement& a, bool reflection_equivalence = true);
bool equivalent(const SphericalArrangement& a, const SphericalArrangement& b, bool reflection_equivalence = true);

struct EmbeddingOptions {
  bool reflection = true;
  int jobs = 1;
};

// Complete and irredundant list of embeddings up to equivalence, sorted by certificate.
// Empty when g is not planar.
std::vector<SphericalArrangement> spherical_arrangements(const Graph& g, const EmbeddingOptions& opts = {});

// Places unplaced isolated vertices of the graph into one global face.
SphericalArrangement place_isolated(const SphericalArrangement& a, std::span<const Vertex> vertices, int global_face);

bool is_planar(const Graph& g);
bool is_outerplanar(const Graph& g);

}  // namespace spherelink
