#include <algorithm>
#include <map>
#include <numeric>

#include "spherelink/embedding.hpp"

namespace spherelink {

SphericalArrangement::SphericalArrangement(std::shared_ptr<const Graph> g)
    : graph_(std::move(g)),
      rot_(graph_->vertex_count()),
      globals_(1),
      part_of_(graph_->vertex_count(), -1),
      dart_face_(graph_->vertex_count()) {}

SphericalArrangement::SphericalArrangement(std::shared_ptr<const Graph> g, Rotation rot,
                                           std::vector<std::vector<Vertex>> parts, std::vector<int> global_of_local)
    : graph_(std::move(g)), rot_(std::move(rot)), part_of_(graph_->vertex_count(), -1) {
  if (static_cast<int>(rot_.size()) != graph_->vertex_count()) throw EmbeddingError("rotation size mismatch");
  for (auto& vs : parts) {
    std::sort(vs.begin(), vs.end());
    ArrangementPart part;
    part.vertices = vs;
    const int pid = static_cast<int>(parts_.size());
    for (Vertex v : vs) {
      if (!graph_->has_vertex(v)) throw EmbeddingError("part vertex out of range");
      if (part_of_[v] >= 0) throw EmbeddingError("vertex " + std::to_string(v) + " in two parts");
      part_of_[v] = pid;
    }
    for (Face& f : trace_faces(rot_, vs)) {
      part.faces.push_back(static_cast<int>(faces_.size()));
      faces_.push_back({std::move(f), pid, -1});
    }
    parts_.push_back(std::move(part));
  }
  if (global_of_local.size() != faces_.size()) throw EmbeddingError("global face assignment size mismatch");
  int count = parts_.empty() ? 1 : 0;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (global_of_local[i] < 0) throw EmbeddingError("negative global face id");
    faces_[i].global = global_of_local[i];
    count = std::max(count, global_of_local[i] + 1);
  }
  globals_.assign(count, {});
  for (std::size_t i = 0; i < faces_.size(); ++i) globals_[faces_[i].global].push_back(static_cast<int>(i));
  index_faces();
  validate();
}

void SphericalArrangement::index_faces() {
  dart_face_.assign(rot_.size(), {});
  for (std::size_t v = 0; v < rot_.size(); ++v) dart_face_[v].assign(rot_[v].size(), -1);
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    for (const Dart& d : faces_[i].face.walk) {
      const auto& ring = rot_[d.from];
      const auto pos = std::find(ring.begin(), ring.end(), d.to) - ring.begin();
      dart_face_[d.from][pos] = static_cast<int>(i);
    }
  }
}

SphericalArrangement SphericalArrangement::with_part(std::span<const Vertex> part, const Rotation& part_rot, int host,
                                                     int outward) const {
  if (host < 0 || host >= global_face_count()) throw EmbeddingError("host face out of range");
  SphericalArrangement out = *this;
  std::vector<Vertex> vs(part.begin(), part.end());
  std::sort(vs.begin(), vs.end());
  const int pid = static_cast<int>(out.parts_.size());
  ArrangementPart p;
  p.vertices = vs;
  for (Vertex v : vs) {
    if (out.part_of_[v] >= 0) throw EmbeddingError("vertex " + std::to_string(v) + " already placed");
    out.part_of_[v] = pid;
    out.rot_[v] = part_rot[v];
  }
  std::vector<Face> faces = trace_faces(out.rot_, vs);
  if (outward < 0 || outward >= static_cast<int>(faces.size())) throw EmbeddingError("outward face out of range");
  for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
    const int lid = static_cast<int>(out.faces_.size());
    int gid = host;
    if (i != outward) {
      gid = static_cast<int>(out.globals_.size());
      out.globals_.emplace_back();
    }
    out.globals_[gid].push_back(lid);
    out.faces_.push_back({std::move(faces[i]), pid, gid});
    p.faces.push_back(lid);
  }
  out.parts_.push_back(std::move(p));
  for (Vertex v : vs) {
    out.dart_face_[v].assign(out.rot_[v].size(), -1);
  }
  for (int lid : out.parts_.back().faces) {
    for (const Dart& d : out.faces_[lid].face.walk) {
      const auto& ring = out.rot_[d.from];
      out.dart_face_[d.from][std::find(ring.begin(), ring.end(), d.to) - ring.begin()] = lid;
    }
  }
  return out;
}

bool SphericalArrangement::is_complete() const {
  return std::all_of(part_of_.begin(), part_of_.end(), [](int p) { return p >= 0; });
}

int SphericalArrangement::local_face_of_dart(Vertex from, Vertex to) const {
  const auto& ring = rot_[from];
  auto it = std::find(ring.begin(), ring.end(), to);
  if (it == ring.end()) throw EmbeddingError("dart not in arrangement");
  return dart_face_[from][it - ring.begin()];
}

int SphericalArrangement::global_face_of_vertex(Vertex v) const {
  const int p = part_of_[v];
  if (p < 0) throw EmbeddingError("vertex " + std::to_string(v) + " is not placed");
  if (rot_[v].empty()) return faces_[parts_[p].faces.front()].global;
  return faces_[dart_face_[v][0]].global;
}

std::vector<Vertex> SphericalArrangement::global_face_vertices(int g) const {
  std::vector<Vertex> vs;
  for (int lid : globals_[g]) vs.insert(vs.end(), faces_[lid].face.vertices.begin(), faces_[lid].face.vertices.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

int SphericalArrangement::euler_characteristic() const {
  int v = 0, e2 = 0;
  for (const auto& p : parts_) {
    v += static_cast<int>(p.vertices.size());
    for (Vertex x : p.vertices) e2 += static_cast<int>(rot_[x].size());
  }
  return v - e2 / 2 + global_face_count();
}

SphericalArrangement SphericalArrangement::reflected() const {
  Rotation rev = rot_;
  for (auto& ring : rev) std::reverse(ring.begin(), ring.end());
  std::vector<std::vector<Vertex>> parts;
  for (const auto& p : parts_) parts.push_back(p.vertices);
  // Reversing every rotation reverses every face walk, so a local face keeps its
  // global face through its reversed darts.
  std::vector<int> global_of_local;
  for (const auto& p : parts_) {
    const std::vector<Face> faces = trace_faces(rev, p.vertices);
    for (const Face& f : faces) {
      if (f.walk.empty()) {
        global_of_local.push_back(faces_[p.faces.front()].global);
        continue;
      }
      const Dart d = f.walk.front();
      global_of_local.push_back(faces_[local_face_of_dart(d.to, d.from)].global);
    }
  }
  if (parts_.empty()) return *this;
  return SphericalArrangement(graph_, std::move(rev), std::move(parts), std::move(global_of_local));
}

std::vector<SphericalArrangement::Placement> SphericalArrangement::placements() const {
  std::vector<Placement> out;
  if (parts_.empty()) return out;
  std::vector<char> part_seen(parts_.size(), 0), global_seen(globals_.size(), 0);
  std::vector<int> queue{0};
  part_seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int p = queue[i];
    for (int lid : parts_[p].faces) {
      const int g = faces_[lid].global;
      if (global_seen[g]) continue;
      global_seen[g] = 1;
      for (int other : globals_[g]) {
        const int q = faces_[other].part;
        if (part_seen[q]) continue;
        part_seen[q] = 1;
        const auto& qf = parts_[q].faces;
        const int outward = static_cast<int>(std::find(qf.begin(), qf.end(), other) - qf.begin());
        out.push_back({q, p, g, outward});
        queue.push_back(q);
      }
    }
  }
  return out;
}

void SphericalArrangement::validate() const {
  const Graph& g = *graph_;
  int sum_faces = 0;
  for (std::size_t pid = 0; pid < parts_.size(); ++pid) {
    const auto& p = parts_[pid];
    if (p.vertices.empty()) throw EmbeddingError("empty part");
    if (!is_valid_rotation(g, rot_, p.vertices)) throw EmbeddingError("rotation is not a permutation of neighbours");
    // a part must be a whole connected component
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : p.vertices) in[v] = 1;
    std::vector<Vertex> stack{p.vertices.front()};
    std::vector<char> seen(g.vertex_count(), 0);
    seen[stack.back()] = 1;
    int reached = 0;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++reached;
      for (Vertex w : g.neighbors(v)) {
        if (!in[w]) throw EmbeddingError("part is not a union of components");
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (reached != static_cast<int>(p.vertices.size())) throw EmbeddingError("part is not connected");
    int edges2 = 0;
    for (Vertex v : p.vertices) edges2 += static_cast<int>(rot_[v].size());
    const int chi = static_cast<int>(p.vertices.size()) - edges2 / 2 + static_cast<int>(p.faces.size());
    if (chi != 2) throw EmbeddingError("part " + std::to_string(pid) + " is not genus 0");
    sum_faces += static_cast<int>(p.faces.size());
  }
  if (parts_.empty()) {
    if (globals_.size() != 1) throw EmbeddingError("empty arrangement must have one face");
    return;
  }
  const int k = static_cast<int>(parts_.size());
  if (global_face_count() != sum_faces - k + 1) throw EmbeddingError("global faces do not form a tree");
  for (const auto& gf : globals_)
    if (gf.empty()) throw EmbeddingError("global face without boundary");
  // connectivity of the part/face incidence tree
  std::vector<char> part_seen(k, 0), global_seen(globals_.size(), 0);
  std::vector<int> queue{0};
  part_seen[0] = 1;
  int reached = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int lid : parts_[queue[i]].faces) {
      const int gid = faces_[lid].global;
      if (global_seen[gid]) continue;
      global_seen[gid] = 1;
      for (int other : globals_[gid]) {
        const int q = faces_[other].part;
        if (!part_seen[q]) {
          part_seen[q] = 1;
          ++reached;
          queue.push_back(q);
        }
      }
    }
  }
  if (reached != k) throw EmbeddingError("arrangement incidence structure is disconnected");
  if (euler_characteristic() != 1 + k) throw EmbeddingError("Euler characteristic check failed");
}

SphericalArrangement place_isolated(const SphericalArrangement& a, std::span<const Vertex> vertices, int global_face) {
  SphericalArrangement out = a;
  Rotation none(a.graph().vertex_count());
  for (Vertex v : vertices) {
    if (a.graph().degree(v) != 0) throw EmbeddingError("vertex " + std::to_string(v) + " is not isolated");
    const Vertex one[] = {v};
    if (out.parts().empty()) {
      out = out.with_part(one, none, 0, 0);
    } else {
      out = out.with_part(one, none, global_face, 0);
    }
  }
  return out;
}

}  // namespace spherelink
