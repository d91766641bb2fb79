#include <algorithm>
#include <numeric>

#include "spherelink/embedding.hpp"

namespace spherelink {

namespace {

std::size_t position(const std::vector<Vertex>& ring, Vertex x) {
  auto it = std::find(ring.begin(), ring.end(), x);
  if (it == ring.end()) throw EmbeddingError("dart not present in rotation");
  return static_cast<std::size_t>(it - ring.begin());
}

}  // namespace

Vertex rotation_successor(const Rotation& rot, Vertex at, Vertex from) {
  const auto& ring = rot[at];
  return ring[(position(ring, from) + 1) % ring.size()];
}

Vertex rotation_predecessor(const Rotation& rot, Vertex at, Vertex from) {
  const auto& ring = rot[at];
  return ring[(position(ring, from) + ring.size() - 1) % ring.size()];
}

std::vector<Face> trace_faces(const Rotation& rot, std::span<const Vertex> vertices) {
  std::vector<Face> faces;
  if (vertices.size() == 1 && rot[vertices[0]].empty()) {
    faces.push_back({{}, {vertices[0]}});
    return faces;
  }
  // used[v][i] marks dart v -> rot[v][i]
  std::vector<std::vector<char>> used(rot.size());
  for (Vertex v : vertices) used[v].assign(rot[v].size(), 0);
  for (Vertex v : vertices) {
    for (std::size_t i = 0; i < rot[v].size(); ++i) {
      if (used[v][i]) continue;
      Face f;
      Vertex a = v;
      std::size_t ai = i;
      while (!used[a][ai]) {
        used[a][ai] = 1;
        const Vertex b = rot[a][ai];
        f.walk.push_back({a, b});
        f.vertices.push_back(a);
        const std::size_t back = position(rot[b], a);
        ai = (back + 1) % rot[b].size();
        a = b;
      }
      std::sort(f.vertices.begin(), f.vertices.end());
      f.vertices.erase(std::unique(f.vertices.begin(), f.vertices.end()), f.vertices.end());
      faces.push_back(std::move(f));
    }
  }
  return faces;
}

std::vector<Face> trace_faces(const Graph& connected, const Rotation& rot) {
  std::vector<Vertex> all(connected.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  return trace_faces(rot, all);
}

bool is_valid_rotation(const Graph& g, const Rotation& rot, std::span<const Vertex> vertices) {
  if (static_cast<int>(rot.size()) != g.vertex_count()) return false;
  for (Vertex v : vertices) {
    std::vector<Vertex> ring = rot[v];
    std::sort(ring.begin(), ring.end());
    if (ring != g.neighbors(v)) return false;
  }
  return true;
}

bool is_spherical(const Graph& connected, const Rotation& rot) {
  const int n = connected.vertex_count();
  if (n == 0) return true;
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  if (!is_valid_rotation(connected, rot, all)) return false;
  const int f = static_cast<int>(trace_faces(rot, all).size());
  return n - connected.edge_count() + f == 2;
}

void for_each_rotation_system(const Graph& connected, const std::function<bool(const Rotation&)>& visit) {
  const int n = connected.vertex_count();
  Rotation rot(n);
  // Each ring keeps its smallest neighbour first and permutes the rest.
  std::vector<std::vector<Vertex>> tails(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto& nb = connected.neighbors(v);
    if (!nb.empty()) tails[v].assign(nb.begin() + 1, nb.end());
  }
  bool stop = false;
  std::function<void(Vertex)> rec = [&](Vertex v) {
    if (stop) return;
    if (v == n) {
      if (!visit(rot)) stop = true;
      return;
    }
    const auto& nb = connected.neighbors(v);
    if (nb.empty()) {
      rot[v].clear();
      rec(v + 1);
      return;
    }
    std::vector<Vertex> tail = tails[v];
    std::sort(tail.begin(), tail.end());
    do {
      rot[v].assign(1, nb.front());
      rot[v].insert(rot[v].end(), tail.begin(), tail.end());
      rec(v + 1);
      if (stop) return;
    } while (std::next_permutation(tail.begin(), tail.end()));
  };
  rec(0);
}

std::uint64_t rotation_system_count(const Graph& connected) {
  std::uint64_t total = 1;
  for (Vertex v = 0; v < connected.vertex_count(); ++v) {
    for (int k = 2; k < connected.degree(v); ++k) total *= static_cast<std::uint64_t>(k);
  }
  return total;
}

namespace {

class PlanarBuilder {
 public:
  PlanarBuilder(const Graph& g, bool first_only) : g_(g), first_only_(first_only), rot_(g.vertex_count()) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<Vertex> queue{0};
    seen[0] = 1;
    std::vector<std::vector<char>> tree_edge(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Vertex w : g.neighbors(queue[i])) {
        if (seen[w]) continue;
        seen[w] = 1;
        queue.push_back(w);
        tree_.emplace_back(queue[i], w);
        tree_edge[queue[i]][w] = tree_edge[w][queue[i]] = 1;
      }
    }
    if (static_cast<int>(queue.size()) != n) throw EmbeddingError("rotation systems need a connected graph");
    for (const Edge& e : g.edges())
      if (!tree_edge[e.u][e.v]) chords_.push_back(e);
  }

  std::vector<Rotation> run() {
    if (g_.vertex_count() == 0) return {};
    rec(0);
    return std::move(out_);
  }

 private:
  bool done() const { return first_only_ && !out_.empty(); }

  void rec(std::size_t step) {
    if (done()) return;
    if (step < tree_.size()) {
      auto [u, v] = tree_[step];
      rot_[v] = {u};
      if (rot_[u].empty()) {
        rot_[u] = {v};
        rec(step + 1);
        rot_[u].clear();
      } else {
        const std::size_t k = rot_[u].size();
        for (std::size_t pos = 0; pos < k && !done(); ++pos) {
          rot_[u].insert(rot_[u].begin() + static_cast<std::ptrdiff_t>(pos + 1), v);
          rec(step + 1);
          rot_[u].erase(rot_[u].begin() + static_cast<std::ptrdiff_t>(pos + 1));
        }
      }
      rot_[v].clear();
      return;
    }
    const std::size_t c = step - tree_.size();
    if (c == chords_.size()) {
      out_.push_back(rot_);
      return;
    }
    const Edge e = chords_[c];
    std::vector<Vertex> all;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) all.push_back(v);
    const std::vector<Face> faces = trace_faces(rot_, all);
    for (const Face& f : faces) {
      // corners are identified by the dart entering the vertex
      std::vector<Vertex> into_u, into_v;
      for (const Dart& d : f.walk) {
        if (d.to == e.u) into_u.push_back(d.from);
        if (d.to == e.v) into_v.push_back(d.from);
      }
      for (Vertex a : into_u) {
        for (Vertex b : into_v) {
          if (done()) return;
          insert_after(e.u, a, e.v);
          insert_after(e.v, b, e.u);
          rec(step + 1);
          erase(e.v, e.u);
          erase(e.u, e.v);
        }
      }
    }
  }

  void insert_after(Vertex at, Vertex after, Vertex x) {
    auto& ring = rot_[at];
    auto it = std::find(ring.begin(), ring.end(), after);
    ring.insert(it + 1, x);
  }

  void erase(Vertex at, Vertex x) {
    auto& ring = rot_[at];
    ring.erase(std::find(ring.begin(), ring.end(), x));
  }

  const Graph& g_;
  bool first_only_;
  Rotation rot_;
  std::vector<std::pair<Vertex, Vertex>> tree_;
  std::vector<Edge> chords_;
  std::vector<Rotation> out_;
};

}  // namespace

std::vector<Rotation> spherical_rotation_systems(const Graph& connected) {
  return PlanarBuilder(connected, false).run();
}

std::optional<Rotation> find_spherical_rotation(const Graph& connected) {
  auto found = PlanarBuilder(connected, true).run();
  if (found.empty()) return std::nullopt;
  return found.front();
}

}  // namespace spherelink
