#include "spherelink/dart_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace spherelink {

int DartMap::add_edge(int a, int b) {
  const int id = edge_count();
  head.push_back(b);
  head.push_back(a);
  return id;
}

int DartMap::next_in_face(int d) const {
  const auto& ring = rot[head[d]];
  const auto it = std::find(ring.begin(), ring.end(), d ^ 1);
  const std::size_t i = static_cast<std::size_t>(it - ring.begin());
  return ring[(i + 1) % ring.size()];
}

std::vector<std::vector<int>> DartMap::faces() const {
  std::vector<char> seen(head.size(), 0);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < vertex_count; ++v)
    for (int d : rot[v]) {
      if (seen[d]) continue;
      std::vector<int> walk;
      for (int x = d; !seen[x]; x = next_in_face(x)) {
        seen[x] = 1;
        walk.push_back(x);
      }
      out.push_back(std::move(walk));
    }
  return out;
}

std::vector<int> DartMap::face_of_dart() const {
  std::vector<int> out(head.size(), -1);
  const auto fs = faces();
  for (std::size_t f = 0; f < fs.size(); ++f)
    for (int d : fs[f]) out[d] = static_cast<int>(f);
  return out;
}

int DartMap::euler_characteristic() const {
  const int f = edge_count() == 0 ? 1 : static_cast<int>(faces().size());
  return vertex_count - edge_count() + f;
}

int MapFromRotation::dart(Vertex from, Vertex to) const {
  const int a = local.at(from);
  const auto& ring = map.rot.at(a);
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (original[map.head[ring[i]]] == to) return ring[i];
  throw std::out_of_range("no such dart");
}

MapFromRotation map_from_rotation(const Rotation& rot, std::span<const Vertex> vertices) {
  MapFromRotation r;
  r.original.assign(vertices.begin(), vertices.end());
  r.local.assign(rot.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) r.local[vertices[i]] = static_cast<int>(i);
  DartMap& m = r.map;
  m.vertex_count = static_cast<int>(vertices.size());
  m.rot.assign(vertices.size(), {});
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex u = vertices[i];
    for (Vertex w : rot[u]) {
      if (r.local[w] < 0) throw std::invalid_argument("rotation leaves the vertex set");
      if (u < w) m.add_edge(static_cast<int>(i), r.local[w]);
    }
  }
  auto find = [&](int a, int b) {
    for (int d = 0; d < static_cast<int>(m.head.size()); ++d)
      if (m.tail(d) == a && m.head[d] == b) return d;
    throw std::invalid_argument("rotation is not symmetric");
  };
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : rot[vertices[i]]) m.rot[i].push_back(find(static_cast<int>(i), r.local[w]));
  return r;
}

DartMap barycentric_subdivision(const DartMap& m) {
  const int n = m.vertex_count, e = m.edge_count();
  const auto fs = m.faces();
  const int f = static_cast<int>(fs.size());
  auto mid = [n](int k) { return n + k; };
  auto centre = [n, e](int g) { return n + e + g; };

  // Spokes per dart d of face g: centre(g) - tail(d) and centre(g) - mid(d / 2).
  auto build = [&](bool flip_mid, bool flip_face) {
    DartMap s;
    s.vertex_count = n + e + f;
    s.rot.assign(s.vertex_count, {});
    for (int k = 0; k < e; ++k) {
      s.add_edge(m.tail(2 * k), mid(k));
      s.add_edge(mid(k), m.head[2 * k]);
    }
    std::vector<int> corner(m.head.size()), spoke(m.head.size());
    for (int g = 0; g < f; ++g)
      for (int d : fs[g]) {
        corner[d] = s.add_edge(centre(g), m.tail(d));
        spoke[d] = s.add_edge(centre(g), mid(d / 2));
      }
    // dart of new edge `id` leaving `from`
    auto out = [&](int id, int from) { return s.tail(2 * id) == from ? 2 * id : 2 * id + 1; };
    for (int v = 0; v < n; ++v) {
      const auto& ring = m.rot[v];
      for (std::size_t i = 0; i < ring.size(); ++i) {
        const int d = ring[i];
        s.rot[v].push_back(out(d, v));  // new edge d is the half of d at its tail
        s.rot[v].push_back(out(corner[ring[(i + 1) % ring.size()]], v));
      }
    }
    for (int k = 0; k < e; ++k) {
      const int d = 2 * k, t = 2 * k + 1;
      const int x = mid(k);
      std::vector<int> ring = {out(2 * k, x), out(spoke[d], x), out(2 * k + 1, x), out(spoke[t], x)};
      if (flip_mid) std::swap(ring[1], ring[3]);
      s.rot[x] = ring;
    }
    for (int g = 0; g < f; ++g) {
      const int c = centre(g);
      std::vector<int> ring;
      for (int d : fs[g]) {
        ring.push_back(out(corner[d], c));
        ring.push_back(out(spoke[d], c));
      }
      if (flip_face) std::reverse(ring.begin(), ring.end());
      s.rot[c] = ring;
    }
    return s;
  };
  const int target = m.euler_characteristic();
  for (int mask = 0; mask < 4; ++mask) {
    DartMap s = build(mask & 1, mask & 2);
    if (s.euler_characteristic() != target) continue;
    const auto sf = s.faces();
    if (std::all_of(sf.begin(), sf.end(), [](const auto& w) { return w.size() == 3; })) return s;
  }
  throw std::logic_error("barycentric subdivision failed");
}

}  // namespace spherelink
