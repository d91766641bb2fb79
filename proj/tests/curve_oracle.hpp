#pragma once

// Split test by curves: the arrangement is joined into one plane map with auxiliary edges
// between nested parts, subdivided three times, and a split is a union of triangles whose
// interior is an open disk holding some pieces while the rest stay outside.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "spherelink/dart_map.hpp"
#include "spherelink/embedding.hpp"
#include "spherelink/linkage.hpp"

namespace oracle {

using namespace spherelink;

class CurveOracle {
 public:
  explicit CurveOracle(const SphericalArrangement& a) {
    const Graph& g = a.graph();
    Rotation rot = a.rotation();
    auto insert_after = [&](Vertex at, Vertex after, Vertex x) {
      auto& r = rot[at];
      r.insert(std::find(r.begin(), r.end(), after) + 1, x);
    };
    // the corner of a local face: a vertex and the neighbour after which to insert
    auto corner = [&](int lid) -> std::pair<Vertex, Vertex> {
      const Face& f = a.local_faces()[lid].face;
      if (f.walk.empty()) return {f.vertices.front(), -1};
      return {f.walk.front().to, f.walk.front().from};
    };
    for (const auto& p : a.placements()) {
      int host = -1;
      for (int lid : a.parts()[p.parent_part].faces)
        if (a.local_faces()[lid].global == p.host_global) host = lid;
      const auto [pv, pafter] = corner(host);
      const auto [cv, cafter] = corner(a.parts()[p.part].faces[p.outward]);
      if (pafter < 0) {
        rot[pv].push_back(cv);
      } else {
        insert_after(pv, pafter, cv);
      }
      if (cafter < 0) {
        rot[cv].push_back(pv);
      } else {
        insert_after(cv, cafter, pv);
      }
    }
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
    base_ = map_from_rotation(rot, all);
    m1_ = barycentric_subdivision(base_.map);
    m2_ = barycentric_subdivision(m1_);
    m3_ = barycentric_subdivision(m2_);
    faces_ = m3_.faces();
    face_of_ = m3_.face_of_dart();
    around_.assign(m3_.vertex_count, {});
    for (std::size_t f = 0; f < faces_.size(); ++f)
      for (int d : faces_[f]) around_[m3_.tail(d)].push_back(static_cast<int>(f));
  }

  int euler_characteristic() const { return m3_.euler_characteristic(); }
  bool triangulated() const {
    return std::all_of(faces_.begin(), faces_.end(), [](const auto& f) { return f.size() == 3; });
  }

  // A set of triangles certifying a split, if any: a neighbourhood of one side joined up
  // by paths avoiding the other, with every hole but the other side's filled in.
  std::optional<std::vector<char>> separating_disk(const LinkPieces& p) const {
    const auto cells = piece_vertices(p);
    const int k = static_cast<int>(cells.size());
    if (k < 2) return std::nullopt;
    const int n2 = m2_.vertex_count;
    for (std::uint32_t x = 1; x + 1 < (1u << k); ++x) {
      std::vector<char> in_k(n2, 0), in_y(n2, 0);
      std::vector<int> starts;
      for (int i = 0; i < k; ++i)
        for (int v : cells[i]) {
          if (v >= n2) continue;
          if (x >> i & 1) {
            in_k[v] = 1;
            starts.push_back(v);
          } else {
            in_y[v] = 1;
          }
        }
      if (!join(in_k, in_y, starts)) continue;
      std::vector<char> near(faces_.size(), 0);
      for (std::size_t f = 0; f < faces_.size(); ++f)
        for (int d : faces_[f])
          if (m3_.tail(d) < n2 && in_k[m3_.tail(d)]) near[f] = 1;
      int y_seed = -1;
      for (int i = 0; i < k && y_seed < 0; ++i)
        if (!(x >> i & 1)) y_seed = around_[cells[i].front()].front();
      if (near[y_seed]) continue;
      std::vector<char> hole(faces_.size(), 0);
      flood(y_seed, near, hole, 1);
      std::vector<char> q(faces_.size());
      for (std::size_t f = 0; f < faces_.size(); ++f) q[f] = !hole[f];
      if (certifies(q, cells)) return q;
    }
    return std::nullopt;
  }

  // Checks a candidate: interior and exterior connected, every piece wholly on one side,
  // both sides holding a piece.
  bool certifies(const std::vector<char>& q, const std::vector<std::vector<int>>& cells) const {
    if (!connected(q, 1) || !connected(q, 0)) return false;
    bool in = false, out = false;
    for (const auto& piece : cells) {
      bool all_in = true, all_out = true;
      for (int v : piece)
        for (int f : around_[v]) (q[f] ? all_out : all_in) = false;
      if (!all_in && !all_out) return false;
      (all_in ? in : out) = true;
    }
    return in && out;
  }

  bool split(const LinkPieces& p) const { return separating_disk(p).has_value(); }

  // Vertices of the thrice subdivided map lying on each piece.
  std::vector<std::vector<int>> piece_vertices(const LinkPieces& p) const {
    std::vector<std::vector<int>> out;
    const int n0 = base_.map.vertex_count, n1 = m1_.vertex_count, n2 = m2_.vertex_count;
    for (const Cycle& c : p.cycles) {
      std::vector<int> cell;
      for (std::size_t j = 0; j < c.size(); ++j) {
        const int k = base_.dart(c[j], c[(j + 1) % c.size()]) / 2;
        cell.insert(cell.end(), {base_.local[c[j]], n0 + k, n1 + 2 * k, n1 + 2 * k + 1});
        for (int i = 0; i < 4; ++i) cell.push_back(n2 + 4 * k + i);
      }
      out.push_back(cell);
    }
    for (const auto& [u, v] : p.pairs) out.push_back({base_.local[u], base_.local[v]});
    return out;
  }

 private:
  void flood(int seed, const std::vector<char>& wall, std::vector<char>& mark, char label) const {
    std::vector<int> stack{seed};
    mark[seed] = label;
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      for (int d : faces_[f]) {
        const int g = face_of_[d ^ 1];
        if (!wall[g] && !mark[g]) {
          mark[g] = label;
          stack.push_back(g);
        }
      }
    }
  }

  // Adds paths of the second subdivision, avoiding `blocked`, until the marked vertices
  // are connected.
  bool join(std::vector<char>& in_k, const std::vector<char>& blocked, const std::vector<int>& starts) const {
    const int n2 = m2_.vertex_count;
    for (int t : starts) {
      std::vector<int> from(n2, -2), queue;
      std::vector<char> comp(n2, 0);
      std::vector<int> stack{starts.front()};
      comp[starts.front()] = 1;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int d : m2_.rot[v]) {
          const int w = m2_.head[d];
          if (in_k[w] && !comp[w]) {
            comp[w] = 1;
            stack.push_back(w);
          }
        }
      }
      if (comp[t]) continue;
      for (int v = 0; v < n2; ++v)
        if (comp[v]) {
          from[v] = -1;
          queue.push_back(v);
        }
      int hit = -1;
      for (std::size_t i = 0; i < queue.size() && hit < 0; ++i)
        for (int d : m2_.rot[queue[i]]) {
          const int w = m2_.head[d];
          if (from[w] != -2 || blocked[w]) continue;
          from[w] = queue[i];
          if (w == t) {
            hit = w;
            break;
          }
          queue.push_back(w);
        }
      if (hit < 0) return false;
      for (int v = hit; v >= 0; v = from[v]) in_k[v] = 1;
    }
    return true;
  }

  bool connected(const std::vector<char>& q, char side) const {
    int start = -1, total = 0;
    for (std::size_t f = 0; f < faces_.size(); ++f)
      if (q[f] == side) {
        ++total;
        if (start < 0) start = static_cast<int>(f);
      }
    if (start < 0) return false;
    std::vector<char> wall(faces_.size()), mark(faces_.size(), 0);
    for (std::size_t f = 0; f < faces_.size(); ++f) wall[f] = q[f] != side;
    flood(start, wall, mark, 1);
    return std::count(mark.begin(), mark.end(), 1) == total;
  }

  MapFromRotation base_;
  DartMap m1_, m2_, m3_;
  std::vector<std::vector<int>> faces_;
  std::vector<int> face_of_;
  std::vector<std::vector<int>> around_;
};

}  // namespace oracle
