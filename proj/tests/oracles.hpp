#pragma once

// Slow reference implementations used only to cross-check the library.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "spherelink/embedding.hpp"
#include "spherelink/graph.hpp"
#include "spherelink/linkage.hpp"

namespace oracle {

using namespace spherelink;

inline std::vector<Rotation> genus0_rotations(const Graph& connected) {
  std::vector<Rotation> out;
  for_each_rotation_system(connected, [&](const Rotation& r) {
    if (is_spherical(connected, r)) out.push_back(r);
    return true;
  });
  return out;
}

// Every labelled arrangement reachable by inserting the components in index order.
inline std::vector<SphericalArrangement> raw_arrangements(const Graph& g) {
  auto shared = std::make_shared<const Graph>(g);
  std::vector<SphericalArrangement> states{SphericalArrangement(shared)};
  for (const auto& comp : g.components()) {
    std::vector<Rotation> rots;
    if (comp.size() == 1) {
      rots.emplace_back(g.vertex_count());
    } else {
      const Graph sub = g.induced(comp);
      for (const Rotation& r : genus0_rotations(sub)) {
        Rotation full(g.vertex_count());
        for (std::size_t i = 0; i < comp.size(); ++i)
          for (Vertex w : r[i]) full[comp[i]].push_back(comp[w]);
        rots.push_back(full);
      }
    }
    std::vector<SphericalArrangement> next;
    for (const auto& s : states) {
      for (const Rotation& r : rots) {
        const int own = static_cast<int>(trace_faces(r, comp).size());
        const int hosts = s.parts().empty() ? 1 : s.global_face_count();
        const int outs = s.parts().empty() ? 1 : own;
        for (int h = 0; h < hosts; ++h)
          for (int o = 0; o < outs; ++o) next.push_back(s.with_part(comp, r, h, o));
      }
    }
    states = std::move(next);
  }
  return states;
}

inline bool cyclic_equal(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t s = 0; s < a.size(); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = a[i] == b[(s + i) % b.size()];
    if (ok) return true;
  }
  return false;
}

// Partition of local faces into global faces, as sets of local face ids.
inline std::set<std::set<int>> global_partition(const SphericalArrangement& a, const std::vector<int>& local_map) {
  std::set<std::set<int>> out;
  for (int gi = 0; gi < a.global_face_count(); ++gi) {
    std::set<int> s;
    for (int lid : a.global_face(gi)) s.insert(local_map.empty() ? lid : local_map[lid]);
    out.insert(s);
  }
  return out;
}

// Tries every vertex bijection directly; no certificate involved.
inline bool brute_equivalent(const SphericalArrangement& a, const SphericalArrangement& b, bool reflection) {
  const Graph& ga = a.graph();
  const Graph& gb = b.graph();
  const int n = ga.vertex_count();
  if (n != gb.vertex_count() || ga.edge_count() != gb.edge_count()) return false;
  std::vector<Vertex> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  const auto target = global_partition(b, {});
  do {
    bool edges_ok = true;
    for (const Edge& e : ga.edges())
      if (!gb.has_edge(pi[e.u], pi[e.v])) {
        edges_ok = false;
        break;
      }
    if (!edges_ok) continue;
    for (int flip = 0; flip <= (reflection ? 1 : 0); ++flip) {
      bool ok = true;
      for (Vertex v = 0; v < n && ok; ++v) {
        std::vector<Vertex> ring;
        for (Vertex w : a.rotation()[v]) ring.push_back(pi[w]);
        if (flip) std::reverse(ring.begin(), ring.end());
        ok = cyclic_equal(ring, b.rotation()[pi[v]]);
      }
      if (!ok) continue;
      std::vector<int> local_map(a.local_faces().size());
      for (std::size_t lid = 0; lid < local_map.size(); ++lid) {
        const Face& f = a.local_faces()[lid].face;
        if (f.walk.empty()) {
          const Vertex v = pi[f.vertices.front()];
          local_map[lid] = b.parts()[b.part_of_vertex(v)].faces.front();
        } else {
          const Dart d = f.walk.front();
          local_map[lid] = flip ? b.local_face_of_dart(pi[d.to], pi[d.from]) : b.local_face_of_dart(pi[d.from], pi[d.to]);
        }
      }
      if (global_partition(a, local_map) == target) return true;
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return false;
}

inline int brute_class_count(const Graph& g, bool reflection) {
  std::vector<SphericalArrangement> reps;
  for (const auto& a : raw_arrangements(g)) {
    bool fresh = true;
    for (const auto& r : reps)
      if (brute_equivalent(a, r, reflection)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(a);
  }
  return static_cast<int>(reps.size());
}

// Split test straight from the complement: pieces split iff some bipartition (S, T) has
// S inside one component of the sphere minus T and T inside one component of the
// sphere minus S. Components are computed on the cell graph (vertices, edge
// midpoints, face centres) with the removed pieces' cells deleted.
class ComplementOracle {
 public:
  explicit ComplementOracle(const SphericalArrangement& a) : a_(a) {
    const Graph& g = a.graph();
    n_ = g.vertex_count();
    m_ = g.edge_count();
    nodes_ = n_ + m_ + a.global_face_count();
    adj_.assign(nodes_, {});
    for (int i = 0; i < m_; ++i) {
      const Edge e = g.edges()[i];
      link(e.u, n_ + i);
      link(e.v, n_ + i);
      link(n_ + i, bary(a.global_face_of_dart(e.u, e.v)));
      link(n_ + i, bary(a.global_face_of_dart(e.v, e.u)));
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (!a.is_placed(v)) continue;
      if (a.rotation()[v].empty()) link(v, bary(a.global_face_of_vertex(v)));
      for (Vertex w : a.rotation()[v]) link(v, bary(a.global_face_of_dart(v, w)));
    }
  }

  bool split(const LinkPieces& p) const {
    const int k = static_cast<int>(p.size());
    std::vector<std::vector<int>> cells(k);
    for (int i = 0; i < k; ++i) {
      if (i < static_cast<int>(p.cycles.size())) {
        const Cycle& c = p.cycles[i];
        for (std::size_t j = 0; j < c.size(); ++j) {
          cells[i].push_back(c[j]);
          cells[i].push_back(n_ + a_.graph().edge_index(Edge(c[j], c[(j + 1) % c.size()])));
        }
      } else {
        const auto& pp = p.pairs[i - p.cycles.size()];
        cells[i] = {pp.first, pp.second};
      }
    }
    for (std::uint32_t s = 1; s + 1 < (1u << k); ++s) {
      if (!(s & 1)) continue;
      const std::uint32_t t = ((1u << k) - 1) ^ s;
      if (one_component(cells, s, t) && one_component(cells, t, s)) return true;
    }
    return false;
  }

 private:
  int bary(int f) const { return n_ + m_ + f; }
  void link(int x, int y) {
    adj_[x].push_back(y);
    adj_[y].push_back(x);
  }

  // All cells of pieces in `keep` lie in one component once pieces in `drop` are removed.
  bool one_component(const std::vector<std::vector<int>>& cells, std::uint32_t keep, std::uint32_t drop) const {
    std::vector<char> removed(nodes_, 0);
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (drop >> i & 1)
        for (int c : cells[i]) removed[c] = 1;
    int start = -1;
    for (std::size_t i = 0; i < cells.size() && start < 0; ++i)
      if (keep >> i & 1) start = cells[i].front();
    std::vector<char> seen(nodes_, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : adj_[x])
        if (!seen[y] && !removed[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (keep >> i & 1)
        for (int c : cells[i])
          if (!seen[c]) return false;
    return true;
  }

  const SphericalArrangement& a_;
  int n_ = 0, m_ = 0, nodes_ = 0;
  std::vector<std::vector<int>> adj_;
};

// Every valid selection of at most `max_pieces` pieces (cycles and pairs).
template <class Visit>
void for_each_selection(const Graph& g, int max_pieces, Visit&& visit) {
  const auto cs = cycles(g);
  std::vector<PointPair> pairs;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) pairs.emplace_back(u, v);
  LinkPieces cur;
  std::uint64_t used = 0;
  auto bits = [](const std::vector<Vertex>& vs) {
    std::uint64_t m = 0;
    for (Vertex v : vs) m |= std::uint64_t{1} << v;
    return m;
  };
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t ci, std::size_t pi) {
    if (cur.size() > 0) visit(static_cast<const LinkPieces&>(cur));
    if (static_cast<int>(cur.size()) == max_pieces) return;
    if (cur.pairs.empty()) {
      for (std::size_t i = ci; i < cs.size(); ++i) {
        const auto m = bits(cs[i]);
        if (used & m) continue;
        used |= m;
        cur.cycles.push_back(cs[i]);
        rec(i + 1, 0);
        cur.cycles.pop_back();
        used ^= m;
      }
    }
    for (std::size_t i = pi; i < pairs.size(); ++i) {
      const auto m = bits({pairs[i].first, pairs[i].second});
      if (used & m) continue;
      used |= m;
      cur.pairs.push_back(pairs[i]);
      rec(cs.size(), i + 1);
      cur.pairs.pop_back();
      used ^= m;
    }
  };
  rec(0, 0);
}

}  // namespace oracle
