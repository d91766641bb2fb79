#include "spherelink/linkage.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace spherelink {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Relabels union-find roots over global faces to 0..k-1 in order of first face.
std::vector<int> compress(UnionFind& uf, int faces, int& count) {
  std::vector<int> id(faces, -1), out(faces);
  count = 0;
  for (int f = 0; f < faces; ++f) {
    const int r = uf.find(f);
    if (id[r] < 0) id[r] = count++;
    out[f] = id[r];
  }
  return out;
}

std::vector<Edge> cycle_edges(const Cycle& c) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < c.size(); ++i) es.emplace_back(c[i], c[(i + 1) % c.size()]);
  return es;
}

// Region (face class id) holding a vertex that is not on any separating cycle.
int vertex_class(const SphericalArrangement& a, const std::vector<int>& cls, Vertex v) {
  return cls[a.global_face_of_vertex(v)];
}

}  // namespace

std::vector<Cycle> cycles(const Graph& g) {
  std::vector<Cycle> out;
  const int n = g.vertex_count();
  std::vector<char> on(n, 0);
  Cycle path;
  std::function<void(Vertex, Vertex)> extend = [&](Vertex s, Vertex v) {
    for (Vertex w : g.neighbors(v)) {
      if (w == s && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      if (w <= s || on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      extend(s, w);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    on[s] = 1;
    extend(s, s);
    on[s] = 0;
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

void validate_pieces(const SphericalArrangement& a, const LinkPieces& p) {
  const Graph& g = a.graph();
  std::vector<char> used(g.vertex_count(), 0);
  auto claim = [&](Vertex v) {
    if (!g.has_vertex(v)) throw LinkError("piece vertex " + std::to_string(v) + " out of range");
    if (!a.is_placed(v)) throw LinkError("piece vertex " + std::to_string(v) + " is not embedded");
    if (used[v]) throw LinkError("pieces share vertex " + std::to_string(v));
    used[v] = 1;
  };
  for (const Cycle& c : p.cycles) {
    if (c.size() < 3) throw LinkError("cycle piece shorter than 3");
    for (const Edge& e : cycle_edges(c))
      if (!g.has_edge(e)) throw LinkError("cycle piece uses a missing edge");
    for (Vertex v : c) claim(v);
  }
  for (const auto& [u, v] : p.pairs) {
    if (u == v) throw LinkError("point pair with equal vertices");
    claim(u);
    claim(v);
  }
}

int CycleSides::face_count(int side) const {
  return static_cast<int>(std::count(face_side.begin(), face_side.end(), side));
}

CycleSides sides(const SphericalArrangement& a, const Cycle& c) {
  LinkPieces p;
  p.cycles.push_back(c);
  validate_pieces(a, p);
  const RegionStructure rs = build_regions(a, p);
  CycleSides out;
  out.face_side = rs.region_of_face;
  const int n = a.graph().vertex_count();
  out.vertex_side.assign(n, -1);
  std::vector<char> on(n, 0);
  for (Vertex v : c) on[v] = 1;
  for (Vertex v = 0; v < n; ++v)
    if (!on[v] && a.is_placed(v)) out.vertex_side[v] = vertex_class(a, rs.region_of_face, v);
  return out;
}

RegionStructure build_regions(const SphericalArrangement& a, const LinkPieces& p) {
  validate_pieces(a, p);
  const Graph& g = a.graph();
  const int faces = a.global_face_count();
  std::vector<char> cut(g.edge_count(), 0);
  for (const Cycle& c : p.cycles)
    for (const Edge& e : cycle_edges(c)) cut[g.edge_index(e)] = 1;
  UnionFind uf(faces);
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge e = g.edges()[i];
    if (cut[i] || !a.is_placed(e.u)) continue;
    uf.unite(a.global_face_of_dart(e.u, e.v), a.global_face_of_dart(e.v, e.u));
  }
  RegionStructure rs;
  rs.region_of_face = compress(uf, faces, rs.region_count);
  rs.boundary.assign(rs.region_count, {});
  rs.points.assign(rs.region_count, {});
  rs.region_of_point.assign(g.vertex_count(), -1);
  for (std::size_t i = 0; i < p.cycles.size(); ++i) {
    const Cycle& c = p.cycles[i];
    const int r1 = rs.region_of_face[a.global_face_of_dart(c[0], c[1])];
    const int r2 = rs.region_of_face[a.global_face_of_dart(c[1], c[0])];
    if (r1 == r2) throw LinkError("cycle piece does not separate the sphere");
    rs.cycle_regions.emplace_back(r1, r2);
    rs.boundary[r1].push_back(static_cast<int>(i));
    rs.boundary[r2].push_back(static_cast<int>(i));
  }
  for (const auto& [u, v] : p.pairs) {
    for (Vertex x : {u, v}) {
      const int r = vertex_class(a, rs.region_of_face, x);
      rs.region_of_point[x] = r;
      rs.points[r].push_back(x);
    }
  }
  return rs;
}

namespace {

// For every region, the boundary cycle of `from` through which it is reached (-1 for from).
std::vector<int> first_cycle_from(const RegionStructure& rs, int from) {
  std::vector<int> via(rs.region_count, -2);
  via[from] = -1;
  std::vector<int> queue{from};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int r = queue[i];
    for (int c : rs.boundary[r]) {
      const auto [x, y] = rs.cycle_regions[c];
      const int other = x == r ? y : x;
      if (via[other] != -2) continue;
      via[other] = r == from ? c : via[r];
      queue.push_back(other);
    }
  }
  return via;
}

}  // namespace

std::vector<int> RegionStructure::beyond(const LinkPieces& p, int region, int cycle) const {
  const std::vector<int> via = first_cycle_from(*this, region);
  std::vector<int> out;
  const int k = static_cast<int>(p.cycles.size());
  for (int i = 0; i < k; ++i) {
    const auto [x, y] = cycle_regions[i];
    const int far = x == region ? y : x;
    if (via[far] == cycle) out.push_back(i);
  }
  for (std::size_t j = 0; j < p.pairs.size(); ++j) {
    const int ru = region_of_point[p.pairs[j].first], rv = region_of_point[p.pairs[j].second];
    if (via[ru] == cycle || via[rv] == cycle) out.push_back(k + static_cast<int>(j));
  }
  return out;
}

bool is_nonsplit(const SphericalArrangement& a, const LinkPieces& p) {
  const RegionStructure rs = build_regions(a, p);
  const int n = a.graph().vertex_count();
  const int k = static_cast<int>(p.cycles.size());
  for (int r = 0; r < rs.region_count; ++r) {
    // items: boundary cycles 0..k-1, points k + vertex
    const std::vector<int> via = first_cycle_from(rs, r);
    UnionFind uf(k + n);
    auto item_of_point = [&](Vertex x) { return rs.region_of_point[x] == r ? k + x : via[rs.region_of_point[x]]; };
    for (const auto& [u, v] : p.pairs) uf.unite(item_of_point(u), item_of_point(v));
    std::vector<int> items(rs.boundary[r].begin(), rs.boundary[r].end());
    for (Vertex x : rs.points[r]) items.push_back(k + x);
    for (std::size_t i = 1; i < items.size(); ++i)
      if (uf.find(items[i]) != uf.find(items[0])) return false;
  }
  return true;
}

std::string to_string(LinkShape s) {
  switch (s) {
    case LinkShape::two_link: return "2link";
    case LinkShape::type1: return "type1";
    case LinkShape::type2: return "type2";
  }
  return "?";
}

LinkShape link_shape_from_string(const std::string& s) {
  if (s == "2link") return LinkShape::two_link;
  if (s == "type1") return LinkShape::type1;
  if (s == "type2") return LinkShape::type2;
  throw LinkError("unknown link shape '" + s + "' (expected 2link, type1 or type2)");
}

namespace {

std::uint64_t mask_of(const Cycle& c) {
  std::uint64_t m = 0;
  for (Vertex v : c) m |= std::uint64_t{1} << v;
  return m;
}

class LinkFinder {
 public:
  LinkFinder(const SphericalArrangement& a, const LinkSearch& s, bool first_only)
      : a_(a), s_(s), first_only_(first_only), all_(cycles(a.graph())) {
    for (const Cycle& c : all_) {
      masks_.push_back(mask_of(c));
      sides_.push_back(sides(a, c).vertex_side);
    }
  }

  std::vector<LinkPieces> run() {
    switch (s_.shape) {
      case LinkShape::two_link: two_link(); break;
      case LinkShape::type1: type1(); break;
      case LinkShape::type2: type2(); break;
    }
    return std::move(out_);
  }

 private:
  bool done() const { return first_only_ && !out_.empty(); }

  void offer(LinkPieces p) {
    if (is_nonsplit(a_, p)) out_.push_back(std::move(p));
  }

  // Pairs of vertices off `used` that the cycle with index i puts on opposite sides.
  std::vector<PointPair> crossing_pairs(std::size_t i, std::uint64_t used) const {
    std::vector<PointPair> out;
    const auto& side = sides_[i];
    const int n = a_.graph().vertex_count();
    for (Vertex u = 0; u < n; ++u) {
      if (side[u] < 0 || used >> u & 1) continue;
      for (Vertex v = u + 1; v < n; ++v) {
        if (side[v] < 0 || used >> v & 1) continue;
        if (side[u] != side[v]) out.emplace_back(u, v);
      }
    }
    return out;
  }

  void two_link() {
    for (std::size_t i = 0; i < all_.size() && !done(); ++i)
      for (const PointPair& pp : crossing_pairs(i, masks_[i])) {
        if (done()) return;
        offer({{all_[i]}, {pp}});
      }
  }

  void type1() {
    for (std::size_t i = 0; i < all_.size() && !done(); ++i) {
      for (std::size_t j = i + 1; j < all_.size() && !done(); ++j) {
        if (masks_[i] & masks_[j]) continue;
        const std::uint64_t used = masks_[i] | masks_[j];
        for (const PointPair& pp : crossing_pairs(i, used)) {
          if (done()) return;
          if (sides_[j][pp.first] == sides_[j][pp.second]) continue;
          LinkPieces p{{all_[i], all_[j]}, {pp}};
          if (s_.nested_only && !nested(p)) continue;
          offer(std::move(p));
        }
      }
    }
  }

  void type2() {
    for (std::size_t i = 0; i < all_.size() && !done(); ++i) {
      const auto pairs = crossing_pairs(i, masks_[i]);
      for (std::size_t x = 0; x < pairs.size() && !done(); ++x) {
        for (std::size_t y = x + 1; y < pairs.size() && !done(); ++y) {
          const auto& p = pairs[x];
          const auto& q = pairs[y];
          if (p.first == q.first || p.first == q.second || p.second == q.first || p.second == q.second) continue;
          offer({{all_[i]}, {p, q}});
        }
      }
    }
  }

  // Each point lies in a region bounded by a single cycle.
  bool nested(const LinkPieces& p) const {
    const RegionStructure rs = build_regions(a_, p);
    for (const auto& [u, v] : p.pairs)
      for (Vertex x : {u, v})
        if (rs.boundary[rs.region_of_point[x]].size() != 1) return false;
    return true;
  }

  const SphericalArrangement& a_;
  LinkSearch s_;
  bool first_only_;
  std::vector<Cycle> all_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<int>> sides_;
  std::vector<LinkPieces> out_;
};

}  // namespace

std::vector<LinkPieces> find_links(const SphericalArrangement& a, const LinkSearch& s) {
  return LinkFinder(a, s, false).run();
}

std::optional<LinkPieces> first_link(const SphericalArrangement& a, const LinkSearch& s) {
  auto found = LinkFinder(a, s, true).run();
  if (found.empty()) return std::nullopt;
  return found.front();
}

bool is_linked(const SphericalArrangement& a, const LinkSearch& s) { return first_link(a, s).has_value(); }

}  // namespace spherelink
