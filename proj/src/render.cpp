#include "spherelink/render.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "spherelink/dart_map.hpp"

namespace spherelink {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Disk {
  Point c;
  double r = 1;
};

Point at(const Disk& d, Point p) { return {d.c.x + d.r * p.x, d.c.y + d.r * p.y}; }

double cross(Point o, Point a, Point b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

double segment_distance(Point p, Point a, Point b) {
  const double dx = b.x - a.x, dy = b.y - a.y, len = dx * dx + dy * dy;
  const double t = len > 0 ? std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len, 0.0, 1.0) : 0.0;
  return dist(p, {a.x + t * dx, a.y + t * dy});
}

// Tutte layout with `ring` pinned to a regular polygon and `skip` left out.
std::vector<Point> tutte(const DartMap& m, const std::vector<int>& ring, int skip) {
  const int n = m.vertex_count;
  std::vector<int> pinned(n, -1);
  for (std::size_t i = 0; i < ring.size(); ++i) pinned[ring[i]] = static_cast<int>(i);
  std::vector<Eigen::Triplet<double>> trip;
  Eigen::VectorXd bx = Eigen::VectorXd::Zero(n), by = Eigen::VectorXd::Zero(n);
  for (int v = 0; v < n; ++v) {
    if (pinned[v] >= 0 || v == skip) {
      trip.emplace_back(v, v, 1.0);
      if (v == skip) continue;
      const double t = kPi / 2 + 2 * kPi * static_cast<double>(pinned[v]) / static_cast<double>(ring.size());
      bx[v] = std::cos(t);
      by[v] = std::sin(t);
      continue;
    }
    trip.emplace_back(v, v, static_cast<double>(m.rot[v].size()));
    for (int d : m.rot[v]) trip.emplace_back(v, m.head[d], -1.0);
  }
  Eigen::SparseMatrix<double> a(n, n);
  a.setFromTriplets(trip.begin(), trip.end());
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(a);
  const Eigen::VectorXd x = lu.solve(bx), y = lu.solve(by);
  std::vector<Point> out(n);
  for (int v = 0; v < n; ++v) out[v] = {x[v], y[v]};
  return out;
}

class Layout {
 public:
  explicit Layout(const SphericalArrangement& a) : a_(a) {
    const Graph& g = a.graph();
    d_.vertices.assign(g.vertex_count(), {});
    d_.edge_paths.assign(g.edge_count(), {});
    children_.assign(a.parts().size(), {});
    for (const auto& p : a.placements()) children_[p.parent_part].push_back(p);
    if (!a.parts().empty()) draw(0, -1, {{0, 0}, 1});
  }

  Drawing take() { return std::move(d_); }

 private:
  using Kids = std::vector<SphericalArrangement::Placement>;

  void draw(int pid, int outward_local, Disk disk) {
    const auto& part = a_.parts()[pid];
    if (part.vertices.size() == 1 && a_.rotation()[part.vertices.front()].empty()) {
      d_.vertices[part.vertices.front()] = {disk.c.x, disk.c.y + 0.75 * disk.r};
      place_row(children_[pid], {{disk.c.x, disk.c.y - 0.3 * disk.r}, 0.6 * disk.r});
      return;
    }
    const auto base = map_from_rotation(a_.rotation(), part.vertices);
    const DartMap m1 = barycentric_subdivision(base.map);
    const DartMap m2 = barycentric_subdivision(m1);
    const auto base_face = base.map.face_of_dart();
    const int n0 = base.map.vertex_count, e0 = base.map.edge_count(), n1 = m1.vertex_count;

    // centre vertex of each local face of the part
    std::map<int, int> centre_of_local;
    for (int lid : part.faces) {
      const Dart d = a_.local_faces()[lid].face.walk.front();
      centre_of_local[lid] = n0 + e0 + base_face[base.dart(d.from, d.to)];
    }
    std::map<int, Kids> by_local;
    for (const auto& c : children_[pid])
      for (int lid : part.faces)
        if (a_.local_faces()[lid].global == c.host_global) by_local[lid].push_back(c);
    int outward = outward_local;
    if (outward < 0) {
      // prefer an empty face, then a long one
      std::pair<bool, std::size_t> best{false, 0};
      for (int lid : part.faces) {
        const std::pair<bool, std::size_t> key{by_local.count(lid) == 0, a_.local_faces()[lid].face.walk.size()};
        if (outward < 0 || key > best) {
          best = key;
          outward = lid;
        }
      }
    }
    const Kids outside = by_local.count(outward) ? by_local[outward] : Kids{};
    by_local.erase(outward);
    const Disk inner = outside.empty() ? disk : Disk{disk.c, 0.7 * disk.r};

    const int skip = centre_of_local.at(outward);
    std::vector<int> ring;
    for (int d : m2.rot[skip]) ring.push_back(m2.head[d]);
    std::vector<Point> pos = tutte(m2, ring, skip);
    for (auto& p : pos) p = at(inner, p);

    for (int i = 0; i < n0; ++i) d_.vertices[base.original[i]] = pos[i];
    for (int k = 0; k < e0; ++k) {
      const int u = base.map.tail(2 * k), v = base.map.head[2 * k];
      std::vector<Point> path = {pos[u], pos[n1 + 2 * k], pos[n0 + k], pos[n1 + 2 * k + 1], pos[v]};
      const Vertex gu = base.original[u], gv = base.original[v];
      if (gu > gv) std::reverse(path.begin(), path.end());
      d_.edge_paths[a_.graph().edge_index(Edge(gu, gv))] = std::move(path);
    }

    for (const auto& [lid, kids] : by_local) {
      const Point c = pos[centre_of_local.at(lid)];
      double room = disk.r;
      for (int k = 0; k < e0; ++k) {
        const auto& path = d_.edge_paths[a_.graph().edge_index(Edge(base.original[base.map.tail(2 * k)],
                                                                    base.original[base.map.head[2 * k]]))];
        for (std::size_t i = 0; i + 1 < path.size(); ++i) room = std::min(room, segment_distance(c, path[i], path[i + 1]));
      }
      place_row(kids, {c, 0.9 * room});
    }
    const double k = static_cast<double>(outside.size());
    for (std::size_t j = 0; j < outside.size(); ++j) {
      const double t = -kPi / 2 + 2 * kPi * static_cast<double>(j) / k;
      const double r = disk.r * std::min(0.13, 0.85 * std::sin(kPi / std::max(k, 2.0)) * 0.9);
      draw_kid(outside[j], {{disk.c.x + 0.85 * disk.r * std::cos(t), disk.c.y + 0.85 * disk.r * std::sin(t)}, r});
    }
  }

  void draw_kid(const SphericalArrangement::Placement& c, Disk disk) {
    draw(c.part, a_.parts()[c.part].faces[c.outward], disk);
  }

  // Children side by side inside one disk.
  void place_row(const Kids& kids, Disk in) {
    const double k = static_cast<double>(kids.size());
    for (std::size_t j = 0; j < kids.size(); ++j) {
      const double off = (2.0 * static_cast<double>(j) + 1) / k - 1;
      draw_kid(kids[j], {{in.c.x + off * in.r, in.c.y}, 0.9 * in.r / k});
    }
  }

  const SphericalArrangement& a_;
  Drawing d_;
  std::vector<Kids> children_;
};

bool segments_cross(Point a, Point b, Point c, Point d) {
  constexpr double eps = 1e-12;
  const double d1 = cross(a, b, c), d2 = cross(a, b, d), d3 = cross(c, d, a), d4 = cross(c, d, b);
  if (((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) && ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps)))
    return true;
  auto on = [&](Point p, Point q, Point r, double o) {
    return std::abs(o) <= eps && std::min(p.x, q.x) - eps <= r.x && r.x <= std::max(p.x, q.x) + eps &&
           std::min(p.y, q.y) - eps <= r.y && r.y <= std::max(p.y, q.y) + eps;
  };
  return on(a, b, c, d1) || on(a, b, d, d2) || on(c, d, a, d3) || on(c, d, b, d4);
}

}  // namespace

Drawing layout(const SphericalArrangement& a) {
  if (!a.is_complete()) throw EmbeddingError("cannot draw an incomplete arrangement");
  return Layout(a).take();
}

bool has_crossings(const Drawing& dr) {
  struct Seg {
    Point a, b;
    int edge, index;
  };
  std::vector<Seg> segs;
  for (std::size_t e = 0; e < dr.edge_paths.size(); ++e)
    for (std::size_t i = 0; i + 1 < dr.edge_paths[e].size(); ++i)
      segs.push_back({dr.edge_paths[e][i], dr.edge_paths[e][i + 1], static_cast<int>(e), static_cast<int>(i)});
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Seg &s = segs[i], &t = segs[j];
      if (s.edge == t.edge && std::abs(s.index - t.index) <= 1) continue;
      const bool share = s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b;
      if (share) {
        // touching at a shared endpoint is fine unless the segments overlap
        if (std::abs(cross(s.a, s.b, t.a)) < 1e-12 && std::abs(cross(s.a, s.b, t.b)) < 1e-12) {
          const Point shared = (s.a == t.a || s.a == t.b) ? s.a : s.b;
          const Point x = shared == s.a ? s.b : s.a, y = shared == t.a ? t.b : t.a;
          if ((x.x - shared.x) * (y.x - shared.x) + (x.y - shared.y) * (y.y - shared.y) > 0) return true;
        }
        continue;
      }
      if (segments_cross(s.a, s.b, t.a, t.b)) return true;
    }
  return false;
}

std::string render_svg(const SphericalArrangement& a, const RenderOptions& opts) {
  const Drawing d = layout(a);
  const double size = opts.size, margin = 16, span = (size - 2 * margin) / 2;
  auto sx = [&](Point p) { return margin + (p.x + 1) * span; };
  auto sy = [&](Point p) { return margin + (1 - p.y) * span; };
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof buf,
                "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%d\" height=\"%d\" "
                "viewBox=\"0 0 %d %d\">\n",
                opts.size, opts.size, opts.size, opts.size);
  out += buf;
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n<g stroke=\"black\" stroke-width=\"1.5\" fill=\"none\">\n";
  for (const auto& path : d.edge_paths) {
    out += "<polyline points=\"";
    for (std::size_t i = 0; i < path.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%s%.3f,%.3f", i ? " " : "", sx(path[i]), sy(path[i]));
      out += buf;
    }
    out += "\"/>\n";
  }
  out += "</g>\n<g fill=\"black\" font-family=\"sans-serif\" font-size=\"10\">\n";
  for (std::size_t v = 0; v < d.vertices.size(); ++v) {
    const Point p = d.vertices[v];
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"3\"/>\n", sx(p), sy(p));
    out += buf;
    if (opts.labels) {
      std::snprintf(buf, sizeof buf, "<text x=\"%.3f\" y=\"%.3f\">%zu</text>\n", sx(p) + 4, sy(p) - 4, v);
      out += buf;
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace spherelink
