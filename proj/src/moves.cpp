#include "spherelink/moves.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "spherelink/canonical.hpp"
#include "spherelink/minor.hpp"

namespace spherelink {

namespace {

bool connected(const Graph& g) { return g.vertex_count() > 0 && g.components().size() == 1; }

void validate_vert_bar(const VertBarInput& in) {
  if (in.n < 3) throw MoveError("vert-bar needs at least 3 isolated vertices, got " + std::to_string(in.n));
  if (!connected(in.g0)) throw MoveError("vert-bar base graph must be connected");
  if (!is_planar(in.g0)) throw MoveError("vert-bar base graph must be planar");
}

std::vector<Vertex> range(int from, int count) {
  std::vector<Vertex> out(count);
  std::iota(out.begin(), out.end(), from);
  return out;
}

// True when placing `extra` isolated vertices in some global face of every arrangement
// of `base` leaves no type II link. Returns the first arrangement where no face works.
std::optional<SphericalArrangement> arrangement_without_free_face(const Graph& base, int extra,
                                                                  const IntrinsicOptions& opts) {
  auto big = std::make_shared<const Graph>(with_isolated(base, extra));
  const auto loose = range(base.vertex_count(), extra);
  const LinkSearch search{LinkShape::type2, opts.nested_only};
  EmbeddingOptions eo{opts.reflection, opts.jobs};
  for (const auto& a : spherical_arrangements(base, eo)) {
    const auto lifted = lift_arrangement(a, big);
    bool found = false;
    for (int f = 0; f < lifted.global_face_count() && !found; ++f)
      found = !is_linked(place_isolated(lifted, loose, f), search);
    if (!found) return a;
  }
  return std::nullopt;
}

std::vector<Edge> edge_classes(const Graph& g, bool contract) {
  std::set<std::string> seen;
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    const Graph h = contract ? contract_edge(g, e) : delete_edge(g, e);
    if (seen.insert(canonical_form(h)).second) out.push_back(e);
  }
  return out;
}

HypothesisResult edge_hypothesis(const VertBarInput& in, bool contract, const IntrinsicOptions& opts) {
  HypothesisResult h;
  h.id = contract ? "v" : "iv";
  h.statement = std::string("every embedding of g0 with an edge ") + (contract ? "contracted" : "deleted") +
                " has a face taking all " + std::to_string(in.n) + " isolated vertices without a type II link";
  const auto classes = edge_classes(in.g0, contract);
  for (const Edge& e : classes) {
    const Graph base = contract ? contract_edge(in.g0, e) : delete_edge(in.g0, e);
    if (auto bad = arrangement_without_free_face(base, in.n, opts)) {
      h.passed = false;
      h.detail = "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + ": some embedding has no such face";
      h.witness = *bad;
      h.witness_kind = "no-free-face";
      h.witness_isolated = in.n;
      return h;
    }
  }
  h.passed = true;
  h.detail = std::to_string(classes.size()) + " edge classes checked";
  return h;
}

void validate_sub_dangle(const SubDangleInput& in) {
  const Graph& g = in.g;
  const int n = g.vertex_count();
  auto ok = [n](Vertex v) { return v >= 0 && v < n; };
  if (!ok(in.e.u) || !ok(in.e.v) || !ok(in.s1) || !ok(in.s2)) throw MoveError("sub-dangle vertex out of range");
  std::set<Vertex> distinct{in.e.u, in.e.v, in.s1, in.s2};
  if (distinct.size() != 4) throw MoveError("sub-dangle endpoints and subdivisions must be distinct");
  if (g.degree(in.s1) != 2 || g.degree(in.s2) != 2) throw MoveError("subdivision vertices must have degree 2");
  if (!g.has_edge(in.s1, in.s2)) throw MoveError("subdivisions must be consecutive");
  const bool forward = g.has_edge(in.e.u, in.s1) && g.has_edge(in.s2, in.e.v);
  const bool backward = g.has_edge(in.e.v, in.s1) && g.has_edge(in.s2, in.e.u);
  if (!forward && !backward) throw MoveError("subdivisions do not lie on a path between the endpoints");
}

struct Contracted {
  Graph graph;
  Vertex s1, near, far;
};

Contracted contract_far(const SubDangleInput& in) {
  const Vertex far = sub_dangle_far_endpoint(in);
  const Vertex near = far == in.e.u ? in.e.v : in.e.u;
  const auto step = MinorStep::contract_edge(Edge(in.s2, far));
  Contracted c;
  c.graph = apply_minor_step(in.g, step);
  c.s1 = vertex_after_step(in.g, step, in.s1);
  c.near = vertex_after_step(in.g, step, near);
  c.far = vertex_after_step(in.g, step, far);
  return c;
}

HypothesisResult not_intrinsic(std::string id, std::string statement, const Graph& g, const IntrinsicOptions& opts) {
  HypothesisResult h;
  h.id = std::move(id);
  h.statement = std::move(statement);
  auto free = link_free_arrangement(g, LinkShape::type2, opts);
  h.passed = free.has_value();
  h.detail = describe(g) + (h.passed ? " has a link-free embedding" : " is intrinsically type II linked");
  h.witness = std::move(free);
  if (h.witness) h.witness_kind = "link-free";
  return h;
}

HypothesisResult minimal_hypothesis(const Graph& g, const IntrinsicOptions& opts) {
  HypothesisResult h;
  h.id = "i";
  h.statement = "graph is minor-minimal intrinsically type II linked";
  const auto m = is_minor_minimal(g, LinkShape::type2, opts);
  h.passed = m.minimal;
  h.detail = m.minimal ? std::to_string(m.refutations.size()) + " immediate minor classes refuted" : m.reason;
  if (!m.intrinsic.holds && m.intrinsic.free_arrangement) {
    h.witness = m.intrinsic.free_arrangement;
    h.witness_kind = "link-free";
  }
  return h;
}

}  // namespace

bool MoveReport::all_passed() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const HypothesisResult& h) { return h.passed; });
}

const HypothesisResult& MoveReport::at(const std::string& id) const {
  for (const auto& h : hypotheses)
    if (h.id == id) return h;
  throw std::out_of_range("no hypothesis " + id);
}

SphericalArrangement lift_arrangement(const SphericalArrangement& a, std::shared_ptr<const Graph> larger) {
  const Graph& small = a.graph();
  if (larger->vertex_count() < small.vertex_count()) throw EmbeddingError("target graph is smaller");
  for (const Edge& e : small.edges())
    if (!larger->has_edge(e.u, e.v)) throw EmbeddingError("target graph is missing an edge");
  Rotation rot = a.rotation();
  rot.resize(larger->vertex_count());
  std::vector<std::vector<Vertex>> parts;
  for (const auto& p : a.parts()) parts.push_back(p.vertices);
  std::vector<int> globals;
  for (const auto& lf : a.local_faces()) globals.push_back(lf.global);
  if (parts.empty()) return SphericalArrangement(std::move(larger));
  return SphericalArrangement(std::move(larger), std::move(rot), std::move(parts), std::move(globals));
}

Graph apply_vert_bar(const VertBarInput& in) {
  validate_vert_bar(in);
  return disjoint_union(in.g0, complete(2));
}

MoveReport check_vert_bar(const VertBarInput& in, const IntrinsicOptions& opts) {
  validate_vert_bar(in);
  MoveReport r;
  r.move = "vert-bar";
  r.notes.push_back("g0 - e is read as edge deletion and g0 \\ e as edge contraction");
  r.hypotheses.push_back(minimal_hypothesis(with_isolated(in.g0, in.n), opts));

  HypothesisResult ii;
  ii.id = "ii";
  ii.statement = "graph is a connected planar g0 plus at least 3 isolated vertices";
  ii.passed = true;
  ii.detail = describe(in.g0) + " plus " + std::to_string(in.n) + " isolated vertices";
  r.hypotheses.push_back(ii);

  HypothesisResult iii;
  iii.id = "iii";
  iii.statement = "two isolated vertices in any one face of any embedding of g0 give a type II link";
  auto pair = std::make_shared<const Graph>(with_isolated(in.g0, 2));
  const auto loose = range(in.g0.vertex_count(), 2);
  const LinkSearch search{LinkShape::type2, opts.nested_only};
  int faces = 0;
  iii.passed = true;
  for (const auto& a : spherical_arrangements(in.g0, {opts.reflection, opts.jobs})) {
    const auto lifted = lift_arrangement(a, pair);
    for (int f = 0; f < lifted.global_face_count() && iii.passed; ++f) {
      ++faces;
      auto placed = place_isolated(lifted, loose, f);
      if (!is_linked(placed, search)) {
        iii.passed = false;
        iii.detail = "face " + std::to_string(f) + " admits a link-free placement";
        iii.witness = placed;
        iii.witness_kind = "link-free";
      }
    }
    if (!iii.passed) break;
  }
  if (iii.passed) iii.detail = std::to_string(faces) + " faces checked";
  r.hypotheses.push_back(iii);

  r.hypotheses.push_back(edge_hypothesis(in, false, opts));
  r.hypotheses.push_back(edge_hypothesis(in, true, opts));
  return r;
}

Vertex sub_dangle_far_endpoint(const SubDangleInput& in) {
  validate_sub_dangle(in);
  return in.g.has_edge(in.s2, in.e.v) && in.g.has_edge(in.e.u, in.s1) ? in.e.v : in.e.u;
}

Graph apply_sub_dangle(const SubDangleInput& in) {
  const Contracted c = contract_far(in);
  return attach_pendant(c.graph, c.s1);
}

MoveReport check_sub_dangle(const SubDangleInput& in, const IntrinsicOptions& opts) {
  validate_sub_dangle(in);
  MoveReport r;
  r.move = "sub-dangle";
  r.notes.push_back("hypothesis v is checked with the pendant at each endpoint of e");
  r.hypotheses.push_back(minimal_hypothesis(in.g, opts));

  HypothesisResult ii;
  ii.id = "ii";
  ii.statement = "graph is connected and planar";
  ii.passed = connected(in.g) && is_planar(in.g);
  ii.detail = describe(in.g);
  r.hypotheses.push_back(ii);

  HypothesisResult iii;
  iii.id = "iii";
  iii.statement = "edge carries two consecutive degree-2 subdivisions";
  iii.passed = true;
  iii.detail = "path " + std::to_string(sub_dangle_far_endpoint(in) == in.e.v ? in.e.u : in.e.v) + "-" +
               std::to_string(in.s1) + "-" + std::to_string(in.s2) + "-" + std::to_string(sub_dangle_far_endpoint(in));
  r.hypotheses.push_back(iii);

  const Contracted c = contract_far(in);
  r.hypotheses.push_back(not_intrinsic("iv", "contracted graph plus an isolated vertex is not intrinsically type II linked",
                                       with_isolated(c.graph, 1), opts));
  HypothesisResult v = not_intrinsic("v", "contracted graph with a pendant at an endpoint of e is not intrinsically type II linked",
                                     attach_pendant(c.graph, c.near), opts);
  if (v.passed) {
    HypothesisResult other = not_intrinsic("v", v.statement, attach_pendant(c.graph, c.far), opts);
    if (!other.passed) v = other;
    else v.detail += "; " + other.detail;
  }
  r.hypotheses.push_back(v);
  return r;
}

}  // namespace spherelink
