#include "spherelink/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "spherelink/canonical.hpp"
#include "spherelink/minor.hpp"

namespace spherelink {

using Json = nlohmann::ordered_json;

namespace {

bool looks_like_graph6(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < 63 || c > 126) return false;
  return true;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Json pieces_json(const LinkPieces& p) {
  Json j;
  j["cycles"] = p.cycles;
  Json pairs = Json::array();
  for (const auto& [u, v] : p.pairs) pairs.push_back({u, v});
  j["pairs"] = pairs;
  return j;
}

LinkPieces pieces_from(const Json& j) {
  LinkPieces p;
  p.cycles = j.at("cycles").get<std::vector<Cycle>>();
  for (const auto& pr : j.at("pairs")) p.pairs.emplace_back(pr.at(0).get<Vertex>(), pr.at(1).get<Vertex>());
  return p;
}

Json arrangement_json(const SphericalArrangement& a) {
  Json j;
  j["rotation"] = a.rotation();
  Json parts = Json::array();
  for (const auto& p : a.parts()) parts.push_back(p.vertices);
  j["parts"] = parts;
  std::vector<int> faces;
  for (const auto& lf : a.local_faces()) faces.push_back(lf.global);
  j["faces"] = faces;
  return j;
}

SphericalArrangement arrangement_from(const Graph& g, const Json& j) {
  auto rot = j.at("rotation").get<Rotation>();
  auto parts = j.at("parts").get<std::vector<std::vector<Vertex>>>();
  auto faces = j.at("faces").get<std::vector<int>>();
  if (static_cast<int>(rot.size()) != g.vertex_count()) throw EmbeddingError("rotation size does not match graph");
  auto shared = std::make_shared<const Graph>(g);
  if (parts.empty()) return SphericalArrangement(shared);
  return SphericalArrangement(shared, std::move(rot), std::move(parts), std::move(faces));
}

Json settings_json(const IntrinsicOptions& opts) {
  Json j;
  j["reflection"] = opts.reflection;
  j["nested_only"] = opts.nested_only;
  return j;
}

Json step_json(const MinorStep& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  if (s.kind == MinorKind::delete_vertex) {
    j["vertex"] = s.vertex;
  } else {
    j["edge"] = {s.edge.u, s.edge.v};
  }
  return j;
}

MinorStep step_from(const Json& j) {
  const MinorKind k = minor_kind_from_string(j.at("kind").get<std::string>());
  if (k == MinorKind::delete_vertex) return MinorStep::delete_vertex(j.at("vertex").get<Vertex>());
  const Edge e(j.at("edge").at(0).get<Vertex>(), j.at("edge").at(1).get<Vertex>());
  return k == MinorKind::delete_edge ? MinorStep::delete_edge(e) : MinorStep::contract_edge(e);
}

bool shape_matches(const LinkPieces& p, LinkShape s) {
  switch (s) {
    case LinkShape::two_link:
      return p.cycles.size() == 1 && p.pairs.size() == 1;
    case LinkShape::type1:
      return p.cycles.size() == 2 && p.pairs.size() == 1;
    case LinkShape::type2:
      return p.cycles.size() == 1 && p.pairs.size() == 2;
  }
  return false;
}

Json verdict_body(const Graph& g, LinkShape property, const IntrinsicVerdict& v, const IntrinsicOptions& opts) {
  Json j;
  j["graph"] = save_graph(g);
  j["property"] = to_string(property);
  j["settings"] = settings_json(opts);
  j["verdict"] = v.holds;
  j["arrangements"] = v.arrangement_count;
  Json ws = Json::array();
  for (const auto& w : v.witnesses) {
    Json e;
    e["arrangement"] = arrangement_json(w.arrangement);
    e["pieces"] = pieces_json(w.pieces);
    ws.push_back(e);
  }
  j["witnesses"] = ws;
  if (v.free_arrangement) j["free_arrangement"] = arrangement_json(*v.free_arrangement);
  return j;
}

}  // namespace

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph load_graph(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (n < 0 && line.rfind("n ", 0) != 0 && line != "n") {
      if (line.rfind(">>graph6<<", 0) == 0) continue;
      if (!looks_like_graph6(line)) throw ParseError(lineno, "expected `n <vertex_count>`");
      try {
        return graph6_decode(line);
      } catch (const GraphError& e) {
        throw ParseError(lineno, e.what());
      }
    }
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "n") {
      if (n >= 0) throw ParseError(lineno, "vertex count given twice");
      if (!(ls >> n) || n < 0) throw ParseError(lineno, "bad vertex count");
    } else if (tag == "e") {
      long long i = 0, k = 0;
      if (!(ls >> i >> k)) throw ParseError(lineno, "edge needs two indices");
      if (i < 0 || k < 0 || i >= n || k >= n) throw ParseError(lineno, "edge index out of range");
      if (i >= k) throw ParseError(lineno, "edge must satisfy i < j");
      const Edge e(static_cast<Vertex>(i), static_cast<Vertex>(k));
      if (!seen.insert(e).second) throw ParseError(lineno, "duplicate edge");
      edges.push_back(e);
    } else {
      throw ParseError(lineno, "unknown line tag `" + tag + "`");
    }
    std::string rest;
    if (ls >> rest && rest[0] != '#') throw ParseError(lineno, "trailing text");
  }
  if (n < 0) throw ParseError(lineno, "missing vertex count");
  return Graph(n, edges);
}

std::string save_graph(const Graph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::string graph6_encode(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 62) throw GraphError("graph6 encoding supports at most 62 vertices");
  std::string out(1, static_cast<char>(63 + n));
  int bits = 0, acc = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        bits = acc = 0;
      }
    }
  if (bits) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph graph6_decode(const std::string& raw) {
  std::string s = trim(raw);
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (!looks_like_graph6(s)) throw GraphError("not a graph6 string");
  if (s[0] == 126) throw GraphError("graph6 graphs above 62 vertices are not supported");
  const int n = s[0] - 63;
  const std::size_t need = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
  if (s.size() != 1 + need) throw GraphError("graph6 string has the wrong length");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = s[1 + k / 6] - 63;
      if (byte >> (5 - k % 6) & 1) edges.emplace_back(i, j);
    }
  return Graph(n, edges);
}

std::vector<Graph> load_graph6_lines(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::vector<Graph> out;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line == ">>graph6<<") continue;
    try {
      out.push_back(graph6_decode(line));
    } catch (const GraphError& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return out;
}

std::string arrangement_to_json(const SphericalArrangement& a) { return arrangement_json(a).dump(); }

std::string arrangement_to_text(const SphericalArrangement& a) {
  std::string out;
  for (std::size_t pid = 0; pid < a.parts().size(); ++pid) {
    out += "part " + std::to_string(pid) + "\n";
    for (Vertex v : a.parts()[pid].vertices) {
      out += "rot " + std::to_string(v) + ":";
      for (Vertex w : a.rotation()[v]) out += " " + std::to_string(w);
      out += "\n";
    }
  }
  for (const auto& p : a.placements())
    out += "place " + std::to_string(p.part) + " in-face " + std::to_string(p.host_global) + " outward " +
           std::to_string(p.outward) + "\n";
  for (int g = 0; g < a.global_face_count(); ++g) {
    out += "face " + std::to_string(g) + ":";
    bool first = true;
    for (int lid : a.global_face(g)) {
      const Face& f = a.local_faces()[lid].face;
      if (!first) out += " |";
      first = false;
      if (f.walk.empty()) {
        out += " " + std::to_string(f.vertices.front());
        continue;
      }
      for (const Dart& d : f.walk) out += " " + std::to_string(d.from) + ">" + std::to_string(d.to);
    }
    out += "\n";
  }
  return out;
}

SphericalArrangement arrangement_from_json(const Graph& g, const std::string& json) {
  return arrangement_from(g, Json::parse(json));
}

std::string intrinsic_certificate(const Graph& g, const IntrinsicVerdict& v, const IntrinsicOptions& opts) {
  Json j;
  j["kind"] = "intrinsic";
  const Json body = verdict_body(g, v.property, v, opts);
  for (auto& [k, val] : body.items()) j[k] = val;
  return j.dump(1);
}

std::string minimality_certificate(const Graph& g, LinkShape property, const MinimalityResult& r,
                                   const IntrinsicOptions& opts) {
  Json j;
  j["kind"] = "minor-minimal";
  const Json body = verdict_body(g, property, r.intrinsic, opts);
  for (auto& [k, val] : body.items()) j[k] = val;
  j["verdict"] = r.minimal;
  j["reason"] = r.reason;
  j["depth"] = r.depth;
  Json refs = Json::array();
  for (const auto& m : r.refutations) {
    Json e;
    Json steps = Json::array();
    for (const auto& s : m.steps) steps.push_back(step_json(s));
    e["steps"] = steps;
    e["minor"] = save_graph(m.minor);
    e["arrangement"] = arrangement_json(m.free_arrangement);
    refs.push_back(e);
  }
  j["refutations"] = refs;
  if (r.linked_minor) {
    Json steps = Json::array();
    for (const auto& s : *r.linked_minor) steps.push_back(step_json(s));
    j["linked_minor"] = steps;
  }
  return j.dump(1);
}

std::string move_report_json(const MoveReport& r) {
  Json j;
  j["kind"] = "move";
  j["move"] = r.move;
  j["all_passed"] = r.all_passed();
  Json hs = Json::array();
  for (const auto& h : r.hypotheses) {
    Json e;
    e["id"] = h.id;
    e["statement"] = h.statement;
    e["passed"] = h.passed;
    e["detail"] = h.detail;
    if (h.witness) {
      e["witness_kind"] = h.witness_kind;
      if (h.witness_isolated) e["witness_isolated"] = h.witness_isolated;
      e["witness_graph"] = save_graph(h.witness->graph());
      e["witness"] = arrangement_json(*h.witness);
    }
    hs.push_back(e);
  }
  j["hypotheses"] = hs;
  j["notes"] = r.notes;
  return j.dump(1);
}

namespace {

void replay_move(const Json& j, ReplayReport& rep) {
  const bool nested = j.value("nested_only", false);
  const LinkSearch search{LinkShape::type2, nested};
  for (const auto& h : j.at("hypotheses")) {
    if (!h.contains("witness")) continue;
    ++rep.checked;
    const std::string id = h.at("id").get<std::string>();
    const Graph g = load_graph(h.at("witness_graph").get<std::string>());
    const auto a = arrangement_from(g, h.at("witness"));
    const std::string kind = h.at("witness_kind").get<std::string>();
    if (kind == "link-free") {
      if (!a.is_complete()) rep.problems.push_back(id + ": witness is incomplete");
      if (is_linked(a, search)) rep.problems.push_back(id + ": witness contains a link");
    } else if (kind == "no-free-face") {
      const int n = h.at("witness_isolated").get<int>();
      auto larger = std::make_shared<const Graph>(with_isolated(g, n));
      const auto lifted = lift_arrangement(a, larger);
      std::vector<Vertex> loose;
      for (int i = 0; i < n; ++i) loose.push_back(g.vertex_count() + i);
      for (int f = 0; f < lifted.global_face_count(); ++f)
        if (!is_linked(place_isolated(lifted, loose, f), search))
          rep.problems.push_back(id + ": face " + std::to_string(f) + " of the witness takes the vertices link-free");
      if (h.at("passed").get<bool>()) rep.problems.push_back(id + ": a failing witness on a passed hypothesis");
    } else {
      rep.problems.push_back(id + ": unknown witness kind " + kind);
    }
  }
}

}  // namespace

ReplayReport replay_certificate(const std::string& text) {
  ReplayReport rep;
  auto fail = [&](const std::string& s) { rep.problems.push_back(s); };
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    fail(std::string("not JSON: ") + e.what());
    return rep;
  }
  try {
    if (j.value("kind", "") == "move") {
      replay_move(j, rep);
      rep.ok = rep.problems.empty();
      return rep;
    }
    const Graph g = load_graph(j.at("graph").get<std::string>());
    const LinkShape shape = link_shape_from_string(j.at("property").get<std::string>());
    const bool reflection = j.at("settings").at("reflection").get<bool>();
    const LinkSearch search{shape, j.at("settings").at("nested_only").get<bool>()};
    const std::string kind = j.at("kind").get<std::string>();
    const bool claims_holds = kind == "intrinsic" ? j.at("verdict").get<bool>() : j.at("witnesses").size() > 0;

    if (claims_holds) {
      std::set<ArrangementCertificate> seen;
      for (const auto& w : j.at("witnesses")) {
        ++rep.checked;
        const auto a = arrangement_from(g, w.at("arrangement"));
        if (!a.is_complete()) fail("witness arrangement is incomplete");
        if (!seen.insert(certificate(a, reflection)).second) fail("witness arrangements repeat");
        const LinkPieces p = pieces_from(w.at("pieces"));
        if (!shape_matches(p, shape)) fail("witness pieces have the wrong shape");
        validate_pieces(a, p);
        if (!is_nonsplit(a, p)) fail("witness link splits");
        if (search.nested_only && shape == LinkShape::type1) {
          const auto rs = build_regions(a, p);
          const auto [u, v] = p.pairs.front();
          if (rs.boundary[rs.region_of_point[u]].size() != 1 || rs.boundary[rs.region_of_point[v]].size() != 1)
            fail("witness is not nested");
        }
      }
      const int expected = j.at("arrangements").get<int>();
      if (static_cast<int>(j.at("witnesses").size()) != expected) fail("witness count differs from arrangement count");
    } else if (j.contains("free_arrangement")) {
      ++rep.checked;
      const auto a = arrangement_from(g, j.at("free_arrangement"));
      if (!a.is_complete()) fail("free arrangement is incomplete");
      if (is_linked(a, search)) fail("free arrangement contains a link");
    }

    if (kind == "minor-minimal" && j.at("verdict").get<bool>()) {
      std::set<std::string> classes;
      for (const auto& r : j.at("refutations")) {
        ++rep.checked;
        std::vector<MinorStep> steps;
        for (const auto& s : r.at("steps")) steps.push_back(step_from(s));
        const Graph minor = apply_minor_steps(g, steps);
        const Graph stored = load_graph(r.at("minor").get<std::string>());
        if (minor != stored) fail("refutation steps do not reproduce the stored minor");
        if (!classes.insert(canonical_form(minor)).second) fail("refutations repeat a minor class");
        const auto a = arrangement_from(minor, r.at("arrangement"));
        if (!a.is_complete()) fail("refutation arrangement is incomplete");
        if (is_linked(a, search)) fail("refutation arrangement contains a link");
      }
      std::set<std::string> expected;
      for (const auto& m : immediate_minors(g)) expected.insert(canonical_form(m.minor));
      if (!std::includes(classes.begin(), classes.end(), expected.begin(), expected.end()))
        fail("some immediate minor class is not refuted");
    }
  } catch (const std::exception& e) {
    fail(e.what());
  }
  rep.ok = rep.problems.empty();
  return rep;
}

}  // namespace spherelink
