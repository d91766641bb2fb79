#include "spherelink/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "catalog_data.hpp"
#include "spherelink/embedding.hpp"
#include "spherelink/intrinsic.hpp"
#include "spherelink/minor.hpp"
#include "spherelink/moves.hpp"

namespace spherelink {

using Json = nlohmann::ordered_json;

namespace {

Edge edge_of(const Json& j) { return Edge(j.at(0).get<Vertex>(), j.at(1).get<Vertex>()); }

Graph run_steps(const Json& steps) {
  Graph g;
  for (const Json& s : steps) {
    const std::string op = s.at("op").get<std::string>();
    if (op == "complete") {
      g = complete(s.at("n").get<int>());
    } else if (op == "multipartite") {
      const auto parts = s.at("parts").get<std::vector<int>>();
      g = complete_multipartite(parts);
    } else if (op == "cycle") {
      g = cycle_graph(s.at("n").get<int>());
    } else if (op == "path") {
      g = path_graph(s.at("n").get<int>());
    } else if (op == "empty") {
      g = empty_graph(s.at("n").get<int>());
    } else if (op == "union") {
      g = disjoint_union(g, run_steps(s.at("with")));
    } else if (op == "isolated") {
      g = with_isolated(g, s.at("count").get<int>());
    } else if (op == "pendant") {
      for (const Json& v : s.at("at")) g = attach_pendant(g, v.get<Vertex>());
    } else if (op == "subdivide") {
      g = subdivide(g, edge_of(s.at("edge")), s.value("times", 1)).graph;
    } else if (op == "add_path") {
      const Vertex from = s.at("from").get<Vertex>(), to = s.at("to").get<Vertex>();
      const int k = s.at("internal").get<int>();
      std::vector<Edge> es = g.edges();
      Vertex prev = from;
      for (int i = 0; i < k; ++i) {
        es.emplace_back(prev, g.vertex_count() + i);
        prev = g.vertex_count() + i;
      }
      es.emplace_back(prev, to);
      g = Graph(g.vertex_count() + k, es);
    } else if (op == "delete_edge") {
      g = delete_edge(g, edge_of(s.at("edge")));
    } else if (op == "contract_edge") {
      g = contract_edge(g, edge_of(s.at("edge")));
    } else if (op == "vert_bar") {
      std::vector<Vertex> keep;
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0) keep.push_back(v);
      g = apply_vert_bar({g.induced(keep), g.vertex_count() - static_cast<int>(keep.size())});
    } else if (op == "sub_dangle") {
      g = apply_sub_dangle({g, edge_of(s.at("edge")), s.at("s1").get<Vertex>(), s.at("s2").get<Vertex>()});
    } else {
      throw CatalogError("unknown recipe step `" + op + "`");
    }
  }
  return g;
}

Graph graph_from(const Json& j) {
  std::vector<Edge> es;
  for (const Json& e : j.at("edges")) es.push_back(edge_of(e));
  return Graph(j.at("n").get<int>(), es);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* catalog_dir() {
  const char* dir = std::getenv("SPHERELINK_CATALOG_DIR");
  return dir && *dir ? dir : nullptr;
}

ClaimKind claim_kind_from(const std::string& s) {
  if (s == "embedding-count") return ClaimKind::embedding_count;
  if (s == "intrinsic") return ClaimKind::intrinsic;
  if (s == "minor-minimal") return ClaimKind::minor_minimal;
  if (s == "move-hypotheses") return ClaimKind::move_hypotheses;
  throw CatalogError("unknown claim kind `" + s + "`");
}

ClaimResult evaluate(const Claim& c, const Catalog& catalog, const VerifyOptions& opts) {
  ClaimResult r;
  r.claim = c;
  const auto start = std::chrono::steady_clock::now();
  const CatalogEntry& e = catalog.entry(c.name);
  IntrinsicOptions io{opts.reflection, opts.nested_only, 1};
  switch (c.kind) {
    case ClaimKind::embedding_count:
      r.expected = std::to_string(c.expected_count);
      break;
    case ClaimKind::intrinsic:
    case ClaimKind::minor_minimal:
      r.expected = std::string(c.expected_holds ? "" : "not ") + to_string(c.property);
      break;
    case ClaimKind::move_hypotheses:
      r.expected = c.move + (c.expected_holds ? " applicable" : " not applicable");
      break;
  }
  if (e.pending() || !e.graph) {
    r.status = ClaimStatus::skipped;
    r.computed = "definition pending";
    return r;
  }
  const Graph& g = *e.graph;
  bool ok = false;
  switch (c.kind) {
    case ClaimKind::embedding_count: {
      const auto n = spherical_arrangements(g, {opts.reflection, 1}).size();
      r.computed = std::to_string(n);
      ok = static_cast<int>(n) == c.expected_count;
      break;
    }
    case ClaimKind::intrinsic: {
      const bool holds = intrinsically_linked(g, c.property, io);
      r.computed = std::string(holds ? "" : "not ") + to_string(c.property);
      ok = holds == c.expected_holds;
      break;
    }
    case ClaimKind::minor_minimal: {
      const auto m = is_minor_minimal(g, c.property, io);
      r.computed = m.minimal ? "minimal " + to_string(c.property) : m.reason;
      ok = m.minimal == c.expected_holds;
      break;
    }
    case ClaimKind::move_hypotheses: {
      MoveReport rep;
      if (c.move == "vert-bar") {
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
          if (g.degree(v) > 0) keep.push_back(v);
        rep = check_vert_bar({g.induced(keep), g.vertex_count() - static_cast<int>(keep.size())}, io);
      } else if (c.move == "sub-dangle") {
        if (c.move_args.size() != 4) throw CatalogError("sub-dangle claim needs 4 arguments");
        const auto& a = c.move_args;
        rep = check_sub_dangle({g, Edge(a[0], a[1]), a[2], a[3]}, io);
      } else {
        throw CatalogError("unknown move `" + c.move + "`");
      }
      bool all = true;
      for (const auto& h : rep.hypotheses) {
        const bool needed =
            c.hypotheses.empty() || std::find(c.hypotheses.begin(), c.hypotheses.end(), h.id) != c.hypotheses.end();
        if (!r.computed.empty()) r.computed += " ";
        r.computed += h.id + (h.passed ? ":pass" : ":fail");
        if (needed && !h.passed) all = false;
      }
      ok = all == c.expected_holds;
      break;
    }
  }
  r.status = ok ? ClaimStatus::pass : ClaimStatus::fail;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

Graph build_recipe(const std::string& recipe_json) { return run_steps(Json::parse(recipe_json)); }

const Catalog& Catalog::builtin() {
  static const Catalog c = [] {
    if (const char* dir = catalog_dir()) return load_dir(dir);
    return from_json(embedded::catalog_json);
  }();
  return c;
}

Catalog Catalog::load_dir(const std::string& dir) { return from_json(read_file(dir + "/catalog.json")); }

Catalog Catalog::from_json(const std::string& text) {
  Catalog c;
  const Json doc = Json::parse(text);
  for (const Json& j : doc.at("entries")) {
    CatalogEntry e;
    e.name = j.at("name").get<std::string>();
    e.provenance = j.at("provenance").get<std::string>();
    if (e.provenance != "paper" && e.provenance != "derived" && e.provenance != "pending-figure")
      throw CatalogError(e.name + ": unknown provenance `" + e.provenance + "`");
    e.description = j.value("description", "");
    e.notes = j.value("notes", "");
    if (j.contains("recipe")) e.recipe = j.at("recipe").dump();
    if (!e.pending()) {
      std::optional<Graph> built;
      if (!e.recipe.empty()) built = build_recipe(e.recipe);
      if (j.contains("graph")) {
        e.graph = graph_from(j.at("graph"));
        if (built && *built != *e.graph) throw CatalogError(e.name + ": recipe does not reproduce the stored edge list");
      } else {
        e.graph = built;
      }
      if (!e.graph) throw CatalogError(e.name + ": entry has neither recipe nor edge list");
    }
    if (j.contains("embedding_count")) {
      const Json& k = j.at("embedding_count");
      e.embedding_count = ExpectedCount{k.at("value").get<int>(), k.at("provenance").get<std::string>()};
    }
    for (const Json& p : j.value("expected", Json::array())) {
      ExpectedProperty ep;
      ep.property = link_shape_from_string(p.at("property").get<std::string>());
      ep.holds = p.at("holds").get<bool>();
      if (p.contains("minor_minimal")) ep.minor_minimal = p.at("minor_minimal").get<bool>();
      e.expected.push_back(ep);
    }
    if (c.entries_.count(e.name)) throw CatalogError("duplicate catalog entry " + e.name);
    c.order_.push_back(e.name);
    c.entries_.emplace(e.name, std::move(e));
  }
  return c;
}

std::vector<std::string> Catalog::names() const { return order_; }

const CatalogEntry& Catalog::entry(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw UnknownEntryError("unknown catalog entry `" + name + "`");
  return it->second;
}

Graph Catalog::graph(const std::string& name) const {
  const CatalogEntry& e = entry(name);
  if (e.pending() || !e.graph) throw PendingDefinitionError(name + ": definition pending (figure not available)");
  return *e.graph;
}

Graph builtin(const std::string& name) { return Catalog::builtin().graph(name); }

std::string to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::embedding_count:
      return "embedding-count";
    case ClaimKind::intrinsic:
      return "intrinsic";
    case ClaimKind::minor_minimal:
      return "minor-minimal";
    case ClaimKind::move_hypotheses:
      return "move-hypotheses";
  }
  return "?";
}

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass:
      return "PASS";
    case ClaimStatus::fail:
      return "FAIL";
    case ClaimStatus::skipped:
      return "SKIP";
  }
  return "?";
}

ClaimManifest ClaimManifest::builtin() {
  if (const char* dir = catalog_dir()) return from_json(read_file(std::string(dir) + "/claims.json"));
  return from_json(embedded::claims_json);
}

ClaimManifest ClaimManifest::from_json(const std::string& text) {
  ClaimManifest m;
  const Json doc = Json::parse(text);
  for (const Json& j : doc.at("claims")) {
    Claim c;
    c.name = j.at("name").get<std::string>();
    c.kind = claim_kind_from(j.at("kind").get<std::string>());
    c.anchor = j.value("anchor", "");
    if (c.kind == ClaimKind::embedding_count) c.expected_count = j.at("expected").get<int>();
    if (c.kind == ClaimKind::intrinsic || c.kind == ClaimKind::minor_minimal) {
      c.property = link_shape_from_string(j.at("property").get<std::string>());
      c.expected_holds = j.at("expected").get<bool>();
    }
    if (c.kind == ClaimKind::move_hypotheses) {
      c.move = j.at("move").get<std::string>();
      c.expected_holds = j.value("expected", true);
      c.hypotheses = j.value("hypotheses", std::vector<std::string>{});
      c.move_args = j.value("args", std::vector<int>{});
    }
    m.claims.push_back(std::move(c));
  }
  return m;
}

void ClaimManifest::validate(const Catalog& catalog) const {
  for (const Claim& c : claims) {
    if (!catalog.contains(c.name)) throw CatalogError("claim names unknown entry `" + c.name + "`");
    if (c.anchor.empty()) throw CatalogError("claim on `" + c.name + "` has no anchor");
  }
}

int ClaimReport::count(ClaimStatus s) const {
  int n = 0;
  for (const auto& r : results) n += r.status == s;
  return n;
}

std::string ClaimReport::text() const {
  std::string out = "settings: reflection=" + std::string(settings.reflection ? "on" : "off") +
                    " nested-only=" + (settings.nested_only ? "on" : "off") + "\n";
  char buf[512];
  for (const auto& r : results) {
    std::snprintf(buf, sizeof buf, "%s  %-8s %-16s expected %-22s computed %s (%.2f s)\n", to_string(r.status).c_str(),
                  r.claim.name.c_str(), to_string(r.claim.kind).c_str(), r.expected.c_str(), r.computed.c_str(),
                  r.seconds);
    out += buf;
  }
  out += std::to_string(count(ClaimStatus::pass)) + " passed, " + std::to_string(count(ClaimStatus::fail)) +
         " failed, " + std::to_string(count(ClaimStatus::skipped)) + " skipped\n";
  return out;
}

std::string ClaimReport::json() const {
  Json j;
  j["settings"] = {{"reflection", settings.reflection}, {"nested_only", settings.nested_only}};
  Json rs = Json::array();
  for (const auto& r : results) {
    Json e;
    e["name"] = r.claim.name;
    e["kind"] = to_string(r.claim.kind);
    e["anchor"] = r.claim.anchor;
    e["status"] = to_string(r.status);
    e["expected"] = r.expected;
    e["computed"] = r.computed;
    rs.push_back(e);
  }
  j["results"] = rs;
  j["passed"] = count(ClaimStatus::pass);
  j["failed"] = count(ClaimStatus::fail);
  j["skipped"] = count(ClaimStatus::skipped);
  return j.dump(1);
}

ClaimReport verify_claims(const ClaimManifest& manifest, const Catalog& catalog, const VerifyOptions& opts) {
  manifest.validate(catalog);
  ClaimReport rep;
  rep.settings = opts;
  rep.results.resize(manifest.claims.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= manifest.claims.size()) return;
      rep.results[i] = evaluate(manifest.claims[i], catalog, opts);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < opts.jobs; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return rep;
}

}  // namespace spherelink
