#include "spherelink/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include <json.hpp>

#include "spherelink/canonical.hpp"
#include "spherelink/io.hpp"
#include "spherelink/minor.hpp"

namespace spherelink {

namespace {

// Edge of g whose canonical positions are lexicographically largest.
Edge canonical_deletion(const Graph& g, const CanonicalLabeling& lab) {
  std::vector<int> pos(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) pos[lab.order[i]] = i;
  Edge best;
  std::pair<int, int> key{-1, -1};
  for (const Edge& e : g.edges()) {
    const int a = pos[e.u], b = pos[e.v];
    const std::pair<int, int> k{std::max(a, b), std::min(a, b)};
    if (k > key) {
      key = k;
      best = e;
    }
  }
  return best;
}

class VerdictCache {
 public:
  VerdictCache(const SearchOptions& opts) : opts_(opts) {
    if (opts.checkpoint_path.empty()) return;
    std::ifstream in(opts.checkpoint_path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || j.value("kind", "") != "verdict") continue;
      if (j.value("property", "") != to_string(opts.property)) continue;
      if (j.value("reflection", true) != opts.intrinsic.reflection) continue;
      if (j.value("nested_only", false) != opts.intrinsic.nested_only) continue;
      known_[canonical_form(graph6_decode(j.at("graph6").get<std::string>()))] = j.at("intrinsic").get<bool>();
    }
    out_.open(opts.checkpoint_path, std::ios::app);
  }

  bool intrinsic(const Graph& g, long& evaluated) {
    const std::string key = canonical_form(g);
    {
      std::lock_guard lock(mu_);
      if (auto it = known_.find(key); it != known_.end()) return it->second;
    }
    IntrinsicOptions inner = opts_.intrinsic;
    inner.jobs = 1;
    const bool holds = could_be_linked(g, opts_.property) && intrinsically_linked(g, opts_.property, inner);
    std::lock_guard lock(mu_);
    ++evaluated;
    known_.emplace(key, holds);
    if (out_.is_open()) {
      nlohmann::ordered_json j;
      j["kind"] = "verdict";
      j["graph6"] = graph6_encode(canonical_graph(g));
      j["property"] = to_string(opts_.property);
      j["reflection"] = opts_.intrinsic.reflection;
      j["nested_only"] = opts_.intrinsic.nested_only;
      j["intrinsic"] = holds;
      out_ << j.dump() << '\n' << std::flush;
    }
    return holds;
  }

  void note(const nlohmann::ordered_json& j) {
    std::lock_guard lock(mu_);
    if (out_.is_open()) out_ << j.dump() << '\n' << std::flush;
  }

 private:
  const SearchOptions& opts_;
  std::mutex mu_;
  std::map<std::string, bool> known_;
  std::ofstream out_;
};

}  // namespace

void for_each_planar_graph(int n, int max_edges, const std::function<bool(const Graph&)>& visit) {
  if (n < 0) return;
  const int cap = n * (n - 1) / 2;
  const int limit = max_edges < 0 ? cap : std::min(cap, max_edges);
  std::vector<Graph> level{Graph(n)};
  for (int m = 0;; ++m) {
    for (const Graph& g : level)
      if (!visit(g)) return;
    if (m == limit) return;
    std::vector<std::pair<std::string, Graph>> next;
    for (const Graph& parent : level) {
      const std::string parent_code = canonical_form(parent);
      std::set<std::string> local;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
          if (parent.has_edge(u, v)) continue;
          std::vector<Edge> es = parent.edges();
          es.emplace_back(u, v);
          const Graph child(n, es);
          const auto lab = canonical_labeling(child);
          if (!local.insert(lab.code).second) continue;
          if (canonical_form(delete_edge(child, canonical_deletion(child, lab))) != parent_code) continue;
          if (!is_planar(child)) continue;
          next.emplace_back(lab.code, child.relabeled(lab.order));
        }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [code, g] : next) level.push_back(canonical_graph(g));
    if (level.empty()) return;
  }
}

std::vector<Graph> planar_graphs(int n, int max_edges) {
  std::vector<Graph> out;
  for_each_planar_graph(n, max_edges, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

SearchResult search_minor_minimal(const SearchOptions& opts, const std::vector<Graph>* input) {
  SearchResult result;
  std::vector<Graph> candidates;
  if (input) {
    std::set<std::string> seen;
    for (const Graph& g : *input) {
      if (g.vertex_count() > opts.max_vertices) continue;
      if (opts.max_edges >= 0 && g.edge_count() > opts.max_edges) continue;
      if (!is_planar(g)) continue;
      if (seen.insert(canonical_form(g)).second) candidates.push_back(canonical_graph(g));
    }
  } else {
    for (int n = 0; n <= opts.max_vertices; ++n) {
      for_each_planar_graph(n, opts.max_edges, [&](const Graph& g) {
        candidates.push_back(g);
        return true;
      });
      if (opts.progress) opts.progress("generated graphs up to " + std::to_string(n) + " vertices: " +
                                       std::to_string(candidates.size()));
    }
  }
  result.scanned = static_cast<long>(candidates.size());

  VerdictCache cache(opts);
  std::vector<char> keep(candidates.size(), 0);
  std::atomic<std::size_t> next{0};
  std::atomic<long> prefiltered{0};
  long evaluated = 0;
  std::mutex mu;
  auto work = [&] {
    long local_eval = 0;
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= candidates.size()) break;
      const Graph& g = candidates[i];
      if (!could_be_linked(g, opts.property)) {
        ++prefiltered;
        continue;
      }
      if (!cache.intrinsic(g, local_eval)) continue;
      bool minimal = true;
      for (const auto& m : immediate_minors(g))
        if (cache.intrinsic(m.minor, local_eval)) {
          minimal = false;
          break;
        }
      keep[i] = minimal;
      if (minimal && opts.progress) {
        std::lock_guard lock(mu);
        opts.progress("candidate " + graph6_encode(g) + " " + describe(g));
      }
    }
    std::lock_guard lock(mu);
    evaluated += local_eval;
  };
  const int jobs = std::max(1, opts.intrinsic.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  result.prefiltered = prefiltered;
  result.evaluated = evaluated;

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!keep[i]) continue;
    SearchHit hit{candidates[i], is_minor_minimal(candidates[i], opts.property, opts.intrinsic)};
    nlohmann::ordered_json j;
    j["kind"] = "hit";
    j["graph6"] = graph6_encode(candidates[i]);
    j["minimal"] = hit.certificate.minimal;
    cache.note(j);
    if (hit.certificate.minimal) result.hits.push_back(std::move(hit));
  }
  std::sort(result.hits.begin(), result.hits.end(), [](const SearchHit& a, const SearchHit& b) {
    if (a.graph.vertex_count() != b.graph.vertex_count()) return a.graph.vertex_count() < b.graph.vertex_count();
    return canonical_form(a.graph) < canonical_form(b.graph);
  });
  nlohmann::ordered_json done;
  done["kind"] = "done";
  done["scanned"] = result.scanned;
  done["hits"] = result.hits.size();
  cache.note(done);
  return result;
}

}  // namespace spherelink
