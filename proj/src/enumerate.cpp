#include <algorithm>
#include <map>
#include <thread>

#include "spherelink/embedding.hpp"

namespace spherelink {

namespace {

// Rotation systems of one component, expressed in the labels of the whole graph.
std::vector<Rotation> component_rotations(const Graph& g, const std::vector<Vertex>& comp) {
  const int n = g.vertex_count();
  if (comp.size() == 1) return {Rotation(n)};
  const Graph sub = g.induced(comp);
  std::vector<Rotation> out;
  for (const Rotation& r : spherical_rotation_systems(sub)) {
    Rotation full(n);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : r[i]) full[comp[i]].push_back(comp[w]);
    }
    out.push_back(std::move(full));
  }
  return out;
}

struct Candidate {
  ArrangementCertificate cert;
  SphericalArrangement arrangement;
};

std::vector<Candidate> extend(const SphericalArrangement& state, const std::vector<Vertex>& comp,
                              const std::vector<Rotation>& rotations, bool reflection) {
  std::vector<Candidate> out;
  for (const Rotation& r : rotations) {
    const int own = static_cast<int>(trace_faces(r, comp).size());
    if (state.parts().empty()) {
      auto next = state.with_part(comp, r, 0, 0);
      out.push_back({certificate(next, reflection), std::move(next)});
      continue;
    }
    for (int host = 0; host < state.global_face_count(); ++host) {
      for (int outward = 0; outward < own; ++outward) {
        auto next = state.with_part(comp, r, host, outward);
        out.push_back({certificate(next, reflection), std::move(next)});
      }
    }
  }
  return out;
}

std::vector<SphericalArrangement> step(const std::vector<SphericalArrangement>& states, const std::vector<Vertex>& comp,
                                       const std::vector<Rotation>& rotations, const EmbeddingOptions& opts) {
  std::vector<std::vector<Candidate>> produced(states.size());
  const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(states.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < states.size(); ++i) produced[i] = extend(states[i], comp, rotations, opts.reflection);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < states.size(); i += jobs)
          produced[i] = extend(states[i], comp, rotations, opts.reflection);
      });
    }
    for (auto& th : pool) th.join();
  }
  std::map<ArrangementCertificate, SphericalArrangement> unique;
  for (auto& batch : produced)
    for (auto& c : batch) unique.try_emplace(std::move(c.cert), std::move(c.arrangement));
  std::vector<SphericalArrangement> out;
  for (auto& [cert, a] : unique) out.push_back(std::move(a));
  return out;
}

}  // namespace

std::vector<SphericalArrangement> spherical_arrangements(const Graph& g, const EmbeddingOptions& opts) {
  auto comps = g.components();
  std::stable_sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<std::vector<Rotation>> rotations;
  for (const auto& comp : comps) {
    rotations.push_back(component_rotations(g, comp));
    if (rotations.back().empty()) return {};
  }
  auto shared = std::make_shared<const Graph>(g);
  std::vector<SphericalArrangement> states{SphericalArrangement(shared)};
  for (std::size_t i = 0; i < comps.size(); ++i) states = step(states, comps[i], rotations[i], opts);
  return states;
}

bool is_planar(const Graph& g) {
  for (const auto& comp : g.components()) {
    const int n = static_cast<int>(comp.size());
    if (n < 5) continue;
    const Graph sub = g.induced(comp);
    if (sub.edge_count() > 3 * n - 6) return false;
    if (!find_spherical_rotation(sub)) return false;
  }
  return true;
}

bool is_outerplanar(const Graph& g) {
  // outerplanar exactly when adding a vertex adjacent to everything keeps it planar
  const int n = g.vertex_count();
  if (n >= 64) throw GraphError("graph too large for the outerplanarity test");
  std::vector<Edge> es = g.edges();
  for (Vertex v = 0; v < n; ++v) es.emplace_back(v, n);
  return is_planar(Graph(n + 1, std::move(es)));
}

}  // namespace spherelink
