#include "spherelink/intrinsic.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <thread>

#include "spherelink/canonical.hpp"

namespace spherelink {

namespace {

void require_planar(const Graph& g) {
  if (!is_planar(g)) throw NonPlanarError("intrinsic linking is only defined for planar graphs");
}

// Smallest index in [0, count) for which pred holds, evaluated on `jobs` threads.
template <class Pred>
std::optional<std::size_t> find_first(std::size_t count, int jobs, Pred pred) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  std::atomic<std::size_t> best{count};
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count || i >= best.load()) return;
        if (pred(i)) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (best.load() == count) return std::nullopt;
  return best.load();
}

std::vector<SphericalArrangement> arrangements_of(const Graph& g, const IntrinsicOptions& opts) {
  EmbeddingOptions eo;
  eo.reflection = opts.reflection;
  eo.jobs = opts.jobs;
  return spherical_arrangements(g, eo);
}

// Vertex sets of all cycles, as masks.
std::vector<std::uint64_t> cycle_masks(const Graph& g) {
  std::vector<std::uint64_t> out;
  for (const Cycle& c : cycles(g)) {
    std::uint64_t m = 0;
    for (Vertex v : c) m |= std::uint64_t{1} << v;
    out.push_back(m);
  }
  return out;
}

}  // namespace

bool could_be_linked(const Graph& g, LinkShape property) {
  const int n = g.vertex_count();
  const auto masks = cycle_masks(g);
  auto size = [](std::uint64_t m) { return std::popcount(m); };
  switch (property) {
    case LinkShape::two_link:
      for (auto m : masks)
        if (size(m) <= n - 2) return true;
      return false;
    case LinkShape::type2:
      for (auto m : masks)
        if (size(m) <= n - 4) return true;
      return false;
    case LinkShape::type1:
      for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j)
          if (!(masks[i] & masks[j]) && size(masks[i]) + size(masks[j]) <= n - 2) return true;
      return false;
  }
  return false;
}

std::optional<SphericalArrangement> link_free_arrangement(const Graph& g, LinkShape property,
                                                          const IntrinsicOptions& opts) {
  require_planar(g);
  auto all = arrangements_of(g, opts);
  if (!could_be_linked(g, property)) return all.front();
  const LinkSearch search{property, opts.nested_only};
  auto hit = find_first(all.size(), opts.jobs, [&](std::size_t i) { return !is_linked(all[i], search); });
  if (!hit) return std::nullopt;
  return all[*hit];
}

bool intrinsically_linked(const Graph& g, LinkShape property, const IntrinsicOptions& opts) {
  return !link_free_arrangement(g, property, opts).has_value();
}

IntrinsicVerdict is_intrinsically_linked(const Graph& g, LinkShape property, const IntrinsicOptions& opts) {
  require_planar(g);
  IntrinsicVerdict v;
  v.property = property;
  auto all = arrangements_of(g, opts);
  v.arrangement_count = static_cast<int>(all.size());
  const LinkSearch search{property, opts.nested_only};
  std::vector<std::optional<LinkPieces>> links(all.size());
  const bool possible = could_be_linked(g, property);
  auto missing = find_first(all.size(), opts.jobs, [&](std::size_t i) {
    if (possible) links[i] = first_link(all[i], search);
    return !links[i].has_value();
  });
  if (missing) {
    v.holds = false;
    v.free_arrangement = all[*missing];
    return v;
  }
  v.holds = true;
  for (std::size_t i = 0; i < all.size(); ++i) v.witnesses.push_back({all[i], *links[i]});
  return v;
}

MinimalityResult is_minor_minimal(const Graph& g, LinkShape property, const IntrinsicOptions& opts, int depth) {
  MinimalityResult r;
  r.depth = depth;
  r.intrinsic = is_intrinsically_linked(g, property, opts);
  if (!r.intrinsic.holds) {
    r.reason = "graph is not intrinsically " + to_string(property) + " linked";
    return r;
  }
  std::vector<MinorPath> minors;
  if (depth <= 1) {
    for (auto& m : immediate_minors(g)) minors.push_back({std::move(m.minor), {m.step}});
  } else {
    minors = minors_to_depth(g, depth);
  }
  IntrinsicOptions inner = opts;
  inner.jobs = 1;
  std::vector<std::optional<SphericalArrangement>> free(minors.size());
  auto linked = find_first(minors.size(), opts.jobs, [&](std::size_t i) {
    free[i] = link_free_arrangement(minors[i].minor, property, inner);
    return !free[i].has_value();
  });
  if (linked) {
    r.linked_minor = minors[*linked].steps;
    r.reason = "proper minor " + describe(minors[*linked].minor) + " is already intrinsically " + to_string(property) +
               " linked";
    return r;
  }
  for (std::size_t i = 0; i < minors.size(); ++i)
    r.refutations.push_back({minors[i].steps, minors[i].minor, *free[i]});
  r.minimal = true;
  return r;
}

bool dehkordi_farr_oracle(const Graph& g) {
  static const Graph k4k1 = with_isolated(complete(4), 1);
  static const Graph k32k1 = [] {
    const int p[] = {3, 2};
    return with_isolated(complete_multipartite(p), 1);
  }();
  static const Graph k311 = [] {
    const int p[] = {3, 1, 1};
    return complete_multipartite(p);
  }();
  return has_minor(g, k4k1) || has_minor(g, k32k1) || has_minor(g, k311);
}

}  // namespace spherelink
