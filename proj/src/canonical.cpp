#include "spherelink/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <tuple>

namespace spherelink {
namespace {

std::string encode(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.vertex_count();
  std::string code(1, static_cast<char>(n));
  unsigned char byte = 0;
  int filled = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      byte = static_cast<unsigned char>((byte << 1) | (g.has_edge(order[i], order[j]) ? 1 : 0));
      if (++filled == 8) {
        code.push_back(static_cast<char>(byte));
        byte = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) code.push_back(static_cast<char>(byte << (8 - filled)));
  return code;
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  CanonicalLabeling run() {
    std::vector<int> colour(n_, 0);
    for (Vertex v = 0; v < n_; ++v) colour[v] = 0;
    // Start from the degree partition so refinement does less work at the root.
    std::vector<int> degs(n_);
    for (Vertex v = 0; v < n_; ++v) degs[v] = g_.degree(v);
    std::vector<int> sorted = degs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v = 0; v < n_; ++v) {
      colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), degs[v]) - sorted.begin());
    }
    std::vector<Vertex> prefix;
    visit(std::move(colour), prefix);
    return {best_order_, best_code_};
  }

 private:
  // Colours are 0..k-1 and form an ordered partition; refine to the coarsest equitable one.
  void refine(std::vector<int>& colour) const {
    int cells = n_ == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
    std::vector<std::pair<std::vector<int>, Vertex>> keyed(n_);
    while (true) {
      for (Vertex v = 0; v < n_; ++v) {
        std::vector<int> key(cells + 1, 0);
        key[0] = colour[v];
        for (Vertex w : g_.neighbors(v)) ++key[1 + colour[w]];
        keyed[v] = {std::move(key), v};
      }
      std::sort(keyed.begin(), keyed.end());
      int next = -1;
      for (int i = 0; i < n_; ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) ++next;
        colour[keyed[i].second] = next;
      }
      if (next + 1 == cells) break;
      cells = next + 1;
    }
  }

  bool twins(Vertex a, Vertex b) const {
    const std::uint64_t ma = g_.neighbor_mask(a) & ~(std::uint64_t{1} << b);
    const std::uint64_t mb = g_.neighbor_mask(b) & ~(std::uint64_t{1} << a);
    return ma == mb;
  }

  bool fixes(const std::vector<Vertex>& gamma, const std::vector<Vertex>& prefix) const {
    return std::all_of(prefix.begin(), prefix.end(), [&](Vertex v) { return gamma[v] == v; });
  }

  void visit(std::vector<int> colour, std::vector<Vertex>& prefix) {
    refine(colour);
    const int cells = n_ == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
    if (cells == n_) {
      std::vector<Vertex> order(n_);
      for (Vertex v = 0; v < n_; ++v) order[colour[v]] = v;
      std::string code = encode(g_, order);
      if (!have_best_ || code < best_code_) {
        best_code_ = std::move(code);
        best_order_ = std::move(order);
        have_best_ = true;
      } else if (code == best_code_ && automorphisms_.size() < 64) {
        std::vector<Vertex> gamma(n_);
        for (int i = 0; i < n_; ++i) gamma[best_order_[i]] = order[i];
        automorphisms_.push_back(std::move(gamma));
      }
      return;
    }

    std::vector<int> size(cells, 0);
    for (Vertex v = 0; v < n_; ++v) ++size[colour[v]];
    int target = -1;
    for (int c = 0; c < cells; ++c) {
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    }
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n_; ++v)
      if (colour[v] == target) members.push_back(v);

    std::vector<Vertex> explored;
    for (Vertex w : members) {
      bool skip = std::any_of(explored.begin(), explored.end(), [&](Vertex v) { return twins(v, w); });
      if (!skip) {
        for (const auto& gamma : automorphisms_) {
          if (!fixes(gamma, prefix)) continue;
          if (std::any_of(explored.begin(), explored.end(), [&](Vertex v) { return gamma[v] == w; })) {
            skip = true;
            break;
          }
        }
      }
      if (skip) continue;
      std::vector<int> child = colour;
      for (Vertex v = 0; v < n_; ++v) {
        if (child[v] > target || (child[v] == target && v != w)) ++child[v];
      }
      prefix.push_back(w);
      visit(std::move(child), prefix);
      prefix.pop_back();
      explored.push_back(w);
    }
  }

  const Graph& g_;
  int n_;
  bool have_best_ = false;
  std::string best_code_;
  std::vector<Vertex> best_order_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return Search(g).run(); }

std::string canonical_form(const Graph& g) { return canonical_labeling(g).code; }

Graph canonical_graph(const Graph& g) {
  const CanonicalLabeling lab = canonical_labeling(g);
  std::vector<Vertex> perm(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) perm[lab.order[i]] = i;
  return g.relabeled(perm);
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg, dh;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace spherelink
