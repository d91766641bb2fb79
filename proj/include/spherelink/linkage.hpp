#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spherelink/embedding.hpp"

namespace spherelink {

// Simple cycle as a vertex sequence: smallest vertex first, second entry smaller than
// the last.
using Cycle = std::vector<Vertex>;
using PointPair = std::pair<Vertex, Vertex>;  // first < second

class LinkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every simple cycle once, ordered by length then lexicographically.
std::vector<Cycle> cycles(const Graph& g);

struct LinkPieces {
  std::vector<Cycle> cycles;
  std::vector<PointPair> pairs;
  std::size_t size() const { return cycles.size() + pairs.size(); }
  friend bool operator==(const LinkPieces&, const LinkPieces&) = default;
};

// Throws LinkError unless the pieces are vertex disjoint cycles and pairs of a's graph.
void validate_pieces(const SphericalArrangement& a, const LinkPieces& p);

struct CycleSides {
  std::vector<int> face_side;    // per global face: 0 or 1
  std::vector<int> vertex_side;  // per vertex: 0, 1, or -1 on the cycle
  int face_count(int side) const;
};

CycleSides sides(const SphericalArrangement& a, const Cycle& c);

struct RegionStructure {
  int region_count = 0;
  std::vector<int> region_of_face;
  std::vector<std::pair<int, int>> cycle_regions;  // per piece cycle, the regions on its two sides
  std::vector<std::vector<int>> boundary;          // per region, incident piece cycles
  std::vector<std::vector<Vertex>> points;         // per region, pair endpoints inside it
  std::vector<int> region_of_point;                // per vertex, -1 unless a pair endpoint

  // Piece indices beyond `cycle` as seen from `region`; cycles first (0..k-1), then
  // pairs (k..). The cycle itself is included.
  std::vector<int> beyond(const LinkPieces& p, int region, int cycle) const;
};

RegionStructure build_regions(const SphericalArrangement& a, const LinkPieces& p);

bool is_nonsplit(const SphericalArrangement& a, const LinkPieces& p);

enum class LinkShape { two_link, type1, type2 };

std::string to_string(LinkShape s);
LinkShape link_shape_from_string(const std::string& s);

struct LinkSearch {
  LinkShape shape = LinkShape::two_link;
  // Keep only type I witnesses whose points sit in the two disks cut off by the cycles.
  bool nested_only = false;
};

// All non-split piece selections of the shape, in a deterministic order.
std::vector<LinkPieces> find_links(const SphericalArrangement& a, const LinkSearch& s);
std::optional<LinkPieces> first_link(const SphericalArrangement& a, const LinkSearch& s);
bool is_linked(const SphericalArrangement& a, const LinkSearch& s);

}  // namespace spherelink
