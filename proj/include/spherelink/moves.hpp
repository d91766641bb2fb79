#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spherelink/embedding.hpp"
#include "spherelink/intrinsic.hpp"

namespace spherelink {

class MoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct VertBarInput {
  Graph g0;   // connected planar
  int n = 3;  // isolated vertices alongside g0, at least 3
};

struct SubDangleInput {
  Graph g;
  Edge e;  // endpoints of the subdivided edge
  Vertex s1 = -1, s2 = -1;  // s1 next to one endpoint, s2 next to the other
};

struct HypothesisResult {
  std::string id;  // "i" .. "v"
  std::string statement;
  bool passed = false;
  std::string detail;
  std::optional<SphericalArrangement> witness;
  // "link-free": the witness has no type II link. "no-free-face": placing
  // witness_isolated isolated vertices in any face of the witness gives a link.
  std::string witness_kind;
  int witness_isolated = 0;
};

struct MoveReport {
  std::string move;
  std::vector<HypothesisResult> hypotheses;
  std::vector<std::string> notes;
  bool all_passed() const;
  const HypothesisResult& at(const std::string& id) const;
};

// Copies an arrangement onto a larger graph whose first vertices and edges match it;
// the extra vertices stay unplaced.
SphericalArrangement lift_arrangement(const SphericalArrangement& a, std::shared_ptr<const Graph> larger);

Graph apply_vert_bar(const VertBarInput& in);
MoveReport check_vert_bar(const VertBarInput& in, const IntrinsicOptions& opts = {});

// The endpoint of e adjacent to s2.
Vertex sub_dangle_far_endpoint(const SubDangleInput& in);
Graph apply_sub_dangle(const SubDangleInput& in);
MoveReport check_sub_dangle(const SubDangleInput& in, const IntrinsicOptions& opts = {});

}  // namespace spherelink
