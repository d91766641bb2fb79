#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spherelink/embedding.hpp"
#include "spherelink/linkage.hpp"
#include "spherelink/minor.hpp"

namespace spherelink {

class NonPlanarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IntrinsicOptions {
  bool reflection = true;
  bool nested_only = false;
  int jobs = 1;
};

struct LinkWitness {
  SphericalArrangement arrangement;
  LinkPieces pieces;
};

struct IntrinsicVerdict {
  LinkShape property = LinkShape::two_link;
  bool holds = false;
  int arrangement_count = 0;
  std::vector<LinkWitness> witnesses;                     // one per arrangement when holds
  std::optional<SphericalArrangement> free_arrangement;  // when it fails
};

// Throws NonPlanarError for non-planar graphs.
IntrinsicVerdict is_intrinsically_linked(const Graph& g, LinkShape property, const IntrinsicOptions& opts = {});

// Same verdict without collecting witnesses; stops at the first link-free arrangement.
bool intrinsically_linked(const Graph& g, LinkShape property, const IntrinsicOptions& opts = {});

// First arrangement (in certificate order) without a link of the shape.
std::optional<SphericalArrangement> link_free_arrangement(const Graph& g, LinkShape property,
                                                          const IntrinsicOptions& opts = {});

// Necessary condition on the graph alone: enough disjoint cycles and spare vertices.
bool could_be_linked(const Graph& g, LinkShape property);

struct MinorRefutation {
  std::vector<MinorStep> steps;
  Graph minor;
  SphericalArrangement free_arrangement;
};

struct MinimalityResult {
  bool minimal = false;
  std::string reason;  // empty when minimal
  IntrinsicVerdict intrinsic;
  std::vector<MinorRefutation> refutations;
  std::optional<std::vector<MinorStep>> linked_minor;  // steps to an intrinsic proper minor
  int depth = 1;
};

// depth 1 checks immediate minors; larger depths also check deeper minors for auditing.
MinimalityResult is_minor_minimal(const Graph& g, LinkShape property, const IntrinsicOptions& opts = {}, int depth = 1);

// Intrinsically spherical 2-linked exactly when one of K4+K1, K3,2+K1, K3,1,1 is a minor.
bool dehkordi_farr_oracle(const Graph& g);

}  // namespace spherelink
