#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spherelink/graph.hpp"
#include "spherelink/linkage.hpp"

namespace spherelink {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownEntryError : public CatalogError {
 public:
  using CatalogError::CatalogError;
};

class PendingDefinitionError : public CatalogError {
 public:
  using CatalogError::CatalogError;
};

struct ExpectedCount {
  int value = 0;
  std::string provenance;  // paper | derived
};

struct ExpectedProperty {
  LinkShape property = LinkShape::type1;
  bool holds = true;
  std::optional<bool> minor_minimal;
};

struct CatalogEntry {
  std::string name;
  std::string provenance;  // paper | derived | pending-figure
  std::string description;
  std::string notes;
  std::string recipe;            // JSON array of construction steps
  std::optional<Graph> graph;    // stored edge list, absent when pending
  std::optional<ExpectedCount> embedding_count;
  std::vector<ExpectedProperty> expected;

  bool pending() const { return provenance == "pending-figure"; }
};

// Runs a construction recipe: a JSON array of steps applied to a growing graph.
Graph build_recipe(const std::string& recipe_json);

class Catalog {
 public:
  // Built-in data, or the directory named by SPHERELINK_CATALOG_DIR when it is set.
  static const Catalog& builtin();
  static Catalog from_json(const std::string& catalog_json);
  static Catalog load_dir(const std::string& dir);

  std::vector<std::string> names() const;
  bool contains(const std::string& name) const { return entries_.count(name) > 0; }
  const CatalogEntry& entry(const std::string& name) const;
  // Throws UnknownEntryError or PendingDefinitionError.
  Graph graph(const std::string& name) const;

 private:
  std::map<std::string, CatalogEntry> entries_;
  std::vector<std::string> order_;
};

Graph builtin(const std::string& name);

enum class ClaimKind { embedding_count, intrinsic, minor_minimal, move_hypotheses };
std::string to_string(ClaimKind k);

struct Claim {
  std::string name;
  ClaimKind kind = ClaimKind::embedding_count;
  std::string anchor;
  int expected_count = 0;                     // embedding_count
  LinkShape property = LinkShape::type2;      // intrinsic, minor_minimal
  bool expected_holds = true;                 // intrinsic, minor_minimal, move_hypotheses
  std::string move;                           // vert-bar | sub-dangle
  std::vector<std::string> hypotheses;        // which must pass; empty means all
  std::vector<int> move_args;                 // sub-dangle: e.u e.v s1 s2
};

struct ClaimManifest {
  std::vector<Claim> claims;
  static ClaimManifest builtin();
  static ClaimManifest from_json(const std::string& json);
  // Throws CatalogError for claims that name missing entries or lack anchors.
  void validate(const Catalog& catalog) const;
};

enum class ClaimStatus { pass, fail, skipped };
std::string to_string(ClaimStatus s);

struct ClaimResult {
  Claim claim;
  ClaimStatus status = ClaimStatus::skipped;
  std::string expected;
  std::string computed;
  double seconds = 0;
};

struct VerifyOptions {
  bool reflection = true;
  bool nested_only = false;
  int jobs = 1;
};

struct ClaimReport {
  VerifyOptions settings;
  std::vector<ClaimResult> results;
  int count(ClaimStatus s) const;
  bool ok() const { return count(ClaimStatus::fail) == 0; }
  std::string text() const;
  std::string json() const;
};

ClaimReport verify_claims(const ClaimManifest& manifest, const Catalog& catalog, const VerifyOptions& opts = {});

}  // namespace spherelink
