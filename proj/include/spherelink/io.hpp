#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "spherelink/embedding.hpp"
#include "spherelink/intrinsic.hpp"
#include "spherelink/linkage.hpp"
#include "spherelink/moves.hpp"

namespace spherelink {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Line-oriented text: `# comment`, `n <count>`, then `e <i> <j>` lines. A single graph6
// line is accepted as well.
Graph load_graph(const std::string& text);
std::string save_graph(const Graph& g);

std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& line);
// One graph per non-empty line; `>>graph6<<` headers and comments are skipped.
std::vector<Graph> load_graph6_lines(const std::string& text);

// Arrangement as JSON: rotation rings, parts, and the global face of each local face.
std::string arrangement_to_json(const SphericalArrangement& a);
SphericalArrangement arrangement_from_json(const Graph& g, const std::string& json);
// Text form: `rot v: ...` lines per part, `place p in-face g outward o` per nested part,
// and `face g: ...` walks with `|` between the local faces of one global face.
std::string arrangement_to_text(const SphericalArrangement& a);

// Certificate documents with stable key order.
std::string intrinsic_certificate(const Graph& g, const IntrinsicVerdict& v, const IntrinsicOptions& opts);
std::string minimality_certificate(const Graph& g, LinkShape property, const MinimalityResult& r,
                                   const IntrinsicOptions& opts);
std::string move_report_json(const MoveReport& r);

struct ReplayReport {
  bool ok = false;
  int checked = 0;
  std::vector<std::string> problems;
};

// Checks every witness of a certificate document without re-running the searches.
ReplayReport replay_certificate(const std::string& json);

}  // namespace spherelink
