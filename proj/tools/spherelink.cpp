#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "spherelink/canonical.hpp"
#include "spherelink/catalog.hpp"
#include "spherelink/intrinsic.hpp"
#include "spherelink/io.hpp"
#include "spherelink/minor.hpp"
#include "spherelink/moves.hpp"
#include "spherelink/render.hpp"
#include "spherelink/search.hpp"

using namespace spherelink;

namespace {

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;
constexpr int kBadInput = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string name;
  std::string file;
  bool from_stdin = false;
  std::string link;
  bool count = false;
  bool list = false;
  bool no_reflection = false;
  bool nested_only = false;
  int max_vertices = 0;
  int max_edges = -1;
  std::string input;
  std::string certificate;
  std::string checkpoint;
  std::string out;
  int jobs = 1;
  int depth = 1;
  int embedding = 0;
  bool no_labels = false;
  std::string contains;
  bool vert_bar = false;
  std::vector<int> sub_dangle;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

Graph named_graph(const std::string& name) {
  if (Catalog::builtin().contains(name)) return Catalog::builtin().graph(name);
  try {
    return graph6_decode(name);
  } catch (const std::exception&) {
    throw UnknownEntryError("unknown catalog entry " + name);
  }
}

Graph source_graph(const Args& a) {
  const int given = !a.name.empty() + !a.file.empty() + a.from_stdin;
  if (given != 1) throw UsageError("give exactly one graph source: a name, --file or --stdin");
  if (!a.name.empty()) return named_graph(a.name);
  if (!a.file.empty()) return load_graph(read_file(a.file));
  std::stringstream ss;
  ss << std::cin.rdbuf();
  return load_graph(ss.str());
}

std::string source_label(const Args& a) {
  if (!a.name.empty()) return a.name;
  if (!a.file.empty()) return a.file;
  return "stdin";
}

LinkShape shape(const Args& a) {
  if (a.link.empty()) throw UsageError("--link is required");
  return link_shape_from_string(a.link);
}

IntrinsicOptions intrinsic_options(const Args& a) { return {!a.no_reflection, a.nested_only, a.jobs}; }

std::string settings_line(const Args& a) {
  return std::string("settings: reflection=") + (a.no_reflection ? "off" : "on") +
         " nested-only=" + (a.nested_only ? "on" : "off");
}

std::string pieces_text(const LinkPieces& p) {
  std::string out;
  for (const auto& c : p.cycles) {
    out += out.empty() ? "cycle" : " | cycle";
    for (Vertex v : c) out += " " + std::to_string(v);
  }
  for (const auto& [u, v] : p.pairs) out += (out.empty() ? "pair " : " | pair ") + std::to_string(u) + " " + std::to_string(v);
  return out;
}

int run_embeddings(const Args& a) {
  const Graph g = source_graph(a);
  const auto all = spherical_arrangements(g, {!a.no_reflection, a.jobs});
  if (!a.list) {
    std::cout << all.size() << "\n";
    return kOk;
  }
  std::cout << "# " << source_label(a) << ": " << all.size() << " embeddings\n# " << settings_line(a) << "\n";
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::cout << "embedding " << i << " " << certificate(all[i], !a.no_reflection).hex() << "\n";
    std::cout << arrangement_to_text(all[i]);
  }
  return kOk;
}

int run_check(const Args& a) {
  const Graph g = source_graph(a);
  const LinkShape p = shape(a);
  const auto v = is_intrinsically_linked(g, p, intrinsic_options(a));
  std::cout << source_label(a) << ": intrinsically " << to_string(p) << " linked: " << (v.holds ? "yes" : "no") << "\n";
  std::cout << settings_line(a) << "\n";
  std::cout << "embeddings: " << v.arrangement_count << "\n";
  for (std::size_t i = 0; i < v.witnesses.size(); ++i)
    std::cout << "embedding " << i << ": " << pieces_text(v.witnesses[i].pieces) << "\n";
  if (v.free_arrangement) std::cout << "link-free embedding:\n" << arrangement_to_text(*v.free_arrangement);
  if (!a.certificate.empty()) write_file(a.certificate, intrinsic_certificate(g, v, intrinsic_options(a)));
  return v.holds ? kOk : kFails;
}

int run_minimal(const Args& a) {
  const Graph g = source_graph(a);
  const LinkShape p = shape(a);
  const auto m = is_minor_minimal(g, p, intrinsic_options(a), a.depth);
  std::cout << source_label(a) << ": minor-minimal " << to_string(p) << ": " << (m.minimal ? "yes" : "no") << "\n";
  std::cout << settings_line(a) << "\n";
  std::cout << "reason: " << m.reason << "\n";
  std::cout << "embeddings: " << m.intrinsic.arrangement_count << "\n";
  std::cout << "refuted minors: " << m.refutations.size() << "\n";
  for (const auto& r : m.refutations) {
    std::string steps;
    for (const auto& s : r.steps) steps += (steps.empty() ? "" : ", ") + to_string(s);
    std::cout << "  " << steps << " -> " << graph6_encode(r.minor) << "\n";
  }
  if (m.linked_minor) {
    std::string steps;
    for (const auto& s : *m.linked_minor) steps += (steps.empty() ? "" : ", ") + to_string(s);
    std::cout << "linked minor: " << steps << "\n";
  }
  if (!a.certificate.empty()) write_file(a.certificate, minimality_certificate(g, p, m, intrinsic_options(a)));
  return m.minimal ? kOk : kFails;
}

int run_minor(const Args& a) {
  const Graph g = source_graph(a);
  if (!a.contains.empty()) {
    const Graph h = named_graph(a.contains);
    const auto steps = find_minor(g, h);
    if (!steps) {
      std::cout << "no minor isomorphic to " << a.contains << "\n";
      return kFails;
    }
    std::cout << "minor " << a.contains << " after " << steps->size() << " steps\n";
    for (const auto& s : *steps) std::cout << "  " << to_string(s) << "\n";
    return kOk;
  }
  std::optional<LinkShape> p;
  if (!a.link.empty()) p = link_shape_from_string(a.link);
  for (const auto& m : immediate_minors(g)) {
    std::cout << to_string(m.step) << "\t" << graph6_encode(m.minor) << "\t" << describe(m.minor);
    if (p) {
      const bool linked = is_planar(m.minor) && intrinsically_linked(m.minor, *p, intrinsic_options(a));
      std::cout << "\t" << (linked ? "intrinsic" : "free");
    }
    std::cout << "\n";
  }
  return kOk;
}

int run_moves(const Args& a) {
  const Graph g = source_graph(a);
  MoveReport r;
  if (!a.sub_dangle.empty()) {
    const auto& s = a.sub_dangle;
    r = check_sub_dangle({g, Edge(std::min(s[0], s[1]), std::max(s[0], s[1])), s[2], s[3]}, intrinsic_options(a));
  } else {
    std::vector<Vertex> kept;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) > 0) kept.push_back(v);
    const int isolated = g.vertex_count() - static_cast<int>(kept.size());
    r = check_vert_bar({g.induced(kept), isolated}, intrinsic_options(a));
  }
  std::cout << source_label(a) << ": " << r.move << " hypotheses\n" << settings_line(a) << "\n";
  for (const auto& h : r.hypotheses)
    std::cout << (h.passed ? "PASS " : "FAIL ") << h.id << ": " << h.statement << " (" << h.detail << ")\n";
  for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
  if (!a.certificate.empty()) write_file(a.certificate, move_report_json(r));
  return r.all_passed() ? kOk : kFails;
}

int run_verify(const Args& a) {
  const Catalog& c = Catalog::builtin();
  const ClaimManifest m = ClaimManifest::builtin();
  m.validate(c);
  const auto report = verify_claims(m, c, {!a.no_reflection, a.nested_only, a.jobs});
  std::cout << report.text();
  if (!a.certificate.empty()) write_file(a.certificate, report.json());
  return report.ok() ? kOk : kFails;
}

int run_search(const Args& a) {
  SearchOptions o;
  o.property = shape(a);
  o.max_vertices = a.max_vertices;
  o.max_edges = a.max_edges;
  o.intrinsic = intrinsic_options(a);
  o.checkpoint_path = a.checkpoint;
  o.progress = [](const std::string& s) { std::cerr << s << "\n"; };
  std::vector<Graph> input;
  if (!a.input.empty()) {
    input = load_graph6_lines(read_file(a.input));
  } else if (a.max_vertices <= 0) {
    throw UsageError("search needs --max-vertices or --input");
  }
  const auto res = search_minor_minimal(o, a.input.empty() ? nullptr : &input);
  std::cout << "# search " << to_string(o.property) << " max-vertices=" << a.max_vertices
            << " max-edges=" << a.max_edges << "\n# " << settings_line(a) << "\n";
  for (const auto& h : res.hits) std::cout << graph6_encode(h.graph) << "\t" << describe(h.graph) << "\n";
  std::cout << "# hits: " << res.hits.size() << " scanned: " << res.scanned << " prefiltered: " << res.prefiltered << "\n";
  if (!a.certificate.empty()) {
    std::string doc;
    for (const auto& h : res.hits) {
      std::string one = minimality_certificate(h.graph, o.property, h.certificate, o.intrinsic);
      one.erase(std::remove(one.begin(), one.end(), '\n'), one.end());
      doc += one + "\n";
    }
    write_file(a.certificate, doc);
  }
  return kOk;
}

int run_render(const Args& a) {
  const Graph g = source_graph(a);
  const auto all = spherical_arrangements(g, {!a.no_reflection, a.jobs});
  if (all.empty()) throw NonPlanarError("graph has no spherical embedding");
  if (a.embedding < 0 || a.embedding >= static_cast<int>(all.size()))
    throw UsageError("--embedding must be below " + std::to_string(all.size()));
  RenderOptions ro;
  ro.labels = !a.no_labels;
  const std::string svg = render_svg(all[a.embedding], ro);
  if (a.out.empty()) {
    std::cout << svg;
  } else {
    write_file(a.out, svg);
  }
  return kOk;
}

int run_replay(const Args& a) {
  if (a.name.empty()) throw UsageError("replay needs a certificate file");
  std::string text = read_file(a.name);
  int checked = 0;
  std::vector<std::string> problems;
  // search certificates hold one document per line
  std::vector<std::string> docs;
  if (text.find("\n{") != std::string::npos && text.front() == '{' && text.find("\n ") == std::string::npos) {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
      if (!line.empty()) docs.push_back(line);
  } else {
    docs.push_back(text);
  }
  for (const auto& d : docs) {
    const auto r = replay_certificate(d);
    checked += r.checked;
    problems.insert(problems.end(), r.problems.begin(), r.problems.end());
  }
  for (const auto& p : problems) std::cout << "problem: " << p << "\n";
  std::cout << (problems.empty() ? "ok" : "rejected") << ": " << checked << " witnesses checked\n";
  return problems.empty() ? kOk : kFails;
}

void add_source(CLI::App* c, Args& a) {
  c->add_option("graph", a.name, "Catalog name or graph6 string");
  c->add_option("--file", a.file, "Graph file (text format or graph6)");
  c->add_flag("--stdin", a.from_stdin, "Read the graph from standard input");
}

void add_settings(CLI::App* c, Args& a) {
  c->add_flag("--no-reflection", a.no_reflection, "Count mirror images as distinct embeddings");
  c->add_flag("--nested-only", a.nested_only, "Only accept type I links whose pair is nested");
  c->add_option("--jobs", a.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

void add_link(CLI::App* c, Args& a) {
  c->add_option("--link", a.link, "Link shape")->check(CLI::IsMember({"2link", "type1", "type2"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical link checks for planar graphs", "spherelink"};
  app.require_subcommand(1);
  Args a;

  auto* emb = app.add_subcommand("embeddings", "Count or list spherical embeddings");
  add_source(emb, a);
  add_settings(emb, a);
  auto* cnt = emb->add_flag("--count", a.count, "Print the number of embeddings");
  emb->add_flag("--list", a.list, "Print every embedding")->excludes(cnt);

  auto* check = app.add_subcommand("check", "Decide whether every embedding holds a link");
  add_source(check, a);
  add_settings(check, a);
  add_link(check, a);
  check->add_option("--certificate", a.certificate, "Write a certificate");

  auto* minimal = app.add_subcommand("minimal", "Decide minor-minimality");
  add_source(minimal, a);
  add_settings(minimal, a);
  add_link(minimal, a);
  minimal->add_option("--certificate", a.certificate, "Write a certificate");
  minimal->add_option("--depth", a.depth, "Minor depth to certify")->check(CLI::PositiveNumber);

  auto* minor = app.add_subcommand("minor", "List immediate minors or test minor containment");
  add_source(minor, a);
  add_settings(minor, a);
  add_link(minor, a);
  minor->add_option("--contains", a.contains, "Catalog name or graph6 string to find as a minor");

  auto* moves = app.add_subcommand("moves", "Check the hypotheses of a move");
  add_source(moves, a);
  add_settings(moves, a);
  auto* vb = moves->add_flag("--vert-bar", a.vert_bar, "Vertices-bar exchange (default)");
  moves->add_option("--sub-dangle", a.sub_dangle, "Subdivisions-dangle: edge endpoints and the two subdivisions")
      ->expected(4)
      ->excludes(vb);
  moves->add_option("--certificate", a.certificate, "Write the report");

  auto* verify = app.add_subcommand("verify-paper", "Check every catalogued claim");
  add_settings(verify, a);
  verify->add_option("--certificate", a.certificate, "Write the report as JSON");

  auto* search = app.add_subcommand("search", "Search for minor-minimal intrinsically linked graphs");
  add_settings(search, a);
  add_link(search, a);
  search->add_option("--max-vertices", a.max_vertices, "Largest vertex count");
  search->add_option("--max-edges", a.max_edges, "Largest edge count");
  search->add_option("--input", a.input, "Scan these graph6 graphs instead");
  search->add_option("--checkpoint", a.checkpoint, "Verdict cache to read and extend");
  search->add_option("--certificate", a.certificate, "Write one certificate per hit");

  auto* render = app.add_subcommand("render", "Draw an embedding as SVG");
  add_source(render, a);
  add_settings(render, a);
  render->add_option("--embedding", a.embedding, "Index of the embedding");
  render->add_option("--out", a.out, "SVG output path");
  render->add_flag("--no-labels", a.no_labels, "Omit vertex labels");

  auto* replay = app.add_subcommand("replay", "Check a certificate's witnesses");
  replay->add_option("certificate", a.name, "Certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (emb->parsed()) return run_embeddings(a);
    if (check->parsed()) return run_check(a);
    if (minimal->parsed()) return run_minimal(a);
    if (minor->parsed()) return run_minor(a);
    if (moves->parsed()) return run_moves(a);
    if (verify->parsed()) return run_verify(a);
    if (search->parsed()) return run_search(a);
    if (render->parsed()) return run_render(a);
    if (replay->parsed()) return run_replay(a);
  } catch (const UsageError& e) {
    std::cerr << "spherelink: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "spherelink: " << e.what() << "\n";
    return kBadInput;
  }
  return kUsage;
}
