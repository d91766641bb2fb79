#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spherelink/canonical.hpp"
#include "spherelink/catalog.hpp"
#include "spherelink/intrinsic.hpp"
#include "spherelink/io.hpp"
#include "spherelink/minor.hpp"
#include "spherelink/moves.hpp"
#include "spherelink/render.hpp"
#include "spherelink/search.hpp"

namespace py = pybind11;
using namespace spherelink;

namespace {

IntrinsicOptions options(bool reflection, bool nested_only, int jobs) { return {reflection, nested_only, jobs}; }

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es;
  for (const auto& [u, v] : edges) es.emplace_back(u, v);
  return Graph(n, std::move(es));
}

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

py::dict pieces_dict(const LinkPieces& p) {
  py::dict d;
  d["cycles"] = p.cycles;
  d["pairs"] = p.pairs;
  return d;
}

LinkPieces make_pieces(const std::vector<Cycle>& cycles, const std::vector<PointPair>& pairs) {
  return {cycles, pairs};
}

py::dict report_dict(const MoveReport& r) {
  py::dict d;
  d["move"] = r.move;
  d["passed"] = r.all_passed();
  py::list hs;
  for (const auto& h : r.hypotheses) {
    py::dict x;
    x["id"] = h.id;
    x["statement"] = h.statement;
    x["passed"] = h.passed;
    x["detail"] = h.detail;
    hs.append(x);
  }
  d["hypotheses"] = hs;
  d["certificate"] = move_report_json(r);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CatalogError>(m, "CatalogError", PyExc_KeyError);
  py::register_exception<NonPlanarError>(m, "NonPlanarError", PyExc_ValueError);
  py::register_exception<MoveError>(m, "MoveError", PyExc_ValueError);
  py::register_exception<LinkError>(m, "LinkError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges", &edge_list)
      .def("degree", &Graph::degree)
      .def("components", &Graph::components)
      .def("graph6", [](const Graph& g) { return graph6_encode(g); })
      .def("text", [](const Graph& g) { return save_graph(g); })
      .def_static("from_graph6", &graph6_decode)
      .def_static("from_text", &load_graph)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph(" + describe(g) + ")"; });

  py::class_<SphericalArrangement>(m, "Arrangement")
      .def_property_readonly("graph", &SphericalArrangement::graph, py::return_value_policy::copy)
      .def_property_readonly("rotation", &SphericalArrangement::rotation, py::return_value_policy::copy)
      .def_property_readonly("global_face_count", &SphericalArrangement::global_face_count)
      .def_property_readonly("part_count", [](const SphericalArrangement& a) { return a.parts().size(); })
      .def("certificate", [](const SphericalArrangement& a, bool reflection) { return certificate(a, reflection).hex(); },
           py::arg("reflection") = true)
      .def("json", &arrangement_to_json)
      .def("text", &arrangement_to_text)
      .def("svg", [](const SphericalArrangement& a, int size, bool labels) { return render_svg(a, {size, labels}); },
           py::arg("size") = 480, py::arg("labels") = true)
      .def_static("from_json", &arrangement_from_json)
      .def("__repr__", [](const SphericalArrangement& a) { return "Arrangement(" + describe(a.graph()) + ")"; });

  m.def("catalog_names", [] { return Catalog::builtin().names(); });
  m.def("catalog_graph", &builtin, py::arg("name"));
  m.def("is_pending", [](const std::string& name) { return Catalog::builtin().entry(name).pending(); });

  m.def("complete", &complete);
  m.def("cycle_graph", &cycle_graph);
  m.def("disjoint_union", &disjoint_union);
  m.def("with_isolated", &with_isolated);

  m.def("is_planar", &is_planar);
  m.def("is_outerplanar", &is_outerplanar);
  m.def("canonical_form", &canonical_form);
  m.def("is_isomorphic", &is_isomorphic);
  m.def("has_minor", &has_minor, py::arg("g"), py::arg("h"));
  m.def("cycles", &cycles);
  m.def("planar_graphs", &planar_graphs, py::arg("n"), py::arg("max_edges") = -1);

  m.def("embeddings", [](const Graph& g, bool reflection, int jobs) { return spherical_arrangements(g, {reflection, jobs}); },
        py::arg("g"), py::arg("reflection") = true, py::arg("jobs") = 1);
  m.def("equivalent", &equivalent, py::arg("a"), py::arg("b"), py::arg("reflection") = true);

  m.def("is_nonsplit",
        [](const SphericalArrangement& a, const std::vector<Cycle>& cs, const std::vector<PointPair>& ps) {
          return is_nonsplit(a, make_pieces(cs, ps));
        },
        py::arg("arrangement"), py::arg("cycles") = std::vector<Cycle>{}, py::arg("pairs") = std::vector<PointPair>{});
  m.def("find_links",
        [](const SphericalArrangement& a, const std::string& shape, bool nested_only) {
          py::list out;
          for (const auto& p : find_links(a, {link_shape_from_string(shape), nested_only})) out.append(pieces_dict(p));
          return out;
        },
        py::arg("arrangement"), py::arg("shape"), py::arg("nested_only") = false);

  m.def("intrinsically_linked",
        [](const Graph& g, const std::string& shape, bool reflection, bool nested_only, int jobs) {
          return intrinsically_linked(g, link_shape_from_string(shape), options(reflection, nested_only, jobs));
        },
        py::arg("g"), py::arg("shape"), py::arg("reflection") = true, py::arg("nested_only") = false, py::arg("jobs") = 1);
  m.def("intrinsic_certificate",
        [](const Graph& g, const std::string& shape, bool reflection, bool nested_only, int jobs) {
          const auto o = options(reflection, nested_only, jobs);
          return intrinsic_certificate(g, is_intrinsically_linked(g, link_shape_from_string(shape), o), o);
        },
        py::arg("g"), py::arg("shape"), py::arg("reflection") = true, py::arg("nested_only") = false, py::arg("jobs") = 1);
  m.def("link_free_arrangement",
        [](const Graph& g, const std::string& shape, bool reflection, bool nested_only, int jobs) {
          return link_free_arrangement(g, link_shape_from_string(shape), options(reflection, nested_only, jobs));
        },
        py::arg("g"), py::arg("shape"), py::arg("reflection") = true, py::arg("nested_only") = false, py::arg("jobs") = 1);
  m.def("minor_minimal",
        [](const Graph& g, const std::string& shape, bool reflection, bool nested_only, int jobs) {
          const auto o = options(reflection, nested_only, jobs);
          const LinkShape s = link_shape_from_string(shape);
          const auto r = is_minor_minimal(g, s, o);
          py::dict d;
          d["minimal"] = r.minimal;
          d["reason"] = r.reason;
          d["intrinsic"] = r.intrinsic.holds;
          d["certificate"] = minimality_certificate(g, s, r, o);
          return d;
        },
        py::arg("g"), py::arg("shape"), py::arg("reflection") = true, py::arg("nested_only") = false, py::arg("jobs") = 1);
  m.def("dehkordi_farr_oracle", &dehkordi_farr_oracle);

  m.def("check_vert_bar",
        [](const Graph& g0, int n, bool reflection, int jobs) {
          return report_dict(check_vert_bar({g0, n}, options(reflection, false, jobs)));
        },
        py::arg("g0"), py::arg("n"), py::arg("reflection") = true, py::arg("jobs") = 1);
  m.def("apply_vert_bar", [](const Graph& g0, int n) { return apply_vert_bar({g0, n}); });
  m.def("check_sub_dangle",
        [](const Graph& g, std::pair<int, int> e, int s1, int s2, bool reflection, int jobs) {
          return report_dict(check_sub_dangle({g, Edge(e.first, e.second), s1, s2}, options(reflection, false, jobs)));
        },
        py::arg("g"), py::arg("edge"), py::arg("s1"), py::arg("s2"), py::arg("reflection") = true, py::arg("jobs") = 1);
  m.def("apply_sub_dangle", [](const Graph& g, std::pair<int, int> e, int s1, int s2) {
    return apply_sub_dangle({g, Edge(e.first, e.second), s1, s2});
  });

  m.def("search",
        [](const std::string& shape, int max_vertices, int max_edges, bool reflection, int jobs) {
          SearchOptions o;
          o.property = link_shape_from_string(shape);
          o.max_vertices = max_vertices;
          o.max_edges = max_edges;
          o.intrinsic = options(reflection, false, jobs);
          std::vector<Graph> out;
          for (const auto& h : search_minor_minimal(o).hits) out.push_back(h.graph);
          return out;
        },
        py::arg("shape"), py::arg("max_vertices"), py::arg("max_edges") = -1, py::arg("reflection") = true,
        py::arg("jobs") = 1);

  m.def("replay", [](const std::string& json) {
    const auto r = replay_certificate(json);
    py::dict d;
    d["ok"] = r.ok;
    d["checked"] = r.checked;
    d["problems"] = r.problems;
    return d;
  });
}
