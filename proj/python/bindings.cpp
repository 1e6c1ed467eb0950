#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "critfam/chroma.hpp"
#include "critfam/critic.hpp"
#include "critfam/family.hpp"
#include "critfam/graph_io.hpp"
#include "critfam/isomorphism.hpp"
#include "critfam/patterns.hpp"
#include "critfam/survey.hpp"

namespace py = pybind11;
using namespace critfam;

namespace {

// Reports are already defined as JSON documents; hand them over as dicts.
py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::string_view status_name(SolveStatus s) { return s == SolveStatus::exact ? "exact" : "budget_exhausted"; }

std::string_view verdict_name(KColorVerdict v) {
  switch (v) {
    case KColorVerdict::colorable: return "colorable";
    case KColorVerdict::not_colorable: return "not_colorable";
    default: return "budget_exhausted";
  }
}

Pattern pattern_from(const py::object& h) {
  if (py::isinstance<py::str>(h)) return make_pattern(h.cast<std::string>());
  return Pattern{"H", h.cast<Graph>()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Vertex-critical family G(q,k): construction, exact coloring, induced patterns";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnknownPattern>(m, "UnknownPattern", PyExc_ValueError);
  py::register_exception<TooLarge>(m, "TooLarge", PyExc_ValueError);
  m.attr("DEFAULT_NODE_BUDGET") = kDefaultNodeBudget;

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
      .def("degree", &Graph::degree, py::arg("v"))
      .def("degrees", &Graph::degrees)
      .def("neighbors", &Graph::neighbors, py::arg("v"))
      .def("edges", &Graph::edges)
      .def("complement", [](const Graph& g) { return complement(g); })
      .def("induced_subgraph", [](const Graph& g, VertexSet s) { return induced_subgraph(g, s); }, py::arg("vertices"))
      .def("delete_vertex", [](const Graph& g, Vertex v) { return delete_vertex(g, v); }, py::arg("v"))
      .def("to_graph6", [](const Graph& g) { return encode_graph6(g); })
      .def_static("from_graph6", [](const std::string& s) { return decode_graph6(s); }, py::arg("text"))
      .def("__len__", &Graph::order)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "<Graph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">"; });

  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("path_graph", &path_graph, py::arg("n"));
  m.def("cycle_graph", &cycle_graph, py::arg("n"));

  m.def("family", [](long long q, long long k) { return build_family(FamilyParams(q, k)); }, py::arg("q"), py::arg("k"),
        "G(q,k) on qk+1 vertices.");
  m.def("partition_classes", [](long long q, long long k) { return partition_classes(FamilyParams(q, k)); },
        py::arg("q"), py::arg("k"));
  m.def("canonical_coloring", [](long long q, long long k) { return canonical_coloring(FamilyParams(q, k)).colors; },
        py::arg("q"), py::arg("k"));

  m.def(
      "is_k_colorable",
      [](const Graph& g, std::size_t k, std::uint64_t max_nodes) {
        KColorResult r;
        {
          py::gil_scoped_release release;
          r = is_k_colorable(g, k, max_nodes);
        }
        py::object colors = py::none();
        if (r.coloring) colors = py::cast(r.coloring->colors);
        return py::make_tuple(std::string(verdict_name(r.verdict)), colors);
      },
      py::arg("graph"), py::arg("k"), py::arg("max_nodes") = kDefaultNodeBudget,
      "Returns (verdict, colors) where verdict is colorable, not_colorable or budget_exhausted.");

  m.def(
      "chromatic_number",
      [](const Graph& g, std::uint64_t max_nodes) {
        ChiResult r;
        {
          py::gil_scoped_release release;
          r = chromatic_number(g, max_nodes);
        }
        py::dict d;
        d["status"] = std::string(status_name(r.status));
        d["chi"] = r.status == SolveStatus::exact ? py::cast(r.chi) : py::none();
        d["lower_bound"] = r.lower_bound;
        d["upper_bound"] = r.upper_bound;
        d["coloring"] = r.coloring.colors;
        d["clique"] = r.clique;
        d["nodes"] = r.stats.nodes;
        return d;
      },
      py::arg("graph"), py::arg("max_nodes") = kDefaultNodeBudget);

  m.def(
      "find_induced",
      [](const Graph& g, const py::object& h) {
        const Pattern p = pattern_from(h);
        py::gil_scoped_release release;
        return contains_induced(g, p);
      },
      py::arg("graph"), py::arg("pattern"),
      "Embedding of the pattern (a name such as 'C5' or a Graph) as an induced subgraph, or None.");

  m.def(
      "freeness",
      [](const Graph& g, const std::string& patterns) {
        const auto ps = parse_patterns(patterns);
        std::vector<FreenessVerdict> vs;
        {
          py::gil_scoped_release release;
          vs = freeness_report(g, ps);
        }
        py::dict d;
        for (const auto& v : vs) d[py::str(v.pattern)] = v.witness ? py::cast(*v.witness) : py::none();
        return d;
      },
      py::arg("graph"), py::arg("patterns") = "2K2,K3+P1,C5",
      "Maps each pattern to None when the graph is free of it, otherwise to a witness embedding.");

  m.def("find_isomorphism", &find_isomorphism, py::arg("g"), py::arg("h"));

  m.def(
      "criticality",
      [](const Graph& g, std::uint64_t max_nodes, unsigned jobs) {
        CriticalityReport r;
        {
          py::gil_scoped_release release;
          r = criticality_report(g, {max_nodes, jobs});
        }
        return to_python(to_json(r));
      },
      py::arg("graph"), py::arg("max_nodes") = kDefaultNodeBudget, py::arg("jobs") = 1);

  m.def(
      "verify_family",
      [](long long q, long long k, bool chromatic, std::uint64_t max_nodes, unsigned jobs) {
        const FamilyParams p(q, k);
        SuiteOptions o;
        o.chromatic = chromatic;
        o.limits = {max_nodes, jobs};
        SuiteReport r;
        {
          py::gil_scoped_release release;
          r = family_lemma_suite(p, o);
        }
        return to_python(to_json(r));
      },
      py::arg("q"), py::arg("k"), py::arg("chromatic") = true, py::arg("max_nodes") = kDefaultNodeBudget,
      py::arg("jobs") = 1);

  m.def(
      "survey",
      [](std::optional<long long> qmax, std::optional<long long> kmax, unsigned jobs, bool chromatic) {
        if (qmax.has_value() != kmax.has_value()) throw std::invalid_argument("give both qmax and kmax, or neither");
        const auto grid = qmax ? rectangle_grid(*qmax, *kmax) : default_survey_grid();
        SuiteOptions o;
        o.chromatic = chromatic;
        std::vector<SuiteReport> rs;
        {
          py::gil_scoped_release release;
          rs = run_survey(grid, o, jobs);
        }
        return py::make_tuple(render_survey_table(rs, false), to_python(survey_json(rs, false)));
      },
      py::arg("qmax") = py::none(), py::arg("kmax") = py::none(), py::arg("jobs") = 1, py::arg("chromatic") = true,
      "Returns (table, report) for the default grid or q <= qmax, k <= kmax.");
}
