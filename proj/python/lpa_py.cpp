#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lpa/cli.hpp"
#include "lpa/error.hpp"
#include "lpa/graph_io.hpp"
#include "lpa/ideal_io.hpp"
#include "lpa/skeleton.hpp"
#include "lpa/two_vertex.hpp"

namespace py = pybind11;
using namespace lpa;

namespace {

// Python-side handle; the library shares graphs by pointer.
struct PyGraph {
  GraphPtr g;
};

std::vector<std::string> names(const Graph& g, const VertexSet& x) {
  std::vector<std::string> out;
  for (Vertex v : x) out.push_back(g.name(v));
  return out;
}

std::vector<std::string> edge_names(const Graph& g, std::span<const Edge> es) {
  std::vector<std::string> out;
  for (Edge e : es) out.push_back(g.name(e));
  return out;
}

nlohmann::json to_nlohmann(const py::object& obj) {
  auto text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return nlohmann::json::parse(text);
}

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict reduction_dict(const Graph& g, const LambdaReduction& r) {
  py::dict d = to_python(to_json(g, r));
  d["graded"] = is_graded(r);
  return d;
}

}  // namespace

PYBIND11_MODULE(_leavitt, m) {
  m.doc() = "Leavitt path algebras over the rationals";
  py::register_exception<Error>(m, "LpaError", PyExc_ValueError);

  py::class_<PyGraph>(m, "Graph")
      .def_static("parse", [](const std::string& text) { return PyGraph{std::make_shared<const Graph>(parse_graph(text))}; })
      .def_static("load", [](const std::string& path) { return PyGraph{load_graph_file(path)}; })
      .def_static("from_shape",
                  [](unsigned lu, unsigned lv, unsigned uv, unsigned vu) {
                    return PyGraph{graph_from_shape({lu, lv, uv, vu})};
                  })
      .def_property_readonly("vertices",
                             [](const PyGraph& p) {
                               std::vector<std::string> out;
                               for (Vertex v : p.g->vertices()) out.push_back(p.g->name(v));
                               return out;
                             })
      .def_property_readonly("edges",
                             [](const PyGraph& p) {
                               std::vector<std::tuple<std::string, std::string, std::string>> out;
                               for (Edge e : p.g->edges())
                                 out.emplace_back(p.g->name(e), p.g->name(p.g->src(e)), p.g->name(p.g->rng(e)));
                               return out;
                             })
      .def("to_text", [](const PyGraph& p) { return to_text(*p.g); })
      .def("condition_k",
           [](const PyGraph& p) {
             auto rep = condition_k(*p.g);
             VertexSet k1(rep.k1_vertices.begin(), rep.k1_vertices.end());
             return py::make_tuple(rep.holds, names(*p.g, k1));
           })
      .def("classify_vertex",
           [](const PyGraph& p, const std::string& v) {
             auto cls = classify_vertex(*p.g, p.g->vertex(v));
             py::object cycle = py::none();
             if (cls.cycle) cycle = py::cast(edge_names(*p.g, cls.cycle->edges()));
             return py::make_tuple(to_string(cls.kind), cycle);
           })
      .def("closure",
           [](const PyGraph& p, const std::vector<std::string>& xs) {
             VertexSet x;
             for (const auto& n : xs) x.insert(p.g->vertex(n));
             return names(*p.g, hereditary_saturated_closure(*p.g, x).members());
           })
      .def("hereditary_saturated_sets",
           [](const PyGraph& p) {
             std::vector<std::vector<std::string>> out;
             for (const auto& s : all_hereditary_saturated_sets(*p.g)) out.push_back(names(*p.g, s.members()));
             return out;
           })
      .def("k1_cycles", [](const PyGraph& p) {
        std::vector<std::vector<std::string>> out;
        for (const auto& c : k1_cycles(*p.g)) out.push_back(edge_names(*p.g, c.edges()));
        return out;
      });

  py::class_<Element>(m, "Element")
      .def(py::init([](const PyGraph& g, const std::string& text) { return parse_element(g.g, text); }))
      .def("__add__", [](const Element& a, const Element& b) { return a + b; })
      .def("__sub__", [](const Element& a, const Element& b) { return a - b; })
      .def("__mul__", [](const Element& a, const Element& b) { return a * b; })
      .def("__neg__", [](const Element& a) { return -a; })
      .def("scale", [](const Element& a, const std::string& c) { return parse_scalar(c) * a; })
      .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
      .def("__str__", [](const Element& a) { return to_string(a); })
      .def("__repr__", [](const Element& a) { return "Element('" + to_string(a) + "')"; })
      .def_property_readonly("is_zero", &Element::is_zero)
      .def("graded_components",
           [](const Element& a) {
             std::map<long, Element> parts = graded_components(a);
             return parts;
           })
      .def("gdeg", [](const Element& a) { return gdeg(a); })
      .def("is_homogeneous", [](const Element& a) { return is_homogeneous(a); });

  m.def("extract_vertex", [](const Element& a) {
    const Graph& g = a.graph();
    auto w = extract_vertex(a);
    auto factors = [&](const std::vector<Monomial>& ms) {
      std::vector<std::string> out;
      for (const auto& mono : ms) out.push_back(to_string(g, mono));
      return out;
    };
    py::dict d;
    d["left"] = factors(w.left_factors);
    d["right"] = factors(w.right_factors);
    d["vertex"] = g.name(w.vertex);
    d["scalar"] = to_string(w.scalar);
    d["result"] = apply_witness(w, a);
    return d;
  });

  m.def("nongraded_witness", [](const PyGraph& p) -> py::object {
    auto w = nongraded_witness(p.g);
    if (!w) return py::none();
    return py::make_tuple(p.g->name(w->vertex), edge_names(*p.g, w->cycle.edges()), w->generator);
  });

  m.def("lambda_reduce", [](const PyGraph& p, const py::object& ideal) {
    return reduction_dict(*p.g, lambda_reduce(*p.g, generators_from_json(*p.g, to_nlohmann(ideal))));
  });

  m.def("contains", [](const PyGraph& p, const py::object& a, const py::object& b) {
    auto ra = lambda_reduce(*p.g, generators_from_json(*p.g, to_nlohmann(a)));
    auto rb = lambda_reduce(*p.g, generators_from_json(*p.g, to_nlohmann(b)));
    return contains(*p.g, ra, rb);
  });

  m.def("count_closed_form", &count_closed_form);
  m.def("enumerate_up_to_iso", [](unsigned k) {
    std::vector<std::tuple<unsigned, unsigned, unsigned, unsigned>> out;
    for (const auto& s : enumerate_up_to_iso(k)) out.emplace_back(s.loops_u, s.loops_v, s.edges_uv, s.edges_vu);
    return out;
  });
  m.def("classify", [](const PyGraph& p) {
    auto cls = classify(*p.g);
    py::dict d;
    d["class"] = cls.label;
    d["canonical_id"] = cls.canonical_id;
    d["listed_classes"] = cls.listed_classes;
    d["notes"] = cls.notes;
    d["skeleton"] = to_python(skeleton_to_json(*p.g, cls.skeleton));
    return d;
  });

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
