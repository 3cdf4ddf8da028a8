// _lpalg: python bindings for the Leavitt path algebra core.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lpa/corner_skew.hpp"
#include "lpa/regularity.hpp"
#include "lpa/transforms.hpp"

namespace py = pybind11;
using namespace lpa;

namespace {

// Thin value wrapper so python never sees shared_ptr<const ...> holders.
struct PyGraph {
  GraphPtr g;
};

py::dict mapping_dict(const Embedding& emb) {
  py::dict d;
  const DirectedGraph& dom = *emb.domain;
  for (int v = 0; v < dom.vertex_count(); ++v)
    d[py::str(dom.vertex_name(v))] = to_string(emb.vertexImage[v]);
  for (int e = 0; e < dom.edge_count(); ++e) {
    d[py::str(dom.edge_name(e))] = to_string(emb.edgeImage[e]);
    d[py::str(dom.edge_name(e) + "^*")] = to_string(emb.ghostImage[e]);
  }
  return d;
}

void translate_error(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse:
      PyErr_SetString(PyExc_ValueError, e.what());
      break;
    case ErrorKind::Domain:
      PyErr_SetString(PyExc_ArithmeticError, e.what());
      break;
    case ErrorKind::Internal:
      PyErr_SetString(PyExc_RuntimeError, e.what());
      break;
  }
}

} // namespace

PYBIND11_MODULE(_lpalg, m) {
  m.doc() = "Exact computation in Leavitt path algebras";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      translate_error(e);
    }
  });

  py::class_<Field>(m, "Field")
      .def_static("rationals", &Field::rationals)
      .def_static("prime", &Field::prime, py::arg("p"))
      .def("characteristic", &Field::characteristic)
      .def("__repr__", [](const Field& f) {
        return f.is_rational() ? std::string("Field.rationals()")
                               : "Field.prime(" +
                                     std::to_string(f.characteristic()) + ")";
      });

  py::class_<PyGraph>(m, "Graph")
      .def_static("parse",
                  [](const std::string& text) {
                    return PyGraph{parse_graph_string(text)};
                  },
                  py::arg("text"))
      .def_static("load",
                  [](const std::string& path) {
                    return PyGraph{load_graph_file(path)};
                  },
                  py::arg("path"))
      .def_property_readonly(
          "vertices",
          [](const PyGraph& g) {
            std::vector<std::string> out;
            for (int v = 0; v < g.g->vertex_count(); ++v)
              out.push_back(g.g->vertex_name(v));
            return out;
          })
      .def_property_readonly(
          "edges",
          [](const PyGraph& g) {
            std::vector<std::string> out;
            for (int e = 0; e < g.g->edge_count(); ++e)
              out.push_back(g.g->edge_name(e));
            return out;
          })
      .def("is_acyclic", [](const PyGraph& g) { return g.g->is_acyclic(); })
      .def("classify",
           [](const PyGraph& g, const std::string& v) {
             std::vector<std::string> out;
             for (auto l : g.g->classify_vertex(v)) out.push_back(to_string(l));
             return out;
           },
           py::arg("vertex"))
      .def("__str__", [](const PyGraph& g) { return g.g->to_file_format(); });

  py::class_<Element>(m, "Element")
      .def_static("parse",
                  [](const PyGraph& g, const Field& f, const std::string& s) {
                    return parse_element(g.g, f, s);
                  },
                  py::arg("graph"), py::arg("field"), py::arg("text"))
      .def("__add__", [](const Element& a, const Element& b) { return a + b; })
      .def("__sub__", [](const Element& a, const Element& b) { return a - b; })
      .def("__mul__", [](const Element& a, const Element& b) { return a * b; })
      .def("__neg__", [](const Element& a) { return -a; })
      .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
      .def("star", [](const Element& a) { return star(a); })
      .def("degree", [](const Element& a) { return degree(a); })
      .def("is_homogeneous", [](const Element& a) { return is_homogeneous(a); })
      .def("is_zero", &Element::is_zero)
      .def("term_count", &Element::term_count)
      .def("__str__", [](const Element& a) { return to_string(a); })
      .def("__repr__",
           [](const Element& a) { return "Element('" + to_string(a) + "')"; });

  py::class_<WitnessReport>(m, "WitnessReport")
      .def_readonly("x", &WitnessReport::x)
      .def_readonly("y", &WitnessReport::y)
      .def_readonly("bound", &WitnessReport::solvedAtBound)
      .def_readonly("verified", &WitnessReport::verified);

  m.def("find_witness",
        [](const Element& x, int start, int max) {
          return find_witness(x, start, max);
        },
        py::arg("x"), py::arg("start") = -1, py::arg("max") = -1);
  m.def("find_witness_unrestricted",
        [](const Element& x, int start, int max) {
          return find_witness_unrestricted(x, start, max);
        },
        py::arg("x"), py::arg("start") = -1, py::arg("max") = -1);

  m.def("idempotent_generator",
        [](const std::vector<Element>& xs) {
          auto cert = idempotent_generator(xs);
          return py::make_tuple(cert.e, cert.membershipOut);
        },
        py::arg("generators"),
        "Returns (e, multipliers) with e idempotent, e x_i = x_i and "
        "e = sum x_i m_i.");
  m.def("nonzero_ideal_idempotent",
        [](const Element& x) { return nonzero_ideal_idempotent(x); },
        py::arg("x"));

  m.def("regularity_suite",
        [](const PyGraph& g, const Field& f, int trials, int terms, int lenCap,
           std::uint64_t seed) {
          return regularity_suite(g.g, f, trials, terms, lenCap, seed).to_json();
        },
        py::arg("graph"), py::arg("field"), py::arg("trials"),
        py::arg("terms") = 3, py::arg("len_cap") = 3, py::arg("seed"),
        "JSON report; deterministic for a fixed seed.");

  m.def("remove_source",
        [](const PyGraph& g, const Field& f, const std::string& v) {
          auto out = remove_source(g.g, f, v);
          py::dict d;
          d["graph"] = PyGraph{out.result};
          d["mapping"] = mapping_dict(out.emb);
          d["fullness_certificate"] = to_string(out.fullnessCertificate);
          return d;
        },
        py::arg("graph"), py::arg("field"), py::arg("vertex"));
  m.def("remove_all_sources",
        [](const PyGraph& g, const Field& f) {
          auto out = remove_all_sources(g.g, f);
          std::vector<std::pair<std::string, std::string>> moves;
          for (const auto& mv : out.log)
            moves.emplace_back(mv.kind == SourceEliminationMove::RemovedSource
                                   ? "source"
                                   : "isolated",
                               mv.vertex);
          return py::make_tuple(PyGraph{out.result}, moves);
        },
        py::arg("graph"), py::arg("field"));
  m.def("desingularize",
        [](const PyGraph& g, const Field& f, int depth) {
          auto out = desingularize(g.g, f, depth);
          py::dict d;
          d["graph"] = PyGraph{out.result};
          d["mapping"] = mapping_dict(out.emb);
          d["edge_degrees"] = out.edgeDegrees.weight;
          return d;
        },
        py::arg("graph"), py::arg("field"), py::arg("depth"));

  m.def("realize_corner_skew",
        [](const PyGraph& g, const Field& f) {
          auto real = realize_lpa(g.g, f);
          py::dict d;
          d["t_plus"] = real.tPlus;
          d["t_minus"] = real.tMinus;
          d["p"] = real.ring.p;
          return d;
        },
        py::arg("graph"), py::arg("field"),
        "L(E) = L(E)_0[t+, t-, phi] for a finite graph without sources.");
}
