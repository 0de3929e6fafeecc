#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rearrange/nig.hpp"
#include "rearrange/serialization.hpp"

namespace py = pybind11;
using namespace rearrange;

namespace {

// keeps the shared const system handle out of the pybind holder machinery
struct PySystem {
  SystemPtr sys;
};

CellUnion closed_cells(const std::vector<std::string>& cells) {
  std::vector<Address> out;
  for (const std::string& c : cells) out.push_back(parse_address(c));
  return CellUnion(std::move(out), CellKind::Closed);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "rearrangement groups of expanding replacement systems";

  py::class_<PySystem>(m, "System")
      .def_property_readonly(
          "name", [](const PySystem& s) { return s.sys->name; })
      .def("serialize",
           [](const PySystem& s) { return serialize_system(*s.sys); })
      .def("problems",
           [](const PySystem& s) { return validate_expanding(*s.sys); })
      .def("leaves",
           [](const PySystem& s, int depth) {
             std::vector<std::string> out;
             for (const Address& a : full_expansion(s.sys, depth).leaves())
               out.push_back(to_string(a));
             return out;
           },
           py::arg("depth"))
      .def("dot", [](const PySystem& s) { return to_dot(*s.sys); })
      .def("__repr__", [](const PySystem& s) {
        return "<System " + s.sys->name + ">";
      });

  m.def("builtin_names", &builtin_names);
  m.def("builtin",
        [](const std::string& name) { return PySystem{builtin(name)}; });
  m.def("parse_system",
        [](const std::string& text) { return PySystem{parse_system(text)}; });

  py::class_<Rearrangement>(m, "Element")
      .def("serialize",
           [](const Rearrangement& g) { return serialize_diagram(g.diagram()); })
      .def("is_identity", &Rearrangement::is_identity)
      .def("is_periodic", [](const Rearrangement& g) { return is_periodic(g); })
      .def("order", [](const Rearrangement& g) { return order_of(g); })
      .def("canonical",
           [](const Rearrangement& g) {
             return serialize_diagram(canonicalize(g).diagram);
           })
      .def("inverse", [](const Rearrangement& g) { return invert(g); })
      .def("apply",
           [](const Rearrangement& g, const std::string& point) {
             LassoPoint q = apply_point(g, parse_lasso(point));
             return to_string(canonical_lasso(*g.system(), q));
           },
           py::arg("point"))
      .def("dot", [](const Rearrangement& g) { return to_dot(g.diagram()); })
      .def("__mul__",
           [](const Rearrangement& a, const Rearrangement& b) {
             return compose(a, b);
           },
           py::is_operator())
      .def("__pow__",
           [](const Rearrangement& g, long n) { return power(g, n); },
           py::is_operator())
      .def("__eq__",
           [](const Rearrangement& a, const Rearrangement& b) {
             return a == b;
           },
           py::is_operator())
      .def("__repr__", [](const Rearrangement& g) {
        return "<Element on " + g.system()->name + ", " +
               std::to_string(g.diagram().sigma.size()) + " leaves>";
      });

  m.def("identity",
        [](const PySystem& s) { return Rearrangement::identity(s.sys); });
  m.def("parse_element", [](const PySystem& s, const std::string& text) {
    return Rearrangement::make(parse_diagram(s.sys, text));
  });
  m.def("parse_elements", [](const PySystem& s, const std::string& text) {
    std::vector<Rearrangement> out;
    for (GraphPairDiagram& d : parse_diagrams(s.sys, text))
      out.push_back(Rearrangement::make(std::move(d)));
    return out;
  });
  m.def("enumerate_elements",
        [](const PySystem& s, int budget) {
          return enumerate_elements(s.sys, budget);
        },
        py::arg("system"), py::arg("budget"));
  m.def("conjugate", [](const Rearrangement& g, const Rearrangement& h) {
    return conjugate(g, h);
  });

  m.def("wandering",
        [](const Rearrangement& g, unsigned long max_power) {
          WanderingCertificate cert = wandering_cell(g);
          nlohmann::json doc = to_json(cert);
          doc["verified"] = verify_wandering(g, cert, max_power);
          return doc.dump(2);
        },
        py::arg("element"), py::arg("max_power") = 20);

  m.def("find_witness",
        [](const PySystem& s, const std::vector<std::string>& cells,
           const std::string& target, int budget) {
          return find_witness(s.sys,
                              {closed_cells(cells), parse_address(target),
                               budget});
        },
        py::arg("system"), py::arg("cells"), py::arg("target"),
        py::arg("budget") = 4);
  m.def("verify_witness",
        [](const Rearrangement& g, const std::vector<std::string>& cells,
           const std::string& target) {
          return verify_witness(g, closed_cells(cells),
                                parse_address(target));
        });

  m.def("minimality",
        [](const PySystem& s, const std::vector<Rearrangement>& generators,
           int depth, int steps) {
          return to_json(minimality_evidence(s.sys, generators, depth, steps))
              .dump(2);
        },
        py::arg("system"), py::arg("generators"), py::arg("depth") = 1,
        py::arg("steps") = 4);

  m.def("nig_demo",
        [](const PySystem& s, const std::string& point,
           std::vector<Rearrangement> elements, int word_bound, int budget,
           unsigned long max_power) {
          NigConfig cfg{s.sys,      parse_lasso(point), std::move(elements),
                        word_bound, budget,             max_power};
          return to_json(nig_report(cfg)).dump(2);
        },
        py::arg("system"), py::arg("point"), py::arg("elements"),
        py::arg("word_bound") = 4, py::arg("budget") = 6,
        py::arg("max_power") = 20);
}
