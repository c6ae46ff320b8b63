#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "transknot/certificate.hpp"
#include "transknot/contact.hpp"
#include "transknot/cover.hpp"
#include "transknot/front.hpp"
#include "transknot/transverse.hpp"

namespace py = pybind11;
using namespace transknot;

namespace {

SearchBudget budget_of(int depth, std::size_t states, bool braid_relations) {
  SearchBudget b;
  b.max_depth = depth;
  b.max_states = states;
  b.braid_relations = braid_relations;
  return b;
}

const char* outcome_name(EquivalenceOutcome o) {
  switch (o) {
    case EquivalenceOutcome::equivalent: return "equivalent";
    case EquivalenceOutcome::distinct_self_linking: return "distinct-self-linking";
    case EquivalenceOutcome::distinct_components: return "distinct-components";
    case EquivalenceOutcome::budget_exhausted: return "none";
  }
  return "?";
}

py::dict front_invariants(const std::string& text) {
  const auto o = orient(parse_front(text));
  py::dict d;
  d["components"] = o.component_count();
  d["cusps"] = o.diagram().cusp_count();
  d["crossings"] = o.diagram().crossing_count();
  d["writhe"] = writhe(o);
  if (o.component_count() == 1) {
    d["tb"] = thurston_bennequin(o);
    d["r"] = rotation_number(o);
    d["sl"] = self_linking_of_pushoff(o);
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_transknot, m) {
  m.doc() = "Braid, front, contact and cover computations";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<BraidError>(m, "BraidError", PyExc_ValueError);
  py::register_exception<FrontError>(m, "FrontError", PyExc_ValueError);
  py::register_exception<ContactError>(m, "ContactError", PyExc_ValueError);

  py::class_<BraidWord>(m, "Braid")
      .def(py::init<int, std::vector<int>>(), py::arg("strands"), py::arg("letters") = std::vector<int>{})
      .def_static("parse", [](const std::string& s) { return parse_braid(s); })
      .def_property_readonly("strands", &BraidWord::strands)
      .def_property_readonly("letters", &BraidWord::letters)
      .def("__len__", &BraidWord::size)
      .def("__str__", [](const BraidWord& b) { return serialize(b); })
      .def("__repr__", [](const BraidWord& b) { return "Braid('" + serialize(b) + "')"; })
      .def("__eq__", [](const BraidWord& a, const BraidWord& b) { return a == b; })
      .def("__mul__", [](const BraidWord& a, const BraidWord& b) { return compose(a, b); })
      .def("inverse", [](const BraidWord& a) { return inverse(a); })
      .def("conjugate", [](const BraidWord& a, int g) { return conjugate(a, g); })
      .def("free_reduce", [](const BraidWord& a) { return free_reduce(a); })
      .def("cyclic_shift", [](const BraidWord& a) { return cyclic_shift(a); })
      .def("exponent_sum", [](const BraidWord& a) { return exponent_sum(a); })
      .def("permutation", [](const BraidWord& a) { return permutation(a).images; })
      .def("components", [](const BraidWord& a) { return closure_components(a); })
      .def("positive_stabilize", [](const BraidWord& a) { return positive_markov_stabilize(a); })
      .def("negative_stabilize", [](const BraidWord& a) { return negative_braid_stabilize(a); })
      .def("self_linking", [](const BraidWord& a) { return self_linking(a); })
      .def("alexander", [](const BraidWord& a) { return to_string(alexander_polynomial(a)); })
      .def("alexander_coefficients", [](const BraidWord& a) { return alexander_polynomial(a).terms(); })
      .def("cover_order", [](const BraidWord& a, int n) { return cyclic_cover_homology_order(a, n); },
           py::arg("n"));

  m.def("equivalent",
        [](const BraidWord& a, const BraidWord& b, int depth, std::size_t states, bool braid_relations,
           int extra_strands) {
          EquivalenceBudget budget{budget_of(depth, states, braid_relations), extra_strands};
          const auto r = transversely_equivalent({a, std::nullopt}, {b, std::nullopt}, budget);
          py::dict d;
          d["result"] = outcome_name(r.outcome);
          d["states"] = r.states_explored;
          if (r.witness) {
            std::vector<std::string> fa, fb;
            for (const auto& mv : r.witness->from_a) fa.push_back(to_string(mv));
            for (const auto& mv : r.witness->from_b) fb.push_back(to_string(mv));
            d["from_a"] = fa;
            d["from_b"] = fb;
            d["common"] = serialize(r.witness->common);
          }
          return d;
        },
        py::arg("a"), py::arg("b"), py::arg("depth") = 6, py::arg("states") = 50000,
        py::arg("braid_relations") = false, py::arg("extra_strands") = 3);

  m.def("certify",
        [](const BraidWord& b, std::optional<std::string> label, int depth, std::size_t states,
           bool braid_relations) -> std::optional<std::string> {
          const auto cert = certify_overtwisted({b, std::move(label)}, budget_of(depth, states, braid_relations));
          if (!cert) return std::nullopt;
          return serialize(*cert);
        },
        py::arg("braid"), py::arg("label") = py::none(), py::arg("depth") = 6, py::arg("states") = 50000,
        py::arg("braid_relations") = false);

  m.def("verify_certificate", [](const std::string& text) {
    const auto r = verify_certificate(parse_certificate(text));
    return py::make_tuple(r.ok, r.message);
  });

  m.def("front_invariants", &front_invariants, py::arg("text"));
  m.def("stabilize_front",
        [](const std::string& text, const std::string& sign, std::size_t event, int level) {
          if (sign != "+" && sign != "-") throw py::value_error("sign must be '+' or '-'");
          const auto s = sign == "+" ? StabilizationSign::plus : StabilizationSign::minus;
          return serialize(stabilize(parse_front(text), s, {event, level}));
        },
        py::arg("text"), py::arg("sign"), py::arg("event"), py::arg("level"));

  m.def("contact_density",
        [](const std::string& form, double a, double b, double c, double h, bool euclidean) {
          const auto f = parse_model_form(form);
          return euclidean ? euclidean_contact_density(f, {a, b, c}, h) : contact_density(f, {a, b, c}, h);
        },
        py::arg("form"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("h") = kDefaultStep,
        py::arg("euclidean") = false);

  m.def("contact_check",
        [](const std::string& form, std::optional<std::string> grid) {
          const auto f = parse_model_form(form);
          const auto r = is_contact_on_grid(f, grid ? parse_grid(*grid) : default_grid(f));
          py::dict d;
          d["samples"] = r.samples;
          d["min_abs_density"] = r.min_abs_density;
          d["passed"] = r.passed;
          return d;
        },
        py::arg("form"), py::arg("grid") = py::none());
}
