#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wildforms/analyze.hpp"
#include "wildforms/families.hpp"
#include "wildforms/parser.hpp"
#include "wildforms/tensor.hpp"

namespace py = pybind11;
using namespace wildforms;

namespace {

NamedForm parse_named(const std::string& text, int nvars) {
  VariableSet vars = VariableSet::standard(nvars);
  return NamedForm{"", vars, parse_form(text, vars)};
}

int infer_nvars(const std::string& text) {
  int max_index = -1;
  for (std::size_t i = 0; i + 1 < text.size(); ++i)
    if ((text[i] == 'x' || text[i] == 'y') &&
        std::isdigit(static_cast<unsigned char>(text[i + 1])))
      max_index = std::max(max_index, std::atoi(text.c_str() + i + 1));
  return max_index + 1;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact classification toolkit for wild forms";

  py::register_exception<Error>(m, "WildformsError", PyExc_ValueError);

  py::class_<NamedForm>(m, "Form")
      .def_static(
          "parse",
          [](const std::string& text, int nvars) {
            return parse_named(text, nvars > 0 ? nvars : infer_nvars(text));
          },
          py::arg("text"), py::arg("nvars") = 0,
          "Parse a form in variables x0..x<n>.")
      .def_static(
          "named", [](const std::string& name) { return named_example(name); },
          py::arg("name"), "Catalog form (H5, Ikeda, Perazzo, G4, F7, ...).")
      .def_static(
          "gd", [](int d) { return named_example("G" + std::to_string(d)); },
          py::arg("d"))
      .def_static(
          "fn", [](int n) { return named_example("F" + std::to_string(n)); },
          py::arg("n"))
      .def_property_readonly("nvars", [](const NamedForm& f) { return f.form.nvars(); })
      .def_property_readonly("degree",
                             [](const NamedForm& f) { return f.form.degree(); })
      .def_property_readonly("name", [](const NamedForm& f) { return f.name; })
      .def("__str__",
           [](const NamedForm& f) { return print_poly(f.form.poly(), f.vars); })
      .def("__eq__",
           [](const NamedForm& a, const NamedForm& b) { return a.form == b.form; })
      .def("hilbert_function",
           [](const NamedForm& f) { return hilbert_function(f.form).values; })
      .def("is_concise", [](const NamedForm& f) { return is_concise(f.form); })
      .def("rank_lower_bound",
           [](const NamedForm& f) { return rank_lower_bound(f.form); })
      .def(
          "hessian_vanishes",
          [](const NamedForm& f, bool exact, std::uint64_t seed) {
            return hessian_vanishes(f.form, {.exact = exact, .seed = seed}).vanishes;
          },
          py::arg("exact") = false, py::arg("seed") = 0)
      .def(
          "higher_hessian_vanishes",
          [](const NamedForm& f, int k, bool exact, std::uint64_t seed) {
            return higher_hessian_vanishes(f.form, k, {.exact = exact, .seed = seed})
                .vanishes;
          },
          py::arg("k"), py::arg("exact") = false, py::arg("seed") = 0)
      .def(
          "has_slp",
          [](const NamedForm& f, std::uint64_t seed) {
            return has_slp(f.form, {.seed = seed}).has_slp;
          },
          py::arg("seed") = 0)
      .def("annihilator_generators",
           [](const NamedForm& f) {
             GradedIdeal ann = annihilator_generators(f.form, f.vars);
             std::vector<std::string> out;
             for (const auto& g : ann.gens()) out.push_back(print_poly(g, f.vars));
             return out;
           })
      .def(
          "analyze_json",
          [](const NamedForm& f, bool exact, std::uint64_t seed, bool certify_family,
             bool saturation) {
            AnalyzeOptions opts;
            opts.exact = exact;
            opts.seed = seed;
            opts.certify_family = certify_family;
            opts.saturation_check = saturation;
            return report_to_json(analyze_form(f, opts));
          },
          py::arg("exact") = false, py::arg("seed") = 0,
          py::arg("certify_family") = false, py::arg("saturation") = true);

  m.def("gd_decomposition_json",
        [](int d) { return decomposition_to_json(gd_decomposition(d)); }, py::arg("d"));
  m.def(
      "fn_decomposition_json",
      [](int n, int a, int b) {
        return decomposition_to_json(fn_decomposition(n, a, b));
      },
      py::arg("n"), py::arg("a") = 0, py::arg("b") = 0);
  m.def(
      "verify_decomposition",
      [](const std::string& json, const NamedForm& f) {
        return verify_border_decomposition(decomposition_from_json(json), f.form).ok;
      },
      py::arg("decomposition_json"), py::arg("form"));
  m.def(
      "limiting_scheme",
      [](const std::string& json, const NamedForm& f, int bound) {
        BorderDecomposition dec = decomposition_from_json(json);
        std::optional<int> b;
        if (bound > 0) b = bound;
        LimitingSchemeResult res = limiting_scheme_ideal(dec, f.form, b);
        py::dict out;
        out["length"] = res.length;
        out["length_matches_summands"] = res.length_matches_summands;
        out["contained_in_annihilator"] = res.contained_in_annihilator;
        out["hf_unsaturated"] = res.hf_unsaturated;
        std::vector<std::string> gens;
        VariableSet vars = VariableSet::standard(f.form.nvars());
        for (const auto& g : res.saturated.gens()) gens.push_back(print_poly(g, vars));
        out["saturated_generators"] = gens;
        return out;
      },
      py::arg("decomposition_json"), py::arg("form"), py::arg("degree_bound") = 0);
  m.def(
      "apolar_algebra_json",
      [](const NamedForm& f) { return algebra_to_json(apolar_algebra(f.form)); },
      py::arg("form"));
  m.def(
      "is_gorenstein",
      [](const std::string& algebra_json) {
        return is_gorenstein(algebra_from_json(algebra_json)).has_value();
      },
      py::arg("algebra_json"));
  m.def("catalog", [] { return named_example_catalog(); });
}
