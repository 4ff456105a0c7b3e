// Python bindings. Results cross the boundary as JSON text.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ratblow/catalog.hpp"
#include "ratblow/serialize.hpp"
#include "ratblow/verify.hpp"

namespace py = pybind11;
using namespace ratblow;

namespace {

ManifoldSpec spec_of(const std::string& text) {
  ManifoldSpec s = parse_spec(text);
  validate_spec(s);
  return s;
}

std::string series_json(const std::string& text, bool pipeline) {
  ManifoldSpec s = spec_of(text);
  ManifoldSeries m = (pipeline ? donaldson_pipeline(s) : donaldson_closed_form(s)).series;
  return Json{{"spec", to_string(s)}, {"method", pipeline ? "pipeline" : "closed_form"}, {"series", to_json(m)}}
      .dump();
}

std::string sw_json(const std::string& text) {
  ManifoldSpec s = spec_of(text);
  SWMap m = sw_closed_form(s).map;
  return Json{{"spec", to_string(s)}, {"sw", to_json(m)}, {"simple_type", sw_simple_type(m)}}.dump();
}

std::string witten_json(const std::string& text) {
  ManifoldSpec s = spec_of(text);
  ManifoldSeries d = donaldson_closed_form(s).series;
  SWMap m = sw_closed_form(s).map;
  return Json{{"spec", to_string(s)},
              {"exponent", to_json(witten_exponent(d.euler, d.signature))},
              {"pass", witten_check(d, m)}}
      .dump();
}

std::string dim_json(long p, const std::vector<long>& coords, const std::string& basis) {
  if (basis != "delta" && basis != "gamma") throw SpecError("basis must be 'delta' or 'gamma'");
  RelClassCp e(p, coords, basis == "delta" ? RelBasis::Delta : RelBasis::Gamma);
  return to_json(dim_report(e)).dump();
}

std::string lemmas_json(long p, long t_max, long box) { return to_json(verify_bv_lemmas(p, t_max, box)).dump(); }

std::string inverse_json(long p) { return to_json(plumbing_inverse(p)).dump(); }

std::string log_coefficients_json(long p) {
  Json out = Json::array();
  for (const auto& [e, c] : formal_log_coefficients(p)) out.push_back(Json{{"exponent", e}, {"coeff", to_json(c)}});
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<SpecError>(m, "SpecError", error.ptr());

  m.def("series", &series_json, py::arg("spec"), py::arg("pipeline") = false);
  m.def("sw", &sw_json, py::arg("spec"));
  m.def("witten", &witten_json, py::arg("spec"));
  m.def("dim", &dim_json, py::arg("p"), py::arg("coords"), py::arg("basis") = "delta");
  m.def("verify_bv_lemmas", &lemmas_json, py::arg("p"), py::arg("t_max") = 2, py::arg("box") = 4);
  m.def("plumbing_inverse", &inverse_json, py::arg("p"));
  m.def("formal_log_coefficients", &log_coefficients_json, py::arg("p"));
  m.def("catalog_specs", &catalog_specs);
}
