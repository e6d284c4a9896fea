// Python module _multilevel. Reports come back as plain dicts built from the
// same JSON the CLI prints, so both front ends agree field for field.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mlc/catalog.hpp"
#include "mlc/constructions.hpp"
#include "mlc/ensembles.hpp"
#include "mlc/error.hpp"
#include "mlc/geometry.hpp"
#include "mlc/io.hpp"
#include "mlc/latticeness.hpp"
#include "mlc/leech.hpp"
#include "mlc/packing.hpp"
#include "mlc/table1.hpp"

namespace py = pybind11;

namespace {

py::object to_py(const mlc::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

mlc::BinaryCode code_from_words(std::size_t n, const std::vector<std::string>& words) {
  std::vector<mlc::BitWord> ws;
  for (const auto& s : words) {
    if (s.size() != n) throw std::invalid_argument("word '" + s + "' does not have length " + std::to_string(n));
    ws.push_back(mlc::BitWord::from_string(s));
  }
  return mlc::BinaryCode(n, std::move(ws));
}

std::vector<std::string> word_strings(const mlc::BinaryCode& c) {
  std::vector<std::string> out;
  for (const auto& w : c.words()) out.push_back(w.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_multilevel, m) {
  // Translators run newest first, so the base class goes in before its subclasses.
  py::register_exception<mlc::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<mlc::BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<mlc::ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<mlc::BinaryCode>(m, "Code")
      .def(py::init(&code_from_words), py::arg("n"), py::arg("words"))
      .def_static("parse", &mlc::parse_code, py::arg("text"))
      .def_property_readonly("length", &mlc::BinaryCode::length)
      .def_property_readonly("is_linear", &mlc::BinaryCode::is_linear)
      .def_property_readonly("words", &word_strings)
      .def("min_distance", [](const mlc::BinaryCode& c) { return mlc::min_hamming_distance(c); })
      .def("__contains__",
           [](const mlc::BinaryCode& c, const std::string& w) {
             return w.size() == c.length() && c.contains(mlc::BitWord::from_string(w));
           })
      .def("__len__", &mlc::BinaryCode::size)
      .def("__str__", &mlc::format_code);

  py::class_<mlc::MainCode>(m, "MainCode")
      .def(py::init<mlc::BinaryCode, std::size_t, std::size_t>(), py::arg("code"), py::arg("n"), py::arg("L"))
      .def_property_readonly("n", &mlc::MainCode::n)
      .def_property_readonly("L", &mlc::MainCode::levels)
      .def_property_readonly("code", &mlc::MainCode::code)
      .def("__len__", &mlc::MainCode::size);

  py::class_<mlc::PeriodicConstellation>(m, "Constellation")
      .def_property_readonly("n", &mlc::PeriodicConstellation::n)
      .def_property_readonly("L", &mlc::PeriodicConstellation::levels)
      .def_property_readonly("q", &mlc::PeriodicConstellation::period)
      .def_property_readonly("source", [](const mlc::PeriodicConstellation& p) { return to_string(p.source()); })
      .def("reps", &mlc::PeriodicConstellation::reps)
      .def("__contains__",
           [](const mlc::PeriodicConstellation& p, const std::vector<std::int64_t>& v) { return p.contains(v); })
      .def("__len__", &mlc::PeriodicConstellation::size)
      .def("__eq__", [](const mlc::PeriodicConstellation& a, const mlc::PeriodicConstellation& b) { return a == b; })
      .def("to_dict", [](const mlc::PeriodicConstellation& p) { return to_py(mlc::to_json(p)); });

  m.def("catalog_ids", &mlc::catalog_ids);
  m.def(
      "catalog_codes", [](const std::string& id, std::size_t n) { return mlc::catalog_example(id, n).codes; },
      py::arg("id"), py::arg("n") = 0, "Level (or projection) codes of a catalog entry.");
  m.def(
      "catalog_main_code", [](const std::string& id, std::size_t n) { return mlc::catalog_example(id, n).main; },
      py::arg("id"), py::arg("n") = 0);
  m.def("repetition_code", &mlc::repetition_code, py::arg("n"));
  m.def("even_weight_code", &mlc::even_weight_code, py::arg("n"));
  m.def("golay24", &mlc::golay24);

  m.def("construction_a", &mlc::construction_a, py::arg("code"));
  m.def(
      "construction_c", [](const std::vector<mlc::BinaryCode>& codes) { return mlc::construction_c(codes); },
      py::arg("codes"));
  m.def(
      "construction_d", [](const std::vector<mlc::BinaryCode>& codes) { return mlc::construction_d(codes); },
      py::arg("codes"));
  m.def(
      "construction_cstar", [](const mlc::MainCode& code) { return mlc::construction_cstar(code); },
      py::arg("code"));

  m.def(
      "brute_closure_oracle",
      [](const mlc::PeriodicConstellation& p) { return to_py(mlc::to_json(mlc::brute_closure_oracle(p))); },
      py::arg("constellation"));
  m.def(
      "thm1_check",
      [](const std::vector<mlc::BinaryCode>& codes) { return to_py(mlc::to_json(mlc::thm1_check(codes))); },
      py::arg("codes"));
  m.def(
      "thm4_check", [](const mlc::MainCode& c) { return to_py(mlc::to_json(mlc::thm4_check(c))); },
      py::arg("code"));
  m.def(
      "thm5_check", [](const mlc::MainCode& c) { return to_py(mlc::to_json(mlc::thm5_check(c))); },
      py::arg("code"));

  m.def("dmin_oracle", [](const mlc::PeriodicConstellation& p) { return mlc::dmin_oracle(p); });
  m.def("dmin_formula_c", [](const std::vector<mlc::BinaryCode>& codes) { return mlc::dmin_formula_c(codes); });
  m.def(
      "eds_check", [](const mlc::PeriodicConstellation& p) { return to_py(mlc::to_json(mlc::eds_check(p))); },
      py::arg("constellation"));
  m.def(
      "packing_report",
      [](const mlc::PeriodicConstellation& p) { return to_py(mlc::to_json(mlc::packing_report(p))); },
      py::arg("constellation"));

  m.def("table1", []() { return to_py(mlc::to_json(mlc::table1())); });
  m.def("gvb_maximize", []() {
    const auto opt = mlc::gvb_maximize();
    return py::make_tuple(opt.alpha_star, opt.rho_star);
  });
  m.def(
      "condition_checks",
      [](std::size_t n, std::size_t levels, std::uint64_t trials, std::uint64_t seed, const std::string& mode) {
        const mlc::EnsembleConfig cfg{n, levels, 0.5, mlc::ensemble_mode_from_string(mode), seed};
        return to_py(mlc::to_json(mlc::condition_checks(cfg, trials)));
      },
      py::arg("n"), py::arg("L"), py::arg("trials"), py::arg("seed") = 1, py::arg("mode") = "nonlinear");
}
