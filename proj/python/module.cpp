#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/complex.h>

#include "eigenpoly/analysis.hpp"

namespace py = pybind11;
using namespace eigenpoly;

namespace {

py::object fraction(const Rational& q) { return py::module_::import("fractions").attr("Fraction")(to_string(q)); }

py::object maybe_fraction(const std::optional<Rational>& q) { return q ? fraction(*q) : py::none(); }

py::dict classification_dict(const Classification& c) {
  py::dict d;
  d["k"] = c.k;
  d["exactly_solvable"] = c.exactly_solvable;
  d["degenerate"] = c.degenerate;
  d["j0"] = c.j0 ? py::cast(*c.j0) : py::none();
  d["d"] = maybe_fraction(c.d);
  d["b"] = maybe_fraction(c.b);
  d["A"] = c.attainment;
  return d;
}

std::vector<std::pair<std::string, std::string>> coeff_pairs(const Polynomial& p) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& a : p.coeffs()) {
    const auto pr = a.to_pair();
    out.emplace_back(pr[0], pr[1]);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_eigenpoly, m) {
  m.doc() = "Eigenpolynomials of exactly-solvable operators";
  py::register_exception<Error>(m, "EigenpolyError", PyExc_RuntimeError);

  py::class_<Operator>(m, "Operator")
      .def_static("parse", &Operator::parse, py::arg("text"), py::arg("name") = "")
      .def_static("load", [](const std::string& path) { return Operator::load(path); }, py::arg("path"))
      .def_property_readonly("name", &Operator::name)
      .def_property_readonly("order", &Operator::order)
      .def("degree_of", &Operator::degree_of)
      .def("digest", &Operator::digest)
      .def("canonical_string", &Operator::canonical_string)
      .def("to_json", [](const Operator& t) { return t.to_json().dump(); })
      .def("__repr__", [](const Operator& t) { return "<Operator " + t.name() + " k=" + std::to_string(t.order()) + ">"; });

  py::class_<Eigenpair>(m, "Eigenpair")
      .def_readonly("n", &Eigenpair::n)
      .def_property_readonly("eigenvalue", [](const Eigenpair& e) { return to_display(e.lambda); })
      .def_property_readonly("coeffs", [](const Eigenpair& e) { return coeff_pairs(e.p); },
                             "exact (re, im) strings in ascending powers")
      .def_readonly("operator_digest", &Eigenpair::operator_digest)
      .def("__repr__", [](const Eigenpair& e) { return "<Eigenpair n=" + std::to_string(e.n) + ">"; });

  m.def("classify", [](const Operator& t) { return classification_dict(classify(t)); });
  m.def("exponent_d", [](const Operator& t) { return fraction(exponent_d(t)); });
  m.def("exponent_b", [](const Operator& t) { return maybe_fraction(exponent_b(t)); });
  m.def("check_b_equals_d", &check_b_equals_d);
  m.def("cauchy_equation", [](const Operator& t) { return cauchy_equation(t).to_string(); });

  m.def("eigenpolynomial", &eigenpolynomial, py::arg("operator"), py::arg("n"),
        py::call_guard<py::gil_scoped_release>());
  m.def("residual_is_zero", &residual_is_zero);

  m.def(
      "roots",
      [](const Eigenpair& e, Precision precision_bits) {
        const RootCloud c = [&] {
          py::gil_scoped_release release;
          return roots(e.p, precision_bits);
        }();
        std::vector<std::pair<std::complex<double>, double>> out;
        for (const auto& r : c.roots) out.emplace_back(r.value.to_complex(), r.err_radius);
        return out;
      },
      py::arg("eigenpair"), py::arg("precision_bits") = 192, "(root, err_radius) pairs rounded to double");

  m.def(
      "largest_modulus",
      [](const Eigenpair& e, Precision precision_bits) {
        py::gil_scoped_release release;
        return largest_modulus(roots(e.p, precision_bits)).to_double();
      },
      py::arg("eigenpair"), py::arg("precision_bits") = 192);

  m.def(
      "growth_report",
      [](const Operator& t, const std::vector<long>& n_grid, std::optional<double> prefactor,
         Precision precision_bits) {
        const GrowthReport g = [&] {
          py::gil_scoped_release release;
          return growth_report(t, n_grid, prefactor, precision_bits);
        }();
        py::list rows;
        for (const auto& r : g.rows) {
          py::dict row;
          row["n"] = r.n;
          row["r_n"] = r.r_n;
          row["exponent"] = r.exponent ? py::cast(*r.exponent) : py::none();
          rows.append(row);
        }
        py::dict out;
        out["rows"] = rows;
        out["fitted_gamma"] = g.fitted_gamma;
        out["fitted_c"] = g.fitted_c;
        return out;
      },
      py::arg("operator"), py::arg("n_grid"), py::arg("prefactor") = py::none(), py::arg("precision_bits") = 192);
}
