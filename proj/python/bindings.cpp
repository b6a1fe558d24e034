#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mcorr/derive.hpp"
#include "mcorr/digits.hpp"
#include "mcorr/gamma.hpp"
#include "mcorr/landau.hpp"
#include "mcorr/reproduce.hpp"
#include "mcorr/serialize.hpp"
#include "mcorr/suites.hpp"
#include "mcorr/table.hpp"

namespace py = pybind11;
using namespace mcorr;

namespace {

py::tuple bounds(const Enclosure& e) {
  return py::make_tuple(e.lo().to_double(), e.hi().to_double());
}

py::dict reproduce_py(const std::string& target) {
  const ReproduceReport r = reproduce(target);
  py::list items;
  for (const auto& i : r.items) {
    py::dict d;
    d["target"] = i.target;
    d["key"] = i.key;
    d["expected"] = i.expected;
    d["actual"] = i.actual;
    d["status"] = to_string(i.status);
    d["note"] = i.note;
    items.append(d);
  }
  py::dict out;
  out["ok"] = r.ok();
  out["items"] = items;
  return out;
}

py::dict derive_py(const std::string& target, int steps) {
  const Derivation d = derive(target, steps);
  py::list out_steps;
  for (const auto& st : d.steps) {
    py::list phi;
    for (const auto& c : st.phi.coeffs()) phi.append(c.str());
    py::dict s;
    s["rate"] = st.before.exponent;
    s["C"] = st.before.constant.str();
    s["phi"] = phi;
    s["next_rate"] = st.after.exponent;
    s["next_C"] = st.after.constant.str();
    out_steps.append(s);
  }
  py::dict out;
  out["target"] = d.target;
  out["steps"] = out_steps;
  out["scheme_json"] = scheme_to_json(d.scheme);
  return out;
}

py::list table_py(const std::string& family, const std::vector<std::string>& schemes, const std::vector<long>& n,
                  long bits) {
  py::list rows;
  for (const auto& r : make_table(family, schemes, n, bits)) {
    py::dict d;
    d["n"] = r.n;
    d["scheme"] = r.scheme;
    d["error"] = bounds(r.error);
    d["exact"] = r.exact.empty() ? py::object(py::none()) : py::object(py::str(r.exact));
    rows.append(d);
  }
  return rows;
}

py::dict verify_py(const std::string& suite, py::object n_lo, py::object n_hi, long bits) {
  const SuiteInfo& info = suite_info(suite);
  const long lo = n_lo.is_none() ? info.n_lo : n_lo.cast<long>();
  const long hi = n_hi.is_none() ? info.n_hi : n_hi.cast<long>();
  VerificationReport r;
  {
    py::gil_scoped_release release;
    r = run_suite(suite, lo, hi, bits);
  }
  py::list results;
  for (const auto& c : r.results) {
    py::dict d;
    d["inequality"] = c.inequality;
    d["n"] = c.n;
    d["status"] = to_string(c.status);
    d["margin"] = c.margin;
    d["precision_bits"] = c.precision_bits;
    results.append(d);
  }
  py::dict out;
  out["overall"] = to_string(r.overall());
  out["results"] = results;
  return out;
}

}  // namespace

PYBIND11_MODULE(_mcorr, m) {
  m.doc() = "Multiple-correction approximations of the Euler-Mascheroni and Landau constants";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ArithmeticError, e.what());
    }
  });

  m.def("default_precision_bits", &default_precision_bits);
  m.def("reproduce_targets", &reproduce_targets);
  m.def("reproduce", &reproduce_py, py::arg("target") = "all");
  m.def("derive_targets", &derive_targets);
  m.def("derive", &derive_py, py::arg("target"), py::arg("steps"));
  m.def("gamma_schemes", &gamma_scheme_names);
  m.def("landau_schemes", &landau_scheme_names);
  m.def("table", &table_py, py::arg("family"), py::arg("schemes"), py::arg("n"),
        py::arg("precision_bits") = kDefaultPrecisionBits);
  m.def("verify", &verify_py, py::arg("suite"), py::arg("n_lo") = py::none(), py::arg("n_hi") = py::none(),
        py::arg("precision_bits") = kDefaultPrecisionBits);
  m.def(
      "digits", [](const std::string& c, int k) { return certified_digits(c, k).digits; }, py::arg("constant"),
      py::arg("digits"));
  m.def("harmonic", [](long n) { return harmonic(n).str(); });
  m.def("landau_G", [](long n) { return landau_G(n).str(); });
  m.def(
      "gamma_approx",
      [](const std::string& scheme, long n, long bits) { return bounds(gamma_approx(gamma_scheme(scheme), n, bits)); },
      py::arg("scheme"), py::arg("n"), py::arg("precision_bits") = kDefaultPrecisionBits);
  m.def(
      "landau_approx", [](long n, int level, long bits) { return bounds(landau_approx(n, level, bits)); },
      py::arg("n"), py::arg("level"), py::arg("precision_bits") = kDefaultPrecisionBits);
}
