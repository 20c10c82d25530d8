#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "gibgcd/errors.hpp"
#include "gibgcd/explorer.hpp"
#include "gibgcd/gcd_engine.hpp"
#include "gibgcd/pisano.hpp"
#include "gibgcd/sequences.hpp"

namespace py = pybind11;

// Python int <-> mpz_class through decimal text; exact for any size.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    const std::string text = py::str(src);
    return value.set_str(text, 10) == 0;
  }

  static handle cast(const mpz_class& src, return_value_policy, handle) {
    const std::string text = src.get_str();
    return PyLong_FromString(text.c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

using namespace gibgcd;

namespace {

GibonacciSpec seed(const Integer& g0, const Integer& g1) { return {g0, g1}; }

}  // namespace

PYBIND11_MODULE(_gibgcd, m) {
  m.doc() = "GCDs of windowed power sums of Gibonacci sequences";

  py::register_exception<DegenerateSequenceError>(m, "DegenerateSequenceError",
                                                  PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError",
                                            PyExc_ValueError);
  py::register_exception<ModulusError>(m, "ModulusError", PyExc_ValueError);

  py::class_<GibonacciSpec>(m, "GibonacciSpec")
      .def(py::init(&seed), py::arg("g0"), py::arg("g1"))
      .def_readwrite("g0", &GibonacciSpec::g0)
      .def_readwrite("g1", &GibonacciSpec::g1)
      .def_property_readonly("characteristic",
                             [](const GibonacciSpec& s) { return characteristic(s); })
      .def_property_readonly("is_primitive", &GibonacciSpec::is_primitive)
      .def("__repr__", [](const GibonacciSpec& s) {
        return "GibonacciSpec" + to_string(s);
      });

  py::enum_<CaseTag>(m, "CaseTag")
      .value("EvenFiveNotDividesMu", CaseTag::kEvenFiveNotDividesMu)
      .value("EvenFiveDividesMu", CaseTag::kEvenFiveDividesMu)
      .value("OddGeneral", CaseTag::kOddGeneral);

  py::class_<GcdClassification>(m, "GcdClassification")
      .def_readonly("value", &GcdClassification::value)
      .def_readonly("case_tag", &GcdClassification::case_tag)
      .def_readonly("k", &GcdClassification::k)
      .def_readonly("spec", &GcdClassification::spec)
      .def_readonly("scale_factor", &GcdClassification::scale_factor)
      .def_readonly("oracle_agrees", &GcdClassification::oracle_agrees);

  py::class_<OddKReport>(m, "OddKReport")
      .def_readonly("k", &OddKReport::k)
      .def_readonly("ell_k", &OddKReport::ell_k)
      .def_readonly("two_mu", &OddKReport::two_mu)
      .def_readonly("hypothesis_holds", &OddKReport::hypothesis_holds)
      .def_readonly("predicted_value", &OddKReport::predicted_value);

  py::class_<PisanoResult>(m, "PisanoResult")
      .def_readonly("modulus", &PisanoResult::modulus)
      .def_readonly("period", &PisanoResult::period)
      .def_readonly("residue_seed", &PisanoResult::residue_seed);

  m.def("fib", &fib, py::arg("n"));
  m.def("lucas", &lucas, py::arg("n"));
  m.def("gib_term", &gib_term, py::arg("spec"), py::arg("n"));
  m.def("characteristic", &characteristic, py::arg("spec"));
  m.def(
      "window_sum",
      [](const GibonacciSpec& s, Index k, Index power, Index start) {
        return window_sum(s, WindowSpec{k, power, start});
      },
      py::arg("spec"), py::arg("k"), py::arg("power") = 2, py::arg("start") = 0);

  m.def("gcd_power_bruteforce", &gcd_power_bruteforce, py::arg("spec"),
        py::arg("k"), py::arg("power") = 2,
        py::arg("windows") = kDefaultOracleWindows);
  m.def("gcd_squares_closed", &gcd_squares_closed, py::arg("spec"), py::arg("k"));
  m.def("gcd_squares_parity", &gcd_squares_parity, py::arg("spec"), py::arg("k"));
  m.def("gcd_squares_classified", &gcd_squares_classified, py::arg("spec"),
        py::arg("k"), py::arg("cross_check") = false,
        py::arg("windows") = kDefaultOracleWindows);
  m.def("gcd_firstpower_closed", &gcd_firstpower_closed, py::arg("spec"),
        py::arg("k"));
  m.def("fib_closed", &fib_closed, py::arg("k"));
  m.def("lucas_closed", &lucas_closed, py::arg("k"));
  m.def(
      "reduce_to_primitive",
      [](const GibonacciSpec& s) {
        auto r = reduce_to_primitive(s);
        return py::make_tuple(r.d, r.primitive);
      },
      py::arg("spec"));
  m.def("odd_k_maximality", &odd_k_maximality, py::arg("spec"), py::arg("k"));

  m.def("pisano_period", &pisano_period, py::arg("spec"), py::arg("modulus"));
  m.def("fib_pisano", &fib_pisano, py::arg("modulus"));
  m.def("lucas_pisano", &lucas_pisano, py::arg("modulus"));
}
