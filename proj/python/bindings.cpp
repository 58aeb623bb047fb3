#include "circent/blaschke.hpp"
#include "circent/entropy.hpp"
#include "circent/error.hpp"
#include "circent/extremal.hpp"
#include "circent/io.hpp"
#include "circent/log_integrals.hpp"
#include "circent/polycircle.hpp"
#include "circent/suite.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace circent;

namespace {

Precision precision_of(int bits) {
  if (bits == 53) return Precision::Double;
  if (bits == 64) return Precision::Extended;
  throw Error(ErrorKind::InvalidArgument, "precision must be 53 or 64");
}

}  // namespace

PYBIND11_MODULE(_circent, m) {
  m.doc() = "Entropy functionals of polynomials with all zeros on the unit circle";

  static py::exception<Error> error_type(m, "CircentError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(std::string(to_string(e.kind())), std::string(e.what()));
      PyErr_SetObject(error_type.ptr(), args.ptr());
    }
  });

  py::class_<CirclePoly>(m, "CirclePoly")
      .def_static("from_roots", &CirclePoly::from_roots, py::arg("roots"), py::arg("leading") = cplx{1.0},
                  py::arg("unimod_tol") = tol::unimod)
      .def_static("from_angles", &CirclePoly::from_angles, py::arg("angles"), py::arg("leading") = cplx{1.0})
      .def_static("from_coefficients", &CirclePoly::from_coefficients, py::arg("coeffs"),
                  py::arg("circle_tol") = 1e-6, py::arg("cluster_tol") = 1e-5)
      .def_static("binomial", &CirclePoly::binomial, py::arg("n"), py::arg("omega"), py::arg("c") = cplx{1.0})
      .def_property_readonly("degree", &CirclePoly::degree)
      .def_property_readonly("coeffs", &CirclePoly::coeffs)
      .def_property_readonly("roots", &CirclePoly::roots)
      .def_property_readonly("leading", &CirclePoly::leading)
      .def("angles", &CirclePoly::angles)
      .def("simple_zeros", &CirclePoly::simple_zeros, py::arg("sep") = tol::sep)
      .def("__repr__", [](const CirclePoly& p) { return "CirclePoly(degree=" + std::to_string(p.degree()) + ")"; });

  m.def("reflect", [](const Coeffs& f, int n) { return reflect(f, n); }, py::arg("f"), py::arg("n"));

  m.def(
      "normalize_self_inversive",
      [](const CirclePoly& p, bool nearest_one) {
        const auto r = normalize_self_inversive(p, nearest_one ? EtaBranch::NearestOne : EtaBranch::Canonical);
        return py::make_tuple(r.eta, r.normalized);
      },
      py::arg("p"), py::arg("nearest_one") = false, "Returns (eta, eta * p).");

  m.def(
      "polar_factor",
      [](const CirclePoly& p) {
        const auto d = polar_factor(p);
        return py::make_tuple(d.q, d.qstar, d.simple_zeros);
      },
      py::arg("p"), "Returns (q, qstar, simple_zeros) of a self-inversive p.");

  m.def("parseval_norm", [](const CirclePoly& p) { return parseval_norm(p); });
  m.def("gamma_remainder", [](const CirclePoly& p) { return gamma_remainder(p); });
  m.def("perturb_roots", &perturb_roots, py::arg("p"), py::arg("epsilon"), py::arg("seed") = 0);

  m.def(
      "moments_json",
      [](const CirclePoly& p, int extra, int bits) {
        const CirclePoly s = normalize_self_inversive(p).normalized;
        return moments_to_json(moments(polar_factor(s), extra, -1, precision_of(bits))).dump();
      },
      py::arg("p"), py::arg("extra") = 6, py::arg("precision") = 53);

  m.def(
      "log_pair_spectral",
      [](const Coeffs& a, const Coeffs& b, int bits) { return log_pair_spectral(a, b, nullptr, precision_of(bits)); },
      py::arg("a"), py::arg("b"), py::arg("precision") = 53);
  m.def(
      "log_pair_quadrature",
      [](const Coeffs& a, const Coeffs& b, double tolerance) {
        QuadratureConfig c;
        c.tolerance = tolerance;
        return log_pair_quadrature(a, b, c);
      },
      py::arg("a"), py::arg("b"), py::arg("tolerance") = 1e-9);

  m.def(
      "ratio_functional",
      [](const CirclePoly& p, bool quadrature) {
        const auto v = ratio_functional(p, quadrature ? Route::Quadrature : Route::Spectral);
        return py::make_tuple(v.value, v.entropy_term, v.jensen_term, v.route);
      },
      py::arg("p"), py::arg("quadrature") = false, "Returns (value, entropy_term, jensen_term, route).");

  m.def(
      "verify_json",
      [](const CirclePoly& p, bool cross_check, int bits) {
        VerifyOptions o;
        o.cross_check = cross_check;
        o.precision = precision_of(bits);
        return report_to_json(verify_main(p, o)).dump();
      },
      py::arg("p"), py::arg("cross_check") = false, py::arg("precision") = 53);

  m.def("h_fourier", [](int k) { return h_fourier(k).str(); }, py::arg("k"), "Exact value as 'a/b'.");
  m.def("h_fourier_quadrature", &h_fourier_quadrature, py::arg("k"), py::arg("tolerance") = 1e-13);
  m.def("telescoping_sum", [](int n) { return telescoping_sum(n).str(); }, py::arg("n"));
  m.def("telescoping_closed_form", [](int n) { return telescoping_closed_form(n).str(); }, py::arg("n"));

  m.def("objective", &objective, py::arg("angles"), py::arg("leading") = cplx{1.0});
  m.def("extremal_entropy_value", &extremal_entropy_value);
  m.def(
      "minimize_json",
      [](int n, int restarts, std::uint64_t seed) {
        SearchConfig c;
        c.seed = seed;
        py::gil_scoped_release release;
        const auto r = minimize(n, restarts, c);
        py::gil_scoped_acquire acquire;
        return extremal_to_json(r).dump();
      },
      py::arg("n"), py::arg("restarts") = 8, py::arg("seed") = 1);
  m.def(
      "coalescence_json",
      [](const CirclePoly& p, const std::vector<double>& schedule, std::uint64_t seed) {
        return coalescence_to_json(coalescence_experiment(p, schedule, seed)).dump();
      },
      py::arg("p"), py::arg("schedule"), py::arg("seed") = 0);
  m.def(
      "suite_summary_json",
      [](int degree_min, int degree_max, int count, std::uint64_t seed) {
        SuiteConfig c;
        c.degree_min = degree_min;
        c.degree_max = degree_max;
        c.count = count;
        c.seed = seed;
        py::gil_scoped_release release;
        const auto r = run_suite(c);
        py::gil_scoped_acquire acquire;
        return suite_summary_to_json(r.summary).dump();
      },
      py::arg("degree_min"), py::arg("degree_max"), py::arg("count"), py::arg("seed") = 42);
}
