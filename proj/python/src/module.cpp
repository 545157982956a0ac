#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tailorder/cli.hpp"
#include "tailorder/families.hpp"
#include "tailorder/orders.hpp"
#include "tailorder/taildep.hpp"

namespace py = pybind11;
using namespace tailorder;

namespace {

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

LimitSchedule schedule_of(double s0, double ratio, int steps) { return LimitSchedule{s0, ratio, steps}; }

GridConfig grid_of(int resolution, double tau) {
  GridConfig g;
  g.resolution = resolution;
  g.tau = tau;
  return g;
}

}  // namespace

PYBIND11_MODULE(_tailorder, m) {
  m.doc() = "Tail dependence functions and tail orders of copulas";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<DescriptorError>(m, "DescriptorError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::class_<Copula>(m, "Copula")
      .def_property_readonly("dimension", &Copula::dimension)
      .def("__call__", [](const Copula& c, const Point& u) { return c.eval(u); })
      .def("descriptor", [](const Copula& c) { return to_python(to_json(c.descriptor())); })
      .def("__repr__", [](const Copula& c) { return "<Copula " + c.descriptor().family_name() + ">"; });

  m.def("build", py::overload_cast<const std::string&>(&build), py::arg("descriptor"));

  m.def(
      "estimate_tdf",
      [](const Copula& c, const Point& w, double s0, double ratio, int steps) {
        const auto e = estimate_tdf(c, w, schedule_of(s0, ratio, steps));
        py::list trace;
        for (const auto& tp : e.trace) trace.append(py::make_tuple(tp.s, tp.ratio));
        py::dict d;
        d["value"] = e.value;
        d["error_estimate"] = e.error_estimate;
        d["converged"] = e.converged;
        d["trace"] = trace;
        return d;
      },
      py::arg("copula"), py::arg("w"), py::arg("s0") = 1e-2, py::arg("ratio") = 0.5, py::arg("steps") = 24);

  m.def(
      "check_tdo",
      [](const Copula& a, const Copula& b, int resolution, double tau) {
        return to_python(to_json(check_tdo(tdf_of(a), tdf_of(b), grid_of(resolution, tau))));
      },
      py::arg("first"), py::arg("second"), py::arg("resolution") = 64, py::arg("tau") = 1e-6);

  m.def(
      "check_loc",
      [](const Copula& a, const Copula& b, double eps, int resolution, double tau, const std::vector<Point>& probes) {
        return to_python(to_json(check_loc(a, b, eps, grid_of(resolution, tau), probes)));
      },
      py::arg("first"), py::arg("second"), py::arg("eps"), py::arg("resolution") = 64, py::arg("tau") = 1e-6,
      py::arg("probes") = std::vector<Point>{});

  m.def(
      "search_cone_order",
      [](const Copula& a, const Copula& b, double c, int resolution, double tau) {
        return to_python(to_json(search_cone_order(a, b, ConeSpec{c}, grid_of(resolution, tau))));
      },
      py::arg("first"), py::arg("second"), py::arg("c") = 0.2, py::arg("resolution") = 64, py::arg("tau") = 1e-6);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"tailorder"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
