#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "iscp/api.hpp"

namespace py = pybind11;

namespace {

std::string run_json(const std::string& command, const std::string& input, std::uint64_t seed,
                     double tol, double tol_spec, int cap, const std::string& order) {
  iscp::api::Options opt;
  opt.seed = seed;
  opt.tol = tol;
  opt.tol_spec = tol_spec;
  opt.cap = cap;
  opt.order = order;
  auto in = nlohmann::json::parse(input);
  return iscp::api::run(command, in, opt).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite-scale verification of inverse semigroup actions, their germ groupoids "
            "and crossed products";

  py::register_exception<iscp::structural_error>(m, "StructuralError", PyExc_ValueError);
  py::register_exception<iscp::precondition_error>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<iscp::axiom_error>(m, "AxiomError", PyExc_ValueError);
  py::register_exception<iscp::internal_check_error>(m, "InternalCheckError", PyExc_RuntimeError);
  py::register_exception<iscp::resource_error>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<iscp::conditioning_error>(m, "ConditioningError", PyExc_RuntimeError);

  m.def("commands", &iscp::api::commands, "names of the available operations");
  m.def("run_json", &run_json, py::arg("command"), py::arg("input"),
        py::arg("seed") = 12345, py::arg("tol") = 1e-10, py::arg("tol_spec") = 1e-9,
        py::arg("cap") = 10000, py::arg("order") = "index",
        "run one operation on a JSON document and return the JSON report");
}
