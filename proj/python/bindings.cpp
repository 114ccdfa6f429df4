#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mapel/instance_io.hpp"
#include "mapel/network.hpp"
#include "mapel/oracle.hpp"
#include "mapel/polyblock.hpp"
#include "mapel/projection.hpp"
#include "mapel/solver.hpp"
#include "mapel/topology.hpp"

namespace py = pybind11;
using namespace mapel;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Global weighted-throughput power control by polyblock outer approximation.";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  py::class_<Network>(m, "Network")
      .def(py::init<Matrix, Vector, Vector, Vector, Vector>(), py::arg("gains"), py::arg("noise"),
           py::arg("p_max"), py::arg("weights"), py::arg("r_min") = Vector())
      .def_property_readonly("size", &Network::size)
      .def_property_readonly("gains", &Network::gains)
      .def_property_readonly("noise", &Network::noise)
      .def_property_readonly("p_max", &Network::p_max)
      .def_property_readonly("weights", &Network::weights)
      .def_property_readonly("r_min", &Network::r_min)
      .def("__repr__", [](const Network& n) { return "<Network M=" + std::to_string(n.size()) + ">"; });

  m.def("sinr", &sinr, py::arg("net"), py::arg("p"));
  m.def("weighted_throughput", &weighted_throughput, py::arg("net"), py::arg("p"));
  m.def("fraction_fg", &fraction_fg, py::arg("net"), py::arg("p"));
  m.def("phi", &phi, py::arg("net"), py::arg("z"));

  py::class_<FeasibilityReport>(m, "FeasibilityReport")
      .def_readonly("feasible", &FeasibilityReport::feasible)
      .def_readonly("spectral_radius_b", &FeasibilityReport::spectral_radius_b)
      .def_readonly("p_hat", &FeasibilityReport::p_hat)
      .def_property_readonly("reason", [](const FeasibilityReport& r) { return std::string(to_string(r.reason)); });
  m.def("check_feasibility", &check_feasibility, py::arg("net"));

  py::class_<SolverConfig>(m, "SolverConfig")
      .def(py::init<>())
      .def(py::init([](double delta) {
             SolverConfig c;
             c.delta = delta;
             return c;
           }),
           py::arg("delta"))
      .def_readwrite("delta", &SolverConfig::delta)
      .def_readwrite("proj_tol", &SolverConfig::proj_tol)
      .def_readwrite("proj_max_iter", &SolverConfig::proj_max_iter)
      .def_readwrite("lp_tol", &SolverConfig::lp_tol)
      .def_readwrite("max_outer_iter", &SolverConfig::max_outer_iter)
      .def_readwrite("max_vertices", &SolverConfig::max_vertices);

  py::class_<ProjectionResult>(m, "ProjectionResult")
      .def_readonly("lambda_", &ProjectionResult::lambda)
      .def_readonly("p_star", &ProjectionResult::p_star)
      .def_readonly("iterations", &ProjectionResult::iterations)
      .def_readonly("converged", &ProjectionResult::converged)
      .def_readonly("lambda_trace", &ProjectionResult::lambda_trace);
  m.def("project", py::overload_cast<const Network&, const Vector&, const SolverConfig&>(&project),
        py::arg("net"), py::arg("z"), py::arg("cfg") = SolverConfig{});

  py::class_<MaxMinSinrResult>(m, "MaxMinSinrResult")
      .def_readonly("p", &MaxMinSinrResult::p)
      .def_readonly("min_sinr", &MaxMinSinrResult::min_sinr)
      .def_readonly("iterations", &MaxMinSinrResult::iterations)
      .def_readonly("converged", &MaxMinSinrResult::converged);
  m.def("maxmin_sinr", &maxmin_sinr, py::arg("net"), py::arg("cfg") = SolverConfig{});

  py::class_<TraceRow>(m, "TraceRow")
      .def_readonly("iteration", &TraceRow::iteration)
      .def_readonly("num_vertices", &TraceRow::num_vertices)
      .def_readonly("upper_bound_bps_hz", &TraceRow::upper_bound_bps_hz)
      .def_readonly("best_feasible_bps_hz", &TraceRow::best_feasible_bps_hz)
      .def_readonly("gap_ratio", &TraceRow::gap_ratio);

  py::class_<MapelResult>(m, "MapelResult")
      .def_readonly("p_star", &MapelResult::p_star)
      .def_readonly("z_star", &MapelResult::z_star)
      .def_readonly("objective_bps_hz", &MapelResult::objective_bps_hz)
      .def_readonly("upper_bound_bps_hz", &MapelResult::upper_bound_bps_hz)
      .def_readonly("epsilon_bound", &MapelResult::epsilon_bound)
      .def_readonly("outer_iterations", &MapelResult::outer_iterations)
      .def_readonly("vertex_peak", &MapelResult::vertex_peak)
      .def_readonly("trace", &MapelResult::trace)
      .def_property_readonly("status", [](const MapelResult& r) { return std::string(to_string(r.status)); });
  m.def(
      "solve", [](const Network& net, const SolverConfig& cfg) { return solve(net, cfg); },
      py::arg("net"), py::arg("cfg") = SolverConfig{}, py::call_guard<py::gil_scoped_release>());
  m.def("recover_power", &recover_power, py::arg("net"), py::arg("z"), py::arg("fallback_p"));
  m.def("epsilon_bound", &epsilon_bound, py::arg("delta"));
  m.def("initial_vertex", &initial_vertex, py::arg("net"));

  py::class_<GridResult>(m, "GridResult")
      .def_readonly("p_best", &GridResult::p_best)
      .def_readonly("objective_bps_hz", &GridResult::objective_bps_hz)
      .def_readonly("points_evaluated", &GridResult::points_evaluated);
  m.def("grid_search", &grid_search, py::arg("net"), py::arg("resolution"),
        py::call_guard<py::gil_scoped_release>());

  m.def(
      "paper_fixture", [](const std::string& name) { return paper_fixture(parse_fixture(name)); },
      py::arg("name"));
  m.def(
      "random_network",
      [](int num_links, std::uint64_t seed, double r_min, double p_max_w, double noise_w) {
        TopologySpec spec;
        spec.num_links = num_links;
        spec.seed = seed;
        spec.r_min_bps_hz = r_min;
        spec.p_max_w = Vector::Constant(1, p_max_w);
        spec.noise_w = noise_w;
        return random_network(spec);
      },
      py::arg("num_links"), py::arg("seed"), py::arg("r_min") = 0.0, py::arg("p_max_w") = 1e-3,
      py::arg("noise_w") = 1e-7);

  m.def(
      "load_instance", [](const std::string& path) { return to_network(read_instance(path)); },
      py::arg("path"));
  m.def(
      "dump_instance", [](const Network& net) { return serialize_instance(from_network(net)); },
      py::arg("net"));
}
