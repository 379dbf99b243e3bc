// Python bindings for the core operations: graph construction, boundary
// detection, walks, spectra, the inequality reports and energy maximization.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphpt/abp.hpp"
#include "graphpt/boundary.hpp"
#include "graphpt/distance.hpp"
#include "graphpt/dot.hpp"
#include "graphpt/edgelist.hpp"
#include "graphpt/energy.hpp"
#include "graphpt/families.hpp"
#include "graphpt/graph6.hpp"
#include "graphpt/hardy.hpp"
#include "graphpt/scan.hpp"
#include "graphpt/spectral.hpp"
#include "graphpt/walks.hpp"

namespace py = pybind11;
using namespace graphpt;

namespace {

std::vector<int> neighbors_list(const Graph& g, int v) {
  g.check_vertex(v);
  const auto span = g.neighbors(v);
  return {span.begin(), span.end()};
}

}  // namespace

PYBIND11_MODULE(_graphpt, m) {
  m.doc() = "Discrete potential theory on graph boundaries";

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("n", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("degree", &Graph::degree, py::arg("v"))
      .def("neighbors", &neighbors_list, py::arg("v"))
      .def("degree_extremes", &Graph::degree_extremes)
      .def("edges", &Graph::edges)
      .def("bfs_distances", &Graph::bfs_distances, py::arg("source"))
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def(
      "build_graph",
      [](int n, const std::vector<Edge>& edges) { return build_graph(n, edges); },
      py::arg("n"), py::arg("edges"));

  m.def("path_graph", &path_graph, py::arg("n"));
  m.def("cycle_graph", &cycle_graph, py::arg("n"));
  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("star_graph", &star_graph, py::arg("leaves"));
  m.def("grid_graph", &grid_graph, py::arg("rows"), py::arg("cols"));
  m.def("binary_tree", &binary_tree, py::arg("depth"));
  m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed"));
  m.def("random_connected_graph", &random_connected_graph, py::arg("n"),
        py::arg("extra_edge_fraction"), py::arg("seed"));

  py::class_<DistanceMatrix>(m, "DistanceMatrix")
      .def("__call__", &DistanceMatrix::operator(), py::arg("v"), py::arg("w"))
      .def("row", &DistanceMatrix::row_copy, py::arg("v"))
      .def_property_readonly("diameter", &DistanceMatrix::diameter)
      .def_property_readonly("n", &DistanceMatrix::order)
      .def_property_readonly("dense", &DistanceMatrix::dense);

  m.def("all_pairs_distances", &all_pairs_distances, py::arg("graph"),
        py::arg("dense_cap") = DistanceMatrix::kDenseCap);

  py::class_<BoundarySet>(m, "BoundarySet")
      .def_readonly("members", &BoundarySet::members)
      .def_readonly("witness", &BoundarySet::witness)
      .def("contains", &BoundarySet::contains, py::arg("v"))
      .def_property_readonly("size", &BoundarySet::size)
      .def("__repr__", [](const BoundarySet& b) {
        return "BoundarySet(size=" + std::to_string(b.size()) + ")";
      });

  py::class_<LevelPartition>(m, "LevelPartition")
      .def_readonly("root", &LevelPartition::root)
      .def_readonly("levels", &LevelPartition::levels);

  py::class_<IsoperimetricReport>(m, "IsoperimetricReport")
      .def_readonly("lhs", &IsoperimetricReport::lhs)
      .def_property_readonly("rhs",
                             [](const IsoperimetricReport& r) { return r.rhs.to_double(); })
      .def_property_readonly(
          "rhs_exact",
          [](const IsoperimetricReport& r) { return py::make_tuple(r.rhs.num, r.rhs.den); })
      .def_readonly("holds", &IsoperimetricReport::holds);

  m.def("is_witnessed", &is_witnessed, py::arg("graph"), py::arg("dist"), py::arg("v"),
        py::arg("w"));
  m.def("boundary_set", &boundary_set, py::arg("graph"), py::arg("dist"));
  m.def("boundary_via_levels", &boundary_via_levels, py::arg("graph"), py::arg("dist"));
  m.def("interior_check", &interior_check, py::arg("graph"), py::arg("dist"), py::arg("v"));
  m.def("make_level_partition", &make_level_partition, py::arg("graph"), py::arg("dist"),
        py::arg("root"));
  m.def("isoperimetric_report", &isoperimetric_report, py::arg("graph"), py::arg("dist"),
        py::arg("boundary"));

  py::class_<RngSeed>(m, "RngSeed")
      .def(py::init([](std::uint64_t seed, std::uint64_t stream) {
             return RngSeed{seed, stream};
           }),
           py::arg("seed") = 0, py::arg("stream") = 0)
      .def_readwrite("seed", &RngSeed::seed)
      .def_readwrite("stream", &RngSeed::stream);

  py::class_<HittingPotential>(m, "HittingPotential")
      .def_readonly("phi", &HittingPotential::phi)
      .def_readonly("absorbing", &HittingPotential::absorbing)
      .def_property_readonly("max", &HittingPotential::max);

  m.def(
      "hitting_potential",
      [](const Graph& g, const std::vector<int>& absorbing) {
        return hitting_potential(g, absorbing);
      },
      py::arg("graph"), py::arg("absorbing"));

  m.def(
      "simulate_exit_time",
      [](const Graph& g, const std::vector<int>& absorbing, int v0, RngSeed seed) {
        return simulate_exit_time(g, absorbing, v0, seed);
      },
      py::arg("graph"), py::arg("absorbing"), py::arg("v0"), py::arg("seed") = RngSeed{});

  py::class_<ExitTimeEstimate>(m, "ExitTimeEstimate")
      .def_readonly("mean", &ExitTimeEstimate::mean)
      .def_property_readonly("stderr", [](const ExitTimeEstimate& e) { return e.stderr_; })
      .def_readonly("trials", &ExitTimeEstimate::trials);

  m.def(
      "estimate_exit_time",
      [](const Graph& g, const std::vector<int>& absorbing, int v0, std::uint64_t trials,
         RngSeed seed) { return estimate_exit_time(g, absorbing, v0, trials, seed); },
      py::arg("graph"), py::arg("absorbing"), py::arg("v0"), py::arg("trials"),
      py::arg("seed") = RngSeed{});

  py::class_<WalkDistribution>(m, "WalkDistribution")
      .def_readonly("mass", &WalkDistribution::mass)
      .def_readonly("step", &WalkDistribution::step)
      .def(
          "mass_on",
          [](const WalkDistribution& d, const std::vector<int>& vertices) {
            return d.mass_on(vertices);
          },
          py::arg("vertices"));

  m.def(
      "walk_distribution",
      [](const Graph& g, const std::vector<int>& absorbing, int v0, int steps) {
        return walk_distribution(g, absorbing, v0, steps);
      },
      py::arg("graph"), py::arg("absorbing"), py::arg("v0"), py::arg("steps"));

  m.def("interval_tail_exact", &interval_tail_exact, py::arg("radius"), py::arg("start"),
        py::arg("steps"));
  m.def(
      "interval_mean_exact",
      [](int radius, int start) {
        const Rational mean = interval_mean_exact(radius, start);
        return py::make_tuple(mean.num, mean.den);
      },
      py::arg("radius"), py::arg("start"));

  m.def(
      "apply_laplacian",
      [](const Graph& g, const std::vector<double>& f) { return apply_laplacian(g, f); },
      py::arg("graph"), py::arg("f"));

  py::class_<LaplacianView>(m, "LaplacianView")
      .def_readonly("kept", &LaplacianView::kept)
      .def_readonly("matrix", &LaplacianView::matrix);

  m.def("neumann_laplacian", &neumann_laplacian, py::arg("graph"));
  m.def(
      "dirichlet_laplacian",
      [](const Graph& g, const std::vector<int>& x) { return dirichlet_laplacian(g, x); },
      py::arg("graph"), py::arg("x"));
  m.def(
      "dirichlet_laplacian_via_subgraph",
      [](const Graph& g, const std::vector<int>& x) {
        return dirichlet_laplacian_via_subgraph(g, x);
      },
      py::arg("graph"), py::arg("x"));
  m.def(
      "rayleigh_quotient",
      [](const Graph& g, const std::vector<double>& f) { return rayleigh_quotient(g, f); },
      py::arg("graph"), py::arg("f"));
  m.def(
      "dirichlet_solve",
      [](const Graph& g, const std::vector<int>& x, const std::vector<double>& rhs,
         const std::vector<double>& boundary_values) {
        return dirichlet_solve(g, x, rhs, boundary_values);
      },
      py::arg("graph"), py::arg("x"), py::arg("rhs"),
      py::arg("boundary_values") = std::vector<double>{});

  py::class_<Eigenpair>(m, "Eigenpair")
      .def_readonly("value", &Eigenpair::value)
      .def_readonly("vector", &Eigenpair::vector)
      .def_readonly("residual", &Eigenpair::residual);

  m.def(
      "smallest_dirichlet_eigenpair",
      [](const Graph& g, const std::vector<int>& x) { return smallest_dirichlet_eigenpair(g, x); },
      py::arg("graph"), py::arg("x"));

  py::class_<FaberKrahnReport>(m, "FaberKrahnReport")
      .def_readonly("lambda1", &FaberKrahnReport::lambda1)
      .def_readonly("bound", &FaberKrahnReport::bound)
      .def_readonly("q", &FaberKrahnReport::q)
      .def_readonly("interior_empty", &FaberKrahnReport::interior_empty)
      .def_readonly("holds", &FaberKrahnReport::holds);

  m.def("faber_krahn_report", &faber_krahn_report, py::arg("graph"), py::arg("dist"),
        py::arg("boundary"));

  py::class_<NeumannSpectrum>(m, "NeumannSpectrum")
      .def_readonly("pair", &NeumannSpectrum::pair)
      .def_readonly("multiplicity", &NeumannSpectrum::multiplicity)
      .def_readonly("basis", &NeumannSpectrum::basis);

  m.def("neumann_second_eigenpair", &neumann_second_eigenpair, py::arg("graph"));

  py::enum_<HotspotsVerdict>(m, "HotspotsVerdict")
      .value("Holds", HotspotsVerdict::holds)
      .value("Violated", HotspotsVerdict::violated)
      .value("Degenerate", HotspotsVerdict::degenerate);

  py::class_<HotspotsReport::VectorVerdict>(m, "VectorVerdict")
      .def_readonly("max_in_boundary", &HotspotsReport::VectorVerdict::max_in_boundary)
      .def_readonly("min_in_boundary", &HotspotsReport::VectorVerdict::min_in_boundary);

  py::class_<HotspotsReport>(m, "HotspotsReport")
      .def_readonly("lambda2", &HotspotsReport::lambda2)
      .def_readonly("multiplicity", &HotspotsReport::multiplicity)
      .def_readonly("verdicts", &HotspotsReport::verdicts)
      .def_readonly("overall", &HotspotsReport::overall);

  m.def("hotspots_report", &hotspots_report, py::arg("graph"), py::arg("boundary"));

  py::class_<HotspotsRatioCheck>(m, "HotspotsRatioCheck")
      .def_readonly("applicable", &HotspotsRatioCheck::applicable)
      .def_readonly("lambda2", &HotspotsRatioCheck::lambda2)
      .def_readonly("ratio", &HotspotsRatioCheck::ratio)
      .def_readonly("bound", &HotspotsRatioCheck::bound)
      .def_readonly("log_bound", &HotspotsRatioCheck::log_bound)
      .def_readonly("holds", &HotspotsRatioCheck::holds);

  m.def("hotspots_ratio_check", &hotspots_ratio_check, py::arg("graph"), py::arg("dist"),
        py::arg("boundary"));

  py::class_<HardyWeight>(m, "HardyWeight")
      .def_readonly("w", &HardyWeight::w)
      .def_readonly("phi", &HardyWeight::phi);

  m.def("hardy_weight", &hardy_weight, py::arg("graph"), py::arg("boundary"), py::arg("phi"));
  m.def(
      "quadratic_form",
      [](const Graph& g, const std::vector<double>& w, const std::vector<double>& f) {
        return quadratic_form(g, w, f);
      },
      py::arg("graph"), py::arg("w"), py::arg("f"));
  m.def(
      "aap_supersolution_check",
      [](const Graph& g, const std::vector<double>& w, const std::vector<double>& phi,
         const std::vector<int>& x) { return aap_supersolution_check(g, w, phi, x); },
      py::arg("graph"), py::arg("w"), py::arg("phi"), py::arg("x"));

  py::class_<HardyCheck>(m, "HardyCheck")
      .def_readonly("lhs", &HardyCheck::lhs)
      .def_readonly("rhs", &HardyCheck::rhs)
      .def_readonly("holds", &HardyCheck::holds);

  m.def(
      "hardy_check",
      [](const Graph& g, const BoundarySet& boundary, const HittingPotential& phi,
         const std::vector<double>& f) { return hardy_check(g, boundary, phi, f); },
      py::arg("graph"), py::arg("boundary"), py::arg("phi"), py::arg("f"));
  m.def("hardy_certificate", &hardy_certificate, py::arg("graph"), py::arg("boundary"),
        py::arg("phi"));

  py::class_<TorsionFunction>(m, "TorsionFunction")
      .def_readonly("u", &TorsionFunction::u)
      .def_readonly("x", &TorsionFunction::x)
      .def_property_readonly("max", &TorsionFunction::max);

  m.def(
      "torsion_function",
      [](const Graph& g, const std::vector<int>& x) { return torsion_function(g, x); },
      py::arg("graph"), py::arg("x"));
  m.def(
      "abp_sharp_constant",
      [](const Graph& g, const std::vector<int>& x) { return abp_sharp_constant(g, x); },
      py::arg("graph"), py::arg("x"));

  py::class_<AbpCheck>(m, "AbpCheck")
      .def_readonly("lhs", &AbpCheck::lhs)
      .def_readonly("rhs", &AbpCheck::rhs)
      .def_readonly("one_sided_rhs", &AbpCheck::one_sided_rhs)
      .def_readonly("holds", &AbpCheck::holds);

  m.def(
      "abp_check",
      [](const Graph& g, const DistanceMatrix& dist, const BoundarySet& boundary,
         const std::vector<double>& f) { return abp_check(g, dist, boundary, f); },
      py::arg("graph"), py::arg("dist"), py::arg("boundary"), py::arg("f"));

  py::class_<Kernel>(m, "Kernel")
      .def_static("from_values", &Kernel::from_values, py::arg("values"))
      .def_static("power", &Kernel::power, py::arg("alpha"), py::arg("max_distance"))
      .def("__call__", &Kernel::operator(), py::arg("d"))
      .def_property_readonly("max_distance", &Kernel::max_distance)
      .def_property_readonly("nondecreasing", &Kernel::nondecreasing)
      .def_property_readonly("convex", &Kernel::convex)
      .def_property_readonly("strictly_convex", &Kernel::strictly_convex)
      .def_property_readonly("admissible", &Kernel::admissible);

  py::class_<VertexMeasure>(m, "VertexMeasure")
      .def(py::init([](std::vector<double> mass) {
             VertexMeasure mu;
             mu.mass = std::move(mass);
             mu.validate();
             return mu;
           }),
           py::arg("mass"))
      .def_static("point_mass", &VertexMeasure::point_mass, py::arg("n"), py::arg("v"))
      .def_static("uniform", &VertexMeasure::uniform, py::arg("n"))
      .def_readonly("mass", &VertexMeasure::mass);

  m.def("energy", &energy, py::arg("graph"), py::arg("dist"), py::arg("kernel"), py::arg("mu"));
  m.def("improvement_move", &improvement_move, py::arg("graph"), py::arg("dist"),
        py::arg("kernel"), py::arg("mu"), py::arg("a"));
  m.def("purge_interior", &purge_interior, py::arg("graph"), py::arg("dist"), py::arg("boundary"),
        py::arg("kernel"), py::arg("mu"), py::arg("eps") = 1e-12);

  py::class_<MaximizeOptions>(m, "MaximizeOptions")
      .def(py::init<>())
      .def_readwrite("restarts", &MaximizeOptions::restarts)
      .def_readwrite("seed", &MaximizeOptions::seed)
      .def_readwrite("polish_iters", &MaximizeOptions::polish_iters)
      .def_readwrite("purge_eps", &MaximizeOptions::purge_eps);

  py::class_<MaximizeResult>(m, "MaximizeResult")
      .def_readonly("mu", &MaximizeResult::mu)
      .def_readonly("energy", &MaximizeResult::energy)
      .def_readonly("interior_mass", &MaximizeResult::interior_mass);

  m.def("maximize_energy", &maximize_energy, py::arg("graph"), py::arg("dist"),
        py::arg("boundary"), py::arg("kernel"), py::arg("options") = MaximizeOptions{});

  py::class_<BruteForceResult>(m, "BruteForceResult")
      .def_readonly("mu", &BruteForceResult::mu)
      .def_readonly("energy", &BruteForceResult::energy);

  m.def("brute_force_max", &brute_force_max, py::arg("graph"), py::arg("dist"), py::arg("kernel"),
        py::arg("grid_steps"));

  m.def("parse_graph6", [](const std::string& line) { return parse_graph6(line); },
        py::arg("line"));
  m.def("encode_graph6", &encode_graph6, py::arg("graph"));

  py::class_<ParsedEdgeList>(m, "ParsedEdgeList")
      .def_readonly("graph", &ParsedEdgeList::graph)
      .def_readonly("labels", &ParsedEdgeList::labels);

  m.def("parse_edgelist", [](const std::string& text) { return parse_edgelist(text); },
        py::arg("text"));
  m.def("dot_string", &dot_string, py::arg("graph"), py::arg("boundary"));
  m.def("write_dot", &write_dot, py::arg("graph"), py::arg("boundary"), py::arg("path"));

  m.def(
      "scan_graph6_lines",
      [](const std::vector<std::string>& lines, int workers, bool json) {
        std::vector<std::pair<std::string, std::string>> tagged;
        tagged.reserve(lines.size());
        for (size_t i = 0; i < lines.size(); ++i) {
          tagged.emplace_back("line:" + std::to_string(i + 1), lines[i]);
        }
        ScanOptions options;
        options.workers = workers;
        const ScanResult result = scan_lines(tagged, options);
        return json ? scan_to_json(result) : scan_to_csv(result);
      },
      py::arg("lines"), py::arg("workers") = 1, py::arg("json") = true);
}
