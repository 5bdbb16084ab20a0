#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "zzlattice/bench.hpp"
#include "zzlattice/config_io.hpp"
#include "zzlattice/operators.hpp"
#include "zzlattice/spectrum.hpp"
#include "zzlattice/stark.hpp"
#include "zzlattice/statevector.hpp"
#include "zzlattice/zz.hpp"

namespace py = pybind11;
using namespace zzlattice;

namespace {

// Round-trip nlohmann output through the interpreter's json module so sweep
// and benchmark reports arrive as plain dicts/lists.
py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

ClusterSpec spec_from_json_str(const std::string& text) {
    return cluster_from_json(nlohmann::json::parse(text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "coupled-transmon ZZ spectroscopy and lattice routing";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<LabelingAmbiguous>(m, "LabelingAmbiguousError",
                                              PyExc_RuntimeError);
    py::register_exception<EmptyResultError>(m, "EmptyResultError",
                                             PyExc_RuntimeError);
    py::register_exception<ResourceError>(m, "ResourceError",
                                          PyExc_RuntimeError);
    py::register_exception<VerificationError>(m, "VerificationError",
                                              PyExc_RuntimeError);

    py::class_<TransmonSpec>(m, "TransmonSpec")
        .def(py::init([](double omega, double eta, int levels) {
                 return TransmonSpec{omega, eta, levels};
             }),
             py::arg("omega"), py::arg("eta"), py::arg("levels") = 3)
        .def_readwrite("omega", &TransmonSpec::omega)
        .def_readwrite("eta", &TransmonSpec::eta)
        .def_readwrite("levels", &TransmonSpec::levels);

    py::class_<CouplerSpec>(m, "CouplerSpec")
        .def(py::init([](double omega_c, double eta_c,
                         std::optional<double> omega_c_max,
                         std::optional<double> flux) {
                 return CouplerSpec{omega_c, eta_c, omega_c_max, flux};
             }),
             py::arg("omega_c"), py::arg("eta_c"),
             py::arg("omega_c_max") = std::nullopt,
             py::arg("flux") = std::nullopt)
        .def_readwrite("omega_c", &CouplerSpec::omega_c)
        .def_readwrite("eta_c", &CouplerSpec::eta_c)
        .def_readwrite("omega_c_max", &CouplerSpec::omega_c_max)
        .def_readwrite("flux", &CouplerSpec::flux);

    py::class_<DriveSpec>(m, "DriveSpec")
        .def(py::init([](int target, double amp, double phase, double omega_d) {
                 return DriveSpec{target, amp, phase, omega_d};
             }),
             py::arg("target"), py::arg("amp"), py::arg("phase"),
             py::arg("omega_d"))
        .def_readwrite("target", &DriveSpec::target)
        .def_readwrite("amp", &DriveSpec::amp)
        .def_readwrite("phase", &DriveSpec::phase)
        .def_readwrite("omega_d", &DriveSpec::omega_d);

    py::class_<CouplingSpec>(m, "CouplingSpec")
        .def(py::init([](int qubit, double j) {
                 return CouplingSpec{qubit, j};
             }),
             py::arg("qubit"), py::arg("j"))
        .def_readwrite("qubit", &CouplingSpec::qubit)
        .def_readwrite("j", &CouplingSpec::j);

    py::class_<ClusterSpec>(m, "ClusterSpec")
        .def(py::init<>())
        .def_readwrite("qubits", &ClusterSpec::qubits)
        .def_readwrite("coupler", &ClusterSpec::coupler)
        .def_readwrite("couplings", &ClusterSpec::couplings)
        .def_readwrite("drives", &ClusterSpec::drives)
        .def("validate", &ClusterSpec::validate)
        .def("dim", &ClusterSpec::dim)
        .def_static("from_json", &spec_from_json_str, py::arg("text"))
        .def("to_json",
             [](const ClusterSpec& s) { return cluster_to_json(s).dump(2); });

    m.def("flux_to_frequency", &flux_to_frequency, py::arg("coupler"),
          py::arg("flux"));
    m.def("build_cluster_hamiltonian", &build_cluster_hamiltonian,
          py::arg("spec"));
    m.def(
        "diagonalize",
        [](const Eigen::MatrixXcd& h) {
            const Spectrum s = diagonalize(h);
            return py::make_tuple(s.energies, s.states);
        },
        py::arg("h"), "returns (energies ascending, eigenvector columns)");
    m.def("zz_rate", &zz_rate, py::arg("spec"), py::arg("p"), py::arg("q"));
    m.def(
        "sweep_phase",
        [](const ClusterSpec& spec, int p, int q,
           const std::vector<double>& phases) {
            return json_to_py(sweep_to_json(sweep_phase(spec, p, q, phases)));
        },
        py::arg("spec"), py::arg("p"), py::arg("q"), py::arg("phases"));
    m.def(
        "sweep_coupler",
        [](const ClusterSpec& spec, int p, int q,
           const std::vector<double>& omegas, double phi_d) {
            return json_to_py(
                sweep_to_json(sweep_coupler(spec, p, q, omegas, phi_d)));
        },
        py::arg("spec"), py::arg("p"), py::arg("q"), py::arg("omegas"),
        py::arg("phi_d") = 0.0);
    m.def(
        "sweep_2d",
        [](const ClusterSpec& spec, int p, int q,
           const std::vector<double>& omegas,
           const std::vector<double>& phases) {
            return json_to_py(
                sweep_to_json(sweep_2d(spec, p, q, omegas, phases)));
        },
        py::arg("spec"), py::arg("p"), py::arg("q"), py::arg("omegas"),
        py::arg("phases"));
    m.def("pair_peak_matrix", &pair_peak_matrix, py::arg("spec"),
          py::arg("phases"));

    m.def(
        "stark_report",
        [](double eps0, double eps1, double eps_t, double delta_t) {
            const stark::StarkInputs in{eps0, eps1, eps_t, delta_t};
            return json_to_py(stark_report_to_json(in, stark::evaluate(in)));
        },
        py::arg("eps0"), py::arg("eps1"), py::arg("eps_t"),
        py::arg("delta_t"));
    m.def("stark_cancellation_drive", &stark::cancellation_drive,
          py::arg("eps0"), py::arg("eps1"));

    py::class_<Gate>(m, "Gate")
        .def_property_readonly(
            "kind", [](const Gate& g) { return std::string(kind_name(g.kind)); })
        .def_readonly("qubits", &Gate::qubits)
        .def_readonly("theta", &Gate::theta);

    py::class_<Circuit>(m, "Circuit")
        .def(py::init<>())
        .def_readwrite("n_qubits", &Circuit::n_qubits)
        .def_readonly("gates", &Circuit::gates)
        .def("__len__", [](const Circuit& c) { return c.gates.size(); })
        .def("to_json", [](const Circuit& c) { return circuit_to_json(c).dump(); })
        .def_static("from_json", [](const std::string& text) {
            return circuit_from_json(nlohmann::json::parse(text));
        });

    m.def("grover_circuit", &grover_circuit, py::arg("n_qubits"),
          py::arg("marked"), py::arg("iterations") = std::nullopt);
    m.def("grover_iterations", &grover_iterations, py::arg("n_qubits"));
    m.def("mcx_decompose", &mcx_decompose, py::arg("n_controls"));
    m.def("decompose_mcx", &decompose_mcx, py::arg("circuit"));
    m.def("bitstring_index", &bitstring_index, py::arg("bits"));
    m.def("simulate_statevector", &simulate_statevector, py::arg("circuit"));
    m.def("unitary_of", &unitary_of, py::arg("circuit"));

    py::class_<CouplerCluster>(m, "CouplerCluster")
        .def_readonly("id", &CouplerCluster::id)
        .def_readonly("members", &CouplerCluster::members)
        .def_property_readonly("edges", [](const CouplerCluster& c) {
            std::vector<std::pair<int, int>> out;
            for (const Edge& e : c.edges) out.emplace_back(e.a, e.b);
            return out;
        });

    py::class_<CouplingMap>(m, "CouplingMap")
        .def_readonly("n_qubits", &CouplingMap::n_qubits)
        .def_property_readonly("edges",
                               [](const CouplingMap& map) {
                                   std::vector<std::pair<int, int>> out;
                                   for (const Edge& e : map.edges)
                                       out.emplace_back(e.a, e.b);
                                   return out;
                               })
        .def_readonly("clusters", &CouplingMap::clusters)
        .def("has_edge", &CouplingMap::has_edge, py::arg("a"), py::arg("b"))
        .def("cluster_of_edge", &CouplingMap::cluster_of_edge, py::arg("a"),
             py::arg("b"))
        .def("to_json",
             [](const CouplingMap& m_) { return coupling_map_to_json(m_).dump(); });

    m.def("hybrid_grid_map", &hybrid_grid_map, py::arg("rows"), py::arg("cols"));
    m.def("heavy_hex_map", &heavy_hex_map, py::arg("n_qubits"));
    m.def("all_to_all_map", &all_to_all_map, py::arg("n_qubits"));
    m.def("is_connected", &is_connected, py::arg("map"));
    m.def("distance_matrix", &distance_matrix, py::arg("map"));

    py::class_<Layout>(m, "Layout")
        .def(py::init([](std::vector<int> phys_of) {
                 return Layout{std::move(phys_of)};
             }),
             py::arg("phys_of"))
        .def_readonly("phys_of", &Layout::phys_of);

    py::class_<RoutedCircuit>(m, "RoutedCircuit")
        .def_readonly("circuit", &RoutedCircuit::circuit)
        .def_readonly("initial_layout", &RoutedCircuit::initial_layout)
        .def_readonly("final_layout", &RoutedCircuit::final_layout)
        .def_readonly("swaps_inserted", &RoutedCircuit::swaps_inserted)
        .def("to_json",
             [](const RoutedCircuit& r) { return routed_to_json(r).dump(); });

    m.def("route", &route, py::arg("circuit"), py::arg("map"),
          py::arg("initial") = std::nullopt, py::arg("seed") = 0);
    m.def("schedule_depth", &schedule_depth, py::arg("routed"), py::arg("map"),
          py::arg("coupler_contention"));
    m.def("schedule_depth_2q", &schedule_depth_2q, py::arg("routed"),
          py::arg("map"), py::arg("coupler_contention"));
    m.def(
        "verify_routed",
        [](const Circuit& original, const RoutedCircuit& routed) {
            const VerifyResult r = verify_routed(original, routed);
            py::dict out;
            out["ok"] = r.ok;
            out["max_deviation"] = r.max_deviation;
            out["method"] = r.method;
            return out;
        },
        py::arg("original"), py::arg("routed"));
    m.def("gates_on_edges", &gates_on_edges, py::arg("circuit"), py::arg("map"));

    m.def(
        "benchmark_grover",
        [](int n_min, int n_max, const std::vector<std::string>& topologies,
           const std::vector<std::uint64_t>& seeds,
           std::optional<bool> contention_override) {
            return json_to_py(bench_report_to_json(benchmark_grover(
                n_min, n_max, topologies, seeds, contention_override)));
        },
        py::arg("n_min"), py::arg("n_max"),
        py::arg("topologies") = std::vector<std::string>{"hybrid", "heavyhex"},
        py::arg("seeds") = std::vector<std::uint64_t>{0, 1, 2, 3},
        py::arg("contention_override") = std::nullopt);
}
