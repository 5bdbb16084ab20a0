#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zzlattice/bench.hpp"
#include "zzlattice/circuit.hpp"
#include "zzlattice/cluster.hpp"
#include "zzlattice/coupling_map.hpp"
#include "zzlattice/router.hpp"
#include "zzlattice/stark.hpp"
#include "zzlattice/zz.hpp"

namespace zzlattice {

// Cluster config JSON schema (defaults in brackets):
// {
//   "qubits":    [{"omega_GHz", "eta_GHz", "levels" [3]}, ...],
//   "coupler":   {"omega_c_GHz" | ("omega_c_max_GHz" + "flux"), "eta_c_GHz"},
//   "couplings": [{"qubit", "J_GHz"}, ...]        [all qubits at J = 0.08],
//   "drives":    [{"target", "amp_GHz" [0.02], "phase_rad" [0],
//                  "omega_d_GHz" [omega_target - 0.1]}, ...]  [none]
// }
// Every applied default is recorded in `applied_defaults`.
ClusterSpec cluster_from_json(const nlohmann::json& j,
                              std::vector<std::string>* applied_defaults =
                                  nullptr);
ClusterSpec parse_cluster_config(const std::string& path,
                                 std::vector<std::string>* applied_defaults =
                                     nullptr);
nlohmann::json cluster_to_json(const ClusterSpec& spec);

nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

nlohmann::json coupling_map_to_json(const CouplingMap& map);
CouplingMap coupling_map_from_json(const nlohmann::json& j);

nlohmann::json routed_to_json(const RoutedCircuit& r);
RoutedCircuit routed_from_json(const nlohmann::json& j);

nlohmann::json sweep_to_json(const SweepResult& r);
// CSV: header + one row per point, 9 significant digits, '.' decimal,
// ',' separator, LF line ends. Gap points have an empty zeta field.
std::string sweep_to_csv(const SweepResult& r);

nlohmann::json stark_report_to_json(const stark::StarkInputs& in,
                                    const stark::StarkReport& rep);
std::string stark_report_to_csv(const stark::StarkInputs& in,
                                const stark::StarkReport& rep);

nlohmann::json bench_report_to_json(const DepthReport& rep);
std::string bench_report_to_csv(const DepthReport& rep);

std::string coupling_map_to_csv(const CouplingMap& map);

// %.9g formatting used by every CSV writer.
std::string fmt_g9(double v);

// Write via a temp file + atomic rename; no partial output on error.
void write_text_atomic(const std::string& path, const std::string& content);
std::string read_text(const std::string& path);

}  // namespace zzlattice
