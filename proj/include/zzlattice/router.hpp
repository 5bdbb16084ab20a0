#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zzlattice/circuit.hpp"
#include "zzlattice/coupling_map.hpp"

namespace zzlattice {

// Logical -> physical placement. phys_of[l] is the physical qubit holding
// logical l; always a bijection over the full map.
struct Layout {
    std::vector<int> phys_of;
    int physical(int logical) const { return phys_of[logical]; }
};

struct RoutedCircuit {
    Circuit circuit;  // gates on physical qubits; SWAPs inserted as needed
    Layout initial_layout;
    Layout final_layout;
    int swaps_inserted = 0;
};

// All-pairs shortest path hop counts (BFS). ConfigError if disconnected.
Eigen::MatrixXi distance_matrix(const CouplingMap& map);

// Greedy lookahead SWAP router. Executable front-layer gates are emitted
// eagerly; when blocked, the SWAP minimizing
//   H = sum_front d(pair) + 0.5 * sum_{next <= 20 pending 2q gates} d(pair)
// over edges touching front operands is applied (ties -> lowest edge index).
// After 3*n_qubits non-improving SWAPs, SWAPs that step the oldest blocked
// gate's distance down are forced until it executes. Deterministic for fixed
// (circuit, map, layout, seed): the seed only shuffles the initial layout
// when none is given (seed 0 = identity). Input gates must be {1q, CX}.
RoutedCircuit route(const Circuit& circuit, const CouplingMap& map,
                    std::optional<Layout> initial = std::nullopt,
                    std::uint64_t seed = 0);

// True when every 2-qubit gate of the routed circuit lies on a map edge.
bool gates_on_edges(const Circuit& circuit, const CouplingMap& map);

// Greedy ASAP layering in gate order. Every gate (1q or 2q) occupies one
// slot on each operand per layer. With coupler_contention, two 2-qubit gates
// whose edges are annotated to the same coupler cluster cannot share a layer
// even on disjoint qubits. Returns the number of layers.
int schedule_depth(const RoutedCircuit& routed, const CouplingMap& map,
                   bool coupler_contention);

// Same layering restricted to 2-qubit gates only.
int schedule_depth_2q(const RoutedCircuit& routed, const CouplingMap& map,
                      bool coupler_contention);

struct VerifyResult {
    bool ok = false;
    double max_deviation = 0.0;
    std::string method;  // "unitary" or "sampled"
};

// Checks U_routed * P_init == P_final * U_original (global phase quotiented,
// tolerance 1e-9), where P_* permute logical into physical qubits. Maps with
// more than 8 qubits are checked on 50 seeded random basis states instead of
// the full unitary.
VerifyResult verify_routed(const Circuit& original, const RoutedCircuit& routed);

}  // namespace zzlattice
