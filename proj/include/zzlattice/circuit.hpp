#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zzlattice/errors.hpp"

namespace zzlattice {

// Bit convention everywhere: little-endian. Qubit k is bit k (value 1 << k)
// of a basis index; bitstring arguments are indexed by qubit, so marked[k]
// is qubit k's bit.

enum class GateKind { H, X, Z, T, Tdg, RZ, CX, Swap, MCX };

struct Gate {
    GateKind kind = GateKind::H;
    std::vector<int> qubits;  // CX: {control, target}; MCX: controls..., target
    double theta = 0.0;       // RZ angle only
};

struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;
};

bool is_two_qubit(const Gate& g);
const char* kind_name(GateKind k);
GateKind kind_from_name(const std::string& name);

// Throws ConfigError on out-of-range or duplicate operands.
void validate_circuit(const Circuit& c);

Gate gate_h(int q);
Gate gate_x(int q);
Gate gate_z(int q);
Gate gate_t(int q);
Gate gate_tdg(int q);
Gate gate_rz(int q, double theta);
Gate gate_cx(int control, int target);
Gate gate_swap(int a, int b);

// Ancilla-free multi-controlled X over {1q, CX}: qubits 0..n_controls-1 are
// controls, qubit n_controls the target. 1 <= n_controls <= 9. Exact up to a
// single global phase (bit-exact ideal Toffoli for n_controls <= 2).
std::vector<Gate> mcx_decompose(int n_controls);

// Replace every MCX marker by its {1q, CX} network.
Circuit decompose_mcx(const Circuit& c);

// floor(pi/4 * sqrt(2^n)).
int grover_iterations(int n_qubits);

// Grover search circuit for one marked bitstring, fully decomposed to
// {1q, CX}: H on all, then `iterations` rounds of
//   oracle    = X (where marked bit 0) . MCZ(all) . X undo
//   diffusion = H(all) . X(all) . MCZ(all) . X(all) . H(all)
// with MCZ realized as H(target) . MCX . H(target) on the last qubit.
// 2 <= n_qubits <= 10; iterations defaults to grover_iterations(n_qubits).
Circuit grover_circuit(int n_qubits, const std::string& marked,
                       std::optional<int> iterations = std::nullopt);

// Basis index of a bitstring under the little-endian convention.
long long bitstring_index(const std::string& bits);

}  // namespace zzlattice
