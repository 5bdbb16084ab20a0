#include "zzlattice/circuit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

namespace zzlattice {

bool is_two_qubit(const Gate& g) {
    return g.kind == GateKind::CX || g.kind == GateKind::Swap;
}

const char* kind_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "h";
        case GateKind::X: return "x";
        case GateKind::Z: return "z";
        case GateKind::T: return "t";
        case GateKind::Tdg: return "tdg";
        case GateKind::RZ: return "rz";
        case GateKind::CX: return "cx";
        case GateKind::Swap: return "swap";
        case GateKind::MCX: return "mcx";
    }
    return "?";
}

GateKind kind_from_name(const std::string& name) {
    if (name == "h") return GateKind::H;
    if (name == "x") return GateKind::X;
    if (name == "z") return GateKind::Z;
    if (name == "t") return GateKind::T;
    if (name == "tdg") return GateKind::Tdg;
    if (name == "rz") return GateKind::RZ;
    if (name == "cx") return GateKind::CX;
    if (name == "swap") return GateKind::Swap;
    if (name == "mcx") return GateKind::MCX;
    throw ConfigError("unknown gate kind \"" + name + "\"");
}

void validate_circuit(const Circuit& c) {
    if (c.n_qubits < 1) throw ConfigError("circuit: n_qubits must be >= 1");
    for (size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        const std::string at = "gates[" + std::to_string(i) + "]";
        const size_t expected =
            g.kind == GateKind::MCX ? g.qubits.size() : (is_two_qubit(g) ? 2 : 1);
        if (g.qubits.size() != expected || g.qubits.empty())
            throw ConfigError(at + ": wrong operand count for " +
                              kind_name(g.kind));
        std::set<int> distinct;
        for (int q : g.qubits) {
            if (q < 0 || q >= c.n_qubits)
                throw ConfigError(at + ": qubit " + std::to_string(q) +
                                  " out of range [0, " +
                                  std::to_string(c.n_qubits - 1) + "]");
            if (!distinct.insert(q).second)
                throw ConfigError(at + ": duplicate operand " +
                                  std::to_string(q));
        }
        if (g.kind == GateKind::MCX && g.qubits.size() < 2)
            throw ConfigError(at + ": mcx needs at least one control");
    }
}

Gate gate_h(int q) { return {GateKind::H, {q}, 0.0}; }
Gate gate_x(int q) { return {GateKind::X, {q}, 0.0}; }
Gate gate_z(int q) { return {GateKind::Z, {q}, 0.0}; }
Gate gate_t(int q) { return {GateKind::T, {q}, 0.0}; }
Gate gate_tdg(int q) { return {GateKind::Tdg, {q}, 0.0}; }
Gate gate_rz(int q, double theta) { return {GateKind::RZ, {q}, theta}; }
Gate gate_cx(int control, int target) {
    return {GateKind::CX, {control, target}, 0.0};
}
Gate gate_swap(int a, int b) { return {GateKind::Swap, {a, b}, 0.0}; }

namespace {

// Uniformly controlled RZ: rotate `target` by theta exactly when every
// control is 1. Gray-code walk; 2^k RZ + 2^k CX, no ancilla, exact.
void append_ucrz(std::vector<Gate>& out, const std::vector<int>& controls,
                 int target, double theta) {
    const int k = static_cast<int>(controls.size());
    const unsigned size = 1u << k;
    for (unsigned i = 0; i < size; ++i) {
        const unsigned gray = i ^ (i >> 1);
        const double sign = (std::popcount(gray) & 1u) ? -1.0 : 1.0;
        out.push_back(gate_rz(target, sign * theta / static_cast<double>(size)));
        const int flip = (i + 1 == size)
                             ? k - 1
                             : std::countr_zero(i + 1);
        out.push_back(gate_cx(controls[flip], target));
    }
}

// Phase phi on the all-ones state of `qubits`:
//   Lambda_1(phi) = RZ(phi)            (up to one dropped global phase)
//   Lambda_m(phi) = UCRZ(controls = first m-1, target = last, phi)
//                 . Lambda_{m-1}(phi/2)
void append_mcphase(std::vector<Gate>& out, std::vector<int> qubits,
                    double phi) {
    while (qubits.size() > 1) {
        const int target = qubits.back();
        qubits.pop_back();
        append_ucrz(out, qubits, target, phi);
        phi /= 2.0;
    }
    out.push_back(gate_rz(qubits[0], phi));
}

// Standard T-network Toffoli: 6 CX, exactly the ideal doubly-controlled X.
void append_toffoli(std::vector<Gate>& out, int a, int b, int t) {
    out.push_back(gate_h(t));
    out.push_back(gate_cx(b, t));
    out.push_back(gate_tdg(t));
    out.push_back(gate_cx(a, t));
    out.push_back(gate_t(t));
    out.push_back(gate_cx(b, t));
    out.push_back(gate_tdg(t));
    out.push_back(gate_cx(a, t));
    out.push_back(gate_t(b));
    out.push_back(gate_t(t));
    out.push_back(gate_h(t));
    out.push_back(gate_cx(a, b));
    out.push_back(gate_t(a));
    out.push_back(gate_tdg(b));
    out.push_back(gate_cx(a, b));
}

void append_mcx_network(std::vector<Gate>& out, const std::vector<int>& controls,
                        int target) {
    switch (controls.size()) {
        case 1:
            out.push_back(gate_cx(controls[0], target));
            return;
        case 2:
            append_toffoli(out, controls[0], controls[1], target);
            return;
        default: {
            out.push_back(gate_h(target));
            std::vector<int> all = controls;
            all.push_back(target);
            append_mcphase(out, std::move(all), M_PI);
            out.push_back(gate_h(target));
            return;
        }
    }
}

}  // namespace

std::vector<Gate> mcx_decompose(int n_controls) {
    if (n_controls < 1 || n_controls > 9)
        throw ConfigError("mcx_decompose: n_controls must be in [1, 9], got " +
                          std::to_string(n_controls));
    std::vector<int> controls(n_controls);
    for (int i = 0; i < n_controls; ++i) controls[i] = i;
    std::vector<Gate> out;
    append_mcx_network(out, controls, n_controls);
    return out;
}

Circuit decompose_mcx(const Circuit& c) {
    validate_circuit(c);
    Circuit out;
    out.n_qubits = c.n_qubits;
    for (const Gate& g : c.gates) {
        if (g.kind != GateKind::MCX) {
            out.gates.push_back(g);
            continue;
        }
        std::vector<int> controls(g.qubits.begin(), g.qubits.end() - 1);
        append_mcx_network(out.gates, controls, g.qubits.back());
    }
    return out;
}

int grover_iterations(int n_qubits) {
    return static_cast<int>(
        std::floor(M_PI / 4.0 * std::sqrt(std::pow(2.0, n_qubits))));
}

long long bitstring_index(const std::string& bits) {
    long long idx = 0;
    for (size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] != '0' && bits[k] != '1')
            throw ConfigError("bitstring: invalid character '" +
                              std::string(1, bits[k]) + "' at position " +
                              std::to_string(k));
        if (bits[k] == '1') idx |= 1ll << k;
    }
    return idx;
}

Circuit grover_circuit(int n_qubits, const std::string& marked,
                       std::optional<int> iterations) {
    if (n_qubits < 2 || n_qubits > 10)
        throw ConfigError("grover_circuit: n_qubits must be in [2, 10], got " +
                          std::to_string(n_qubits));
    if (static_cast<int>(marked.size()) != n_qubits)
        throw ConfigError("marked: length " + std::to_string(marked.size()) +
                          " != n_qubits = " + std::to_string(n_qubits));
    bitstring_index(marked);  // character validation
    const int k = iterations.value_or(grover_iterations(n_qubits));
    if (k < 0) throw ConfigError("iterations: must be >= 0");

    Circuit c;
    c.n_qubits = n_qubits;
    auto all_h = [&] {
        for (int q = 0; q < n_qubits; ++q) c.gates.push_back(gate_h(q));
    };
    auto all_x = [&] {
        for (int q = 0; q < n_qubits; ++q) c.gates.push_back(gate_x(q));
    };
    auto mcz_all = [&] {
        // MCZ = H(target) . MCX(rest -> target) . H(target), target = last
        const int target = n_qubits - 1;
        std::vector<int> controls(n_qubits - 1);
        for (int q = 0; q < target; ++q) controls[q] = q;
        c.gates.push_back(gate_h(target));
        append_mcx_network(c.gates, controls, target);
        c.gates.push_back(gate_h(target));
    };

    all_h();
    for (int round = 0; round < k; ++round) {
        // oracle: phase-flip the marked string
        for (int q = 0; q < n_qubits; ++q)
            if (marked[q] == '0') c.gates.push_back(gate_x(q));
        mcz_all();
        for (int q = 0; q < n_qubits; ++q)
            if (marked[q] == '0') c.gates.push_back(gate_x(q));
        // diffusion about the mean
        all_h();
        all_x();
        mcz_all();
        all_x();
        all_h();
    }
    return c;
}

}  // namespace zzlattice
