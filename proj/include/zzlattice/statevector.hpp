#pragma once

#include <Eigen/Dense>

#include "zzlattice/circuit.hpp"

namespace zzlattice {

// Apply the circuit to an explicit initial state (dimension 2^n_qubits).
Eigen::VectorXcd apply_circuit(const Circuit& c, Eigen::VectorXcd state);

// Run from |0...0>. Guard: n_qubits <= 20 (ResourceError beyond).
Eigen::VectorXcd simulate_statevector(const Circuit& c);

// Full unitary, column j = circuit applied to basis state j.
// Guard: n_qubits <= 8.
Eigen::MatrixXcd unitary_of(const Circuit& c);

// Largest-magnitude-element phase alignment: returns max_ij |A - alpha*B|
// over the global phase alpha that matches A to B. Dimensions must agree.
double phase_aligned_deviation(const Eigen::MatrixXcd& a,
                               const Eigen::MatrixXcd& b);

}  // namespace zzlattice
