#pragma once

// Shared test fixtures: parameter sets in the experimentally relevant regime
// and a seeded random-spec generator for property tests.

#include <random>

#include "zzlattice/cluster.hpp"

namespace fixtures {

using namespace zzlattice;

// Two transmons straddling a tunable coupler, GHz units.
inline ClusterSpec two_qubit(double omega_c = 6.2, double j = 0.08) {
    ClusterSpec s;
    s.qubits = {{5.24, -0.215, 3}, {5.02, -0.209, 3}};
    s.coupler = {omega_c, -0.2, {}, {}};
    s.couplings = {{0, j}, {1, j}};
    return s;
}

inline ClusterSpec three_qubit(double omega_c = 6.2, double j = 0.08) {
    ClusterSpec s;
    s.qubits = {{5.24, -0.215, 3}, {5.02, -0.209, 3}, {5.45, -0.21, 3}};
    s.coupler = {omega_c, -0.2, {}, {}};
    s.couplings = {{0, j}, {1, j}, {2, j}};
    return s;
}

// Four-qubit star around one coupler.
inline ClusterSpec four_qubit(double omega_c = 6.2, double j = 0.08) {
    ClusterSpec s;
    s.qubits = {{5.02, -0.207, 3},
                {5.23, -0.214, 3},
                {5.39, -0.201, 3},
                {5.58, -0.211, 3}};
    s.coupler = {omega_c, -0.2, {}, {}};
    s.couplings = {{0, j}, {1, j}, {2, j}, {3, j}};
    return s;
}

inline std::vector<DriveSpec> pair_drives(const ClusterSpec& s, int p, int q,
                                          double amp = 0.02,
                                          double detune = -0.1) {
    const double omega_d = s.qubits[q].omega + detune;
    return {DriveSpec{p, amp, 0.0, omega_d}, DriveSpec{q, amp, 0.0, omega_d}};
}

// Random dispersive-regime spec: qubits well separated from the coupler so
// labeling stays clean; optionally driven.
inline ClusterSpec random_spec(std::mt19937_64& rng, int n_qubits, int levels,
                               bool driven) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    ClusterSpec s;
    for (int i = 0; i < n_qubits; ++i) {
        TransmonSpec t;
        t.omega = 4.8 + 0.9 * u(rng) + 0.25 * i;  // spread to avoid collisions
        t.eta = -0.18 - 0.08 * u(rng);
        t.levels = levels;
        s.qubits.push_back(t);
    }
    s.coupler.omega_c = 6.6 + 0.6 * u(rng);
    s.coupler.eta_c = -0.15 - 0.1 * u(rng);
    for (int i = 0; i < n_qubits; ++i)
        s.couplings.push_back({i, 0.05 + 0.05 * u(rng)});
    if (driven) {
        const double omega_d = s.qubits[0].omega - 0.12 - 0.05 * u(rng);
        for (int i = 0; i < 2; ++i)
            s.drives.push_back(
                {i, 0.01 + 0.015 * u(rng), 2 * M_PI * u(rng), omega_d});
    }
    return s;
}

}  // namespace fixtures
