#pragma once

#include <optional>
#include <vector>

#include "zzlattice/errors.hpp"

namespace zzlattice {

// All frequencies in this library are linear frequencies (omega/2pi) in GHz.
// ZZ rates are reported in MHz.

struct TransmonSpec {
    double omega = 0.0;  // qubit 0->1 transition frequency, GHz
    double eta = 0.0;    // anharmonicity, GHz; <= 0 (0 = harmonic test mode)
    int levels = 3;      // truncation dimension per mode, >= 2
};

struct CouplerSpec {
    double omega_c = 0.0;  // coupler frequency, GHz
    double eta_c = 0.0;    // coupler anharmonicity, GHz; <= 0
    // Optional flux map: omega_c(flux) = omega_c_max * sqrt(|cos(pi*flux)|).
    std::optional<double> omega_c_max;  // GHz
    std::optional<double> flux;         // in units of flux quanta
};

struct DriveSpec {
    int target = 0;      // qubit index the tone is applied to
    double amp = 0.0;    // |epsilon|, GHz
    double phase = 0.0;  // radians
    double omega_d = 0.0;  // drive frequency, GHz (shared rotating frame)
};

struct CouplingSpec {
    int qubit = 0;   // qubit index coupled to the shared coupler
    double j = 0.0;  // exchange coupling J, GHz; > 0
};

// One coupler cluster: 2-4 transmons exchange-coupled to a shared coupler.
// Mode ordering everywhere: qubits in list order, coupler last.
struct ClusterSpec {
    std::vector<TransmonSpec> qubits;
    CouplerSpec coupler;
    std::vector<CouplingSpec> couplings;
    std::vector<DriveSpec> drives;

    int n_qubits() const { return static_cast<int>(qubits.size()); }
    int n_modes() const { return n_qubits() + 1; }
    int levels() const;      // shared truncation (validated identical per mode)
    long long dim() const;   // levels()^n_modes()

    // Shared rotating-frame frequency: omega_d of the drives, 0 if undriven.
    double frame_frequency() const;

    // Throws ConfigError with a field-naming message on any invariant breach.
    void validate() const;
};

// omega_c(flux) = omega_c_max * sqrt(|cos(pi*flux)|). Requires omega_c_max.
double flux_to_frequency(const CouplerSpec& coupler, double flux);

}  // namespace zzlattice
