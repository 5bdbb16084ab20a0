#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "zzlattice/cluster.hpp"
#include "zzlattice/spectrum.hpp"

namespace zzlattice {

// Static or drive-induced ZZ rate for qubit pair (p, q), in MHz:
//   zeta = (E_11 - E_10) - (E_01 - E_00)
// with dressed energies labeled by bare occupation (coupler ground).
// Drives present in the spec are included. Throws std::out_of_range for a bad
// pair, LabelingAmbiguous when dressed labels cannot be assigned.
double zz_rate(const ClusterSpec& spec, int p, int q);

// As above but reusing an existing decomposition of the cluster Hamiltonian.
double zz_from_spectrum(const Spectrum& s, const DressedLabeling& lab, int p,
                        int q);

struct SweepAxis {
    std::string name;            // "phase_rad" or "omega_c_GHz"
    std::vector<double> values;
};

// Linearly interpolated sign change between two adjacent valid samples.
struct ZeroCrossing {
    double axis1 = 0.0;
    std::optional<double> axis2;  // set for 2D sweeps (crossing along axis2)
};

struct SweepMeta {
    int pair_p = 0;
    int pair_q = 0;
    bool drives_defaulted = false;      // true if default drives were applied
    std::vector<DriveSpec> effective_drives;
};

// Sweep samples in row-major order (axis1 outer, axis2 inner). Points where
// dressed labeling fails are gaps: zeta_mhz = NaN, label_ok = false.
struct SweepResult {
    SweepAxis axis1;
    std::optional<SweepAxis> axis2;
    std::vector<double> zeta_mhz;
    std::vector<char> label_ok;
    std::vector<ZeroCrossing> zero_crossings;
    SweepMeta meta;

    int n_points() const { return static_cast<int>(zeta_mhz.size()); }
};

// Default drive pair used when a sweep needs drives but the config has none:
// |eps| = 0.020 GHz on both members, phase 0, omega_d = omega_q - 0.1 GHz.
std::vector<DriveSpec> default_pair_drives(const ClusterSpec& spec, int p,
                                           int q);

// zeta vs relative drive phase: drive on p fixed at phase 0, drive on q swept.
// Requires drives on both members (defaults applied if the config has none).
SweepResult sweep_phase(const ClusterSpec& spec, int p, int q,
                        const std::vector<double>& phases_rad);

// zeta vs coupler frequency at fixed relative drive phase phi_d. Undriven
// configs sweep statically (phi_d unused); driven configs need drives on both
// members. Throws EmptyResultError when every point fails labeling.
SweepResult sweep_coupler(const ClusterSpec& spec, int p, int q,
                          const std::vector<double>& omega_c_ghz,
                          double phi_d);

// Full (omega_c, phase) map; rows are omega_c. Zero crossings are detected
// along the phase axis within each row.
SweepResult sweep_2d(const ClusterSpec& spec, int p, int q,
                     const std::vector<double>& omega_c_ghz,
                     const std::vector<double>& phases_rad);

// Peak |zeta| over the phase grid for every qubit pair of a 4-qubit cluster,
// driving only the active pair. Symmetric, zero diagonal; pairs whose every
// point fails labeling are NaN.
Eigen::MatrixXd pair_peak_matrix(const ClusterSpec& spec,
                                 const std::vector<double>& phases_rad);

}  // namespace zzlattice
