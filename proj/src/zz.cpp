#include "zzlattice/zz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zzlattice/operators.hpp"
#include "zzlattice/threads.hpp"

namespace zzlattice {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_pair(const ClusterSpec& spec, int p, int q) {
    if (p < 0 || p >= spec.n_qubits() || q < 0 || q >= spec.n_qubits())
        throw std::out_of_range("pair (" + std::to_string(p) + ", " +
                                std::to_string(q) + ") out of range for " +
                                std::to_string(spec.n_qubits()) + " qubits");
    if (p == q)
        throw ConfigError("pair: members must differ, got (" +
                          std::to_string(p) + ", " + std::to_string(q) + ")");
}

int find_drive(const std::vector<DriveSpec>& drives, int target) {
    for (size_t i = 0; i < drives.size(); ++i)
        if (drives[i].target == target) return static_cast<int>(i);
    return -1;
}

// Sweeps that depend on the relative drive phase need a tone on both pair
// members; a driveless config gets the documented defaults, a partial one is
// an error.
ClusterSpec with_pair_drives(const ClusterSpec& spec, int p, int q,
                             bool* defaulted) {
    ClusterSpec eff = spec;
    *defaulted = false;
    if (eff.drives.empty()) {
        eff.drives = default_pair_drives(spec, p, q);
        *defaulted = true;
        return eff;
    }
    for (int member : {p, q})
        if (find_drive(eff.drives, member) < 0)
            throw ConfigError("drives: missing drive on pair member " +
                              std::to_string(member));
    return eff;
}

// NaN-aware sign-change scan along a sequence of (x, zeta) samples.
void collect_crossings_1d(const std::vector<double>& xs,
                          const std::vector<double>& zs, size_t offset,
                          size_t stride,
                          const std::function<void(double)>& emit) {
    double prev_x = 0.0, prev_z = kNaN;
    for (size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        const double z = zs[offset + i * stride];
        if (std::isnan(z)) {
            prev_z = kNaN;
            continue;
        }
        if (z == 0.0) {
            emit(x);
        } else if (!std::isnan(prev_z) && prev_z != 0.0 &&
                   ((prev_z < 0.0) != (z < 0.0))) {
            emit(prev_x - prev_z * (x - prev_x) / (z - prev_z));
        }
        prev_x = x;
        prev_z = z;
    }
}

}  // namespace

double zz_from_spectrum(const Spectrum& s, const DressedLabeling& lab, int p,
                        int q) {
    std::vector<int> digits(lab.n_sites, 0);
    const double e00 = lab.energy(s, digits);
    digits[p] = 1;
    const double e10 = lab.energy(s, digits);
    digits[q] = 1;
    const double e11 = lab.energy(s, digits);
    digits[p] = 0;
    const double e01 = lab.energy(s, digits);
    return 1e3 * ((e11 - e10) - (e01 - e00));  // GHz -> MHz
}

double zz_rate(const ClusterSpec& spec, int p, int q) {
    check_pair(spec, p, q);
    const HermitianMatrix h = build_cluster_hamiltonian(spec);
    const Spectrum s = diagonalize(h);
    const DressedLabeling lab = label_dressed(s, spec.n_modes(), spec.levels());
    return zz_from_spectrum(s, lab, p, q);
}

std::vector<DriveSpec> default_pair_drives(const ClusterSpec& spec, int p,
                                           int q) {
    check_pair(spec, p, q);
    const double omega_d = spec.qubits[q].omega - 0.1;
    return {DriveSpec{p, 0.020, 0.0, omega_d},
            DriveSpec{q, 0.020, 0.0, omega_d}};
}

SweepResult sweep_phase(const ClusterSpec& spec, int p, int q,
                        const std::vector<double>& phases_rad) {
    check_pair(spec, p, q);
    if (phases_rad.empty()) throw ConfigError("sweep_phase: empty phase grid");

    bool defaulted = false;
    const ClusterSpec eff = with_pair_drives(spec, p, q, &defaulted);
    eff.validate();
    const int ip = find_drive(eff.drives, p);
    const int iq = find_drive(eff.drives, q);

    SweepResult r;
    r.axis1 = {"phase_rad", phases_rad};
    r.zeta_mhz.assign(phases_rad.size(), kNaN);
    r.label_ok.assign(phases_rad.size(), 0);
    r.meta = {p, q, defaulted, eff.drives};

    parallel_for(static_cast<int>(phases_rad.size()), [&](int i) {
        ClusterSpec point = eff;
        point.drives[ip].phase = 0.0;
        point.drives[iq].phase = phases_rad[i];
        try {
            r.zeta_mhz[i] = zz_rate(point, p, q);
            r.label_ok[i] = 1;
        } catch (const LabelingAmbiguous&) {
            // gap point
        }
    });

    if (std::none_of(r.label_ok.begin(), r.label_ok.end(),
                     [](char ok) { return ok; }))
        throw EmptyResultError("sweep_phase: every point failed labeling");

    collect_crossings_1d(phases_rad, r.zeta_mhz, 0, 1, [&](double x) {
        r.zero_crossings.push_back({x, std::nullopt});
    });
    return r;
}

SweepResult sweep_coupler(const ClusterSpec& spec, int p, int q,
                          const std::vector<double>& omega_c_ghz,
                          double phi_d) {
    check_pair(spec, p, q);
    if (omega_c_ghz.empty())
        throw ConfigError("sweep_coupler: empty frequency grid");

    ClusterSpec eff = spec;
    if (!eff.drives.empty()) {
        const int ip = find_drive(eff.drives, p);
        const int iq = find_drive(eff.drives, q);
        if (ip < 0 || iq < 0)
            throw ConfigError(
                "drives: a driven coupler sweep needs tones on both pair "
                "members");
        eff.drives[ip].phase = 0.0;
        eff.drives[iq].phase = phi_d;
    }
    eff.validate();

    SweepResult r;
    r.axis1 = {"omega_c_GHz", omega_c_ghz};
    r.zeta_mhz.assign(omega_c_ghz.size(), kNaN);
    r.label_ok.assign(omega_c_ghz.size(), 0);
    r.meta = {p, q, false, eff.drives};

    parallel_for(static_cast<int>(omega_c_ghz.size()), [&](int i) {
        ClusterSpec point = eff;
        point.coupler.omega_c = omega_c_ghz[i];
        point.coupler.omega_c_max.reset();  // swept directly, not via flux
        try {
            r.zeta_mhz[i] = zz_rate(point, p, q);
            r.label_ok[i] = 1;
        } catch (const LabelingAmbiguous&) {
        } catch (const ConfigError&) {
            // e.g. nonpositive frequency point: flagged, not fatal
        }
    });

    if (std::none_of(r.label_ok.begin(), r.label_ok.end(),
                     [](char ok) { return ok; }))
        throw EmptyResultError("sweep_coupler: every point failed labeling");

    collect_crossings_1d(omega_c_ghz, r.zeta_mhz, 0, 1, [&](double x) {
        r.zero_crossings.push_back({x, std::nullopt});
    });
    return r;
}

SweepResult sweep_2d(const ClusterSpec& spec, int p, int q,
                     const std::vector<double>& omega_c_ghz,
                     const std::vector<double>& phases_rad) {
    check_pair(spec, p, q);
    if (omega_c_ghz.empty() || phases_rad.empty())
        throw ConfigError("sweep_2d: empty axis grid");

    bool defaulted = false;
    const ClusterSpec eff = with_pair_drives(spec, p, q, &defaulted);
    eff.validate();
    const int ip = find_drive(eff.drives, p);
    const int iq = find_drive(eff.drives, q);

    const size_t n1 = omega_c_ghz.size();
    const size_t n2 = phases_rad.size();

    SweepResult r;
    r.axis1 = {"omega_c_GHz", omega_c_ghz};
    r.axis2 = SweepAxis{"phase_rad", phases_rad};
    r.zeta_mhz.assign(n1 * n2, kNaN);
    r.label_ok.assign(n1 * n2, 0);
    r.meta = {p, q, defaulted, eff.drives};

    parallel_for(static_cast<int>(n1 * n2), [&](int flat) {
        const size_t i1 = static_cast<size_t>(flat) / n2;
        const size_t i2 = static_cast<size_t>(flat) % n2;
        ClusterSpec point = eff;
        point.coupler.omega_c = omega_c_ghz[i1];
        point.coupler.omega_c_max.reset();
        point.drives[ip].phase = 0.0;
        point.drives[iq].phase = phases_rad[i2];
        try {
            r.zeta_mhz[flat] = zz_rate(point, p, q);
            r.label_ok[flat] = 1;
        } catch (const LabelingAmbiguous&) {
        }
    });

    if (std::none_of(r.label_ok.begin(), r.label_ok.end(),
                     [](char ok) { return ok; }))
        throw EmptyResultError("sweep_2d: every point failed labeling");

    for (size_t i1 = 0; i1 < n1; ++i1) {
        collect_crossings_1d(phases_rad, r.zeta_mhz, i1 * n2, 1, [&](double x) {
            r.zero_crossings.push_back({omega_c_ghz[i1], x});
        });
    }
    return r;
}

Eigen::MatrixXd pair_peak_matrix(const ClusterSpec& spec,
                                 const std::vector<double>& phases_rad) {
    if (spec.n_qubits() != 4)
        throw ConfigError("pair_peak_matrix: requires a 4-qubit cluster, got " +
                          std::to_string(spec.n_qubits()) + " qubits");
    if (phases_rad.empty())
        throw ConfigError("pair_peak_matrix: empty phase grid");
    if (!spec.drives.empty()) {
        for (int t = 0; t < spec.n_qubits(); ++t)
            if (find_drive(spec.drives, t) < 0)
                throw ConfigError("drives: pair matrix needs a drive defined "
                                  "for every qubit (missing qubit " +
                                  std::to_string(t) + ")");
    }

    Eigen::MatrixXd peak = Eigen::MatrixXd::Zero(4, 4);
    for (int p = 0; p < 4; ++p) {
        for (int q = p + 1; q < 4; ++q) {
            ClusterSpec pair_spec = spec;
            if (spec.drives.empty()) {
                pair_spec.drives = default_pair_drives(spec, p, q);
            } else {
                // only the active pair's tones stay on
                pair_spec.drives.clear();
                pair_spec.drives.push_back(
                    spec.drives[find_drive(spec.drives, p)]);
                pair_spec.drives.push_back(
                    spec.drives[find_drive(spec.drives, q)]);
            }

            double best = kNaN;
            try {
                const SweepResult sw = sweep_phase(pair_spec, p, q, phases_rad);
                for (int i = 0; i < sw.n_points(); ++i) {
                    if (!sw.label_ok[i]) continue;
                    const double mag = std::abs(sw.zeta_mhz[i]);
                    if (std::isnan(best) || mag > best) best = mag;
                }
            } catch (const EmptyResultError&) {
                best = kNaN;  // pair marked absent
            }
            peak(p, q) = peak(q, p) = best;
        }
    }
    return peak;
}

}  // namespace zzlattice
