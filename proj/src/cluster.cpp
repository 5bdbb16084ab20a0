#include "zzlattice/cluster.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace zzlattice {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

int ClusterSpec::levels() const {
    return qubits.empty() ? 3 : qubits.front().levels;
}

long long ClusterSpec::dim() const {
    long long d = 1;
    for (int i = 0; i < n_modes(); ++i) d *= levels();
    return d;
}

double ClusterSpec::frame_frequency() const {
    return drives.empty() ? 0.0 : drives.front().omega_d;
}

void ClusterSpec::validate() const {
    if (qubits.size() < 2 || qubits.size() > 4)
        throw ConfigError("qubits: expected 2 to 4 transmons, got " +
                          std::to_string(qubits.size()));

    const int L = qubits.front().levels;
    for (size_t i = 0; i < qubits.size(); ++i) {
        const auto& q = qubits[i];
        const std::string at = "qubits[" + std::to_string(i) + "]";
        if (!(q.omega > 0.0))
            throw ConfigError(at + ".omega_GHz: must be > 0, got " +
                              fmt(q.omega));
        if (q.eta > 0.0)
            throw ConfigError(at + ".eta_GHz: eta must be negative, got " +
                              fmt(q.eta));
        if (q.levels < 2)
            throw ConfigError(at + ".levels: must be >= 2, got " +
                              std::to_string(q.levels));
        if (q.levels != L)
            throw ConfigError(at + ".levels: inconsistent truncation (" +
                              std::to_string(q.levels) + " vs " +
                              std::to_string(L) + "); all modes must match");
    }

    if (!(coupler.omega_c > 0.0))
        throw ConfigError("coupler.omega_c_GHz: must be > 0, got " +
                          fmt(coupler.omega_c));
    if (coupler.eta_c > 0.0)
        throw ConfigError("coupler.eta_c_GHz: eta must be negative, got " +
                          fmt(coupler.eta_c));
    if (coupler.omega_c_max && coupler.omega_c > *coupler.omega_c_max + 1e-12)
        throw ConfigError("coupler.omega_c_GHz: exceeds omega_c_max_GHz (" +
                          fmt(coupler.omega_c) + " > " +
                          fmt(*coupler.omega_c_max) + ")");

    std::set<int> seen;
    for (size_t k = 0; k < couplings.size(); ++k) {
        const auto& c = couplings[k];
        const std::string at = "couplings[" + std::to_string(k) + "]";
        if (c.qubit < 0 || c.qubit >= n_qubits())
            throw ConfigError(at + ".qubit: index " + std::to_string(c.qubit) +
                              " out of range [0, " +
                              std::to_string(n_qubits() - 1) + "]");
        if (!(c.j > 0.0))
            throw ConfigError(at + ".J_GHz: must be > 0, got " + fmt(c.j));
        if (!seen.insert(c.qubit).second)
            throw ConfigError(at + ".qubit: duplicate coupling for qubit " +
                              std::to_string(c.qubit));
    }

    for (size_t k = 0; k < drives.size(); ++k) {
        const auto& d = drives[k];
        const std::string at = "drives[" + std::to_string(k) + "]";
        if (d.target < 0 || d.target >= n_qubits())
            throw ConfigError(at + ".target: index " +
                              std::to_string(d.target) + " out of range [0, " +
                              std::to_string(n_qubits() - 1) + "]");
        if (d.amp < 0.0)
            throw ConfigError(at + ".amp_GHz: must be >= 0, got " + fmt(d.amp));
        if (d.omega_d != drives.front().omega_d) {
            // print full precision: near-misses (a typed value vs a
            // defaulted omega - 0.1) would otherwise render identically
            std::ostringstream os;
            os.precision(17);
            os << at << ".omega_d_GHz: all drives must share one frame "
               << "frequency exactly (" << d.omega_d << " vs "
               << drives.front().omega_d << ")";
            throw ConfigError(os.str());
        }
    }
}

double flux_to_frequency(const CouplerSpec& coupler, double flux) {
    if (!coupler.omega_c_max)
        throw ConfigError(
            "coupler.omega_c_max_GHz: required for the flux-frequency map");
    return *coupler.omega_c_max * std::sqrt(std::abs(std::cos(M_PI * flux)));
}

}  // namespace zzlattice
