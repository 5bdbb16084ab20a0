#include "zzlattice/statevector.hpp"

#include <cmath>
#include <complex>

namespace zzlattice {

namespace {

using cd = std::complex<double>;

void apply_1q(Eigen::VectorXcd& v, int q, cd u00, cd u01, cd u10, cd u11) {
    const long long mask = 1ll << q;
    const long long dim = v.size();
    for (long long i = 0; i < dim; ++i) {
        if (i & mask) continue;
        const cd a = v(i), b = v(i | mask);
        v(i) = u00 * a + u01 * b;
        v(i | mask) = u10 * a + u11 * b;
    }
}

void apply_gate(Eigen::VectorXcd& v, const Gate& g) {
    static const double s = 1.0 / std::sqrt(2.0);
    switch (g.kind) {
        case GateKind::H:
            apply_1q(v, g.qubits[0], s, s, s, -s);
            return;
        case GateKind::X:
            apply_1q(v, g.qubits[0], 0, 1, 1, 0);
            return;
        case GateKind::Z:
            apply_1q(v, g.qubits[0], 1, 0, 0, -1);
            return;
        case GateKind::T:
            apply_1q(v, g.qubits[0], 1, 0, 0, std::polar(1.0, M_PI / 4));
            return;
        case GateKind::Tdg:
            apply_1q(v, g.qubits[0], 1, 0, 0, std::polar(1.0, -M_PI / 4));
            return;
        case GateKind::RZ:
            apply_1q(v, g.qubits[0], std::polar(1.0, -g.theta / 2), 0, 0,
                     std::polar(1.0, g.theta / 2));
            return;
        case GateKind::CX: {
            const long long cm = 1ll << g.qubits[0];
            const long long tm = 1ll << g.qubits[1];
            for (long long i = 0; i < v.size(); ++i)
                if ((i & cm) && !(i & tm)) std::swap(v(i), v(i | tm));
            return;
        }
        case GateKind::Swap: {
            const long long am = 1ll << g.qubits[0];
            const long long bm = 1ll << g.qubits[1];
            for (long long i = 0; i < v.size(); ++i)
                if ((i & am) && !(i & bm))
                    std::swap(v(i), v((i & ~am) | bm));
            return;
        }
        case GateKind::MCX: {
            // applied natively; decomposition is a separate explicit pass
            long long cm = 0;
            for (size_t k = 0; k + 1 < g.qubits.size(); ++k)
                cm |= 1ll << g.qubits[k];
            const long long tm = 1ll << g.qubits.back();
            for (long long i = 0; i < v.size(); ++i)
                if (((i & cm) == cm) && !(i & tm)) std::swap(v(i), v(i | tm));
            return;
        }
    }
}

}  // namespace

Eigen::VectorXcd apply_circuit(const Circuit& c, Eigen::VectorXcd state) {
    validate_circuit(c);
    const long long dim = 1ll << c.n_qubits;
    if (state.size() != dim)
        throw ConfigError("apply_circuit: state dimension " +
                          std::to_string(state.size()) + " != 2^n = " +
                          std::to_string(dim));
    for (const Gate& g : c.gates) apply_gate(state, g);
    return state;
}

Eigen::VectorXcd simulate_statevector(const Circuit& c) {
    if (c.n_qubits > 20)
        throw ResourceError("simulate_statevector: n_qubits " +
                            std::to_string(c.n_qubits) + " > 20");
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(1ll << c.n_qubits);
    v(0) = 1.0;
    return apply_circuit(c, std::move(v));
}

Eigen::MatrixXcd unitary_of(const Circuit& c) {
    if (c.n_qubits > 8)
        throw ResourceError("unitary_of: n_qubits " +
                            std::to_string(c.n_qubits) + " > 8");
    validate_circuit(c);
    const long long dim = 1ll << c.n_qubits;
    Eigen::MatrixXcd u(dim, dim);
    for (long long j = 0; j < dim; ++j) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
        v(j) = 1.0;
        for (const Gate& g : c.gates) apply_gate(v, g);
        u.col(j) = v;
    }
    return u;
}

double phase_aligned_deviation(const Eigen::MatrixXcd& a,
                               const Eigen::MatrixXcd& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ConfigError("phase_aligned_deviation: shape mismatch");
    Eigen::Index r = 0, c = 0;
    b.cwiseAbs().maxCoeff(&r, &c);
    if (b(r, c) == cd(0.0, 0.0)) return a.cwiseAbs().maxCoeff();
    cd alpha = a(r, c) / b(r, c);
    const double mag = std::abs(alpha);
    alpha = (mag == 0.0) ? cd(1.0, 0.0) : alpha / mag;  // pure phase
    return (a - alpha * b).cwiseAbs().maxCoeff();
}

}  // namespace zzlattice
