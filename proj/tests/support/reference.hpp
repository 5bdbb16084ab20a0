#pragma once

// Reference implementations for oracle comparisons, built on basis-state
// transition rules instead of operator algebra, and an exhaustive-scan greedy
// labeler instead of the library's sorted assignment.

#include <complex>
#include <stdexcept>
#include <vector>

#include "support/jacobi.hpp"
#include "zzlattice/cluster.hpp"

namespace oracle {

inline std::vector<int> ref_digits(long long index, int n_sites, int levels) {
    std::vector<int> d(n_sites);
    for (int s = n_sites - 1; s >= 0; --s) {
        d[s] = static_cast<int>(index % levels);
        index /= levels;
    }
    return d;
}

// Hamiltonian assembled entry by entry from occupation-number rules.
inline Eigen::MatrixXcd ref_build_hamiltonian(const zzlattice::ClusterSpec& spec) {
    using cd = std::complex<double>;
    const int L = spec.qubits.front().levels;
    const int nq = static_cast<int>(spec.qubits.size());
    const int M = nq + 1;
    long long dim = 1;
    for (int s = 0; s < M; ++s) dim *= L;

    std::vector<long long> step(M);
    step[M - 1] = 1;
    for (int s = M - 2; s >= 0; --s) step[s] = step[s + 1] * L;

    const double omega_d =
        spec.drives.empty() ? 0.0 : spec.drives.front().omega_d;

    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (long long b = 0; b < dim; ++b) {
        const std::vector<int> d = ref_digits(b, M, L);

        double diag = 0.0;
        for (int i = 0; i < nq; ++i)
            diag += (spec.qubits[i].omega - omega_d) * d[i] +
                    0.5 * spec.qubits[i].eta * d[i] * (d[i] - 1);
        diag += (spec.coupler.omega_c - omega_d) * d[M - 1] +
                0.5 * spec.coupler.eta_c * d[M - 1] * (d[M - 1] - 1);
        h(b, b) += diag;

        for (const auto& c : spec.couplings) {
            // J a_q^+ a_c : raise the qubit, lower the coupler
            if (d[c.qubit] + 1 < L && d[M - 1] > 0) {
                const long long b2 = b + step[c.qubit] - step[M - 1];
                const double amp =
                    c.j * std::sqrt(double(d[c.qubit] + 1) * double(d[M - 1]));
                h(b2, b) += amp;
                h(b, b2) += amp;
            }
        }

        for (const auto& dr : spec.drives) {
            // eps a_t : lower the target
            if (d[dr.target] > 0) {
                const long long b2 = b - step[dr.target];
                const cd eps =
                    dr.amp * std::exp(cd(0.0, dr.phase)) *
                    std::sqrt(double(d[dr.target]));
                h(b2, b) += eps;
                h(b, b2) += std::conj(eps);
            }
        }
    }
    return h;
}

// Exhaustive-scan greedy assignment (repeatedly take the global max overlap).
// Returns eigenstate index per flat bare index; overlaps alongside.
struct RefLabeling {
    std::vector<int> eigen_of_bare;
    std::vector<double> overlap_of_bare;
    bool computational_ok = true;  // all {0,1}-qubit/0-coupler labels > 0.5
};

inline RefLabeling ref_label(const Eigen::MatrixXcd& eigenvectors, int n_sites,
                             int levels) {
    const long long dim = eigenvectors.rows();
    RefLabeling lab;
    lab.eigen_of_bare.assign(dim, -1);
    lab.overlap_of_bare.assign(dim, 0.0);
    std::vector<char> eigen_used(dim, 0);

    for (long long round = 0; round < dim; ++round) {
        double best = -1.0;
        int best_e = -1;
        long long best_b = -1;
        for (int e = 0; e < dim; ++e) {
            if (eigen_used[e]) continue;
            for (long long b = 0; b < dim; ++b) {
                if (lab.eigen_of_bare[b] >= 0) continue;
                const double p = std::norm(eigenvectors(b, e));
                if (p > best) {
                    best = p;
                    best_e = e;
                    best_b = b;
                }
            }
        }
        eigen_used[best_e] = 1;
        lab.eigen_of_bare[best_b] = best_e;
        lab.overlap_of_bare[best_b] = best;
    }

    for (long long b = 0; b < dim; ++b) {
        const std::vector<int> d = ref_digits(b, n_sites, levels);
        if (d[n_sites - 1] != 0) continue;
        bool comp = true;
        for (int s = 0; s + 1 < n_sites; ++s)
            if (d[s] > 1) comp = false;
        if (comp && lab.overlap_of_bare[b] <= 0.5) lab.computational_ok = false;
    }
    return lab;
}

// Fully independent ZZ pipeline: rule-based H, Jacobi, scan labeling.
// Returns MHz; sets *ok = false instead of throwing on ambiguous labels.
inline double ref_zz_rate(const zzlattice::ClusterSpec& spec, int p, int q,
                          bool* ok = nullptr) {
    const int L = spec.qubits.front().levels;
    const int M = static_cast<int>(spec.qubits.size()) + 1;
    const Eigen::MatrixXcd h = ref_build_hamiltonian(spec);
    const JacobiResult jr = jacobi_hermitian(h);
    const RefLabeling lab = ref_label(jr.eigenvectors, M, L);
    if (ok) *ok = lab.computational_ok;

    std::vector<long long> step(M);
    step[M - 1] = 1;
    for (int s = M - 2; s >= 0; --s) step[s] = step[s + 1] * L;

    const auto energy = [&](long long bare) {
        return jr.eigenvalues(lab.eigen_of_bare[bare]);
    };
    const double e00 = energy(0);
    const double e10 = energy(step[p]);
    const double e01 = energy(step[q]);
    const double e11 = energy(step[p] + step[q]);
    return 1e3 * ((e11 - e10) - (e01 - e00));
}

}  // namespace oracle
