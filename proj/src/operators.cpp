#include "zzlattice/operators.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <complex>

namespace zzlattice {

using std::complex;

Eigen::MatrixXcd annihilation_op(int levels) {
    if (levels < 2)
        throw ConfigError("annihilation_op: levels must be >= 2, got " +
                          std::to_string(levels));
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(levels, levels);
    for (int n = 0; n + 1 < levels; ++n)
        a(n, n + 1) = std::sqrt(static_cast<double>(n + 1));
    return a;
}

long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

long long flat_index(const std::vector<int>& digits, int levels) {
    long long idx = 0;
    for (int d : digits) idx = idx * levels + d;
    return idx;
}

std::vector<int> digits_of(long long index, int n_sites, int levels) {
    std::vector<int> d(n_sites, 0);
    for (int s = n_sites - 1; s >= 0; --s) {
        d[s] = static_cast<int>(index % levels);
        index /= levels;
    }
    return d;
}

Eigen::MatrixXcd embed_product(
    const std::vector<std::optional<Eigen::MatrixXcd>>& factors, int levels) {
    const int n_sites = static_cast<int>(factors.size());
    if (n_sites == 0) throw ConfigError("embed_product: no sites");
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(levels, levels);
    for (int s = 0; s < n_sites; ++s) {
        const Eigen::MatrixXcd& f = factors[s] ? *factors[s] : eye;
        if (f.rows() != levels || f.cols() != levels)
            throw ConfigError("embed_product: factor at site " +
                              std::to_string(s) + " is not levels x levels");
        out = Eigen::kroneckerProduct(out, f).eval();
    }
    return out;
}

Eigen::MatrixXcd embed_op(const Eigen::MatrixXcd& local, int site, int n_sites,
                          int levels) {
    if (site < 0 || site >= n_sites)
        throw std::out_of_range("embed_op: site " + std::to_string(site) +
                                " out of range [0, " +
                                std::to_string(n_sites - 1) + "]");
    std::vector<std::optional<Eigen::MatrixXcd>> factors(n_sites);
    factors[site] = local;
    return embed_product(factors, levels);
}

HermitianMatrix build_cluster_hamiltonian(const ClusterSpec& spec) {
    spec.validate();

    const int L = spec.levels();
    const int M = spec.n_modes();
    const int coupler_site = M - 1;
    const long long dim = spec.dim();
    const double omega_d = spec.frame_frequency();

    const Eigen::MatrixXcd a = annihilation_op(L);
    const Eigen::MatrixXcd ad = a.adjoint();
    const Eigen::MatrixXcd num = ad * a;
    const Eigen::MatrixXcd kerr = ad * ad * a * a;

    HermitianMatrix h = HermitianMatrix::Zero(dim, dim);

    auto one_site = [&](const Eigen::MatrixXcd& op, int site) {
        std::vector<std::optional<Eigen::MatrixXcd>> f(M);
        f[site] = op;
        return embed_product(f, L);
    };
    auto two_site = [&](const Eigen::MatrixXcd& op_a, int site_a,
                        const Eigen::MatrixXcd& op_b, int site_b) {
        std::vector<std::optional<Eigen::MatrixXcd>> f(M);
        f[site_a] = op_a;
        f[site_b] = op_b;
        return embed_product(f, L);
    };

    for (int i = 0; i < spec.n_qubits(); ++i) {
        const auto& q = spec.qubits[i];
        h += (q.omega - omega_d) * one_site(num, i);
        h += 0.5 * q.eta * one_site(kerr, i);
    }
    h += (spec.coupler.omega_c - omega_d) * one_site(num, coupler_site);
    h += 0.5 * spec.coupler.eta_c * one_site(kerr, coupler_site);

    for (const auto& c : spec.couplings) {
        const Eigen::MatrixXcd x = two_site(ad, c.qubit, a, coupler_site);
        h += c.j * (x + x.adjoint());
    }

    for (const auto& d : spec.drives) {
        const complex<double> eps =
            d.amp * std::exp(complex<double>(0.0, d.phase));
        const Eigen::MatrixXcd low = one_site(a, d.target);
        h += eps * low + std::conj(eps) * low.adjoint();
    }

    return h;
}

}  // namespace zzlattice
