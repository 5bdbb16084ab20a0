#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "zzlattice/cluster.hpp"

namespace zzlattice {

// Dense Hermitian operator on the truncated multi-mode Fock space.
using HermitianMatrix = Eigen::MatrixXcd;

// Truncated bosonic annihilation operator: <n|a|n+1> = sqrt(n+1).
Eigen::MatrixXcd annihilation_op(int levels);

// Integer power, used for flat-index arithmetic on the mode lattice.
long long ipow(long long base, int exp);

// Flat basis index of a digit string, site 0 most significant:
// index = sum_s digits[s] * levels^(n_sites-1-s).
long long flat_index(const std::vector<int>& digits, int levels);

// Inverse of flat_index.
std::vector<int> digits_of(long long index, int n_sites, int levels);

// Embed a single-mode operator at `site` in an n_sites-mode space:
// I^(site) (x) local (x) I^(n_sites-1-site).
Eigen::MatrixXcd embed_op(const Eigen::MatrixXcd& local, int site, int n_sites,
                          int levels);

// Kronecker chain with identity at sites where no factor is given.
// Cheaper than multiplying embedded operators for few-site products.
Eigen::MatrixXcd embed_product(
    const std::vector<std::optional<Eigen::MatrixXcd>>& factors, int levels);

// Full cluster Hamiltonian in the shared drive rotating frame, GHz units:
//   H = sum_i [(omega_i - omega_d) n_i + eta_i/2 a_i^+ a_i^+ a_i a_i]
//     + (omega_c - omega_d) n_c + eta_c/2 a_c^+ a_c^+ a_c a_c
//     + sum_i J_ic (a_i^+ a_c + a_i a_c^+)
//     + sum_drives (eps a_t + eps* a_t^+),  eps = amp * exp(i phase).
// Validates the spec; the result is Hermitian by construction.
HermitianMatrix build_cluster_hamiltonian(const ClusterSpec& spec);

}  // namespace zzlattice
