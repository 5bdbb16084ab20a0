#pragma once

#include <Eigen/Dense>
#include <vector>

#include "zzlattice/errors.hpp"

namespace zzlattice {

// Eigendecomposition of a Hermitian operator. energies ascending; states'
// column k is the eigenvector of energies[k].
struct Spectrum {
    Eigen::VectorXd energies;
    Eigen::MatrixXcd states;
};

// Self-adjoint eigendecomposition. Rejects input whose anti-Hermitian part
// exceeds 1e-12 (absolute, GHz).
Spectrum diagonalize(const Eigen::MatrixXcd& h);

// Assignment of bare product labels to dressed eigenstates by greedy maximum
// squared overlap. Site convention matches the Hamiltonian: qubits first,
// coupler last (computational labels have qubit digits in {0,1}, coupler 0).
struct DressedLabeling {
    int n_sites = 0;
    int levels = 0;
    std::vector<int> eigen_of_bare;     // flat bare index -> eigenstate index
    std::vector<double> overlap_of_bare;  // squared overlap of that assignment

    int eigen_index(const std::vector<int>& digits) const;
    double energy(const Spectrum& s, const std::vector<int>& digits) const;
};

// Greedy bijective labeling. Ties break toward the lower eigenstate index,
// then the lower bare index. Throws LabelingAmbiguous if any computational-
// subspace label ends up with squared overlap <= 0.5.
DressedLabeling label_dressed(const Spectrum& s, int n_sites, int levels);

}  // namespace zzlattice
