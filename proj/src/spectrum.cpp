#include "zzlattice/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "zzlattice/operators.hpp"

namespace zzlattice {

LabelingAmbiguous::LabelingAmbiguous(std::vector<int> label, double overlap)
    : std::runtime_error([&] {
          std::ostringstream os;
          os << "dressed labeling ambiguous for bare state |";
          for (int d : label) os << d;
          os << ">: best available squared overlap " << overlap << " <= 0.5";
          return os.str();
      }()),
      label_(std::move(label)),
      overlap_(overlap) {}

Spectrum diagonalize(const Eigen::MatrixXcd& h) {
    if (h.rows() != h.cols())
        throw ConfigError("diagonalize: matrix must be square");
    const double skew = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (skew > 1e-12) {
        std::ostringstream os;
        os << "diagonalize: input is not Hermitian (anti-Hermitian part "
           << skew << " > 1e-12)";
        throw ConfigError(os.str());
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("diagonalize: eigensolver failed to converge");
    return Spectrum{es.eigenvalues(), es.eigenvectors()};
}

int DressedLabeling::eigen_index(const std::vector<int>& digits) const {
    if (static_cast<int>(digits.size()) != n_sites)
        throw std::out_of_range("eigen_index: wrong digit count");
    for (int d : digits)
        if (d < 0 || d >= levels)
            throw std::out_of_range("eigen_index: digit out of range");
    return eigen_of_bare[flat_index(digits, levels)];
}

double DressedLabeling::energy(const Spectrum& s,
                               const std::vector<int>& digits) const {
    return s.energies(eigen_index(digits));
}

DressedLabeling label_dressed(const Spectrum& s, int n_sites, int levels) {
    const long long dim = ipow(levels, n_sites);
    if (s.energies.size() != dim || s.states.rows() != dim)
        throw ConfigError("label_dressed: spectrum dimension " +
                          std::to_string(s.energies.size()) +
                          " != levels^n_sites = " + std::to_string(dim));

    // All (eigenstate, bare) pairs ordered by descending squared overlap;
    // ties toward the lower eigenstate index, then the lower bare index.
    struct Cand {
        double p;
        int e;
        long long b;
    };
    std::vector<Cand> cands;
    cands.reserve(static_cast<size_t>(dim) * dim);
    for (int e = 0; e < dim; ++e)
        for (long long b = 0; b < dim; ++b)
            cands.push_back({std::norm(s.states(b, e)), e, b});
    std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
        if (x.p != y.p) return x.p > y.p;
        if (x.e != y.e) return x.e < y.e;
        return x.b < y.b;
    });

    DressedLabeling lab;
    lab.n_sites = n_sites;
    lab.levels = levels;
    lab.eigen_of_bare.assign(dim, -1);
    lab.overlap_of_bare.assign(dim, 0.0);

    std::vector<char> eigen_used(dim, 0);
    long long assigned = 0;
    for (const Cand& c : cands) {
        if (assigned == dim) break;
        if (eigen_used[c.e] || lab.eigen_of_bare[c.b] >= 0) continue;
        eigen_used[c.e] = 1;
        lab.eigen_of_bare[c.b] = c.e;
        lab.overlap_of_bare[c.b] = c.p;
        ++assigned;
    }

    // Reject weak assignments on the labels the ZZ formula consumes: qubit
    // digits in {0,1}, coupler (last site) in its ground state.
    for (long long b = 0; b < dim; ++b) {
        const std::vector<int> digits = digits_of(b, n_sites, levels);
        if (digits[n_sites - 1] != 0) continue;
        bool computational = true;
        for (int sdx = 0; sdx + 1 < n_sites; ++sdx)
            if (digits[sdx] > 1) computational = false;
        if (!computational) continue;
        if (lab.overlap_of_bare[b] <= 0.5)
            throw LabelingAmbiguous(digits, lab.overlap_of_bare[b]);
    }

    return lab;
}

}  // namespace zzlattice
