#pragma once

// Independent dense Hermitian eigensolver for oracle checks: cyclic complex
// Jacobi rotations. Deliberately a different algorithmic path from the
// library's solver (Householder tridiagonalization + implicit QL).

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

struct JacobiResult {
    Eigen::VectorXd eigenvalues;  // ascending
    Eigen::MatrixXcd eigenvectors;
};

inline double offdiag_norm(const Eigen::MatrixXcd& a) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

inline JacobiResult jacobi_hermitian(Eigen::MatrixXcd a) {
    using cd = std::complex<double>;
    const Eigen::Index n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("jacobi: square input");

    Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);
    const double scale = std::max(a.norm(), 1e-300);

    for (int sweep = 0; sweep < 100; ++sweep) {
        if (offdiag_norm(a) <= 1e-13 * scale) break;
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const cd apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300) continue;
                const cd u = apq / mag;  // phase so that conj(u)*apq is real

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) /
                    (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // J: J_pp = c, J_pq = s, J_qp = -conj(u) s, J_qq = conj(u) c
                const cd jqp = -std::conj(u) * s;
                const cd jqq = std::conj(u) * c;

                // A <- A J (columns p, q)
                for (Eigen::Index k = 0; k < n; ++k) {
                    const cd akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * c + akq * jqp;
                    a(k, q) = akp * s + akq * jqq;
                }
                // A <- J^H A (rows p, q)
                for (Eigen::Index k = 0; k < n; ++k) {
                    const cd apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(jqp) * aqk;
                    a(q, k) = s * apk + std::conj(jqq) * aqk;
                }
                // V <- V J
                for (Eigen::Index k = 0; k < n; ++k) {
                    const cd vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * c + vkq * jqp;
                    v(k, q) = vkp * s + vkq * jqq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return a(i, i).real() < a(j, j).real();
    });

    JacobiResult res;
    res.eigenvalues.resize(n);
    res.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        res.eigenvalues(k) = a(order[k], order[k]).real();
        res.eigenvectors.col(k) = v.col(order[k]);
    }
    return res;
}

}  // namespace oracle
