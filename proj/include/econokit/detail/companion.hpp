#pragma once

#include <Eigen/Dense>
#include <vector>

namespace econokit::detail {

/// Stacked first-order (companion) form of a k-variable lag polynomial:
/// blocks[l] is the k x k coefficient matrix at lag l+1. For k = 1 this is
/// the scalar AR companion matrix.
inline Eigen::MatrixXd companion(const std::vector<Eigen::MatrixXd>& blocks) {
    const auto p = static_cast<Eigen::Index>(blocks.size());
    const Eigen::Index k = p > 0 ? blocks[0].rows() : 0;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(k * p, k * p);
    for (Eigen::Index l = 0; l < p; ++l) {
        A.block(0, l * k, k, k) = blocks[static_cast<std::size_t>(l)];
    }
    if (p > 1) {
        A.block(k, 0, k * (p - 1), k * (p - 1)) =
            Eigen::MatrixXd::Identity(k * (p - 1), k * (p - 1));
    }
    return A;
}

/// Moving-average weight blocks Psi_0..Psi_{H-1}: Psi_j is the top-left
/// k x k block of the j-th companion power.
inline std::vector<Eigen::MatrixXd> ma_weights(const Eigen::MatrixXd& comp,
                                               Eigen::Index k, int H) {
    std::vector<Eigen::MatrixXd> psi;
    psi.reserve(static_cast<std::size_t>(H));
    psi.push_back(Eigen::MatrixXd::Identity(k, k));
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(comp.rows(), comp.cols());
    for (int j = 1; j < H; ++j) {
        power = power * comp;
        psi.push_back(power.topLeftCorner(k, k));
    }
    return psi;
}

/// Largest eigenvalue modulus; >= 1 flags a unit or explosive lag polynomial.
inline double spectral_radius(const Eigen::MatrixXd& m) {
    if (m.rows() == 0) return 0.0;
    return m.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace econokit::detail
