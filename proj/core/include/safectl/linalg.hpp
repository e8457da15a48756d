#pragma once

#include <Eigen/Dense>

namespace safectl {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Smallest eigenvalue of a symmetric matrix.
inline double min_eigenvalue(const MatrixXd& A) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (A + A.transpose()),
                                               Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

inline double max_eigenvalue(const MatrixXd& A) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (A + A.transpose()),
                                               Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

// Symmetric PSD square root; eigenvalues clipped at zero.
inline MatrixXd psd_sqrt(const MatrixXd& A) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (A + A.transpose()));
    VectorXd w = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().transpose();
}

// Largest real part over the (possibly complex) spectrum of a square matrix.
inline double max_real_eigenvalue(const MatrixXd& A) {
    Eigen::EigenSolver<MatrixXd> es(A, false);
    return es.eigenvalues().real().maxCoeff();
}

inline bool is_hurwitz(const MatrixXd& A, double margin = 0.0) {
    return max_real_eigenvalue(A) < -margin;
}

inline MatrixXd symmetrized(const MatrixXd& A) { return 0.5 * (A + A.transpose()); }

}  // namespace safectl
