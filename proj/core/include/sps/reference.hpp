#pragma once

#include <Eigen/Dense>

#include "sps/types.hpp"

namespace sps {

/// Dense real-linear problem for the brute-force oracle: forward matrix
/// a_mat (rows x N) and smooth penalty l2_mat (M2 x N). Test scale only.
struct DenseProblem {
    Eigen::MatrixXd a_mat;
    Eigen::MatrixXd l2_mat;
    int n_signal = 0;
    double tolerance = 1e-10;  // scale-relative singular-value cutoff
};

/// A has full row rank (A A^T invertible).
bool check_assumption1(const DenseProblem& p);

/// ker A and ker L2 intersect trivially: [A; L2] has rank N.
bool check_assumption2(const DenseProblem& p);

/// ker(A)^perp is invariant under L2^T L2:
/// (I - P) L2^T L2 A^T vanishes, with P the projection onto ker(A)^perp.
bool check_assumption3(const DenseProblem& p);

/// Lambda2 = (A A^T)^{-1} A L2^T L2 A^T.
Eigen::MatrixXd dense_lambda2(const DenseProblem& p);

/// Spectral-norm relative difference between the two sides of the decoupling
/// identity (A^T A + l2 L2^T L2)^{-1} A^T = A^T (A A^T + l2 Lambda2)^{-1}.
double decoupling_identity_residual(const DenseProblem& p, double lambda2);

/// Exact inner minimization over x2 for fixed x1:
/// x2 = -(A^T A + l2 L2^T L2)^{-1} A^T (A x1 - y).
Eigen::VectorXd dense_smooth_solve(const DenseProblem& p, double lambda2,
                                   const Eigen::VectorXd& x1, const Eigen::VectorXd& y);

/// M_l2 = l2 Lambda2 (A A^T + l2 Lambda2)^{-1}; symmetric PSD, eigenvalues in [0,1).
Eigen::MatrixXd dense_m_matrix(const DenseProblem& p, double lambda2);

/// Dense N x N circulant matrix of the periodic 5-point Laplacian.
Eigen::MatrixXd dense_laplacian(int n);

/// Non-redundant real-linear materialization of the partial Fourier operator
/// on the hermitian-consistent subspace. One representative index per mirror
/// pair contributes a sqrt(2)-scaled cosine and sine row; self-mirrored
/// indices contribute a single cosine row. All rows have squared norm N, so
/// A A^T = N * I and the dense formulas line up with the diagonal fast path.
struct FourierDense {
    DenseProblem problem;
    std::vector<int> row_to_index;  // dense row -> position in pattern.indices
    std::vector<bool> row_is_imag;  // sine rows
};

FourierDense fourier_dense_problem(const SamplingPattern& pattern);

/// Isometric coordinates of a hermitian-consistent measurement in the
/// fourier_dense_problem row basis (sqrt(2)*Re / sqrt(2)*Im at pair
/// representatives, Re at self-mirrored indices).
Eigen::VectorXd compress_measurement(const FourierDense& fd, const SamplingPattern& pattern,
                                     const Measurement& meas);

}  // namespace sps
