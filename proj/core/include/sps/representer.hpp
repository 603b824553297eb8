#pragma once

#include <Eigen/Dense>

#include "sps/types.hpp"

namespace sps {

/// Diagonal measurement-space weights of the decoupled formulation.
/// lambda2_diag holds d_hat^2 at each sampled index; m_diag holds
/// lambda2 * d_hat^2 / (N + lambda2 * d_hat^2), in [0, 1) with 0 at DC.
struct DiagonalWeights {
    SamplingPattern pattern;
    Eigen::VectorXd lambda2_diag;
    Eigen::VectorXd m_diag;
    double lambda2 = 0.0;
};

DiagonalWeights build_weights(const SamplingPattern& pattern, double lambda2);

/// 0.5 * sum_j m_diag[j] * |r_j|^2, the weighted data-fidelity of the sparse
/// subproblem.
double weighted_residual_energy(const DiagonalWeights& w, const Measurement& r);

/// Closed-form smooth component: adjoint of residual ./ (N + lambda2 * d_hat^2).
/// The residual must be hermitian-consistent.
Image solve_smooth_closed_form(const DiagonalWeights& w, const Measurement& residual);

/// The common measurement vector shared by all sparse solutions (alias of
/// forward; names the fit explicitly in the decoupled driver).
Measurement fit_of(const SamplingPattern& pattern, const Image& x1);

}  // namespace sps
