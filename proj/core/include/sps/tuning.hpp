#pragma once

#include "sps/types.hpp"

namespace sps {

/// Smallest l1 weight for which the sparse subproblem's solution is zero:
/// || adjoint(m_diag .* y) ||_inf.
double lambda1_max(const SamplingPattern& pattern, double lambda2, const Measurement& y);

/// lambda2 such that lambda2 * sigma_max^2(Lap) = alpha2 * sigma_max^2(A),
/// with sigma_max^2(A) = n^2 and sigma_max^2(Lap) = 64: lambda2 = alpha2 * n^2 / 64.
double lambda2_from_alpha(double alpha2, int n);

/// lambda1 = alpha1 * lambda1_max, 0 < alpha1 < 1. Errors when lambda1_max
/// vanishes (degenerate data).
double lambda1_from_alpha(double alpha1, const SamplingPattern& pattern, double lambda2,
                          const Measurement& y);

}  // namespace sps
