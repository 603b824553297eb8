#pragma once

#include <vector>

#include "sps/simulate.hpp"
#include "sps/solvers.hpp"
#include "sps/types.hpp"

namespace sps {

struct EvalReport {
    double jaccard = 0.0;
    double rel_l2_smooth = 0.0;
    double rel_l2_total = 0.0;
    double wall_seconds = 0.0;
    int iterations = 0;
};

/// Pixels with |x_i| > rho * max|x|; empty for the zero image. Sorted.
std::vector<int> support_of(const Image& x, double rho);

/// |s1 n s2| / |s1 u s2|; 1 when both empty. Inputs must be sorted.
double jaccard(const std::vector<int>& s1, const std::vector<int>& s2);

/// ||x_est - x_ref|| / ||x_ref||; errors on a zero reference.
double relative_l2(const Image& x_est, const Image& x_ref);

EvalReport evaluate(const SolveResult& result, const GroundTruth& truth, double rho);

}  // namespace sps
