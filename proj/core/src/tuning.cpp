#include "sps/tuning.hpp"

#include <stdexcept>

#include "sps/operators.hpp"
#include "sps/representer.hpp"

namespace sps {

double lambda1_max(const SamplingPattern& pattern, double lambda2, const Measurement& y) {
    const DiagonalWeights w = build_weights(pattern, lambda2);
    Measurement weighted(y.n, y.values);
    for (int j = 0; j < y.size(); ++j) weighted.values[j] *= w.m_diag[j];
    return adjoint(pattern, weighted).data.cwiseAbs().maxCoeff();
}

double lambda2_from_alpha(double alpha2, int n) {
    if (alpha2 <= 0.0) throw std::invalid_argument("lambda2_from_alpha: alpha2 must be > 0");
    return alpha2 * static_cast<double>(n) * n / 64.0;
}

double lambda1_from_alpha(double alpha1, const SamplingPattern& pattern, double lambda2,
                          const Measurement& y) {
    if (alpha1 <= 0.0 || alpha1 >= 1.0)
        throw std::invalid_argument("lambda1_from_alpha: alpha1 must be in (0, 1)");
    const double lmax = lambda1_max(pattern, lambda2, y);
    if (lmax <= 0.0)
        throw std::invalid_argument(
            "lambda1_from_alpha: lambda1_max is zero (degenerate data); set lambda1 directly");
    return alpha1 * lmax;
}

}  // namespace sps
