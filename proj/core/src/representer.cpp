#include "sps/representer.hpp"

#include <stdexcept>

#include "sps/operators.hpp"

namespace sps {

DiagonalWeights build_weights(const SamplingPattern& pattern, double lambda2) {
    if (lambda2 <= 0.0) throw std::invalid_argument("build_weights: lambda2 must be > 0");
    const int n = pattern.n;
    const double N = static_cast<double>(n) * n;
    const Eigen::VectorXd symbol = laplacian_symbol(n);
    DiagonalWeights w;
    w.pattern = pattern;
    w.lambda2 = lambda2;
    w.lambda2_diag.resize(pattern.size());
    w.m_diag.resize(pattern.size());
    for (int j = 0; j < pattern.size(); ++j) {
        auto [k, l] = pattern.indices[j];
        const double d = symbol[k * n + l];
        w.lambda2_diag[j] = d * d;
        w.m_diag[j] = lambda2 * d * d / (N + lambda2 * d * d);
    }
    return w;
}

double weighted_residual_energy(const DiagonalWeights& w, const Measurement& r) {
    if (r.n != w.pattern.n || r.size() != w.pattern.size())
        throw std::invalid_argument("weighted_residual_energy: alignment mismatch");
    double acc = 0.0;
    for (int j = 0; j < r.size(); ++j) acc += w.m_diag[j] * std::norm(r.values[j]);
    return 0.5 * acc;
}

Image solve_smooth_closed_form(const DiagonalWeights& w, const Measurement& residual) {
    if (residual.n != w.pattern.n || residual.size() != w.pattern.size())
        throw std::invalid_argument("solve_smooth_closed_form: alignment mismatch");
    if (!hermitian_consistent(w.pattern, residual, 1e-6))
        throw std::invalid_argument("solve_smooth_closed_form: residual not hermitian-consistent");
    const double N = static_cast<double>(w.pattern.n) * w.pattern.n;
    Measurement scaled(residual.n, residual.values);
    for (int j = 0; j < residual.size(); ++j)
        scaled.values[j] /= N + w.lambda2 * w.lambda2_diag[j];
    return adjoint(w.pattern, scaled);
}

Measurement fit_of(const SamplingPattern& pattern, const Image& x1) {
    return forward(pattern, x1);
}

}  // namespace sps
