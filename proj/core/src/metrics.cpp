#include "sps/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace sps {

std::vector<int> support_of(const Image& x, double rho) {
    std::vector<int> out;
    const double peak = x.data.size() ? x.data.cwiseAbs().maxCoeff() : 0.0;
    if (peak == 0.0) return out;
    const double cut = rho * peak;
    for (int i = 0; i < x.data.size(); ++i)
        if (std::abs(x.data[i]) > cut) out.push_back(i);
    return out;
}

double jaccard(const std::vector<int>& s1, const std::vector<int>& s2) {
    if (s1.empty() && s2.empty()) return 1.0;
    std::vector<int> inter;
    std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(inter));
    const double uni = static_cast<double>(s1.size() + s2.size() - inter.size());
    return static_cast<double>(inter.size()) / uni;
}

double relative_l2(const Image& x_est, const Image& x_ref) {
    const double ref_norm = x_ref.data.norm();
    if (ref_norm == 0.0) throw std::invalid_argument("relative_l2: zero reference");
    return (x_est.data - x_ref.data).norm() / ref_norm;
}

EvalReport evaluate(const SolveResult& result, const GroundTruth& truth, double rho) {
    if (result.x1.n != truth.x1_true.n || result.x2.n != truth.x2_true.n)
        throw std::invalid_argument("evaluate: size mismatch");
    EvalReport rep;
    rep.jaccard = jaccard(support_of(result.x1, rho), truth.support_true);
    rep.rel_l2_smooth = relative_l2(result.x2, truth.x2_true);
    Image est_total(result.x1.n, result.x1.data + result.x2.data);
    Image true_total(truth.x1_true.n, truth.x1_true.data + truth.x2_true.data);
    rep.rel_l2_total = relative_l2(est_total, true_total);
    if (!result.trace.empty()) {
        rep.wall_seconds = result.trace.back().seconds;
        rep.iterations = result.trace.back().iteration;
    }
    return rep;
}

}  // namespace sps
