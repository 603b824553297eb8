#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "sps/representer.hpp"
#include "sps/types.hpp"

namespace sps {

struct SolverConfig {
    int max_iter = 10000;
    double rel_tol = 1e-6;     // relative iterate-change stopping threshold
    double step_safety = 1.0;  // multiplier on 1/Lipschitz
    bool restart = true;       // gradient-based momentum restart
};

enum class SolveStatus { Converged, MaxIterReached };

struct TracePoint {
    int iteration;
    double objective;
    double seconds;
};

struct SolveResult {
    Image x1;
    Image x2;
    Measurement fit;  // y_tilde = forward(x1)
    std::vector<TracePoint> trace;
    SolveStatus status = SolveStatus::MaxIterReached;
};

/// One optimization run: (A, y, lambda1, lambda2) with L1 = Identity, L2 = Laplacian.
struct ProblemInstance {
    SamplingPattern pattern;
    Measurement y;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};

using LinearMap = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
using ProxMap = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
using ObjectiveFn = std::function<double(const Eigen::VectorXd&)>;

/// Elementwise sign(v) * max(|v| - tau, 0).
Eigen::VectorXd soft_threshold(const Eigen::VectorXd& v, double tau);

/// Largest eigenvalue of a symmetric PSD map, by power iteration with a
/// deterministic start vector. Returns 0 for the zero operator.
double power_iteration(const LinearMap& op, int dim, int iters = 200, double tol = 1e-6);

struct ApgdResult {
    Eigen::VectorXd x;
    std::vector<TracePoint> trace;
    SolveStatus status = SolveStatus::MaxIterReached;
};

/// FISTA with momentum t_{k+1} = (1 + sqrt(1 + 4 t_k^2))/2 and optional
/// gradient restart (reset t = 1 when <x_k - x_{k-1}, z_k - x_k> > 0).
/// `prox` must be the proximal map of the nonsmooth term at scale `step`;
/// `objective` is recorded in the trace. Throws on non-finite objective.
ApgdResult apgd(const LinearMap& gradient, const ProxMap& prox, const ObjectiveFn& objective,
                double step, Eigen::VectorXd x0, const SolverConfig& cfg);

/// Direct APGD on the stacked (x1, x2) variable of the composite problem.
SolveResult solve_coupled(const ProblemInstance& inst, const SolverConfig& cfg);

/// Two-stage driver: weighted LASSO for x1, then the closed-form smooth
/// component from the residual y - forward(x1). x0 overrides the zero
/// initialization of the sparse stage (used by the uniqueness tests).
SolveResult solve_decoupled(const ProblemInstance& inst, const SolverConfig& cfg,
                            const Image* x0 = nullptr);

/// 0.5*||y - A(x1+x2)||^2 + lambda1*||x1||_1 + (lambda2/2)*||Lap x2||^2,
/// with the complex modulus on measurements.
double composite_objective(const ProblemInstance& inst, const Image& x1, const Image& x2);

/// Weighted sparse-subproblem objective:
/// weighted_residual_energy(y - A x1) + lambda1*||x1||_1.
double p1_objective(const ProblemInstance& inst, const DiagonalWeights& w, const Image& x1);

}  // namespace sps
