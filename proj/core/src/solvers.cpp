#include "sps/solvers.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "sps/operators.hpp"

namespace sps {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Eigen::VectorXcd residual_values(const ProblemInstance& inst, const Image& total) {
    return forward(inst.pattern, total).values - inst.y.values;
}

}  // namespace

Eigen::VectorXd soft_threshold(const Eigen::VectorXd& v, double tau) {
    if (tau < 0.0) throw std::invalid_argument("soft_threshold: tau must be >= 0");
    return v.unaryExpr([tau](double a) {
        const double m = std::abs(a) - tau;
        return m > 0.0 ? (a > 0.0 ? m : -m) : 0.0;
    });
}

double power_iteration(const LinearMap& op, int dim, int iters, double tol) {
    // xorshift-seeded deterministic start, so repeated runs agree bit-for-bit.
    Eigen::VectorXd v(dim);
    std::uint64_t s = 0x9e3779b97f4a7c15ULL;
    for (int i = 0; i < dim; ++i) {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        v[i] = static_cast<double>(s >> 11) * 0x1.0p-53 - 0.5;
    }
    double nv = v.norm();
    if (nv == 0.0) return 0.0;
    v /= nv;
    double eig = 0.0;
    for (int it = 0; it < iters; ++it) {
        Eigen::VectorXd w = op(v);
        const double nw = w.norm();
        if (nw == 0.0) return 0.0;
        const double rayleigh = v.dot(w);
        if (it > 0 && std::abs(rayleigh - eig) <= tol * std::abs(rayleigh)) return rayleigh;
        eig = rayleigh;
        v = w / nw;
    }
    return eig;
}

ApgdResult apgd(const LinearMap& gradient, const ProxMap& prox, const ObjectiveFn& objective,
                double step, Eigen::VectorXd x0, const SolverConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    ApgdResult res;
    Eigen::VectorXd x = std::move(x0);
    Eigen::VectorXd z = x;
    double t = 1.0;

    res.trace.push_back({0, objective(x), seconds_since(t0)});
    for (int it = 1; it <= cfg.max_iter; ++it) {
        Eigen::VectorXd x_new = prox(z - step * gradient(z));
        const double obj = objective(x_new);
        if (!std::isfinite(obj))
            throw std::runtime_error("apgd: non-finite objective (bad step size?)");
        res.trace.push_back({it, obj, seconds_since(t0)});

        const double change = (x_new - x).norm();
        const double scale = std::max(x_new.norm(), 1e-30);
        const bool converged = change / scale < cfg.rel_tol;

        if (cfg.restart && (x_new - x).dot(z - x_new) > 0.0) {
            t = 1.0;
            z = x_new;
        } else {
            const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
            z = x_new + ((t - 1.0) / t_next) * (x_new - x);
            t = t_next;
        }
        x = std::move(x_new);
        if (converged) {
            res.status = SolveStatus::Converged;
            break;
        }
    }
    res.x = std::move(x);
    return res;
}

double composite_objective(const ProblemInstance& inst, const Image& x1, const Image& x2) {
    if (x1.n != inst.pattern.n || x2.n != inst.pattern.n)
        throw std::invalid_argument("composite_objective: shape mismatch");
    Image total(x1.n, x1.data + x2.data);
    const double data_term = 0.5 * residual_values(inst, total).squaredNorm();
    const double l1_term = inst.lambda1 * x1.data.lpNorm<1>();
    const double smooth_term = 0.5 * inst.lambda2 * laplacian_apply(x2).data.squaredNorm();
    return data_term + l1_term + smooth_term;
}

double p1_objective(const ProblemInstance& inst, const DiagonalWeights& w, const Image& x1) {
    if (x1.n != inst.pattern.n)
        throw std::invalid_argument("p1_objective: shape mismatch");
    Measurement r(inst.y.n, inst.y.values - forward(inst.pattern, x1).values);
    return weighted_residual_energy(w, r) + inst.lambda1 * x1.data.lpNorm<1>();
}

SolveResult solve_coupled(const ProblemInstance& inst, const SolverConfig& cfg) {
    inst.pattern.validate();
    const int n = inst.pattern.n;
    const int N = n * n;

    auto unpack1 = [n](const Eigen::VectorXd& v) { return Image(n, v.head(n * n)); };
    auto unpack2 = [n](const Eigen::VectorXd& v) { return Image(n, v.tail(n * n)); };

    // Smooth part f(x1,x2) = 0.5||y - A(x1+x2)||^2 + (l2/2)||Lap x2||^2.
    auto grad = [&](const Eigen::VectorXd& v) {
        Image x1 = unpack1(v), x2 = unpack2(v);
        Image total(n, x1.data + x2.data);
        Measurement r(n, residual_values(inst, total));
        Image g_data = adjoint(inst.pattern, r);
        Image lap2 = laplacian_apply(laplacian_apply(x2));
        Eigen::VectorXd g(2 * N);
        g.head(N) = g_data.data;
        g.tail(N) = g_data.data + inst.lambda2 * lap2.data;
        return g;
    };
    auto objective = [&](const Eigen::VectorXd& v) {
        return composite_objective(inst, unpack1(v), unpack2(v));
    };

    auto hessian = [&](const Eigen::VectorXd& v) {
        Image x1 = unpack1(v), x2 = unpack2(v);
        Image total(n, x1.data + x2.data);
        Image h_data = adjoint(inst.pattern, forward(inst.pattern, total));
        Image lap2 = laplacian_apply(laplacian_apply(x2));
        Eigen::VectorXd h(2 * N);
        h.head(N) = h_data.data;
        h.tail(N) = h_data.data + inst.lambda2 * lap2.data;
        return h;
    };
    const double lipschitz = power_iteration(hessian, 2 * N, 300, 1e-6);
    const double step = cfg.step_safety / (lipschitz * 1.01);

    auto prox = [&, step](const Eigen::VectorXd& v) {
        Eigen::VectorXd out(2 * N);
        out.head(N) = soft_threshold(v.head(N), step * inst.lambda1);
        out.tail(N) = v.tail(N);
        return out;
    };

    ApgdResult run = apgd(grad, prox, objective, step, Eigen::VectorXd::Zero(2 * N), cfg);

    SolveResult res;
    res.x1 = unpack1(run.x);
    res.x2 = unpack2(run.x);
    res.fit = forward(inst.pattern, res.x1);
    res.trace = std::move(run.trace);
    res.status = run.status;
    return res;
}

SolveResult solve_decoupled(const ProblemInstance& inst, const SolverConfig& cfg,
                            const Image* x0) {
    inst.pattern.validate();
    const int n = inst.pattern.n;
    const int N = n * n;
    const DiagonalWeights w = build_weights(inst.pattern, inst.lambda2);

    auto grad = [&](const Eigen::VectorXd& v) {
        Image x1(n, v);
        Measurement r(n, forward(inst.pattern, x1).values - inst.y.values);
        for (int j = 0; j < r.size(); ++j) r.values[j] *= w.m_diag[j];
        return adjoint(inst.pattern, r).data;
    };
    auto objective = [&](const Eigen::VectorXd& v) {
        return p1_objective(inst, w, Image(n, v));
    };

    // ||A^H M A|| <= N * max(m_diag), tight in the diagonal Fourier case.
    const double lipschitz = static_cast<double>(N) * w.m_diag.maxCoeff();
    const double step = lipschitz > 0.0 ? cfg.step_safety / lipschitz : 1.0;
    auto prox = [&, step](const Eigen::VectorXd& v) {
        return soft_threshold(v, step * inst.lambda1);
    };

    Eigen::VectorXd start = x0 ? x0->data : Eigen::VectorXd::Zero(N);
    ApgdResult run = apgd(grad, prox, objective, step, std::move(start), cfg);

    SolveResult res;
    res.x1 = Image(n, std::move(run.x));
    res.fit = forward(inst.pattern, res.x1);
    Measurement residual(n, inst.y.values - res.fit.values);
    res.x2 = solve_smooth_closed_form(w, residual);
    res.trace = std::move(run.trace);
    res.status = run.status;
    return res;
}

}  // namespace sps
