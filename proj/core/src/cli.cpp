#include "sps/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>

#include "sps/io.hpp"
#include "sps/metrics.hpp"
#include "sps/operators.hpp"
#include "sps/reference.hpp"
#include "sps/representer.hpp"
#include "sps/simulate.hpp"
#include "sps/solvers.hpp"
#include "sps/tuning.hpp"

namespace sps::cli {

namespace {

// Sub-seeds for the independent random streams of one run.
std::uint64_t scene_seed(std::uint64_t s) { return s; }
std::uint64_t pattern_seed(std::uint64_t s) { return s + 0x9e3779b97f4a7c15ULL; }
std::uint64_t noise_seed(std::uint64_t s) { return s + 0x3c6ef372fe94f82aULL; }

struct InMemoryInstance {
    GroundTruth truth;
    ProblemInstance inst;
};

InMemoryInstance make_instance(int n, double fraction, double psnr_db, double sigma_freq,
                               double alpha1, double alpha2, std::uint64_t seed,
                               int k_spikes = -1, int n_blobs = -1) {
    SceneConfig scene = default_scene(n, scene_seed(seed));
    if (k_spikes >= 0) scene.k_spikes = k_spikes;
    if (n_blobs >= 0) scene.n_blobs = n_blobs;
    InMemoryInstance out;
    out.truth = gen_scene(scene);
    out.inst.pattern =
        gen_pattern(n, fraction, sigma_freq > 0 ? sigma_freq : n / 16.0, pattern_seed(seed));
    Image total(n, out.truth.x1_true.data + out.truth.x2_true.data);
    Measurement clean = forward(out.inst.pattern, total);
    out.inst.y = add_noise(out.inst.pattern, clean, psnr_db, noise_seed(seed));
    out.inst.lambda2 = lambda2_from_alpha(alpha2, n);
    out.inst.lambda1 = lambda1_from_alpha(alpha1, out.inst.pattern, out.inst.lambda2, out.inst.y);
    return out;
}

double solver_wall_seconds(const SolveResult& r) {
    return r.trace.empty() ? 0.0 : r.trace.back().seconds;
}

}  // namespace

double median(std::vector<double> v) {
    if (v.empty()) return std::nan("");
    std::sort(v.begin(), v.end());
    const size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

double iqr(std::vector<double> v) {
    if (v.empty()) return std::nan("");
    std::sort(v.begin(), v.end());
    auto quantile = [&](double q) {
        const double pos = q * (v.size() - 1);
        const size_t lo = static_cast<size_t>(pos);
        const size_t hi = std::min(lo + 1, v.size() - 1);
        return v[lo] + (pos - lo) * (v[hi] - v[lo]);
    };
    return quantile(0.75) - quantile(0.25);
}

int cmd_simulate(const SimulateOptions& opt) {
    try {
        if (opt.n <= 2 || opt.fraction <= 0.0 || opt.fraction > 1.0) {
            std::cerr << "simulate: invalid --n or --fraction\n";
            return kExitUsage;
        }
        std::filesystem::create_directories(opt.out_dir);

        SceneConfig scene = default_scene(opt.n, scene_seed(opt.seed));
        if (opt.k_spikes >= 0) scene.k_spikes = opt.k_spikes;
        if (opt.n_blobs >= 0) scene.n_blobs = opt.n_blobs;
        const double sigma_freq = opt.sigma_freq > 0 ? opt.sigma_freq : opt.n / 16.0;

        GroundTruth truth = gen_scene(scene);
        SamplingPattern pattern =
            gen_pattern(opt.n, opt.fraction, sigma_freq, pattern_seed(opt.seed));
        Image total(opt.n, truth.x1_true.data + truth.x2_true.data);
        Measurement y =
            add_noise(pattern, forward(pattern, total), opt.psnr_db, noise_seed(opt.seed));

        write_grid(opt.out_dir / "x1_true.grid", truth.x1_true);
        write_grid(opt.out_dir / "x2_true.grid", truth.x2_true);
        write_pattern(opt.out_dir / "pattern.pat", pattern);
        write_measurement(opt.out_dir / "y.meas", pattern, y);
        if (opt.plot) {
            write_pgm(opt.out_dir / "x1_true.pgm", truth.x1_true);
            write_pgm(opt.out_dir / "x2_true.pgm", truth.x2_true);
        }

        Manifest manifest{
            {"n", std::to_string(opt.n)},
            {"L", std::to_string(pattern.size())},
            {"seed", std::to_string(opt.seed)},
            {"fraction", format_full(opt.fraction)},
            {"psnr_db", format_full(opt.psnr_db)},
            {"sigma_freq", format_full(sigma_freq)},
            {"k_spikes", std::to_string(scene.k_spikes)},
            {"n_blobs", std::to_string(scene.n_blobs)},
        };
        write_manifest(opt.out_dir / "manifest.txt", manifest);
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "simulate: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_solve(const SolveOptions& opt) {
    SamplingPattern pattern;
    Measurement y;
    std::map<std::string, std::string> manifest;
    try {
        pattern = read_pattern(opt.in_dir / "pattern.pat");
        y = read_measurement(opt.in_dir / "y.meas", pattern);
        manifest = read_manifest(opt.in_dir / "manifest.txt");
        if (opt.method != "coupled" && opt.method != "decoupled") {
            std::cerr << "solve: --method must be coupled or decoupled\n";
            return kExitUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << "solve: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        ProblemInstance inst;
        inst.pattern = pattern;
        inst.y = y;
        inst.lambda2 = lambda2_from_alpha(opt.alpha2, pattern.n);
        inst.lambda1 = lambda1_from_alpha(opt.alpha1, pattern, inst.lambda2, y);

        SolverConfig cfg;
        cfg.rel_tol = opt.rel_tol;
        cfg.max_iter = opt.max_iter;
        SolveResult result = opt.method == "coupled" ? solve_coupled(inst, cfg)
                                                     : solve_decoupled(inst, cfg);

        const auto out_dir = opt.out_dir.empty() ? opt.in_dir : opt.out_dir;
        std::filesystem::create_directories(out_dir);
        write_grid(out_dir / "x1_hat.grid", result.x1);
        write_grid(out_dir / "x2_hat.grid", result.x2);
        write_trace_csv(out_dir / "trace.csv", result.trace);
        if (opt.plot) {
            write_pgm(out_dir / "x1_hat.pgm", result.x1);
            write_pgm(out_dir / "x2_hat.pgm", result.x2);
        }

        Manifest report;
        for (const auto& [k, v] : manifest) report.emplace_back(k, v);
        report.emplace_back("method", opt.method);
        report.emplace_back("alpha1", format_full(opt.alpha1));
        report.emplace_back("alpha2", format_full(opt.alpha2));
        report.emplace_back("lambda1", format_full(inst.lambda1));
        report.emplace_back("lambda2", format_full(inst.lambda2));
        report.emplace_back("rel_tol", format_full(opt.rel_tol));
        report.emplace_back("max_iter", std::to_string(opt.max_iter));
        report.emplace_back("rho", format_full(opt.rho));
        report.emplace_back(
            "status", result.status == SolveStatus::Converged ? "converged" : "max-iter-reached");
        report.emplace_back("composite_objective",
                            format_full(composite_objective(inst, result.x1, result.x2)));

        const auto x1_true_path = opt.in_dir / "x1_true.grid";
        if (std::filesystem::exists(x1_true_path)) {
            GroundTruth truth;
            truth.x1_true = read_grid(x1_true_path);
            truth.x2_true = read_grid(opt.in_dir / "x2_true.grid");
            for (int i = 0; i < truth.x1_true.data.size(); ++i)
                if (truth.x1_true.data[i] != 0.0) truth.support_true.push_back(i);
            EvalReport eval = evaluate(result, truth, opt.rho);
            report.emplace_back("jaccard", format_full(eval.jaccard));
            report.emplace_back("rel_l2_smooth", format_full(eval.rel_l2_smooth));
            report.emplace_back("rel_l2_total", format_full(eval.rel_l2_total));
            report.emplace_back("wall_seconds", format_full(eval.wall_seconds));
            report.emplace_back("iterations", std::to_string(eval.iterations));
        } else {
            report.emplace_back("wall_seconds", format_full(solver_wall_seconds(result)));
            report.emplace_back("iterations",
                                std::to_string(result.trace.empty()
                                                   ? 0
                                                   : result.trace.back().iteration));
        }
        write_manifest(out_dir / "report.txt", report);
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "solve: " << e.what() << '\n';
        return kExitNumerical;
    }
}

int cmd_bench(const BenchOptions& opt) {
    if (opt.sizes.empty() || opt.trials <= 0) {
        std::cerr << "bench: need --sizes and positive --trials\n";
        return kExitUsage;
    }
    std::ofstream csv(opt.out_csv);
    if (!csv) {
        std::cerr << "bench: cannot open " << opt.out_csv << '\n';
        return kExitUsage;
    }
    csv << "size,method,median_seconds,iqr_seconds,median_iters\n";

    for (int n : opt.sizes) {
        std::vector<double> secs_coupled, secs_decoupled, it_coupled, it_decoupled;
        for (int trial = 0; trial < opt.trials; ++trial) {
            const std::uint64_t seed = opt.seed + 1000ULL * trial + static_cast<std::uint64_t>(n);
            try {
                InMemoryInstance im = make_instance(n, opt.fraction, opt.psnr_db, -1.0,
                                                    opt.alpha1, opt.alpha2, seed);
                SolverConfig cfg;
                cfg.rel_tol = opt.rel_tol;
                cfg.max_iter = opt.max_iter;
                // Timing covers the solver only (weight construction and the
                // closed-form x2 included for the decoupled path).
                SolveResult rc = solve_coupled(im.inst, cfg);
                SolveResult rd = solve_decoupled(im.inst, cfg);
                secs_coupled.push_back(solver_wall_seconds(rc));
                it_coupled.push_back(rc.trace.back().iteration);
                secs_decoupled.push_back(solver_wall_seconds(rd));
                it_decoupled.push_back(rd.trace.back().iteration);
            } catch (const std::exception& e) {
                std::cerr << "bench: size " << n << " trial " << trial << " failed: " << e.what()
                          << '\n';
            }
        }
        csv << n << ",coupled," << format_full(median(secs_coupled)) << ','
            << format_full(iqr(secs_coupled)) << ',' << format_full(median(it_coupled)) << '\n';
        csv << n << ",decoupled," << format_full(median(secs_decoupled)) << ','
            << format_full(iqr(secs_decoupled)) << ',' << format_full(median(it_decoupled))
            << '\n';
    }
    return kExitOk;
}

int cmd_check(const CheckOptions& opt) {
    if (opt.n > 16 || opt.n < 3) {
        std::cerr << "check: --n must be in [3, 16]\n";
        return kExitUsage;
    }
    bool all_pass = true;
    auto report = [&](const std::string& name, bool pass) {
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << name << '\n';
        all_pass = all_pass && pass;
    };

    try {
        SamplingPattern pattern =
            gen_pattern(opt.n, opt.fraction, opt.n / 16.0, pattern_seed(opt.seed));
        if (opt.drop_dc)
            std::erase(pattern.indices, std::make_pair(0, 0));

        FourierDense fd = fourier_dense_problem(pattern);
        report("assumption 1 (full row rank)", check_assumption1(fd.problem));
        const bool a2 = check_assumption2(fd.problem);
        report("assumption 2 (trivial nullspace intersection)", a2);
        bool a3 = false;
        if (check_assumption1(fd.problem)) a3 = check_assumption3(fd.problem);
        report("assumption 3 (invariant subspace)", a3);

        for (double lambda2 : {0.1, 1.0, 10.0}) {
            const double res = decoupling_identity_residual(fd.problem, lambda2);
            report("decoupling identity residual <= 1e-10 (lambda2=" + format_full(lambda2) +
                       ", got " + format_full(res) + ")",
                   res <= 1e-10);
        }

        if (a2) {
            const double lambda2 = 1.0;
            const DiagonalWeights w = build_weights(pattern, lambda2);
            const Eigen::MatrixXd m_dense = dense_m_matrix(fd.problem, lambda2);
            double diag_err = 0.0, offdiag = 0.0;
            for (int r = 0; r < m_dense.rows(); ++r) {
                diag_err = std::max(diag_err,
                                    std::abs(m_dense(r, r) - w.m_diag[fd.row_to_index[r]]));
                for (int c = 0; c < m_dense.cols(); ++c)
                    if (c != r) offdiag = std::max(offdiag, std::abs(m_dense(r, c)));
            }
            report("dense M is diagonal (off-diag " + format_full(offdiag) + ")",
                   offdiag <= 1e-8);
            report("fast m_diag matches dense M (err " + format_full(diag_err) + ")",
                   diag_err <= 1e-8);

            // Fast closed-form x2 against the dense normal equations.
            Rng rng(opt.seed + 7);
            Image x1 = Image::zero(opt.n);
            for (int i = 0; i < x1.size(); ++i) x1.data[i] = rng.normal();
            Image truth_total = Image::zero(opt.n);
            for (int i = 0; i < truth_total.size(); ++i) truth_total.data[i] = rng.normal();
            Measurement y = forward(pattern, truth_total);
            Measurement residual(y.n, y.values - forward(pattern, x1).values);
            Image x2_fast = solve_smooth_closed_form(w, residual);
            Eigen::VectorXd x2_dense =
                dense_smooth_solve(fd.problem, lambda2, x1.data,
                                   compress_measurement(fd, pattern, y));
            const double rel =
                (x2_fast.data - x2_dense).norm() / std::max(x2_dense.norm(), 1e-300);
            report("fast x2 matches dense solve (rel err " + format_full(rel) + ")", rel <= 1e-8);
        }
    } catch (const std::exception& e) {
        std::cerr << "check: " << e.what() << '\n';
        return kExitNumerical;
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace sps::cli
