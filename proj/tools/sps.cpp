// Command-line front end: simulate | solve | bench | check.
#include <CLI11.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "sps/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Sparse-plus-smooth composite inverse problems with partial Fourier sampling"};
    app.require_subcommand(1);

    sps::cli::SimulateOptions sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Generate a synthetic problem directory");
    sim_cmd->add_option("--n", sim.n, "Image side length")->capture_default_str();
    sim_cmd->add_option("--fraction", sim.fraction, "Sampling budget as a fraction of n^2/2")
        ->capture_default_str();
    sim_cmd->add_option("--psnr", sim.psnr_db, "Measurement PSNR in dB")->capture_default_str();
    sim_cmd->add_option("--seed", sim.seed, "Random seed")->capture_default_str();
    sim_cmd->add_option("--out", sim.out_dir, "Output directory")->required();
    sim_cmd->add_option("--sigma-freq", sim.sigma_freq,
                        "Std of the Gaussian frequency draw (default n/16)");
    sim_cmd->add_option("--k-spikes", sim.k_spikes, "Sparse source count override");
    sim_cmd->add_option("--n-blobs", sim.n_blobs, "Smooth blob count override");
    sim_cmd->add_flag("--plot", sim.plot, "Also write PGM renderings of the grids");

    sps::cli::SolveOptions sol;
    auto* sol_cmd = app.add_subcommand("solve", "Solve a simulated problem directory");
    sol_cmd->add_option("--in", sol.in_dir, "Input directory from `simulate`")->required();
    sol_cmd->add_option("--out", sol.out_dir, "Output directory (default: input directory)");
    sol_cmd->add_option("--method", sol.method, "coupled | decoupled")->capture_default_str();
    sol_cmd->add_option("--alpha1", sol.alpha1, "lambda1 = alpha1 * lambda1_max")
        ->capture_default_str();
    sol_cmd->add_option("--alpha2", sol.alpha2, "lambda2 = alpha2 * n^2 / 64")
        ->capture_default_str();
    sol_cmd->add_option("--rel-tol", sol.rel_tol, "Relative-change stopping tolerance")
        ->capture_default_str();
    sol_cmd->add_option("--max-iter", sol.max_iter, "Iteration cap")->capture_default_str();
    sol_cmd->add_option("--rho", sol.rho, "Support threshold for the Jaccard index")
        ->capture_default_str();
    sol_cmd->add_flag("--plot", sol.plot, "Also write PGM renderings of the reconstructions");

    sps::cli::BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Median solver timings over repeated trials");
    bench_cmd->add_option("--sizes", bench.sizes, "Image sizes to benchmark")->required();
    bench_cmd->add_option("--trials", bench.trials, "Trials per size")->capture_default_str();
    bench_cmd->add_option("--seed", bench.seed, "Base seed")->capture_default_str();
    bench_cmd->add_option("--fraction", bench.fraction, "Sampling fraction")
        ->capture_default_str();
    bench_cmd->add_option("--psnr", bench.psnr_db, "Measurement PSNR in dB")
        ->capture_default_str();
    bench_cmd->add_option("--alpha1", bench.alpha1, "Sparse regularization knob")
        ->capture_default_str();
    bench_cmd->add_option("--alpha2", bench.alpha2, "Smooth regularization knob")
        ->capture_default_str();
    bench_cmd->add_option("--rel-tol", bench.rel_tol, "Stopping tolerance")
        ->capture_default_str();
    bench_cmd->add_option("--max-iter", bench.max_iter, "Iteration cap")->capture_default_str();
    bench_cmd->add_option("--out", bench.out_csv, "Output CSV path")->capture_default_str();

    sps::cli::CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Dense-oracle validation suite");
    check_cmd->add_option("--n", check.n, "Image side length (<= 16)")->capture_default_str();
    check_cmd->add_option("--seed", check.seed, "Pattern seed")->capture_default_str();
    check_cmd->add_option("--fraction", check.fraction, "Sampling fraction")
        ->capture_default_str();
    check_cmd->add_flag("--drop-dc", check.drop_dc,
                        "Remove DC from the pattern (assumption-violation demo)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : sps::cli::kExitUsage;
    }

    if (sim_cmd->parsed()) return sps::cli::cmd_simulate(sim);
    if (sol_cmd->parsed()) return sps::cli::cmd_solve(sol);
    if (bench_cmd->parsed()) return sps::cli::cmd_bench(bench);
    if (check_cmd->parsed()) return sps::cli::cmd_check(check);
    return sps::cli::kExitUsage;
}
