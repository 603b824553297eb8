#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace sps::cli {

// Exit-code contract: 0 success, 1 usage error, 2 numerical failure,
// 3 check failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitCheckFailed = 3;

struct SimulateOptions {
    int n = 128;
    double fraction = 0.3;
    double psnr_db = 20.0;
    std::uint64_t seed = 0;
    std::filesystem::path out_dir;
    double sigma_freq = -1.0;  // < 0: default n/16
    // Scene overrides; < 0 means default_scene values.
    int k_spikes = -1;
    int n_blobs = -1;
    bool plot = false;
};

struct SolveOptions {
    std::filesystem::path in_dir;   // output of cmd_simulate
    std::filesystem::path out_dir;  // defaults to in_dir
    std::string method = "decoupled";
    double alpha1 = 0.08;
    double alpha2 = 0.5;
    double rel_tol = 1e-6;
    int max_iter = 10000;
    double rho = 0.05;
    bool plot = false;
};

struct BenchOptions {
    std::vector<int> sizes;
    int trials = 20;
    std::uint64_t seed = 0;
    double fraction = 0.3;
    double psnr_db = 20.0;
    double alpha1 = 0.08;
    double alpha2 = 0.5;
    double rel_tol = 1e-6;
    int max_iter = 10000;
    std::filesystem::path out_csv = "bench.csv";
};

struct CheckOptions {
    int n = 8;
    std::uint64_t seed = 0;
    double fraction = 0.5;
    bool drop_dc = false;  // test-only: violate "DC sampled" on purpose
};

/// Writes x1_true.grid, x2_true.grid, pattern.pat, y.meas, manifest.txt.
int cmd_simulate(const SimulateOptions& opt);

/// Writes x1_hat.grid, x2_hat.grid, trace.csv, report.txt.
int cmd_solve(const SolveOptions& opt);

/// Writes bench.csv: size,method,median_seconds,iqr_seconds,median_iters.
int cmd_bench(const BenchOptions& opt);

/// Dense oracle suite: assumption checks, decoupling-identity residual,
/// fast-vs-dense comparisons. Prints one pass/fail line per check.
int cmd_check(const CheckOptions& opt);

/// Median and interquartile range of a sample (used by cmd_bench; exposed
/// for tests).
double median(std::vector<double> values);
double iqr(std::vector<double> values);

}  // namespace sps::cli
