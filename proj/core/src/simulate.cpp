#include "sps/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "sps/operators.hpp"

namespace sps {

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

int Rng::uniform_int(int bound) {
    if (bound <= 0) throw std::invalid_argument("uniform_int: bound must be positive");
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return static_cast<int>(v % b);
}

SceneConfig default_scene(int n, std::uint64_t seed) {
    SceneConfig cfg;
    cfg.n = n;
    // Calibrated against the n=128, 30% sampling, 20 dB regime: few bright
    // spikes over two moderate blobs whose spectra stay inside the densely
    // sampled low-frequency disc. Denser spikes or wide high-mass blobs push
    // the measurement peak (which sets the noise scale) far above the smooth
    // content and make the recovered background noise-dominated.
    cfg.k_spikes = std::max(1, static_cast<int>(std::lround(n * n / 4096.0)));
    cfg.n_blobs = 2;
    cfg.blob_sigma = {n / 64.0, 1.2 * n / 64.0};
    cfg.seed = seed;
    return cfg;
}

GroundTruth gen_scene(const SceneConfig& cfg) {
    const int n = cfg.n;
    if (n <= 0) throw std::invalid_argument("gen_scene: n must be positive");
    if (cfg.k_spikes > n * n) throw std::invalid_argument("gen_scene: k_spikes > n^2");
    Rng rng(cfg.seed);

    GroundTruth gt;
    gt.x1_true = Image::zero(n);
    gt.x2_true = Image::zero(n);

    std::set<int> placed;
    while (static_cast<int>(placed.size()) < cfg.k_spikes) {
        const int pix = rng.uniform_int(n * n);
        if (!placed.insert(pix).second) continue;
        const double mag = rng.uniform(cfg.spike_amp.first, cfg.spike_amp.second);
        const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
        gt.x1_true.data[pix] = sign * mag;
    }
    gt.support_true.assign(placed.begin(), placed.end());

    for (int b = 0; b < cfg.n_blobs; ++b) {
        const double cx = rng.uniform(0.0, n);
        const double cy = rng.uniform(0.0, n);
        const double sigma = rng.uniform(cfg.blob_sigma.first, cfg.blob_sigma.second);
        const double amp = (rng.uniform() < 0.5 ? -1.0 : 1.0) *
                           rng.uniform(cfg.blob_amp.first, cfg.blob_amp.second);
        // Wrapped Gaussian: sum over the 3x3 periodic shifts.
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                double val = 0.0;
                for (int sr = -1; sr <= 1; ++sr)
                    for (int sc = -1; sc <= 1; ++sc) {
                        const double dr = r + sr * n - cx;
                        const double dc = c + sc * n - cy;
                        val += std::exp(-(dr * dr + dc * dc) / (2.0 * sigma * sigma));
                    }
                gt.x2_true.at(r, c) += amp * val;
            }
    }
    return gt;
}

SamplingPattern gen_pattern(int n, double fraction, double sigma_freq, std::uint64_t seed) {
    if (fraction <= 0.0 || fraction > 1.0)
        throw std::invalid_argument("gen_pattern: fraction must be in (0, 1]");
    const int target = static_cast<int>(std::lround(fraction * n * n / 2.0));
    if (target < 1) throw std::invalid_argument("gen_pattern: resulting L < 1");
    Rng rng(seed);

    std::set<std::pair<int, int>> chosen;
    chosen.insert({0, 0});
    int gauss_count = 0, uniform_count = 0;
    while (static_cast<int>(chosen.size()) < target) {
        const bool use_gauss = gauss_count <= uniform_count;
        int k, l;
        if (use_gauss) {
            // Rejection-sample rounded Gaussian offsets into the grid.
            long gk, gl;
            do {
                gk = std::lround(sigma_freq * rng.normal());
                gl = std::lround(sigma_freq * rng.normal());
            } while (std::abs(gk) >= n || std::abs(gl) >= n);
            k = static_cast<int>((gk % n + n) % n);
            l = static_cast<int>((gl % n + n) % n);
        } else {
            k = rng.uniform_int(n);
            l = rng.uniform_int(n);
        }
        if (!chosen.insert({k, l}).second) continue;  // duplicate: redraw
        const std::pair<int, int> mir{(n - k) % n, (n - l) % n};
        const bool self = mir == std::make_pair(k, l);
        if (!self) {
            chosen.insert(mir);
            (use_gauss ? gauss_count : uniform_count)++;
        }
    }

    SamplingPattern pattern;
    pattern.n = n;
    pattern.indices.assign(chosen.begin(), chosen.end());
    pattern.validate();
    return pattern;
}

Measurement add_noise(const SamplingPattern& pattern, const Measurement& y, double psnr_db,
                      std::uint64_t seed) {
    if (y.n != pattern.n || y.size() != pattern.size())
        throw std::invalid_argument("add_noise: alignment mismatch");
    const double peak = y.values.cwiseAbs().maxCoeff();
    if (peak == 0.0) throw std::invalid_argument("add_noise: zero measurement, PSNR undefined");
    // 10*log10(peak^2 / (2 sigma^2)) = psnr_db.
    const double sigma = peak * std::pow(10.0, -psnr_db / 20.0) / std::sqrt(2.0);
    Rng rng(seed);

    const auto mirrors = pattern.mirror_positions();
    Measurement out(y.n, y.values);
    for (int j = 0; j < pattern.size(); ++j) {
        if (pattern.self_mirrored(j)) {
            // Real entry: real noise with the full 2 sigma^2 per-sample power.
            out.values[j] += sigma * std::sqrt(2.0) * rng.normal();
        } else if (j < mirrors[j]) {
            const Complex noise(sigma * rng.normal(), sigma * rng.normal());
            out.values[j] += noise;
            out.values[mirrors[j]] += std::conj(noise);
        }
    }
    return out;
}

}  // namespace sps
