#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "sps/types.hpp"

namespace sps {

/// Synthetic scene parameters: bright isolated pixels over a low-intensity
/// smooth background of wrapped Gaussians.
struct SceneConfig {
    int n = 0;
    int k_spikes = 0;
    std::pair<double, double> spike_amp{15.0, 30.0};
    int n_blobs = 8;
    std::pair<double, double> blob_sigma{0.0, 0.0};
    std::pair<double, double> blob_amp{2.2, 3.2};
    std::uint64_t seed = 0;
};

/// Default regime: k_spikes = round(0.002 n^2), blob_sigma = (n/16, n/4).
SceneConfig default_scene(int n, std::uint64_t seed);

struct GroundTruth {
    Image x1_true;
    Image x2_true;
    std::vector<int> support_true;  // sorted flat pixel indices of x1_true
};

GroundTruth gen_scene(const SceneConfig& cfg);

/// Heterogeneous frequency sampling: target L = round(fraction * n^2 / 2)
/// indices, half drawn from a 2-D Gaussian of std sigma_freq around DC and
/// half uniform, closed under conjugate mirroring, DC always included.
/// Final L is target or target + 1 (parity of the symmetric closure).
SamplingPattern gen_pattern(int n, double fraction, double sigma_freq, std::uint64_t seed);

/// Additive complex white noise at the given peak SNR:
/// 10*log10(max_j |y_j|^2 / (2 sigma^2)) = psnr_db, per-component std sigma.
/// Generated on a half-spectrum and mirror-conjugated, so the output stays
/// hermitian-consistent (self-mirrored entries get real noise of matching
/// power). Errors on an all-zero measurement.
Measurement add_noise(const SamplingPattern& pattern, const Measurement& y, double psnr_db,
                      std::uint64_t seed);

/// Seeded generator v1: mt19937_64 with explicit uniform (53-bit mantissa)
/// and Box-Muller normal draws, so fixed seeds reproduce across platforms.
/// (std::mt19937_64 is bit-exact by the standard; only the distribution
/// transforms needed pinning.)
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next_u64() { return engine_(); }
    double uniform();                      // [0, 1)
    double uniform(double lo, double hi);  // [lo, hi)
    double normal();                       // standard normal, Box-Muller
    int uniform_int(int bound);            // [0, bound), rejection-sampled

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace sps
