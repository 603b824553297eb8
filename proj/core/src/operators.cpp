#include "sps/operators.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <set>
#include <stdexcept>

namespace sps {

namespace {

// FFTW plans are cached per grid size; planning is not thread-safe so the
// cache is mutex-guarded. Execution via fftw_execute_dft on fftw_malloc'd
// buffers is safe concurrently.
struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

PlanPair& plans_for(int n) {
    static std::mutex mtx;
    static std::map<int, PlanPair> cache;
    std::lock_guard lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    fftw_complex* buf = fftw_alloc_complex(static_cast<size_t>(n) * n);
    PlanPair p;
    p.fwd = fftw_plan_dft_2d(n, n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    p.bwd = fftw_plan_dft_2d(n, n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_free(buf);
    return cache.emplace(n, p).first->second;
}

struct FftwBuffer {
    fftw_complex* data;
    explicit FftwBuffer(int count) : data(fftw_alloc_complex(count)) {}
    ~FftwBuffer() { fftw_free(data); }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;
};

}  // namespace

void SamplingPattern::validate() const {
    if (n <= 0) throw std::invalid_argument("pattern: n must be positive");
    if (indices.empty()) throw std::invalid_argument("pattern: empty index set");
    std::set<std::pair<int, int>> seen;
    for (auto [k, l] : indices) {
        if (k < 0 || k >= n || l < 0 || l >= n)
            throw std::invalid_argument("pattern: index out of range");
        if (!seen.insert({k, l}).second)
            throw std::invalid_argument("pattern: duplicate index");
    }
    if (!seen.count({0, 0})) throw std::invalid_argument("pattern: DC not sampled");
    for (auto [k, l] : indices)
        if (!seen.count({(n - k) % n, (n - l) % n}))
            throw std::invalid_argument("pattern: not conjugate-symmetric");
}

std::vector<int> SamplingPattern::mirror_positions() const {
    std::map<std::pair<int, int>, int> pos;
    for (int j = 0; j < size(); ++j) pos[indices[j]] = j;
    std::vector<int> out(size());
    for (int j = 0; j < size(); ++j) {
        auto it = pos.find(mirror(j));
        if (it == pos.end())
            throw std::invalid_argument("pattern: not conjugate-symmetric");
        out[j] = it->second;
    }
    return out;
}

Spectrum dft2(const Image& image) {
    const int n = image.n;
    const int N = n * n;
    FftwBuffer buf(N);
    for (int i = 0; i < N; ++i) {
        buf.data[i][0] = image.data[i];
        buf.data[i][1] = 0.0;
    }
    fftw_execute_dft(plans_for(n).fwd, buf.data, buf.data);
    Spectrum out(n, Eigen::VectorXcd(N));
    for (int i = 0; i < N; ++i) out.data[i] = Complex(buf.data[i][0], buf.data[i][1]);
    return out;
}

Image idft2_real(const Spectrum& spectrum) {
    const int n = spectrum.n;
    const int N = n * n;
    FftwBuffer buf(N);
    for (int i = 0; i < N; ++i) {
        buf.data[i][0] = spectrum.data[i].real();
        buf.data[i][1] = spectrum.data[i].imag();
    }
    fftw_execute_dft(plans_for(n).bwd, buf.data, buf.data);
    Image out(n, Eigen::VectorXd(N));
    for (int i = 0; i < N; ++i) out.data[i] = buf.data[i][0];
    return out;
}

Measurement forward(const SamplingPattern& pattern, const Image& image) {
    if (pattern.n != image.n)
        throw std::invalid_argument("forward: pattern/image size mismatch");
    Spectrum spec = dft2(image);
    Measurement out(pattern.n, Eigen::VectorXcd(pattern.size()));
    for (int j = 0; j < pattern.size(); ++j) {
        auto [k, l] = pattern.indices[j];
        out.values[j] = spec.at(k, l);
    }
    return out;
}

Image adjoint(const SamplingPattern& pattern, const Measurement& meas) {
    if (pattern.n != meas.n || pattern.size() != meas.size())
        throw std::invalid_argument("adjoint: pattern/measurement mismatch");
    Spectrum zero_filled(pattern.n, Eigen::VectorXcd::Zero(pattern.n * pattern.n));
    for (int j = 0; j < pattern.size(); ++j) {
        auto [k, l] = pattern.indices[j];
        zero_filled.at(k, l) += meas.values[j];
    }
    return idft2_real(zero_filled);
}

Image laplacian_apply(const Image& image) {
    const int n = image.n;
    if (n < 3) throw std::invalid_argument("laplacian_apply: n must be >= 3");
    Image out = Image::zero(n);
    for (int r = 0; r < n; ++r) {
        const int up = (r + n - 1) % n, down = (r + 1) % n;
        for (int c = 0; c < n; ++c) {
            const int left = (c + n - 1) % n, right = (c + 1) % n;
            out.at(r, c) = image.at(up, c) + image.at(down, c) + image.at(r, left) +
                           image.at(r, right) - 4.0 * image.at(r, c);
        }
    }
    return out;
}

Eigen::VectorXd laplacian_symbol(int n) {
    if (n < 3) throw std::invalid_argument("laplacian_symbol: n must be >= 3");
    Eigen::VectorXd out(n * n);
    const double w = 2.0 * std::numbers::pi / n;
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            out[k * n + l] = 2.0 * std::cos(w * k) + 2.0 * std::cos(w * l) - 4.0;
    return out;
}

Eigen::MatrixXd materialize_dense(const SamplingPattern& pattern) {
    const int n = pattern.n;
    if (n > 32) throw std::invalid_argument("materialize_dense: n > 32 guard");
    const int N = n * n;
    const int L = pattern.size();
    Eigen::MatrixXd D(2 * L, N);
    const double w = 2.0 * std::numbers::pi / n;
    for (int j = 0; j < L; ++j) {
        auto [k, l] = pattern.indices[j];
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const double phase = w * (static_cast<double>(k) * a + static_cast<double>(l) * b);
                D(j, a * n + b) = std::cos(phase);
                D(L + j, a * n + b) = -std::sin(phase);
            }
    }
    return D;
}

bool hermitian_consistent(const SamplingPattern& pattern, const Measurement& meas,
                          double tol) {
    if (pattern.n != meas.n || pattern.size() != meas.size()) return false;
    const auto mirrors = pattern.mirror_positions();
    const double scale = std::max(1.0, meas.values.cwiseAbs().maxCoeff());
    for (int j = 0; j < pattern.size(); ++j) {
        const Complex diff = meas.values[j] - std::conj(meas.values[mirrors[j]]);
        if (std::abs(diff) > tol * scale) return false;
    }
    return true;
}

}  // namespace sps
