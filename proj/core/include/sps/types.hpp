#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace sps {

using Complex = std::complex<double>;

/// Real-valued n-by-n image, stored row-major in a flat vector of length n^2.
struct Image {
    int n = 0;
    Eigen::VectorXd data;

    Image() = default;
    Image(int side, Eigen::VectorXd values) : n(side), data(std::move(values)) {}

    static Image zero(int side) { return Image(side, Eigen::VectorXd::Zero(side * side)); }

    double& at(int row, int col) { return data[row * n + col]; }
    double at(int row, int col) const { return data[row * n + col]; }
    int size() const { return n * n; }
};

/// Complex n-by-n spectrum, same row-major layout as Image.
struct Spectrum {
    int n = 0;
    Eigen::VectorXcd data;

    Spectrum() = default;
    Spectrum(int side, Eigen::VectorXcd values) : n(side), data(std::move(values)) {}

    Complex& at(int row, int col) { return data[row * n + col]; }
    Complex at(int row, int col) const { return data[row * n + col]; }
};

/// Ordered set of sampled 2-D frequency indices (k, l), 0 <= k, l < n.
/// Valid patterns contain DC and are closed under conjugate mirroring
/// (k, l) -> ((n-k) mod n, (n-l) mod n).
struct SamplingPattern {
    int n = 0;
    std::vector<std::pair<int, int>> indices;

    int size() const { return static_cast<int>(indices.size()); }

    std::pair<int, int> mirror(int j) const {
        auto [k, l] = indices[j];
        return {(n - k) % n, (n - l) % n};
    }

    bool self_mirrored(int j) const { return mirror(j) == indices[j]; }

    /// Position of each index's conjugate mirror within the pattern.
    std::vector<int> mirror_positions() const;

    /// Throws std::invalid_argument if any pattern invariant is violated.
    void validate() const;
};

/// Sampled complex measurements aligned with a SamplingPattern's index order.
struct Measurement {
    int n = 0;
    Eigen::VectorXcd values;

    Measurement() = default;
    Measurement(int side, Eigen::VectorXcd v) : n(side), values(std::move(v)) {}

    int size() const { return static_cast<int>(values.size()); }
};

}  // namespace sps
