#include "sps/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sps {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
    return in;
}

}  // namespace

std::string format_full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_grid(const std::filesystem::path& path, const Image& image) {
    auto out = open_out(path);
    out << image.n << ' ' << image.n << '\n';
    for (int r = 0; r < image.n; ++r) {
        for (int c = 0; c < image.n; ++c)
            out << (c ? " " : "") << format_full(image.at(r, c));
        out << '\n';
    }
}

Image read_grid(const std::filesystem::path& path) {
    auto in = open_in(path);
    int n1 = 0, n2 = 0;
    if (!(in >> n1 >> n2) || n1 != n2 || n1 <= 0)
        throw std::runtime_error("malformed .grid header: " + path.string());
    Image img = Image::zero(n1);
    for (int i = 0; i < n1 * n1; ++i)
        if (!(in >> img.data[i])) throw std::runtime_error("truncated .grid: " + path.string());
    return img;
}

void write_pattern(const std::filesystem::path& path, const SamplingPattern& pattern) {
    auto out = open_out(path);
    out << pattern.n << ' ' << pattern.size() << '\n';
    for (auto [k, l] : pattern.indices) out << k << ' ' << l << '\n';
}

SamplingPattern read_pattern(const std::filesystem::path& path) {
    auto in = open_in(path);
    int n = 0, L = 0;
    if (!(in >> n >> L) || n <= 0 || L <= 0)
        throw std::runtime_error("malformed .pat header: " + path.string());
    SamplingPattern pattern;
    pattern.n = n;
    pattern.indices.resize(L);
    for (auto& [k, l] : pattern.indices)
        if (!(in >> k >> l)) throw std::runtime_error("truncated .pat: " + path.string());
    pattern.validate();
    return pattern;
}

void write_measurement(const std::filesystem::path& path, const SamplingPattern& pattern,
                       const Measurement& meas) {
    if (pattern.size() != meas.size() || pattern.n != meas.n)
        throw std::invalid_argument("write_measurement: alignment mismatch");
    auto out = open_out(path);
    out << pattern.n << ' ' << pattern.size() << '\n';
    for (int j = 0; j < pattern.size(); ++j) {
        auto [k, l] = pattern.indices[j];
        out << k << ' ' << l << ' ' << format_full(meas.values[j].real()) << ' '
            << format_full(meas.values[j].imag()) << '\n';
    }
}

Measurement read_measurement(const std::filesystem::path& path, const SamplingPattern& pattern) {
    auto in = open_in(path);
    int n = 0, L = 0;
    if (!(in >> n >> L)) throw std::runtime_error("malformed .meas header: " + path.string());
    if (n != pattern.n || L != pattern.size())
        throw std::runtime_error(".meas does not match pattern: " + path.string());
    Measurement meas(n, Eigen::VectorXcd(L));
    for (int j = 0; j < L; ++j) {
        int k, l;
        double re, im;
        if (!(in >> k >> l >> re >> im))
            throw std::runtime_error("truncated .meas: " + path.string());
        if (std::make_pair(k, l) != pattern.indices[j])
            throw std::runtime_error(".meas index order differs from pattern: " + path.string());
        meas.values[j] = Complex(re, im);
    }
    return meas;
}

void write_manifest(const std::filesystem::path& path, const Manifest& manifest) {
    auto out = open_out(path);
    for (const auto& [key, value] : manifest) out << key << '=' << value << '\n';
}

std::map<std::string, std::string> read_manifest(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::map<std::string, std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("malformed manifest line: " + line);
        out[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return out;
}

void write_trace_csv(const std::filesystem::path& path, const std::vector<TracePoint>& trace) {
    auto out = open_out(path);
    out << "iteration,objective,seconds\n";
    for (const auto& p : trace)
        out << p.iteration << ',' << format_full(p.objective) << ',' << format_full(p.seconds)
            << '\n';
}

void write_pgm(const std::filesystem::path& path, const Image& image) {
    auto out = open_out(path);
    const double lo = image.data.minCoeff();
    const double hi = image.data.maxCoeff();
    const double span = hi > lo ? hi - lo : 1.0;
    out << "P2\n" << image.n << ' ' << image.n << "\n255\n";
    for (int r = 0; r < image.n; ++r) {
        for (int c = 0; c < image.n; ++c) {
            const int v = static_cast<int>(255.0 * (image.at(r, c) - lo) / span + 0.5);
            out << (c ? " " : "") << v;
        }
        out << '\n';
    }
}

}  // namespace sps
