#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "sps/solvers.hpp"
#include "sps/types.hpp"

namespace sps {

// Text formats, full precision (17 significant digits) so round-trips are exact.
// .grid: "n n" then n lines of n values.  .pat: "n L" then L lines "k l".
// .meas: "n L" then L lines "k l re im", aligned with the pattern order.

void write_grid(const std::filesystem::path& path, const Image& image);
Image read_grid(const std::filesystem::path& path);

void write_pattern(const std::filesystem::path& path, const SamplingPattern& pattern);
SamplingPattern read_pattern(const std::filesystem::path& path);

void write_measurement(const std::filesystem::path& path, const SamplingPattern& pattern,
                       const Measurement& meas);
/// Returns the measurement; checks the embedded indices against `pattern`.
Measurement read_measurement(const std::filesystem::path& path, const SamplingPattern& pattern);

/// key=value lines, keys in insertion order.
using Manifest = std::vector<std::pair<std::string, std::string>>;
void write_manifest(const std::filesystem::path& path, const Manifest& manifest);
std::map<std::string, std::string> read_manifest(const std::filesystem::path& path);

void write_trace_csv(const std::filesystem::path& path, const std::vector<TracePoint>& trace);

/// 8-bit PGM with linear grayscale over [min, max] of the image.
void write_pgm(const std::filesystem::path& path, const Image& image);

std::string format_full(double v);  // shortest exact decimal ("%.17g")

}  // namespace sps
