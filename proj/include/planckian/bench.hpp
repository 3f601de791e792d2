// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "planckian/image.hpp"

namespace planckian::bench {

struct BenchResult {
    int resolution = 0;          // square side, pixels
    std::string algorithm;       // "planckian" or "default"
    int repeats = 0;
    std::vector<double> seconds;  // one wall-clock duration per repeat
    double mean = 0.0;
    double stddev = 0.0;
};

// The input image timed at the given resolution-list index; both pipelines
// receive this exact image, so their comparison shares the workload.
Image bench_input_image(int resolution, std::uint64_t seed, std::size_t index);

// Times both full jitter pipelines on the same seeded random image at each
// resolution: one warm-up call (excluded), then `repeats` timed calls,
// single-threaded, monotonic clock. Returns one row per (resolution,
// algorithm) pair.
std::vector<BenchResult> run_benchmark(const std::vector<int>& resolutions, int repeats, std::uint64_t seed);

// CSV with one row per repeat: resolution,algorithm,repeat,seconds.
void write_bench_csv(const std::filesystem::path& path, const std::vector<BenchResult>& results);

// Mean execution time vs resolution, one line per algorithm.
void write_bench_svg(const std::filesystem::path& path, const std::vector<BenchResult>& results);

// Human-readable summary with per-resolution means and which pipeline won.
std::string summary_table(const std::vector<BenchResult>& results);

}  // namespace planckian::bench
