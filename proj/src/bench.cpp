// SPDX-License-Identifier: Apache-2.0
#include "planckian/bench.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "planckian/jitter.hpp"
#include "planckian/svg.hpp"

namespace planckian::bench {

namespace {

void finalize_stats(BenchResult& r) {
    double sum = 0.0;
    for (double s : r.seconds) {
        sum += s;
    }
    r.mean = sum / static_cast<double>(r.seconds.size());
    double var = 0.0;
    for (double s : r.seconds) {
        var += (s - r.mean) * (s - r.mean);
    }
    r.stddev = std::sqrt(var / static_cast<double>(r.seconds.size()));
}

template <typename F>
BenchResult time_pipeline(const std::string& name, int resolution, int repeats, const Image& input, F&& run) {
    using clock = std::chrono::steady_clock;
    BenchResult r;
    r.resolution = resolution;
    r.algorithm = name;
    r.repeats = repeats;
    r.seconds.reserve(static_cast<std::size_t>(repeats));

    volatile float sink = 0.0f;  // keep the augmented output observable
    {
        const Image warm = run(input);
        sink = sink + warm.pixels[0];
    }
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = clock::now();
        const Image out = run(input);
        const auto t1 = clock::now();
        sink = sink + out.pixels[0];
        r.seconds.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    finalize_stats(r);
    return r;
}

}  // namespace

Image bench_input_image(int resolution, std::uint64_t seed, std::size_t index) {
    Rng rng = Rng::derive(seed, index);
    Image img(resolution, resolution);
    for (float& v : img.pixels) {
        v = static_cast<float>(rng.uniform());
    }
    return img;
}

std::vector<BenchResult> run_benchmark(const std::vector<int>& resolutions, int repeats, std::uint64_t seed) {
    if (repeats < 1) {
        throw std::invalid_argument("repeats must be >= 1");
    }
    if (resolutions.empty()) {
        throw std::invalid_argument("resolution list must be nonempty");
    }

    JitterConfig cfg;
    cfg.seed = seed;

    // Measurement is strictly single-threaded.
    const int prev_threads = omp_get_max_threads();
    omp_set_num_threads(1);

    std::vector<BenchResult> results;
    for (std::size_t ri = 0; ri < resolutions.size(); ++ri) {
        const int res = resolutions[ri];
        if (res < 1) {
            omp_set_num_threads(prev_threads);
            throw std::invalid_argument("resolutions must be >= 1");
        }
        // Same input image and same per-call draw streams for both pipelines.
        const Image input = bench_input_image(res, seed, ri);

        {
            Rng rng = Rng::derive(seed, ri * 2 + 1);
            results.push_back(time_pipeline("planckian", res, repeats, input,
                                            [&](const Image& im) { return planckian_jitter(im, cfg, rng); }));
        }
        {
            Rng rng = Rng::derive(seed, ri * 2 + 2);
            results.push_back(time_pipeline("default", res, repeats, input,
                                            [&](const Image& im) { return default_color_jitter(im, cfg, rng); }));
        }
    }
    omp_set_num_threads(prev_threads);
    return results;
}

void write_bench_csv(const std::filesystem::path& path, const std::vector<BenchResult>& results) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write benchmark CSV to " + path.string());
    }
    out << "resolution,algorithm,repeat,seconds\n";
    out.precision(9);
    for (const auto& r : results) {
        for (std::size_t i = 0; i < r.seconds.size(); ++i) {
            out << r.resolution << "," << r.algorithm << "," << i << "," << std::scientific << r.seconds[i]
                << "\n";
        }
    }
}

void write_bench_svg(const std::filesystem::path& path, const std::vector<BenchResult>& results) {
    std::map<int, std::map<std::string, double>> by_res;
    for (const auto& r : results) {
        by_res[r.resolution][r.algorithm] = r.mean;
    }
    std::vector<double> x;
    svg::LineChartSeries pj{"planckian", {}, "#d62728"};
    svg::LineChartSeries cj{"default", {}, "#1f77b4"};
    for (const auto& [res, algs] : by_res) {
        x.push_back(res);
        pj.y.push_back(algs.count("planckian") ? algs.at("planckian") : 0.0);
        cj.y.push_back(algs.count("default") ? algs.at("default") : 0.0);
    }
    svg::write_line_chart_svg(path, "Execution time per augmented image", "resolution (px)", "seconds", x,
                              {pj, cj});
}

std::string summary_table(const std::vector<BenchResult>& results) {
    std::map<int, std::map<std::string, const BenchResult*>> by_res;
    for (const auto& r : results) {
        by_res[r.resolution][r.algorithm] = &r;
    }
    std::ostringstream os;
    os << "resolution  planckian_mean_s  default_mean_s  faster\n";
    os.precision(6);
    for (const auto& [res, algs] : by_res) {
        const auto* pj = algs.count("planckian") ? algs.at("planckian") : nullptr;
        const auto* cj = algs.count("default") ? algs.at("default") : nullptr;
        os << res << "  ";
        os << std::scientific;
        if (pj) {
            os << pj->mean << "  ";
        }
        if (cj) {
            os << cj->mean << "  ";
        }
        if (pj && cj) {
            os << (pj->mean <= cj->mean ? "planckian" : "default");
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace planckian::bench
