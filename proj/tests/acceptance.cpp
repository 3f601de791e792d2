// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite. Each criterion prints one [PASS]/[FAIL] line; the binary
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "planckian/analysis.hpp"
#include "planckian/bench.hpp"
#include "planckian/imageio.hpp"
#include "planckian/jitter.hpp"
#include "planckian/kernels.hpp"
#include "planckian/svg.hpp"

namespace fs = std::filesystem;
using namespace planckian;
using clock_type = std::chrono::steady_clock;

namespace {

int g_failed = 0;
std::string g_cli;
fs::path g_scratch;

void report(int criterion, const std::string& label, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << label;
    if (!detail.empty()) {
        std::cout << " (" << detail << ")";
    }
    std::cout << "\n";
    if (!pass) {
        ++g_failed;
    }
}

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

int run(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    return status == -1 ? -1 : WEXITSTATUS(status);
}

std::map<std::string, std::vector<char>> tree_contents(const fs::path& root) {
    std::map<std::string, std::vector<char>> out;
    if (!fs::is_directory(root)) {
        return out;
    }
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (!entry.is_regular_file()) {
            continue;
        }
        std::ifstream in(entry.path(), std::ios::binary);
        out[fs::relative(entry.path(), root).string()] = {std::istreambuf_iterator<char>(in),
                                                          std::istreambuf_iterator<char>()};
    }
    return out;
}

Image random_image(int w, int h, std::uint64_t seed) {
    Rng rng(seed);
    Image img(w, h);
    for (float& v : img.pixels) {
        v = static_cast<float>(rng.uniform());
    }
    return img;
}

void make_inputs(const fs::path& dir) {
    fs::create_directories(dir);
    for (int i = 0; i < 3; ++i) {
        const Image img = random_image(20 + i, 16, 3000 + static_cast<std::uint64_t>(i));
        const bool png = i == 0;
        io::save_image(img, dir / ("img" + std::to_string(i) + (png ? ".png" : ".ppm")),
                       png ? io::ImageFormat::png : io::ImageFormat::ppm);
    }
}

// 1. Planck's-law oracle equivalence on the 25x31 grid, rel. error < 1e-9.
void criterion_1() {
    const auto t0 = clock_type::now();
    double worst = 0.0;
    for (int ti = 0; ti < 25; ++ti) {
        const double t = 3000.0 + 500.0 * ti;
        for (std::size_t li = 0; li < Spectrum::kSampleCount; ++li) {
            const double lambda = Spectrum::wavelength(li);
            const double got = planck_radiance(t, lambda);
            const double expected = static_cast<double>(
                oracles::planck_long_double(static_cast<long double>(t), static_cast<long double>(lambda)));
            worst = std::max(worst, std::abs(got - expected) / expected);
        }
    }
    const double elapsed = seconds_since(t0);
    std::ostringstream detail;
    detail << "max rel err " << worst << ", " << elapsed << " s";
    report(1, "Planck radiance matches the extended-precision oracle to 1e-9",
           worst < 1e-9 && elapsed < 1.0, detail.str());
}

// 2. Lab<->XYZ and sRGB gamma round trips are identities to 1e-9.
void criterion_2() {
    const auto t0 = clock_type::now();
    Rng rng(1234);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const Rgb rgb{rng.uniform(), rng.uniform(), rng.uniform()};
        const Tristimulus t = srgb_to_xyz(rgb);
        const Tristimulus back = lab_to_xyz(xyz_to_lab(t));
        const double scale = std::max({std::abs(t.X), std::abs(t.Y), std::abs(t.Z), 1e-30});
        worst = std::max({worst, std::abs(back.X - t.X) / scale, std::abs(back.Y - t.Y) / scale,
                          std::abs(back.Z - t.Z) / scale});

        const double v = rng.uniform();
        worst = std::max(worst, std::abs(srgb_decode(srgb_encode(v)) - v));
        worst = std::max(worst, std::abs(srgb_encode(srgb_decode(v)) - v));
    }
    const double elapsed = seconds_since(t0);
    std::ostringstream detail;
    detail << "max err " << worst << ", " << elapsed << " s";
    report(2, "colorimetric round trips are identities to 1e-9", worst < 1e-9 && elapsed < 1.0,
           detail.str());
}

// 3. Warm/cool ordering and strictly decreasing r/b over the sweep.
void criterion_3() {
    const auto t0 = clock_type::now();
    const IlluminantRgb warm = illuminant_rgb(3000.0);
    const IlluminantRgb cool = illuminant_rgb(15000.0);
    bool ok = warm.r > warm.g && warm.g > warm.b;
    ok = ok && cool.b > cool.g && cool.g > cool.r;
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 25; ++i) {
        const IlluminantRgb ill = illuminant_rgb(3000.0 + 500.0 * i);
        const double ratio = ill.r / ill.b;
        ok = ok && ratio < prev;
        prev = ratio;
    }
    const double elapsed = seconds_since(t0);
    report(3, "illuminants run warm to cool with strictly decreasing r/b", ok && elapsed < 1.0);
}

// 4. The 6500 K illuminant renders near-neutral.
void criterion_4() {
    const IlluminantRgb ill = illuminant_rgb(6500.0);
    const double spread = std::max({ill.r, ill.g, ill.b}) - std::min({ill.r, ill.g, ill.b});
    std::ostringstream detail;
    detail << "max pairwise channel diff " << spread;
    report(4, "6500 K renders near-neutral (< 0.08)", spread < 0.08, detail.str());
}

// 5. Planckian cloud hugs the locus; default cloud hull is at least 5x larger.
void criterion_5() {
    const auto t0 = clock_type::now();
    const auto poly = oracles::rendered_locus_polyline();

    Rng pj_rng(1234);
    const auto pj_cloud = chromaticity_cloud(CloudKind::planckian, 10000, pj_rng, CloudInput::neutral_gray);
    int within = 0;
    for (const auto& p : pj_cloud) {
        if (oracles::distance_to_polyline(p, poly) < 0.01) {
            ++within;
        }
    }
    const double frac = static_cast<double>(within) / static_cast<double>(pj_cloud.size());

    Rng cj_rng(1234);
    const auto cj_cloud = chromaticity_cloud(CloudKind::default_jitter, 10000, cj_rng, CloudInput::random_rgb);
    const double pj_area = oracles::convex_hull_area(pj_cloud);
    const double cj_area = oracles::convex_hull_area(cj_cloud);

    svg::ScatterSeries pj_series{pj_cloud, "#d62728", 1.0, "planckian jitter"};
    svg::ScatterSeries cj_series{cj_cloud, "#1f77b4", 1.0, "default jitter"};
    const svg::PolylineSeries locus{poly, "#555555", 1.5, false, "Planckian locus"};
    svg::write_chromaticity_svg(g_scratch / "cloud_planckian.svg", "Planckian jitter cloud", {pj_series},
                                {svg::srgb_gamut_triangle(), locus});
    svg::write_chromaticity_svg(g_scratch / "cloud_default.svg", "Default color jitter cloud", {cj_series},
                                {svg::srgb_gamut_triangle(), locus});

    const double elapsed = seconds_since(t0);
    std::ostringstream detail;
    detail << 100.0 * frac << "% within 0.01, hull ratio " << (cj_area / pj_area) << ", " << elapsed
           << " s, SVGs in " << g_scratch.string();
    report(5, "cloud reproduction: locus-hugging planckian vs broad default",
           frac >= 0.99 && cj_area >= 5.0 * pj_area && elapsed < 10.0, detail.str());
}

// 6. Exact identities and degenerate collapses of the re-illumination and
// brightness/contrast maps.
void criterion_6() {
    const Image img = random_image(97, 61, 42);

    const Image neutral = reilluminate(img, {1.0, 1.0, 1.0, 0.0});
    bool ok = neutral == img;

    const Image unit = brightness_contrast(img, 1.0, 1.0);
    ok = ok && unit == img;

    // c = 0: every pixel equals the documented spatial mean of b*I' luma
    // (4096-pixel blocked double accumulation), replicated here.
    const double b = 1.7;
    const Image flat = brightness_contrast(img, b, 0.0);
    const std::int64_t n = static_cast<std::int64_t>(img.pixel_count());
    const std::int64_t n_blocks = (n + kMeanBlockPixels - 1) / kMeanBlockPixels;
    std::vector<double> partial(static_cast<std::size_t>(n_blocks), 0.0);
    for (std::int64_t blk = 0; blk < n_blocks; ++blk) {
        const std::int64_t first = blk * kMeanBlockPixels;
        const std::int64_t last = std::min(first + kMeanBlockPixels, n);
        double sum = 0.0;
        for (std::int64_t i = first; i < last; ++i) {
            const float* p = img.pixels.data() + i * 3;
            sum += 0.299 * (b * p[0]) + 0.587 * (b * p[1]) + 0.114 * (b * p[2]);
        }
        partial[static_cast<std::size_t>(blk)] = sum;
    }
    double total = 0.0;
    for (double p : partial) {
        total += p;
    }
    const double mu = total / static_cast<double>(n);
    const float expected = static_cast<float>(std::clamp(mu, 0.0, 1.0));
    for (float v : flat.pixels) {
        ok = ok && v == expected;
    }

    report(6, "algebraic identities: neutral illuminant, unit factors, c=0 collapse (exact)", ok);
}

// 7. Selectivity fixtures and strict thresholds.
void criterion_7() {
    bool ok = color_selectivity({{0.4, 0.7}, {0.4, 0.7}}) == 0.0;
    ok = ok && color_selectivity({{0.4, 0.7}, {0.0, 0.0}}) == 1.0;
    ok = ok && std::abs(color_selectivity({{0.9, 0.6, 0.5}, {0.3, 0.2, 0.1}}) - 0.7) < 1e-12;
    ok = ok && classify_neuron(0.3) == NeuronClass::color_selective;
    ok = ok && classify_neuron(0.05) == NeuronClass::colorblind;
    ok = ok && classify_neuron(0.25) == NeuronClass::intermediate;
    ok = ok && classify_neuron(0.1) == NeuronClass::intermediate;
    report(7, "selectivity index fixtures and strict 0.25/0.1 thresholds", ok);
}

// 8. Sweep structure and bit-determinism across reruns and worker counts.
void criterion_8() {
    const fs::path in_dir = g_scratch / "sweep_inputs";
    make_inputs(in_dir);

    const fs::path out1 = g_scratch / "sweep_run1";
    const fs::path out2 = g_scratch / "sweep_run2";
    const fs::path out3 = g_scratch / "sweep_run3";
    bool ok = run("PLANCKIAN_THREADS=1 " + g_cli + " sweep --in " + in_dir.string() + " --out " +
                  out1.string()) == 0;
    ok = ok && run("PLANCKIAN_THREADS=4 " + g_cli + " sweep --in " + in_dir.string() + " --out " +
                   out2.string()) == 0;
    ok = ok && run(g_cli + " sweep --in " + in_dir.string() + " --out " + out3.string()) == 0;

    int dirs = 0;
    if (ok) {
        for (int i = 0; i < 25; ++i) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "sweep_T%05d", 3000 + 500 * i);
            if (fs::is_directory(out1 / buf)) {
                ++dirs;
            }
        }
    }
    ok = ok && dirs == 25;

    const auto t1 = tree_contents(out1);
    ok = ok && t1 == tree_contents(out2) && t1 == tree_contents(out3);
    std::ostringstream detail;
    detail << dirs << " temperature directories, trees identical across runs and thread counts";
    report(8, "25-illuminant sweep is complete and bit-deterministic", ok, detail.str());
}

// 9. Timing comparison: planckian no slower than the default jitter at >= 4
// of the 5 resolutions.
void criterion_9() {
    const auto t0 = clock_type::now();
    const std::vector<int> resolutions = {32, 64, 128, 224, 448};
    const auto results = bench::run_benchmark(resolutions, 40, 1234);
    bench::write_bench_csv(g_scratch / "bench.csv", results);
    bench::write_bench_svg(g_scratch / "bench.svg", results);
    std::cout << bench::summary_table(results);

    std::map<int, std::map<std::string, double>> means;
    for (const auto& r : results) {
        means[r.resolution][r.algorithm] = r.mean;
    }
    int wins = 0;
    for (int res : resolutions) {
        if (means[res]["planckian"] <= means[res]["default"]) {
            ++wins;
        }
    }
    const double elapsed = seconds_since(t0);
    std::ostringstream detail;
    detail << "planckian faster or equal at " << wins << "/5 resolutions, " << elapsed
           << " s, CSV/SVG in " << g_scratch.string();
    report(9, "planckian jitter is at least as fast as the default jitter at >= 4/5 resolutions",
           wins >= 4 && elapsed < 120.0, detail.str());
}

// 10. End-to-end determinism of `augment --seed 1234`.
void criterion_10() {
    const fs::path in_dir = g_scratch / "augment_inputs";
    make_inputs(in_dir);
    const fs::path out1 = g_scratch / "augment_run1";
    const fs::path out2 = g_scratch / "augment_run2";
    const std::string args = " augment --seed 1234 --kind planckian --views 2 --in " + in_dir.string();
    bool ok = run(g_cli + args + " --out " + out1.string()) == 0;
    ok = ok && run(g_cli + args + " --out " + out2.string()) == 0;
    ok = ok && !tree_contents(out1).empty() && tree_contents(out1) == tree_contents(out2);
    report(10, "augment --seed 1234 reruns are checksum-identical", ok);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <planckian-binary> <scratch-dir>\n";
        return 2;
    }
    g_cli = argv[1];
    g_scratch = argv[2];
    fs::remove_all(g_scratch);
    fs::create_directories(g_scratch);

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();

    if (g_failed > 0) {
        std::cout << g_failed << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
