// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: augment / sweep / diagram / selectivity / bench.

#include <omp.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "planckian/analysis.hpp"
#include "planckian/bench.hpp"
#include "planckian/imageio.hpp"
#include "planckian/jitter.hpp"
#include "planckian/svg.hpp"
#include "planckian/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace planckian;

namespace {

struct JitterFlags {
    double t_min = 3000.0;
    double t_max = 15000.0;
    double brightness = 0.8;
    double contrast = 0.8;
    double cj_saturation = 0.8;
    double cj_hue = 0.2;
    double cj_apply_prob = 0.8;
    double grayscale_prob = 0.2;
    std::string temperature_sampling = "kelvin";
    int discrete_steps = 25;
    bool linear_light = false;
    bool fixed_bc = false;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--t-min", t_min, "Lower illuminant temperature bound, K")->capture_default_str();
        cmd->add_option("--t-max", t_max, "Upper illuminant temperature bound, K")->capture_default_str();
        cmd->add_option("--brightness", brightness, "Brightness jitter strength")->capture_default_str();
        cmd->add_option("--contrast", contrast, "Contrast jitter strength")->capture_default_str();
        cmd->add_option("--cj-saturation", cj_saturation, "Baseline saturation jitter strength")
            ->capture_default_str();
        cmd->add_option("--cj-hue", cj_hue, "Baseline hue jitter strength (fraction of a turn)")
            ->capture_default_str();
        cmd->add_option("--cj-apply-prob", cj_apply_prob, "Baseline color jitter application probability")
            ->capture_default_str();
        cmd->add_option("--grayscale-prob", grayscale_prob, "Baseline random-grayscale probability")
            ->capture_default_str();
        cmd->add_option("--temperature-sampling", temperature_sampling,
                        "Temperature sampling: kelvin (uniform), mired, discrete")
            ->check(CLI::IsMember({"kelvin", "mired", "discrete"}))
            ->capture_default_str();
        cmd->add_option("--discrete-steps", discrete_steps, "Number of discrete sweep temperatures")
            ->capture_default_str();
        cmd->add_flag("--linear-light", linear_light, "Re-illuminate in linear light instead of gamma sRGB");
        cmd->add_flag("--fixed-bc", fixed_bc,
                      "Use the brightness/contrast strengths as literal coefficients instead of sampling");
    }

    JitterConfig to_config(std::uint64_t seed) const {
        JitterConfig cfg;
        cfg.temperature_range = {t_min, t_max};
        cfg.brightness_strength = brightness;
        cfg.contrast_strength = contrast;
        cfg.cj_saturation_strength = cj_saturation;
        cfg.cj_hue_strength = cj_hue;
        cfg.cj_apply_probability = cj_apply_prob;
        cfg.grayscale_probability = grayscale_prob;
        cfg.seed = seed;
        if (temperature_sampling == "mired") {
            cfg.temperature_sampling = TemperatureSampling::uniform_mired;
        } else if (temperature_sampling == "discrete") {
            cfg.temperature_sampling = TemperatureSampling::discrete;
        } else {
            cfg.temperature_sampling = TemperatureSampling::uniform_kelvin;
        }
        cfg.discrete_steps = discrete_steps;
        cfg.reilluminate_linear_light = linear_light;
        cfg.fixed_brightness_contrast = fixed_bc;
        return cfg;
    }
};

json config_to_json(const JitterConfig& cfg) {
    json j;
    j["t_min"] = cfg.temperature_range.t_min;
    j["t_max"] = cfg.temperature_range.t_max;
    j["brightness_strength"] = cfg.brightness_strength;
    j["contrast_strength"] = cfg.contrast_strength;
    j["cj_saturation_strength"] = cfg.cj_saturation_strength;
    j["cj_hue_strength"] = cfg.cj_hue_strength;
    j["cj_apply_probability"] = cfg.cj_apply_probability;
    j["grayscale_probability"] = cfg.grayscale_probability;
    j["temperature_sampling"] = cfg.temperature_sampling == TemperatureSampling::uniform_mired    ? "mired"
                                : cfg.temperature_sampling == TemperatureSampling::discrete       ? "discrete"
                                                                                                  : "kelvin";
    j["discrete_steps"] = cfg.discrete_steps;
    j["reilluminate_linear_light"] = cfg.reilluminate_linear_light;
    j["fixed_brightness_contrast"] = cfg.fixed_brightness_contrast;
    return j;
}

void write_manifest(const fs::path& path, const std::string& command, std::uint64_t seed, json extra) {
    json j;
    j["tool"] = "planckian";
    j["version"] = kVersion;
    j["command"] = command;
    j["seed"] = seed;
    for (auto& [key, value] : extra.items()) {
        j[key] = value;
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write manifest " + path.string());
    }
    out << j.dump(2) << "\n";
}

bool is_image_file(const fs::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    return ext == ".png" || ext == ".ppm" || ext == ".jpg" || ext == ".jpeg";
}

std::vector<fs::path> list_images(const fs::path& dir) {
    if (!fs::is_directory(dir)) {
        throw std::runtime_error("input directory does not exist: " + dir.string());
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && is_image_file(entry.path())) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
    if (files.empty()) {
        throw std::runtime_error("no readable images (.png/.ppm/.jpg) in " + dir.string());
    }
    return files;
}

// Output stays lossless: JPEG inputs are written back as PNG.
std::pair<io::ImageFormat, std::string> output_format_for(const fs::path& input) {
    const io::ImageFormat in_fmt = io::format_from_extension(input);
    if (in_fmt == io::ImageFormat::ppm) {
        return {io::ImageFormat::ppm, ".ppm"};
    }
    return {io::ImageFormat::png, ".png"};
}

// Runs tasks in an OpenMP loop, collecting the first error instead of
// letting an exception cross the parallel region.
template <typename F>
void parallel_tasks(std::int64_t count, F&& task) {
    std::string error;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            task(i);
        } catch (const std::exception& e) {
#pragma omp critical
            if (error.empty()) {
                error = e.what();
            }
        }
    }
    if (!error.empty()) {
        throw std::runtime_error(error);
    }
}

int cmd_augment(const fs::path& in_dir, const fs::path& out_dir, const std::string& kind, int views,
                std::uint64_t seed, const JitterConfig& cfg) {
    const std::vector<fs::path> inputs = list_images(in_dir);
    fs::create_directories(out_dir);

    const std::int64_t n_tasks = static_cast<std::int64_t>(inputs.size()) * views;
    parallel_tasks(n_tasks, [&](std::int64_t task) {
        const std::size_t img_idx = static_cast<std::size_t>(task) / views;
        const int view = static_cast<int>(task % views);
        const fs::path& src = inputs[img_idx];
        const Image img = io::load_image(src);
        const auto [fmt, ext] = output_format_for(src);

        Image out;
        if (kind == "planckian") {
            Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(task));
            out = planckian_jitter(img, cfg, rng);
        } else if (kind == "default") {
            Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(task));
            out = default_color_jitter(img, cfg, rng);
        } else {
            out = img;
        }
        const fs::path dst = out_dir / (src.stem().string() + "_v" + std::to_string(view) + ext);
        io::save_image(out, dst, fmt);
    });

    json extra;
    extra["kind"] = kind;
    extra["views"] = views;
    extra["config"] = config_to_json(cfg);
    json names = json::array();
    for (const auto& p : inputs) {
        names.push_back(p.filename().string());
    }
    extra["inputs"] = names;
    write_manifest(out_dir / "manifest.json", "augment", seed, extra);
    return 0;
}

std::string sweep_dir_name(double temperature) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "sweep_T%05d", static_cast<int>(temperature + 0.5));
    return buf;
}

int cmd_sweep(const fs::path& in_dir, const fs::path& out_dir, int k, const TemperatureRange& range,
              bool force, std::uint64_t seed) {
    const std::vector<fs::path> inputs = list_images(in_dir);
    const std::vector<double> temps = sweep_temperatures(k, range);

    if (fs::exists(out_dir) && !force) {
        for (const auto& entry : fs::directory_iterator(out_dir)) {
            if (entry.path().filename().string().rfind("sweep_T", 0) == 0) {
                throw std::runtime_error("sweep output already present in " + out_dir.string() +
                                         "; pass --force to overwrite");
            }
        }
    }
    for (double t : temps) {
        fs::create_directories(out_dir / sweep_dir_name(t));
    }

    const std::int64_t n_tasks = static_cast<std::int64_t>(temps.size()) * static_cast<std::int64_t>(inputs.size());
    parallel_tasks(n_tasks, [&](std::int64_t task) {
        const std::size_t t_idx = static_cast<std::size_t>(task) / inputs.size();
        const std::size_t img_idx = static_cast<std::size_t>(task) % inputs.size();
        const fs::path& src = inputs[img_idx];
        const Image img = io::load_image(src);
        const auto [fmt, ext] = output_format_for(src);
        const Image out = reilluminate(img, illuminant_rgb(temps[t_idx]));
        const fs::path dst = out_dir / sweep_dir_name(temps[t_idx]) / (src.stem().string() + ext);
        io::save_image(out, dst, fmt);
    });

    json extra;
    extra["k"] = k;
    extra["t_min"] = range.t_min;
    extra["t_max"] = range.t_max;
    extra["temperatures"] = temps;
    json names = json::array();
    for (const auto& p : inputs) {
        names.push_back(p.filename().string());
    }
    extra["inputs"] = names;
    write_manifest(out_dir / "manifest.json", "sweep", seed, extra);
    return 0;
}

std::vector<Chromaticity> locus_polyline(int vertices) {
    std::vector<Chromaticity> pts;
    pts.reserve(static_cast<std::size_t>(vertices));
    for (int i = 0; i < vertices; ++i) {
        const double t = 3000.0 + (15000.0 - 3000.0) * i / (vertices - 1);
        const IlluminantRgb ill = illuminant_rgb(t);
        pts.push_back(xy_chromaticity(srgb_to_xyz({ill.r, ill.g, ill.b})));
    }
    return pts;
}

int cmd_diagram(const std::string& kind, int n, const fs::path& out_prefix, const std::string& input_mode,
                std::uint64_t seed, const JitterConfig& cfg) {
    const CloudKind cloud_kind = kind == "planckian" ? CloudKind::planckian : CloudKind::default_jitter;
    CloudInput input = CloudInput::random_rgb;
    if (input_mode == "gray" || (input_mode == "auto" && cloud_kind == CloudKind::planckian)) {
        input = CloudInput::neutral_gray;
    }

    Rng rng = Rng::derive(seed, 0);
    const std::vector<Chromaticity> cloud = chromaticity_cloud(cloud_kind, n, rng, input, cfg);

    const fs::path csv_path = out_prefix.string() + ".csv";
    std::ofstream csv(csv_path);
    if (!csv) {
        throw std::runtime_error("cannot write " + csv_path.string());
    }
    csv << "x,y\n";
    csv.precision(8);
    for (const auto& p : cloud) {
        csv << std::fixed << p.x << "," << p.y << "\n";
    }

    svg::ScatterSeries series;
    series.points = cloud;
    series.color = cloud_kind == CloudKind::planckian ? "#d62728" : "#1f77b4";
    series.label = kind + " jitter";
    const fs::path svg_path = out_prefix.string() + ".svg";
    svg::write_chromaticity_svg(svg_path, "Chromaticity cloud: " + kind + " jitter", {series},
                                {svg::srgb_gamut_triangle(),
                                 {locus_polyline(121), "#555555", 1.5, false, "Planckian locus"}});

    json extra;
    extra["kind"] = kind;
    extra["n"] = n;
    extra["input"] = input == CloudInput::neutral_gray ? "gray" : "rgb";
    extra["config"] = config_to_json(cfg);
    extra["outputs"] = {csv_path.filename().string(), svg_path.filename().string()};
    write_manifest(fs::path(out_prefix.string() + ".manifest.json"), "diagram", seed, extra);
    return 0;
}

int cmd_selectivity(const fs::path& acts_path, const fs::path& out_prefix, std::uint64_t seed) {
    const std::vector<NeuronRecord> records = load_activations(acts_path);
    const std::vector<NeuronReport> reports = selectivity_report(records);
    const ClassHistogram hist = histogram(reports);

    const fs::path csv_path = out_prefix.string() + ".csv";
    std::ofstream csv(csv_path);
    if (!csv) {
        throw std::runtime_error("cannot write " + csv_path.string());
    }
    csv << "neuron_id,alpha,class\n";
    csv.precision(9);
    for (const auto& r : reports) {
        csv << r.id << "," << r.alpha << "," << to_string(r.cls) << "\n";
    }

    const fs::path hist_path = out_prefix.string() + "_histogram.csv";
    std::ofstream hist_csv(hist_path);
    if (!hist_csv) {
        throw std::runtime_error("cannot write " + hist_path.string());
    }
    hist_csv << "class,count\n";
    hist_csv << "color-selective," << hist.color_selective << "\n";
    hist_csv << "intermediate," << hist.intermediate << "\n";
    hist_csv << "colorblind," << hist.colorblind << "\n";

    std::cout << "neurons: " << reports.size() << "\n"
              << "color-selective: " << hist.color_selective << "\n"
              << "intermediate:    " << hist.intermediate << "\n"
              << "colorblind:      " << hist.colorblind << "\n";

    json extra;
    extra["activations"] = acts_path.filename().string();
    extra["neurons"] = reports.size();
    extra["histogram"] = {{"color-selective", hist.color_selective},
                          {"intermediate", hist.intermediate},
                          {"colorblind", hist.colorblind}};
    extra["outputs"] = {csv_path.filename().string(), hist_path.filename().string()};
    write_manifest(fs::path(out_prefix.string() + ".manifest.json"), "selectivity", seed, extra);
    return 0;
}

int cmd_bench(const std::vector<int>& resolutions, int repeats, const fs::path& out_prefix,
              std::uint64_t seed) {
    const auto results = bench::run_benchmark(resolutions, repeats, seed);
    bench::write_bench_csv(fs::path(out_prefix.string() + ".csv"), results);
    bench::write_bench_svg(fs::path(out_prefix.string() + ".svg"), results);
    std::cout << bench::summary_table(results);

    json extra;
    extra["resolutions"] = resolutions;
    extra["repeats"] = repeats;
    extra["outputs"] = {out_prefix.filename().string() + ".csv", out_prefix.filename().string() + ".svg"};
    write_manifest(fs::path(out_prefix.string() + ".manifest.json"), "bench", seed, extra);
    return 0;
}

void apply_thread_cap() {
    const char* env = std::getenv("PLANCKIAN_THREADS");
    if (env == nullptr) {
        return;
    }
    const int n = std::atoi(env);
    if (n > 0) {
        omp_set_num_threads(n);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Physics-based color augmentation: black-body re-illumination, baseline color jitter, "
                 "robustness sweeps, chromaticity diagrams and timing benchmarks"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough();  // allow the global --seed after a subcommand name

    std::uint64_t seed = 1234;
    app.add_option("--seed", seed, "Global random seed driving all randomness")->capture_default_str();

    // augment
    auto* augment = app.add_subcommand("augment", "Write augmented copies of every image in a directory");
    fs::path aug_in;
    fs::path aug_out;
    std::string aug_kind = "planckian";
    int aug_views = 1;
    JitterFlags aug_flags;
    augment->add_option("--in", aug_in, "Input image directory")->required();
    augment->add_option("--out", aug_out, "Output directory")->required();
    augment->add_option("--kind", aug_kind, "Augmentation: planckian, default, none")
        ->check(CLI::IsMember({"planckian", "default", "none"}))
        ->capture_default_str();
    augment->add_option("--views", aug_views, "Augmented copies per image")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    aug_flags.add_to(augment);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Re-illuminate a dataset at evenly spaced temperatures");
    fs::path sweep_in;
    fs::path sweep_out;
    int sweep_k = 25;
    double sweep_tmin = 3000.0;
    double sweep_tmax = 15000.0;
    bool sweep_force = false;
    sweep->add_option("--in", sweep_in, "Input image directory")->required();
    sweep->add_option("--out", sweep_out, "Output directory (one sweep_TXXXXX/ per temperature)")->required();
    sweep->add_option("--k", sweep_k, "Number of sweep temperatures")->capture_default_str();
    sweep->add_option("--t-min", sweep_tmin, "Lower temperature bound, K")->capture_default_str();
    sweep->add_option("--t-max", sweep_tmax, "Upper temperature bound, K")->capture_default_str();
    sweep->add_flag("--force", sweep_force, "Overwrite existing sweep output");

    // diagram
    auto* diagram = app.add_subcommand("diagram", "Emit a chromaticity cloud as CSV + SVG");
    std::string dia_kind = "planckian";
    int dia_n = 10000;
    fs::path dia_out;
    std::string dia_input = "auto";
    JitterFlags dia_flags;
    diagram->add_option("--kind", dia_kind, "Cloud kind: planckian or default")
        ->check(CLI::IsMember({"planckian", "default"}))
        ->capture_default_str();
    diagram->add_option("--n", dia_n, "Number of sampled points")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    diagram->add_option("--out", dia_out, "Output prefix (writes <out>.csv and <out>.svg)")->required();
    diagram->add_option("--input", dia_input, "Input pixels: gray, rgb, or auto (gray for planckian)")
        ->check(CLI::IsMember({"auto", "gray", "rgb"}))
        ->capture_default_str();
    dia_flags.add_to(diagram);

    // selectivity
    auto* selectivity = app.add_subcommand("selectivity", "Color selectivity report from neuron activations");
    fs::path sel_acts;
    fs::path sel_out;
    selectivity->add_option("--acts", sel_acts, "Activation file (.csv or .json)")->required();
    selectivity->add_option("--out", sel_out, "Output prefix (writes <out>.csv and <out>_histogram.csv)")
        ->required();

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Time the planckian and default jitter pipelines");
    std::vector<int> bench_res = {32, 64, 128, 224, 448};
    int bench_repeats = 40;
    fs::path bench_out = "bench";
    bench_cmd->add_option("--resolutions", bench_res, "Square image resolutions to time")
        ->delimiter(',')
        ->capture_default_str();
    bench_cmd->add_option("--repeats", bench_repeats, "Timed repeats per resolution and algorithm")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench_cmd->add_option("--out", bench_out, "Output prefix (writes <out>.csv and <out>.svg)")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (!bench_cmd->parsed()) {
            apply_thread_cap();
        }
        if (augment->parsed()) {
            return cmd_augment(aug_in, aug_out, aug_kind, aug_views, seed, aug_flags.to_config(seed));
        }
        if (sweep->parsed()) {
            return cmd_sweep(sweep_in, sweep_out, sweep_k, {sweep_tmin, sweep_tmax}, sweep_force, seed);
        }
        if (diagram->parsed()) {
            return cmd_diagram(dia_kind, dia_n, dia_out, dia_input, seed, dia_flags.to_config(seed));
        }
        if (selectivity->parsed()) {
            return cmd_selectivity(sel_acts, sel_out, seed);
        }
        if (bench_cmd->parsed()) {
            return cmd_bench(bench_res, bench_repeats, bench_out, seed);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
