// SPDX-License-Identifier: Apache-2.0
#include "planckian/analysis.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "planckian/kernels.hpp"

namespace planckian {

namespace {

double checked_sum(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) {
        s += x;
    }
    return s;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        const auto begin = field.find_first_not_of(" \t\r");
        const auto end = field.find_last_not_of(" \t\r");
        fields.push_back(begin == std::string::npos ? "" : field.substr(begin, end - begin + 1));
    }
    return fields;
}

double parse_double(const std::string& s, const std::string& where) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error(where + ": not a number: '" + s + "'");
    }
    if (pos != s.size()) {
        throw std::runtime_error(where + ": not a number: '" + s + "'");
    }
    return v;
}

std::vector<NeuronRecord> load_activations_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open activation file " + path.string());
    }
    std::vector<NeuronRecord> records;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const std::string where = path.filename().string() + ":" + std::to_string(line_no);
        const auto fields = split_csv_line(line);
        if (fields.size() < 2) {
            throw std::runtime_error(where + ": expected 'id,N,w...,wgray...'");
        }
        if (fields[0].empty()) {
            throw std::runtime_error(where + ": empty neuron id");
        }
        const double n_raw = parse_double(fields[1], where);
        const int n = static_cast<int>(n_raw);
        if (n < 1 || n_raw != n) {
            throw std::runtime_error(where + ": N must be a positive integer, got '" + fields[1] + "'");
        }
        if (fields.size() != static_cast<std::size_t>(2 + 2 * n)) {
            throw std::runtime_error(where + ": expected " + std::to_string(2 + 2 * n) + " fields for N=" +
                                     std::to_string(n) + ", got " + std::to_string(fields.size()));
        }
        NeuronRecord rec;
        rec.id = fields[0];
        for (int i = 0; i < n; ++i) {
            rec.color.push_back(parse_double(fields[2 + i], where));
        }
        for (int i = 0; i < n; ++i) {
            rec.gray.push_back(parse_double(fields[2 + n + i], where));
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<NeuronRecord> load_activations_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open activation file " + path.string());
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path.filename().string() + ": invalid JSON: " + e.what());
    }
    if (!doc.is_array()) {
        throw std::runtime_error(path.filename().string() + ": expected a top-level array of neurons");
    }
    std::vector<NeuronRecord> records;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const std::string where = path.filename().string() + ": record " + std::to_string(i + 1);
        const auto& item = doc[i];
        if (!item.is_object() || !item.contains("id") || !item.contains("color") || !item.contains("gray")) {
            throw std::runtime_error(where + ": expected {id, color, gray}");
        }
        NeuronRecord rec;
        try {
            rec.id = item.at("id").get<std::string>();
            rec.color = item.at("color").get<std::vector<double>>();
            rec.gray = item.at("gray").get<std::vector<double>>();
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error(where + ": " + e.what());
        }
        records.push_back(std::move(rec));
    }
    return records;
}

Rgb gray_probe() { return {0.5, 0.5, 0.5}; }

Rgb random_rgb(Rng& rng) { return {rng.uniform(), rng.uniform(), rng.uniform()}; }

double pixel_luma(const Rgb& c) { return pixel::luma(c.r, c.g, c.b); }

Rgb clamp_rgb(const Rgb& c) {
    return {std::clamp(c.r, 0.0, 1.0), std::clamp(c.g, 0.0, 1.0), std::clamp(c.b, 0.0, 1.0)};
}

double sample_factor(Rng& rng, double strength) {
    return rng.uniform(std::max(0.0, 1.0 - strength), 1.0 + strength);
}

}  // namespace

void ActivationSet::validate() const {
    if (color.size() != gray.size()) {
        throw std::invalid_argument("activation lists must have equal length");
    }
    if (color.empty()) {
        throw std::invalid_argument("activation lists must be nonempty");
    }
    for (double v : color) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument("color activations must be finite and >= 0");
        }
    }
    for (double v : gray) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument("gray activations must be finite and >= 0");
        }
    }
}

std::string to_string(NeuronClass c) {
    switch (c) {
        case NeuronClass::color_selective:
            return "color-selective";
        case NeuronClass::colorblind:
            return "colorblind";
        case NeuronClass::intermediate:
        default:
            return "intermediate";
    }
}

double color_selectivity(const ActivationSet& acts) {
    acts.validate();
    const double color_sum = checked_sum(acts.color);
    if (!(color_sum > 0.0)) {
        throw std::domain_error("degenerate neuron: color activations sum to zero");
    }
    return 1.0 - checked_sum(acts.gray) / color_sum;
}

NeuronClass classify_neuron(double alpha) {
    if (alpha > 1.0) {
        throw std::domain_error("selectivity index cannot exceed 1");
    }
    if (alpha > 0.25) {
        return NeuronClass::color_selective;
    }
    if (alpha < 0.1) {
        return NeuronClass::colorblind;
    }
    return NeuronClass::intermediate;
}

std::vector<NeuronRecord> load_activations(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == ".json") {
        return load_activations_json(path);
    }
    if (ext == ".csv") {
        return load_activations_csv(path);
    }
    throw std::runtime_error("activation file must be .csv or .json: " + path.string());
}

std::vector<NeuronReport> selectivity_report(const std::vector<NeuronRecord>& records) {
    std::vector<NeuronReport> reports;
    reports.reserve(records.size());
    for (const auto& rec : records) {
        ActivationSet acts{rec.color, rec.gray};
        NeuronReport r;
        r.id = rec.id;
        r.alpha = color_selectivity(acts);
        r.cls = classify_neuron(r.alpha);
        reports.push_back(std::move(r));
    }
    return reports;
}

ClassHistogram histogram(const std::vector<NeuronReport>& reports) {
    ClassHistogram h;
    for (const auto& r : reports) {
        switch (r.cls) {
            case NeuronClass::color_selective:
                ++h.color_selective;
                break;
            case NeuronClass::intermediate:
                ++h.intermediate;
                break;
            case NeuronClass::colorblind:
                ++h.colorblind;
                break;
        }
    }
    return h;
}

std::vector<double> sweep_temperatures(int k, const TemperatureRange& range) {
    if (k < 2) {
        throw std::invalid_argument("sweep requires k >= 2");
    }
    range.validate();
    std::vector<double> temps(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        temps[static_cast<std::size_t>(i)] = range.t_min + (range.t_max - range.t_min) * i / (k - 1);
    }
    return temps;
}

std::vector<SweepVersion> illuminant_sweep(const std::vector<Image>& images, int k, const TemperatureRange& range) {
    if (images.empty()) {
        throw std::invalid_argument("sweep requires a nonempty image collection");
    }
    const std::vector<double> temps = sweep_temperatures(k, range);
    std::vector<SweepVersion> versions;
    versions.reserve(temps.size());
    for (double t : temps) {
        SweepVersion v;
        v.temperature = t;
        const IlluminantRgb illum = illuminant_rgb(t);
        v.images.reserve(images.size());
        for (const Image& img : images) {
            v.images.push_back(reilluminate(img, illum));
        }
        versions.push_back(std::move(v));
    }
    return versions;
}

std::vector<Chromaticity> chromaticity_cloud(CloudKind kind, int n, Rng& rng, CloudInput input,
                                             const JitterConfig& cfg) {
    if (n < 1) {
        throw std::invalid_argument("cloud sample count must be >= 1");
    }
    cfg.validate();
    std::vector<Chromaticity> points;
    points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rgb px = input == CloudInput::neutral_gray ? gray_probe() : random_rgb(rng);
        if (kind == CloudKind::planckian) {
            const IlluminantRgb illum = illuminant_rgb(draw_jitter_temperature(cfg, rng));
            px = clamp_rgb({px.r * illum.r, px.g * illum.g, px.b * illum.b});
        } else {
            const double b = sample_factor(rng, cfg.brightness_strength);
            const double c = sample_factor(rng, cfg.contrast_strength);
            const double s = sample_factor(rng, cfg.cj_saturation_strength);
            const double h = rng.uniform(-cfg.cj_hue_strength, cfg.cj_hue_strength);
            px = clamp_rgb({px.r * b, px.g * b, px.b * b});
            const double mu = pixel_luma(px);  // single-pixel spatial mean
            px = clamp_rgb({c * px.r + (1.0 - c) * mu, c * px.g + (1.0 - c) * mu, c * px.b + (1.0 - c) * mu});
            const double y = pixel_luma(px);
            px = clamp_rgb({s * px.r + (1.0 - s) * y, s * px.g + (1.0 - s) * y, s * px.b + (1.0 - s) * y});
            double hh = 0.0;
            double ss = 0.0;
            double vv = 0.0;
            pixel::rgb_to_hsv(px.r, px.g, px.b, hh, ss, vv);
            pixel::hsv_to_rgb(hh + h, ss, vv, px.r, px.g, px.b);
            px = clamp_rgb(px);
        }
        const Tristimulus t = srgb_to_xyz(px);
        if (!(t.X + t.Y + t.Z > 0.0)) {
            continue;  // black output carries no chromaticity
        }
        points.push_back(xy_chromaticity(t));
    }
    return points;
}

}  // namespace planckian
