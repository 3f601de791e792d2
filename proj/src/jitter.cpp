// SPDX-License-Identifier: Apache-2.0
#include "planckian/jitter.hpp"

#include <algorithm>
#include <stdexcept>

#include "planckian/kernels.hpp"

namespace planckian {

namespace {

void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must be in [0, 1]");
    }
}

void check_strength(double s, const char* name) {
    if (!(s >= 0.0)) {
        throw std::invalid_argument(std::string(name) + " must be >= 0");
    }
}

double sample_factor(Rng& rng, double strength) {
    return rng.uniform(std::max(0.0, 1.0 - strength), 1.0 + strength);
}

}  // namespace

double draw_jitter_temperature(const JitterConfig& cfg, Rng& rng) {
    switch (cfg.temperature_sampling) {
        case TemperatureSampling::uniform_mired:
            return sample_temperature_mired(cfg.temperature_range, rng);
        case TemperatureSampling::discrete: {
            cfg.temperature_range.validate();
            const int k = cfg.discrete_steps;
            const int idx = std::min(static_cast<int>(rng.uniform() * k), k - 1);
            if (k == 1) {
                return cfg.temperature_range.t_min;
            }
            return cfg.temperature_range.t_min +
                   (cfg.temperature_range.t_max - cfg.temperature_range.t_min) * idx / (k - 1);
        }
        case TemperatureSampling::uniform_kelvin:
        default:
            return sample_temperature(cfg.temperature_range, rng);
    }
}

void JitterConfig::validate() const {
    temperature_range.validate();
    check_strength(brightness_strength, "brightness_strength");
    check_strength(contrast_strength, "contrast_strength");
    check_strength(cj_saturation_strength, "cj_saturation_strength");
    check_strength(cj_hue_strength, "cj_hue_strength");
    check_probability(cj_apply_probability, "cj_apply_probability");
    check_probability(grayscale_probability, "grayscale_probability");
    if (discrete_steps < 1) {
        throw std::invalid_argument("discrete_steps must be >= 1");
    }
}

Image reilluminate(const Image& img, const IlluminantRgb& illum, bool linear_light) {
    Image out(img.width, img.height);
    const auto n = static_cast<std::int64_t>(img.pixel_count());
    if (linear_light) {
        kernels::scale_rgb_linear(img.pixels.data(), out.pixels.data(), n, illum.r, illum.g, illum.b);
    } else {
        kernels::scale_rgb(img.pixels.data(), out.pixels.data(), n, illum.r, illum.g, illum.b);
    }
    return out;
}

Image brightness_contrast(const Image& img, double brightness, double contrast) {
    if (!(brightness >= 0.0) || !(contrast >= 0.0)) {
        throw std::invalid_argument("brightness/contrast factors must be >= 0");
    }
    const auto n = static_cast<std::int64_t>(img.pixel_count());
    const double mu = kernels::mean_luma_scaled(img.pixels.data(), n, brightness);
    Image out(img.width, img.height);
    kernels::affine(img.pixels.data(), out.pixels.data(), n * 3, contrast * brightness, (1.0 - contrast) * mu);
    return out;
}

Image to_grayscale(const Image& img) {
    Image out(img.width, img.height);
    kernels::grayscale(img.pixels.data(), out.pixels.data(), static_cast<std::int64_t>(img.pixel_count()));
    return out;
}

Image planckian_jitter(const Image& img, const JitterConfig& cfg, Rng& rng) {
    cfg.validate();
    const double temperature = draw_jitter_temperature(cfg, rng);
    const Image lit = reilluminate(img, illuminant_rgb(temperature), cfg.reilluminate_linear_light);
    double b = cfg.brightness_strength;
    double c = cfg.contrast_strength;
    if (!cfg.fixed_brightness_contrast) {
        b = sample_factor(rng, cfg.brightness_strength);
        c = sample_factor(rng, cfg.contrast_strength);
    }
    return brightness_contrast(lit, b, c);
}

Image default_color_jitter(const Image& img, const JitterConfig& cfg, Rng& rng) {
    cfg.validate();
    const auto n = static_cast<std::int64_t>(img.pixel_count());
    Image out = img;
    if (rng.bernoulli(cfg.cj_apply_probability)) {
        const double b = sample_factor(rng, cfg.brightness_strength);
        const double c = sample_factor(rng, cfg.contrast_strength);
        const double s = sample_factor(rng, cfg.cj_saturation_strength);
        const double h = rng.uniform(-cfg.cj_hue_strength, cfg.cj_hue_strength);

        Image tmp(img.width, img.height);
        kernels::affine(out.pixels.data(), tmp.pixels.data(), n * 3, b, 0.0);
        const double mu = kernels::mean_luma_scaled(tmp.pixels.data(), n, 1.0);
        kernels::affine(tmp.pixels.data(), out.pixels.data(), n * 3, c, (1.0 - c) * mu);
        kernels::saturate(out.pixels.data(), tmp.pixels.data(), n, s);
        kernels::shift_hue(tmp.pixels.data(), out.pixels.data(), n, h);
    }
    if (rng.bernoulli(cfg.grayscale_probability)) {
        Image tmp(img.width, img.height);
        kernels::grayscale(out.pixels.data(), tmp.pixels.data(), n);
        out = std::move(tmp);
    }
    return out;
}

}  // namespace planckian
