// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "planckian/colorimetry.hpp"
#include "planckian/image.hpp"
#include "planckian/rng.hpp"
#include "planckian/spectral.hpp"

namespace planckian {

enum class TemperatureSampling {
    uniform_kelvin,  // uniform in T
    uniform_mired,   // uniform in 1/T
    discrete,        // uniform over discrete_steps evenly spaced temperatures
};

// Parameters of both jitter pipelines. A strength s means the corresponding
// factor is drawn from Uniform[max(0, 1-s), 1+s] per call; hue shifts are
// drawn from Uniform[-s, s] (fractions of a full turn).
struct JitterConfig {
    TemperatureRange temperature_range{};
    double brightness_strength = 0.8;
    double contrast_strength = 0.8;
    double cj_saturation_strength = 0.8;  // baseline jitter only
    double cj_hue_strength = 0.2;         // baseline jitter only
    double cj_apply_probability = 0.8;    // baseline jitter only
    double grayscale_probability = 0.2;   // baseline jitter only
    std::uint64_t seed = 1234;

    TemperatureSampling temperature_sampling = TemperatureSampling::uniform_kelvin;
    int discrete_steps = 25;
    // Apply the Von-Kries multiplication to linear light instead of the
    // gamma-encoded values. Off by default.
    bool reilluminate_linear_light = false;
    // Apply brightness_strength / contrast_strength literally as the
    // brightness/contrast coefficients instead of sampling factors.
    bool fixed_brightness_contrast = false;

    void validate() const;
};

// One temperature draw according to cfg.temperature_sampling.
double draw_jitter_temperature(const JitterConfig& cfg, Rng& rng);

// Von-Kries re-illumination: each channel is multiplied by the illuminant
// component (the assumed original white is (1,1,1), so the division by it is
// a no-op), then clamped to [0, 1].
Image reilluminate(const Image& img, const IlluminantRgb& illum, bool linear_light = false);

// out = clamp(contrast * brightness * I + (1 - contrast) * mu) where mu is
// the spatial mean of the per-pixel luma of brightness * I (see
// kernels::mean_luma_scaled for the exact accumulation order).
Image brightness_contrast(const Image& img, double brightness, double contrast);

// Per-pixel BT.601 luma replicated into all three channels.
Image to_grayscale(const Image& img);

// Full Planckian Jitter: sample a temperature, render the black-body
// illuminant, re-illuminate, then apply brightness/contrast variation.
// Always applied (no skip probability). Draw order: temperature, brightness
// factor, contrast factor; the factor draws are skipped in
// fixed_brightness_contrast mode.
Image planckian_jitter(const Image& img, const JitterConfig& cfg, Rng& rng);

// Baseline color jitter: with probability cj_apply_probability applies
// brightness, contrast, saturation and hue shifts (in that order), then with
// probability grayscale_probability converts to grayscale. Draw order: apply
// decision, then (if applied) the four factors, then grayscale decision.
Image default_color_jitter(const Image& img, const JitterConfig& cfg, Rng& rng);

}  // namespace planckian
