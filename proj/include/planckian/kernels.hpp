// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

// Per-pixel kernels behind the jitter operations. planckian::kernels holds
// the OpenMP implementations used in production; planckian::reference holds
// serial twins used as the test oracle and by the kernel benchmark. Both
// compile the same per-element expressions (planckian::pixel), and the mean
// reduction uses a fixed block structure, so results are bit-identical
// between the two namespaces and across thread counts.

namespace planckian {

// Block length (in pixels) of the deterministic mean reduction.
inline constexpr std::int64_t kMeanBlockPixels = 4096;

namespace pixel {

inline float clamp01(double v) { return static_cast<float>(std::clamp(v, 0.0, 1.0)); }

// ITU-R BT.601 luma weights.
inline double luma(double r, double g, double b) { return 0.299 * r + 0.587 * g + 0.114 * b; }

inline void rgb_to_hsv(double r, double g, double b, double& h, double& s, double& v) {
    const double mx = std::max({r, g, b});
    const double mn = std::min({r, g, b});
    const double d = mx - mn;
    v = mx;
    s = mx > 0.0 ? d / mx : 0.0;
    if (d <= 0.0) {
        h = 0.0;
        return;
    }
    if (mx == r) {
        h = (g - b) / d;
    } else if (mx == g) {
        h = (b - r) / d + 2.0;
    } else {
        h = (r - g) / d + 4.0;
    }
    h /= 6.0;
    if (h < 0.0) {
        h += 1.0;
    }
}

inline void hsv_to_rgb(double h, double s, double v, double& r, double& g, double& b) {
    if (s <= 0.0) {
        r = g = b = v;
        return;
    }
    h -= std::floor(h);
    const double h6 = h * 6.0;
    const int i = std::min(static_cast<int>(h6), 5);
    const double f = h6 - i;
    const double p = v * (1.0 - s);
    const double q = v * (1.0 - s * f);
    const double t = v * (1.0 - s * (1.0 - f));
    switch (i) {
        case 0: r = v; g = t; b = p; break;
        case 1: r = q; g = v; b = p; break;
        case 2: r = p; g = v; b = t; break;
        case 3: r = p; g = q; b = v; break;
        case 4: r = t; g = p; b = v; break;
        default: r = v; g = p; b = q; break;
    }
}

}  // namespace pixel

namespace kernels {

// out = clamp(in * (r, g, b)) in the gamma-encoded domain.
void scale_rgb(const float* in, float* out, std::int64_t n_px, double r, double g, double b);

// Same multiplication applied to linear light: decode, scale, re-encode.
void scale_rgb_linear(const float* in, float* out, std::int64_t n_px, double r, double g, double b);

// out = clamp(gain * v + bias) over all channel values.
void affine(const float* in, float* out, std::int64_t n_values, double gain, double bias);

// Luma replicated into all three channels.
void grayscale(const float* in, float* out, std::int64_t n_px);

// Blend each pixel toward its own luma: out = clamp(f * px + (1 - f) * luma(px)).
void saturate(const float* in, float* out, std::int64_t n_px, double factor);

// HSV hue rotation by delta (fraction of a full turn).
void shift_hue(const float* in, float* out, std::int64_t n_px, double delta);

// Mean over pixels of luma(scale * px), accumulated in double over fixed
// 4096-pixel blocks (block partials summed in index order).
double mean_luma_scaled(const float* in, std::int64_t n_px, double scale);

}  // namespace kernels

namespace reference {

void scale_rgb(const float* in, float* out, std::int64_t n_px, double r, double g, double b);
void scale_rgb_linear(const float* in, float* out, std::int64_t n_px, double r, double g, double b);
void affine(const float* in, float* out, std::int64_t n_values, double gain, double bias);
void grayscale(const float* in, float* out, std::int64_t n_px);
void saturate(const float* in, float* out, std::int64_t n_px, double factor);
void shift_hue(const float* in, float* out, std::int64_t n_px, double delta);
double mean_luma_scaled(const float* in, std::int64_t n_px, double scale);

}  // namespace reference

}  // namespace planckian
