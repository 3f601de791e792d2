// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "planckian/colorimetry.hpp"
#include "planckian/kernels.hpp"

// Per-element bodies shared by the OpenMP kernels and the serial reference,
// so both namespaces execute identical floating-point expressions.

namespace planckian::elems {

inline void scale(const float* p, float* q, double r, double g, double b) {
    q[0] = pixel::clamp01(p[0] * r);
    q[1] = pixel::clamp01(p[1] * g);
    q[2] = pixel::clamp01(p[2] * b);
}

inline void scale_linear(const float* p, float* q, double r, double g, double b) {
    q[0] = pixel::clamp01(srgb_encode(srgb_decode(p[0]) * r));
    q[1] = pixel::clamp01(srgb_encode(srgb_decode(p[1]) * g));
    q[2] = pixel::clamp01(srgb_encode(srgb_decode(p[2]) * b));
}

inline float affine(float v, double gain, double bias) { return pixel::clamp01(gain * v + bias); }

inline void grayscale(const float* p, float* q) {
    const float y = pixel::clamp01(pixel::luma(p[0], p[1], p[2]));
    q[0] = y;
    q[1] = y;
    q[2] = y;
}

inline void saturate(const float* p, float* q, double f) {
    const double y = pixel::luma(p[0], p[1], p[2]);
    const double keep = 1.0 - f;
    q[0] = pixel::clamp01(f * p[0] + keep * y);
    q[1] = pixel::clamp01(f * p[1] + keep * y);
    q[2] = pixel::clamp01(f * p[2] + keep * y);
}

inline void shift_hue(const float* p, float* q, double delta) {
    double h;
    double s;
    double v;
    pixel::rgb_to_hsv(p[0], p[1], p[2], h, s, v);
    double r;
    double g;
    double b;
    pixel::hsv_to_rgb(h + delta, s, v, r, g, b);
    q[0] = pixel::clamp01(r);
    q[1] = pixel::clamp01(g);
    q[2] = pixel::clamp01(b);
}

inline double block_luma_sum(const float* in, std::int64_t first_px, std::int64_t last_px, double scale) {
    double sum = 0.0;
    for (std::int64_t i = first_px; i < last_px; ++i) {
        const float* p = in + i * 3;
        sum += pixel::luma(scale * p[0], scale * p[1], scale * p[2]);
    }
    return sum;
}

}  // namespace planckian::elems
