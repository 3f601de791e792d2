// SPDX-License-Identifier: Apache-2.0
#include "planckian/kernels.hpp"

#include <vector>

#include "kernel_elems.hpp"

namespace planckian::kernels {

void scale_rgb(const float* in, float* out, std::int64_t n_px, double r, double g, double b) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n_px; ++i) {
        elems::scale(in + i * 3, out + i * 3, r, g, b);
    }
}

void scale_rgb_linear(const float* in, float* out, std::int64_t n_px, double r, double g, double b) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n_px; ++i) {
        elems::scale_linear(in + i * 3, out + i * 3, r, g, b);
    }
}

void affine(const float* in, float* out, std::int64_t n_values, double gain, double bias) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n_values; ++i) {
        out[i] = elems::affine(in[i], gain, bias);
    }
}

void grayscale(const float* in, float* out, std::int64_t n_px) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n_px; ++i) {
        elems::grayscale(in + i * 3, out + i * 3);
    }
}

void saturate(const float* in, float* out, std::int64_t n_px, double factor) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n_px; ++i) {
        elems::saturate(in + i * 3, out + i * 3, factor);
    }
}

void shift_hue(const float* in, float* out, std::int64_t n_px, double delta) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n_px; ++i) {
        elems::shift_hue(in + i * 3, out + i * 3, delta);
    }
}

double mean_luma_scaled(const float* in, std::int64_t n_px, double scale) {
    const std::int64_t n_blocks = (n_px + kMeanBlockPixels - 1) / kMeanBlockPixels;
    std::vector<double> partial(static_cast<std::size_t>(n_blocks));
#pragma omp parallel for schedule(static)
    for (std::int64_t blk = 0; blk < n_blocks; ++blk) {
        const std::int64_t first = blk * kMeanBlockPixels;
        const std::int64_t last = std::min(first + kMeanBlockPixels, n_px);
        partial[static_cast<std::size_t>(blk)] = elems::block_luma_sum(in, first, last, scale);
    }
    double total = 0.0;
    for (double p : partial) {
        total += p;
    }
    return total / static_cast<double>(n_px);
}

}  // namespace planckian::kernels
