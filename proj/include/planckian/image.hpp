// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

namespace planckian {

// H x W x 3 interleaved RGB buffer, gamma-encoded sRGB floats in [0, 1].
struct Image {
    int width = 0;
    int height = 0;
    std::vector<float> pixels;

    Image() = default;
    Image(int w, int h);

    static Image filled(int w, int h, float r, float g, float b);

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * static_cast<std::size_t>(height); }
    std::size_t value_count() const { return pixel_count() * 3; }

    float& at(int x, int y, int c) { return pixels[(static_cast<std::size_t>(y) * width + x) * 3 + c]; }
    float at(int x, int y, int c) const { return pixels[(static_cast<std::size_t>(y) * width + x) * 3 + c]; }

    // Throws std::invalid_argument on bad dimensions, buffer size mismatch,
    // or any value outside [0, 1].
    void validate() const;

    bool operator==(const Image&) const = default;
};

}  // namespace planckian
