// SPDX-License-Identifier: Apache-2.0
#include "planckian/image.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace planckian {

Image::Image(int w, int h) : width(w), height(h) {
    if (w < 1 || h < 1) {
        throw std::invalid_argument("image dimensions must be >= 1, got " + std::to_string(w) + "x" +
                                    std::to_string(h));
    }
    pixels.assign(value_count(), 0.0f);
}

Image Image::filled(int w, int h, float r, float g, float b) {
    Image img(w, h);
    for (std::size_t i = 0; i < img.pixel_count(); ++i) {
        img.pixels[i * 3 + 0] = r;
        img.pixels[i * 3 + 1] = g;
        img.pixels[i * 3 + 2] = b;
    }
    return img;
}

void Image::validate() const {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("image dimensions must be >= 1");
    }
    if (pixels.size() != value_count()) {
        throw std::invalid_argument("pixel buffer size does not match dimensions");
    }
    for (float v : pixels) {
        if (!(v >= 0.0f && v <= 1.0f)) {
            throw std::invalid_argument("pixel value outside [0, 1]: " + std::to_string(v));
        }
    }
}

}  // namespace planckian
