// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "planckian/image.hpp"

namespace planckian::io {

enum class ImageFormat { png, ppm, jpeg };

enum class IoErrorKind { missing_file, unsupported_format, corrupt_data, io_failure };

class IoError : public std::runtime_error {
public:
    IoError(IoErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
    IoErrorKind kind() const { return kind_; }

private:
    IoErrorKind kind_;
};

// Decodes PNG (8-bit), binary PPM/PGM (maxval 255) or JPEG, sniffing the
// format from the file's magic bytes. 8-bit values map to [0,1] via v/255;
// grayscale files are replicated to three channels. 16-bit files raise an
// unsupported_format error.
Image load_image(const std::filesystem::path& path);

// Encodes with round-half-up quantization, round(v*255). PNG and PPM only;
// JPEG is decode-only.
void save_image(const Image& img, const std::filesystem::path& path, ImageFormat format);

// Picks the format from the file extension (.png/.ppm/.jpg/.jpeg).
ImageFormat format_from_extension(const std::filesystem::path& path);

}  // namespace planckian::io
