// SPDX-License-Identifier: Apache-2.0
#include "planckian/imageio.hpp"

#include <jpeglib.h>
#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <vector>

namespace planckian::io {

namespace {

constexpr float kInv255 = 1.0f / 255.0f;

std::uint8_t quantize(float v) {
    // round-half-up, pinned so that golden files stay stable
    return static_cast<std::uint8_t>(std::floor(v * 255.0 + 0.5));
}

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) {
            std::fclose(f);
        }
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::filesystem::path& path, const char* mode) {
    FilePtr f(std::fopen(path.string().c_str(), mode));
    if (!f) {
        if (mode[0] == 'r') {
            throw IoError(IoErrorKind::missing_file, "cannot open " + path.string());
        }
        throw IoError(IoErrorKind::io_failure, "cannot write " + path.string());
    }
    return f;
}

Image from_bytes(const std::vector<std::uint8_t>& bytes, int width, int height, int channels) {
    Image img(width, height);
    const std::size_t n = img.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        if (channels == 1) {
            const float v = bytes[i] * kInv255;
            img.pixels[i * 3 + 0] = v;
            img.pixels[i * 3 + 1] = v;
            img.pixels[i * 3 + 2] = v;
        } else {
            img.pixels[i * 3 + 0] = bytes[i * 3 + 0] * kInv255;
            img.pixels[i * 3 + 1] = bytes[i * 3 + 1] * kInv255;
            img.pixels[i * 3 + 2] = bytes[i * 3 + 2] * kInv255;
        }
    }
    return img;
}

// ---- PNG ----

void png_error_handler(png_structp png, png_const_charp msg) {
    *static_cast<std::string*>(png_get_error_ptr(png)) = msg ? msg : "png error";
    longjmp(png_jmpbuf(png), 1);
}

void png_warning_handler(png_structp, png_const_charp) {}

Image load_png(const std::filesystem::path& path) {
    FilePtr f = open_file(path, "rb");
    std::string err;
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &err, png_error_handler, png_warning_handler);
    png_infop info = png_create_info_struct(png);
    std::vector<std::uint8_t> data;
    std::vector<png_bytep> rows;
    int width = 0;
    int height = 0;

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError(IoErrorKind::corrupt_data, "corrupt PNG " + path.string() + ": " + err);
    }

    png_init_io(png, f.get());
    png_read_info(png, info);

    const int bit_depth = png_get_bit_depth(png, info);
    if (bit_depth == 16) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError(IoErrorKind::unsupported_format, "16-bit PNG is not supported: " + path.string());
    }

    const int color_type = png_get_color_type(png, info);
    if (color_type == PNG_COLOR_TYPE_PALETTE) {
        png_set_palette_to_rgb(png);
    }
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
        png_set_expand_gray_1_2_4_to_8(png);
    }
    if (png_get_valid(png, info, PNG_INFO_tRNS)) {
        png_set_tRNS_to_alpha(png);
    }
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
        png_set_gray_to_rgb(png);
    }
    png_set_strip_alpha(png);
    png_set_interlace_handling(png);
    png_read_update_info(png, info);

    width = static_cast<int>(png_get_image_width(png, info));
    height = static_cast<int>(png_get_image_height(png, info));
    const std::size_t row_bytes = png_get_rowbytes(png, info);

    data.resize(row_bytes * height);
    rows.resize(height);
    for (int y = 0; y < height; ++y) {
        rows[y] = data.data() + row_bytes * y;
    }
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    if (row_bytes != static_cast<std::size_t>(width) * 3) {
        throw IoError(IoErrorKind::corrupt_data, "unexpected PNG row layout: " + path.string());
    }
    return from_bytes(data, width, height, 3);
}

void save_png(const Image& img, const std::filesystem::path& path) {
    FilePtr f = open_file(path, "wb");
    std::string err;
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &err, png_error_handler, png_warning_handler);
    png_infop info = png_create_info_struct(png);

    std::vector<std::uint8_t> data(img.value_count());
    for (std::size_t i = 0; i < img.value_count(); ++i) {
        data[i] = quantize(img.pixels[i]);
    }
    std::vector<png_bytep> rows(img.height);
    for (int y = 0; y < img.height; ++y) {
        rows[y] = data.data() + static_cast<std::size_t>(y) * img.width * 3;
    }

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError(IoErrorKind::io_failure, "failed to write PNG " + path.string() + ": " + err);
    }

    png_init_io(png, f.get());
    png_set_IHDR(png, info, img.width, img.height, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

// ---- PPM / PGM (binary) ----

int pnm_read_token(std::FILE* f) {
    // skips whitespace and '#' comments, returns a nonnegative integer
    int c = std::fgetc(f);
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') {
                c = std::fgetc(f);
            }
        } else if (!std::isspace(c)) {
            break;
        }
        if (c != EOF) {
            c = std::fgetc(f);
        }
    }
    if (c == EOF || !std::isdigit(c)) {
        return -1;
    }
    long value = 0;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        if (value > 1 << 30) {
            return -1;
        }
        c = std::fgetc(f);
    }
    return static_cast<int>(value);
}

Image load_pnm(const std::filesystem::path& path) {
    FilePtr f = open_file(path, "rb");
    char magic[2] = {0, 0};
    if (std::fread(magic, 1, 2, f.get()) != 2 || magic[0] != 'P' || (magic[1] != '6' && magic[1] != '5')) {
        throw IoError(IoErrorKind::corrupt_data, "bad PNM magic in " + path.string());
    }
    const int channels = magic[1] == '6' ? 3 : 1;
    const int width = pnm_read_token(f.get());
    const int height = pnm_read_token(f.get());
    const int maxval = pnm_read_token(f.get());
    if (width < 1 || height < 1 || maxval < 1) {
        throw IoError(IoErrorKind::corrupt_data, "bad PNM header in " + path.string());
    }
    if (maxval > 255) {
        throw IoError(IoErrorKind::unsupported_format, "16-bit PNM is not supported: " + path.string());
    }
    if (maxval != 255) {
        throw IoError(IoErrorKind::unsupported_format, "PNM maxval must be 255, got " + std::to_string(maxval));
    }
    const std::size_t expected = static_cast<std::size_t>(width) * height * channels;
    std::vector<std::uint8_t> data(expected);
    if (std::fread(data.data(), 1, expected, f.get()) != expected) {
        throw IoError(IoErrorKind::corrupt_data, "truncated PNM payload in " + path.string());
    }
    return from_bytes(data, width, height, channels);
}

void save_ppm(const Image& img, const std::filesystem::path& path) {
    FilePtr f = open_file(path, "wb");
    const std::string header = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    if (std::fwrite(header.data(), 1, header.size(), f.get()) != header.size()) {
        throw IoError(IoErrorKind::io_failure, "failed to write PPM header to " + path.string());
    }
    std::vector<std::uint8_t> data(img.value_count());
    for (std::size_t i = 0; i < img.value_count(); ++i) {
        data[i] = quantize(img.pixels[i]);
    }
    if (std::fwrite(data.data(), 1, data.size(), f.get()) != data.size()) {
        throw IoError(IoErrorKind::io_failure, "failed to write PPM payload to " + path.string());
    }
}

// ---- JPEG (decode only) ----

struct JpegErrorMgr {
    jpeg_error_mgr base;
    std::jmp_buf jump;
    char message[JMSG_LENGTH_MAX] = {0};
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* err = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    (*cinfo->err->format_message)(cinfo, err->message);
    longjmp(err->jump, 1);
}

Image load_jpeg(const std::filesystem::path& path) {
    FilePtr f = open_file(path, "rb");
    jpeg_decompress_struct cinfo;
    JpegErrorMgr err;
    cinfo.err = jpeg_std_error(&err.base);
    err.base.error_exit = jpeg_error_exit;

    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&cinfo);
        throw IoError(IoErrorKind::corrupt_data, "corrupt JPEG " + path.string() + ": " + err.message);
    }

    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, f.get());
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);

    const int width = static_cast<int>(cinfo.output_width);
    const int height = static_cast<int>(cinfo.output_height);
    std::vector<std::uint8_t> data(static_cast<std::size_t>(width) * height * 3);
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = data.data() + static_cast<std::size_t>(cinfo.output_scanline) * width * 3;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return from_bytes(data, width, height, 3);
}

}  // namespace

Image load_image(const std::filesystem::path& path) {
    std::uint8_t magic[8] = {0};
    {
        FilePtr f = open_file(path, "rb");
        if (std::fread(magic, 1, sizeof(magic), f.get()) < 2) {
            throw IoError(IoErrorKind::corrupt_data, "file too short: " + path.string());
        }
    }
    static const std::uint8_t png_sig[8] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
    if (std::memcmp(magic, png_sig, 8) == 0) {
        return load_png(path);
    }
    if (magic[0] == 'P' && (magic[1] == '6' || magic[1] == '5')) {
        return load_pnm(path);
    }
    if (magic[0] == 0xff && magic[1] == 0xd8) {
        return load_jpeg(path);
    }
    throw IoError(IoErrorKind::unsupported_format, "unrecognized image format: " + path.string());
}

void save_image(const Image& img, const std::filesystem::path& path, ImageFormat format) {
    img.validate();
    switch (format) {
        case ImageFormat::png:
            save_png(img, path);
            return;
        case ImageFormat::ppm:
            save_ppm(img, path);
            return;
        case ImageFormat::jpeg:
            throw IoError(IoErrorKind::unsupported_format, "JPEG encoding is not supported");
    }
    throw IoError(IoErrorKind::unsupported_format, "unknown image format");
}

ImageFormat format_from_extension(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == ".png") {
        return ImageFormat::png;
    }
    if (ext == ".ppm") {
        return ImageFormat::ppm;
    }
    if (ext == ".jpg" || ext == ".jpeg") {
        return ImageFormat::jpeg;
    }
    throw IoError(IoErrorKind::unsupported_format, "unrecognized image extension: " + path.string());
}

}  // namespace planckian::io
