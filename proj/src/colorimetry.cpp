// SPDX-License-Identifier: Apache-2.0
#include "planckian/colorimetry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace planckian {

namespace {

// sRGB D65 matrices (IEC 61966-2-1 reference values).
constexpr double kRgbToXyz[3][3] = {
    {0.4124564, 0.3575761, 0.1804375},
    {0.2126729, 0.7151522, 0.0721750},
    {0.0193339, 0.1191920, 0.9503041},
};

constexpr double kXyzToRgb[3][3] = {
    {3.2404542, -1.5371385, -0.4985314},
    {-0.9692660, 1.8760108, 0.0415560},
    {0.0556434, -0.2040259, 1.0572252},
};

constexpr double kLabDelta = 6.0 / 29.0;

double lab_f(double t) {
    if (t > kLabDelta * kLabDelta * kLabDelta) {
        return std::cbrt(t);
    }
    return t / (3.0 * kLabDelta * kLabDelta) + 4.0 / 29.0;
}

double lab_f_inv(double t) {
    if (t > kLabDelta) {
        return t * t * t;
    }
    return 3.0 * kLabDelta * kLabDelta * (t - 4.0 / 29.0);
}

}  // namespace

Tristimulus spectrum_to_xyz(const Spectrum& s, const CmfTable& cmf) {
    for (std::size_t i = 0; i < Spectrum::kSampleCount; ++i) {
        if (cmf.wavelength[i] != Spectrum::wavelength(i)) {
            throw std::invalid_argument("CMF table grid does not match the spectrum grid");
        }
    }
    Tristimulus t;
    for (std::size_t i = 0; i < Spectrum::kSampleCount; ++i) {
        t.X += s.power[i] * cmf.x_bar[i];
        t.Y += s.power[i] * cmf.y_bar[i];
        t.Z += s.power[i] * cmf.z_bar[i];
    }
    t.X *= Spectrum::kLambdaStep;
    t.Y *= Spectrum::kLambdaStep;
    t.Z *= Spectrum::kLambdaStep;
    return t;
}

Tristimulus normalize_y(const Tristimulus& t) {
    if (!(t.Y > 0.0)) {
        throw std::domain_error("degenerate stimulus: Y must be positive to normalize");
    }
    return {t.X / t.Y, 1.0, t.Z / t.Y};
}

Lab xyz_to_lab(const Tristimulus& t, const WhitePoint& white) {
    const double fx = lab_f(t.X / white.Xn);
    const double fy = lab_f(t.Y / white.Yn);
    const double fz = lab_f(t.Z / white.Zn);
    return {116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

Tristimulus lab_to_xyz(const Lab& lab, const WhitePoint& white) {
    const double fy = (lab.L + 16.0) / 116.0;
    const double fx = fy + lab.a / 500.0;
    const double fz = fy - lab.b / 200.0;
    return {white.Xn * lab_f_inv(fx), white.Yn * lab_f_inv(fy), white.Zn * lab_f_inv(fz)};
}

double srgb_encode(double linear) {
    if (linear <= 0.0031308) {
        return 12.92 * linear;
    }
    return 1.055 * std::pow(linear, 1.0 / 2.4) - 0.055;
}

double srgb_decode(double encoded) {
    if (encoded <= 0.04045) {
        return encoded / 12.92;
    }
    return std::pow((encoded + 0.055) / 1.055, 2.4);
}

Rgb xyz_to_srgb(const Tristimulus& t) {
    const double in[3] = {t.X, t.Y, t.Z};
    double lin[3];
    for (int r = 0; r < 3; ++r) {
        lin[r] = kXyzToRgb[r][0] * in[0] + kXyzToRgb[r][1] * in[1] + kXyzToRgb[r][2] * in[2];
        lin[r] = std::clamp(lin[r], 0.0, 1.0);
    }
    return {srgb_encode(lin[0]), srgb_encode(lin[1]), srgb_encode(lin[2])};
}

Tristimulus srgb_to_xyz(const Rgb& rgb) {
    const double lin[3] = {srgb_decode(rgb.r), srgb_decode(rgb.g), srgb_decode(rgb.b)};
    Tristimulus t;
    t.X = kRgbToXyz[0][0] * lin[0] + kRgbToXyz[0][1] * lin[1] + kRgbToXyz[0][2] * lin[2];
    t.Y = kRgbToXyz[1][0] * lin[0] + kRgbToXyz[1][1] * lin[1] + kRgbToXyz[1][2] * lin[2];
    t.Z = kRgbToXyz[2][0] * lin[0] + kRgbToXyz[2][1] * lin[1] + kRgbToXyz[2][2] * lin[2];
    return t;
}

Chromaticity xy_chromaticity(const Tristimulus& t) {
    const double sum = t.X + t.Y + t.Z;
    if (!(sum > 0.0)) {
        throw std::domain_error("degenerate stimulus: X+Y+Z must be positive for chromaticity");
    }
    return {t.X / sum, t.Y / sum};
}

IlluminantRgb illuminant_rgb(double temperature) {
    const Spectrum s = blackbody_spectrum(temperature);
    const Tristimulus xyz = normalize_y(spectrum_to_xyz(s, CmfTable::cie1931_2deg()));
    Lab lab = xyz_to_lab(xyz);
    lab.L = 50.0;  // pin the rendered intensity; chroma is kept
    const Rgb rgb = xyz_to_srgb(lab_to_xyz(lab));
    return {rgb.r, rgb.g, rgb.b, temperature};
}

}  // namespace planckian
