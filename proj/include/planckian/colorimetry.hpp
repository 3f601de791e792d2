// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>

#include "planckian/spectral.hpp"

namespace planckian {

// CIE XYZ tristimulus, relative units.
struct Tristimulus {
    double X = 0.0;
    double Y = 0.0;
    double Z = 0.0;
};

// CIE 1976 L*a*b*; L on the 0-100 scale.
struct Lab {
    double L = 0.0;
    double a = 0.0;
    double b = 0.0;
};

// Gamma-encoded sRGB triple in [0, 1].
struct Rgb {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;
};

// sRGB rendering of a black-body illuminant.
struct IlluminantRgb {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;
    double temperature = 0.0;  // K
};

struct Chromaticity {
    double x = 0.0;
    double y = 0.0;
};

// D65 2-degree reference white, normalized to Yn = 1. The numerals are the
// standard published values (IEC 61966-2-1 / CIE 15).
struct WhitePoint {
    double Xn = 0.95047;
    double Yn = 1.0;
    double Zn = 1.08883;
};

inline constexpr WhitePoint kD65{};

// CIE 1931 2-degree standard-observer color matching functions tabulated on
// the same 31-point grid as Spectrum. The embedded values are the classic
// 10 nm tabulation (Wyszecki & Stiles, Table I(3.3.1)); the same table is
// shipped as data/cie_1931_2deg_10nm.csv for independent cross-checks.
struct CmfTable {
    std::array<double, Spectrum::kSampleCount> wavelength{};  // m
    std::array<double, Spectrum::kSampleCount> x_bar{};
    std::array<double, Spectrum::kSampleCount> y_bar{};
    std::array<double, Spectrum::kSampleCount> z_bar{};

    static const CmfTable& cie1931_2deg();
};

// Riemann sum of the spectrum against the matching functions:
//   X = sum_i sigma(lambda_i) * x_bar(lambda_i) * dLambda   (same for Y, Z).
// Throws std::invalid_argument if the table grid does not match the spectrum grid.
Tristimulus spectrum_to_xyz(const Spectrum& s, const CmfTable& cmf);

// Scales so that Y = 1; chromaticity is unchanged. Throws std::domain_error for Y <= 0.
Tristimulus normalize_y(const Tristimulus& t);

Lab xyz_to_lab(const Tristimulus& t, const WhitePoint& white = kD65);
Tristimulus lab_to_xyz(const Lab& lab, const WhitePoint& white = kD65);

// Standard piecewise sRGB transfer function (IEC 61966-2-1).
double srgb_encode(double linear);
double srgb_decode(double encoded);

// Linear-sRGB matrix (D65 primaries), per-channel clamp to [0, 1], then gamma
// encoding. Out-of-gamut stimuli are clamped, not rescaled.
Rgb xyz_to_srgb(const Tristimulus& t);

// Inverse of xyz_to_srgb for in-range inputs: gamma decode then matrix.
Tristimulus srgb_to_xyz(const Rgb& rgb);

// x = X/(X+Y+Z), y = Y/(X+Y+Z). Throws std::domain_error when X+Y+Z <= 0.
Chromaticity xy_chromaticity(const Tristimulus& t);

// Full rendering of a black body as an sRGB illuminant:
// blackbody_spectrum -> spectrum_to_xyz -> normalize_y -> xyz_to_lab ->
// L fixed to 50 -> lab_to_xyz -> xyz_to_srgb.
IlluminantRgb illuminant_rgb(double temperature);

}  // namespace planckian
