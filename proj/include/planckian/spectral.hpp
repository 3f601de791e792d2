// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>

#include "planckian/rng.hpp"

namespace planckian {

// Physical constants used by the black-body synthesis. The values are the
// CODATA-1973 recommendations (h, k) plus the exact SI speed of light; they
// are pinned because changing them changes every generated illuminant.
struct PhysicalConstants {
    double speed_of_light = 2.99792458e8;      // m/s
    double planck_constant = 6.626176e-34;     // J s
    double boltzmann_constant = 1.380662e-23;  // J/K
};

inline constexpr PhysicalConstants kPhysicalConstants{};

// Discretized spectral power distribution of a black body: 31 samples on the
// fixed 400-700 nm grid in 10 nm steps.
struct Spectrum {
    static constexpr std::size_t kSampleCount = 31;
    static constexpr double kLambdaStep = 10e-9;  // m

    static constexpr double wavelength(std::size_t i) { return (400.0 + 10.0 * static_cast<double>(i)) * 1e-9; }

    double temperature = 0.0;                  // K
    std::array<double, kSampleCount> power{};  // W/m^3
};

struct TemperatureRange {
    double t_min = 3000.0;  // K
    double t_max = 15000.0;

    // Collapsed ranges (t_min == t_max) are allowed; they pin the illuminant.
    void validate() const;
};

// Spectral radiance of a black body at temperature T (K) and wavelength
// lambda (m):  2*pi*h*c^2 / (lambda^5 * (exp(h*c/(k*T*lambda)) - 1)).
// Throws std::domain_error for non-positive T or lambda.
double planck_radiance(double temperature, double lambda);

// Radiance sampled over the canonical 31-point grid.
Spectrum blackbody_spectrum(double temperature);

// Uniform draw in [t_min, t_max] kelvin.
double sample_temperature(const TemperatureRange& range, Rng& rng);

// Uniform draw in reciprocal temperature (mired), mapped back to kelvin.
// Weights the warm end more heavily than the kelvin-uniform draw.
double sample_temperature_mired(const TemperatureRange& range, Rng& rng);

}  // namespace planckian
