// SPDX-License-Identifier: Apache-2.0
#include "planckian/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace planckian {

void TemperatureRange::validate() const {
    if (!(t_min > 0.0) || !(t_max >= t_min)) {
        throw std::domain_error("invalid temperature range [" + std::to_string(t_min) + ", " +
                                std::to_string(t_max) + "] K");
    }
}

double planck_radiance(double temperature, double lambda) {
    if (!(temperature > 0.0)) {
        throw std::domain_error("temperature must be positive, got " + std::to_string(temperature));
    }
    if (!(lambda > 0.0)) {
        throw std::domain_error("wavelength must be positive, got " + std::to_string(lambda));
    }
    constexpr double c = kPhysicalConstants.speed_of_light;
    constexpr double h = kPhysicalConstants.planck_constant;
    constexpr double k = kPhysicalConstants.boltzmann_constant;

    const double lambda5 = lambda * lambda * lambda * lambda * lambda;
    const double exponent = h * c / (k * temperature * lambda);
    return 2.0 * std::numbers::pi * h * c * c / (lambda5 * std::expm1(exponent));
}

Spectrum blackbody_spectrum(double temperature) {
    Spectrum s;
    s.temperature = temperature;
    for (std::size_t i = 0; i < Spectrum::kSampleCount; ++i) {
        s.power[i] = planck_radiance(temperature, Spectrum::wavelength(i));
    }
    return s;
}

double sample_temperature(const TemperatureRange& range, Rng& rng) {
    range.validate();
    return rng.uniform(range.t_min, range.t_max);
}

double sample_temperature_mired(const TemperatureRange& range, Rng& rng) {
    range.validate();
    const double m = rng.uniform(1e6 / range.t_max, 1e6 / range.t_min);
    return 1e6 / m;
}

}  // namespace planckian
