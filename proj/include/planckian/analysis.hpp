// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "planckian/colorimetry.hpp"
#include "planckian/image.hpp"
#include "planckian/jitter.hpp"
#include "planckian/rng.hpp"

namespace planckian {

// Aligned activations of one neuron over its top-N patches: color inputs (w)
// and the grayscale versions of the same patches (w').
struct ActivationSet {
    std::vector<double> color;
    std::vector<double> gray;

    void validate() const;
};

enum class NeuronClass { color_selective, intermediate, colorblind };

std::string to_string(NeuronClass c);

// alpha = 1 - sum(w') / sum(w). Throws std::domain_error when sum(w) is zero
// (degenerate neuron). Negative values are reported as-is, never clamped.
double color_selectivity(const ActivationSet& acts);

// Strict thresholds: alpha > 0.25 -> color-selective, alpha < 0.1 ->
// colorblind, otherwise intermediate (boundaries fall in intermediate).
NeuronClass classify_neuron(double alpha);

struct NeuronRecord {
    std::string id;
    std::vector<double> color;
    std::vector<double> gray;
};

struct NeuronReport {
    std::string id;
    double alpha = 0.0;
    NeuronClass cls = NeuronClass::intermediate;
};

struct ClassHistogram {
    int color_selective = 0;
    int intermediate = 0;
    int colorblind = 0;
};

// Reads neuron activations from CSV (one line per neuron:
// id,N,w_1..w_N,wgray_1..wgray_N) or JSON (array of {id, color, gray}),
// chosen by file extension. Malformed records raise std::runtime_error with
// the offending line/record number.
std::vector<NeuronRecord> load_activations(const std::filesystem::path& path);

std::vector<NeuronReport> selectivity_report(const std::vector<NeuronRecord>& records);

ClassHistogram histogram(const std::vector<NeuronReport>& reports);

// One re-illuminated copy of the input set per sweep temperature.
struct SweepVersion {
    double temperature = 0.0;
    std::vector<Image> images;
};

// k temperatures evenly spaced over [range.t_min, range.t_max] inclusive.
std::vector<double> sweep_temperatures(int k, const TemperatureRange& range = {});

// Re-illuminates every image with each of the k sweep illuminants
// (re-illumination only; no brightness/contrast sampling, fully
// deterministic). Throws std::invalid_argument for an empty input collection
// or k < 2.
std::vector<SweepVersion> illuminant_sweep(const std::vector<Image>& images, int k,
                                           const TemperatureRange& range = {});

enum class CloudKind { planckian, default_jitter };

// Input pixels fed to the cloud: mid-gray (0.5, 0.5, 0.5) probes, which for
// the Planckian transform trace the rendered locus, or uniform in-gamut RGB
// draws as in the diagram construction.
enum class CloudInput { neutral_gray, random_rgb };

// Applies the selected jitter's color transform to n sampled input pixels
// and returns the xy chromaticities of the outputs. For planckian this is
// re-illumination over the temperature range; for the default jitter the
// brightness/contrast/saturation/hue shifts (no apply/grayscale coin flips).
std::vector<Chromaticity> chromaticity_cloud(CloudKind kind, int n, Rng& rng, CloudInput input,
                                             const JitterConfig& cfg = {});

}  // namespace planckian
