// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "planckian/colorimetry.hpp"

namespace planckian::svg {

struct ScatterSeries {
    std::vector<Chromaticity> points;
    std::string color = "#1f77b4";
    double radius = 1.0;
    std::string label;
};

struct PolylineSeries {
    std::vector<Chromaticity> points;
    std::string color = "#888888";
    double width = 1.0;
    bool closed = false;
    std::string label;
};

// xy-chromaticity scatter on a fixed [0, 0.8] x [0, 0.9] frame.
void write_chromaticity_svg(const std::filesystem::path& path, const std::string& title,
                            const std::vector<ScatterSeries>& scatters,
                            const std::vector<PolylineSeries>& polylines);

// The sRGB primaries triangle, for overlaying on chromaticity diagrams.
PolylineSeries srgb_gamut_triangle();

struct LineChartSeries {
    std::string label;
    std::vector<double> y;
    std::string color = "#1f77b4";
};

// Simple line chart with shared x values (used for the timing comparison).
void write_line_chart_svg(const std::filesystem::path& path, const std::string& title,
                          const std::string& x_label, const std::string& y_label,
                          const std::vector<double>& x, const std::vector<LineChartSeries>& series);

}  // namespace planckian::svg
