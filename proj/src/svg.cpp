// SPDX-License-Identifier: Apache-2.0
#include "planckian/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace planckian::svg {

namespace {

constexpr int kCanvas = 640;
constexpr int kMargin = 50;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << v;
    return os.str();
}

struct Frame {
    double x0, x1, y0, y1;

    double px(double x) const { return kMargin + (x - x0) / (x1 - x0) * (kCanvas - 2 * kMargin); }
    double py(double y) const { return kCanvas - kMargin - (y - y0) / (y1 - y0) * (kCanvas - 2 * kMargin); }
};

void open_doc(std::ofstream& out, const std::string& title) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\"" << kCanvas
        << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << kCanvas / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"16\">" << title << "</text>\n";
}

void draw_axes(std::ofstream& out, const Frame& f, const std::string& x_label, const std::string& y_label) {
    out << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kCanvas - 2 * kMargin
        << "\" height=\"" << kCanvas - 2 * kMargin << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << kCanvas / 2 << "\" y=\"" << kCanvas - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << x_label << "</text>\n";
    out << "<text x=\"14\" y=\"" << kCanvas / 2 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"12\" transform=\"rotate(-90 14 " << kCanvas / 2 << ")\">" << y_label << "</text>\n";
    out << "<text x=\"" << kMargin << "\" y=\"" << kCanvas - kMargin + 16
        << "\" font-family=\"sans-serif\" font-size=\"10\">" << fmt(f.x0) << "</text>\n";
    out << "<text x=\"" << kCanvas - kMargin << "\" y=\"" << kCanvas - kMargin + 16
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << fmt(f.x1) << "</text>\n";
    out << "<text x=\"" << kMargin - 4 << "\" y=\"" << kCanvas - kMargin
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << fmt(f.y0) << "</text>\n";
    out << "<text x=\"" << kMargin - 4 << "\" y=\"" << kMargin + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << fmt(f.y1) << "</text>\n";
}

std::ofstream open_file(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write SVG to " + path.string());
    }
    return out;
}

}  // namespace

PolylineSeries srgb_gamut_triangle() {
    PolylineSeries tri;
    tri.points = {{0.64, 0.33}, {0.30, 0.60}, {0.15, 0.06}};
    tri.color = "#bbbbbb";
    tri.width = 1.0;
    tri.closed = true;
    tri.label = "sRGB gamut";
    return tri;
}

void write_chromaticity_svg(const std::filesystem::path& path, const std::string& title,
                            const std::vector<ScatterSeries>& scatters,
                            const std::vector<PolylineSeries>& polylines) {
    std::ofstream out = open_file(path);
    const Frame f{0.0, 0.8, 0.0, 0.9};
    open_doc(out, title);
    draw_axes(out, f, "x", "y");

    for (const auto& line : polylines) {
        out << "<polyline fill=\"none\" stroke=\"" << line.color << "\" stroke-width=\"" << line.width
            << "\" points=\"";
        for (const auto& p : line.points) {
            out << f.px(p.x) << "," << f.py(p.y) << " ";
        }
        if (line.closed && !line.points.empty()) {
            out << f.px(line.points.front().x) << "," << f.py(line.points.front().y);
        }
        out << "\"/>\n";
    }

    int legend_y = kMargin + 14;
    for (const auto& s : scatters) {
        for (const auto& p : s.points) {
            out << "<circle cx=\"" << f.px(p.x) << "\" cy=\"" << f.py(p.y) << "\" r=\"" << s.radius
                << "\" fill=\"" << s.color << "\" fill-opacity=\"0.5\"/>\n";
        }
        if (!s.label.empty()) {
            out << "<circle cx=\"" << kCanvas - kMargin - 120 << "\" cy=\"" << legend_y - 4 << "\" r=\"3\" fill=\""
                << s.color << "\"/>\n";
            out << "<text x=\"" << kCanvas - kMargin - 110 << "\" y=\"" << legend_y
                << "\" font-family=\"sans-serif\" font-size=\"11\">" << s.label << "</text>\n";
            legend_y += 16;
        }
    }
    out << "</svg>\n";
}

void write_line_chart_svg(const std::filesystem::path& path, const std::string& title,
                          const std::string& x_label, const std::string& y_label,
                          const std::vector<double>& x, const std::vector<LineChartSeries>& series) {
    if (x.empty() || series.empty()) {
        throw std::invalid_argument("line chart needs at least one point and one series");
    }
    std::ofstream out = open_file(path);
    double ymax = 0.0;
    for (const auto& s : series) {
        for (double v : s.y) {
            ymax = std::max(ymax, v);
        }
    }
    const Frame f{x.front(), x.back(), 0.0, ymax > 0.0 ? ymax * 1.1 : 1.0};
    open_doc(out, title);
    draw_axes(out, f, x_label, y_label);

    int legend_y = kMargin + 14;
    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < x.size() && i < s.y.size(); ++i) {
            out << f.px(x[i]) << "," << f.py(s.y[i]) << " ";
        }
        out << "\"/>\n";
        for (std::size_t i = 0; i < x.size() && i < s.y.size(); ++i) {
            out << "<circle cx=\"" << f.px(x[i]) << "\" cy=\"" << f.py(s.y[i]) << "\" r=\"3\" fill=\"" << s.color
                << "\"/>\n";
        }
        out << "<rect x=\"" << kMargin + 10 << "\" y=\"" << legend_y - 9 << "\" width=\"10\" height=\"3\" fill=\""
            << s.color << "\"/>\n";
        out << "<text x=\"" << kMargin + 26 << "\" y=\"" << legend_y
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << s.label << "</text>\n";
        legend_y += 16;
    }
    out << "</svg>\n";
}

}  // namespace planckian::svg
