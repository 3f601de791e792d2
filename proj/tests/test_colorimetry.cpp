// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "planckian/colorimetry.hpp"
#include "planckian/rng.hpp"

using namespace planckian;

namespace {

const oracles::CsvCmf& csv_table() {
    static const oracles::CsvCmf table = oracles::load_cmf_csv(PLANCKIAN_DATA_DIR "/cie_1931_2deg_10nm.csv");
    return table;
}

Spectrum spectrum_from(const std::array<double, Spectrum::kSampleCount>& power) {
    Spectrum s;
    s.temperature = 1.0;
    s.power = power;
    return s;
}

}  // namespace

TEST_CASE("embedded CMF table equals the shipped CSV asset") {
    const CmfTable& t = CmfTable::cie1931_2deg();
    const auto& csv = csv_table();
    REQUIRE(csv.wavelength_nm.size() == Spectrum::kSampleCount);
    for (std::size_t i = 0; i < Spectrum::kSampleCount; ++i) {
        CHECK(t.wavelength[i] == csv.wavelength_nm[i] * 1e-9);
        CHECK(t.x_bar[i] == csv.x_bar[i]);
        CHECK(t.y_bar[i] == csv.y_bar[i]);
        CHECK(t.z_bar[i] == csv.z_bar[i]);
        CHECK(t.x_bar[i] >= 0.0);
        CHECK(t.y_bar[i] >= 0.0);
        CHECK(t.z_bar[i] >= 0.0);
    }
}

TEST_CASE("spectrum_to_xyz is linear") {
    const Spectrum zero = spectrum_from({});
    const Tristimulus z = spectrum_to_xyz(zero, CmfTable::cie1931_2deg());
    CHECK(z.X == 0.0);
    CHECK(z.Y == 0.0);
    CHECK(z.Z == 0.0);

    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::array<double, Spectrum::kSampleCount> p1{};
        std::array<double, Spectrum::kSampleCount> p2{};
        for (std::size_t i = 0; i < Spectrum::kSampleCount; ++i) {
            p1[i] = rng.uniform() * 1e12;
            p2[i] = rng.uniform() * 1e12;
        }
        const double a = rng.uniform() * 3.0;
        const double b = rng.uniform() * 3.0;
        std::array<double, Spectrum::kSampleCount> mix{};
        for (std::size_t i = 0; i < Spectrum::kSampleCount; ++i) {
            mix[i] = a * p1[i] + b * p2[i];
        }
        const Tristimulus t1 = spectrum_to_xyz(spectrum_from(p1), CmfTable::cie1931_2deg());
        const Tristimulus t2 = spectrum_to_xyz(spectrum_from(p2), CmfTable::cie1931_2deg());
        const Tristimulus tm = spectrum_to_xyz(spectrum_from(mix), CmfTable::cie1931_2deg());
        CHECK(tm.X == doctest::Approx(a * t1.X + b * t2.X).epsilon(1e-12));
        CHECK(tm.Y == doctest::Approx(a * t1.Y + b * t2.Y).epsilon(1e-12));
        CHECK(tm.Z == doctest::Approx(a * t1.Z + b * t2.Z).epsilon(1e-12));
    }

    // doubling the spectrum doubles the stimulus
    std::array<double, Spectrum::kSampleCount> p{};
    for (std::size_t i = 0; i < Spectrum::kSampleCount; ++i) {
        p[i] = 1e10 + 1e9 * static_cast<double>(i);
    }
    std::array<double, Spectrum::kSampleCount> p2x{};
    for (std::size_t i = 0; i < Spectrum::kSampleCount; ++i) {
        p2x[i] = 2.0 * p[i];
    }
    const Tristimulus t = spectrum_to_xyz(spectrum_from(p), CmfTable::cie1931_2deg());
    const Tristimulus t2 = spectrum_to_xyz(spectrum_from(p2x), CmfTable::cie1931_2deg());
    CHECK(t2.X == doctest::Approx(2.0 * t.X).epsilon(1e-12));
    CHECK(t2.Y == doctest::Approx(2.0 * t.Y).epsilon(1e-12));
    CHECK(t2.Z == doctest::Approx(2.0 * t.Z).epsilon(1e-12));
}

TEST_CASE("6500 K black body lands on the Planckian locus point") {
    const Tristimulus t = spectrum_to_xyz(blackbody_spectrum(6500.0), CmfTable::cie1931_2deg());
    const Chromaticity c = xy_chromaticity(t);
    CHECK(std::hypot(c.x - 0.3135, c.y - 0.3237) < 0.01);

    // independent summation over the CSV table
    const Tristimulus ref = oracles::blackbody_xyz_from_csv(csv_table(), 6500.0);
    const Chromaticity cr = xy_chromaticity(ref);
    CHECK(std::hypot(c.x - cr.x, c.y - cr.y) < 1e-9);
}

TEST_CASE("grid mismatch raises a structural error") {
    CmfTable off = CmfTable::cie1931_2deg();
    off.wavelength[3] += 1e-9;
    CHECK_THROWS_AS(spectrum_to_xyz(blackbody_spectrum(5000.0), off), std::invalid_argument);
}

TEST_CASE("normalize_y") {
    const Tristimulus a = normalize_y({0.5, 0.5, 0.5});
    CHECK(a.X == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(a.Y == 1.0);
    CHECK(a.Z == doctest::Approx(1.0).epsilon(1e-15));

    const Tristimulus b = normalize_y({0.2, 0.4, 0.8});
    CHECK(b.X == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(b.Y == 1.0);
    CHECK(b.Z == doctest::Approx(2.0).epsilon(1e-15));

    Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
        const Tristimulus t{rng.uniform(0.01, 2.0), rng.uniform(0.01, 2.0), rng.uniform(0.01, 2.0)};
        const Chromaticity before = xy_chromaticity(t);
        const Chromaticity after = xy_chromaticity(normalize_y(t));
        CHECK(std::abs(before.x - after.x) < 1e-12);
        CHECK(std::abs(before.y - after.y) < 1e-12);
    }

    CHECK_THROWS_AS(normalize_y({0.5, 0.0, 0.5}), std::domain_error);
}

TEST_CASE("Lab maps the white point to L=100, a=b=0") {
    const Lab lab = xyz_to_lab({kD65.Xn, kD65.Yn, kD65.Zn});
    CHECK(lab.L == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(lab.a == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(lab.b == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("mid-gray lightness matches the independent CIE evaluation") {
    const Lab lab = xyz_to_lab({0.18 * kD65.Xn, 0.18 * kD65.Yn, 0.18 * kD65.Zn});
    const double expected = static_cast<double>(oracles::lab_lightness(0.18L));
    CHECK(std::abs(lab.L - expected) < 1e-9);
    CHECK(lab.L == doctest::Approx(49.50).epsilon(1e-3));
}

TEST_CASE("Lab and XYZ are mutually inverse to 1e-9 on random in-gamut stimuli") {
    Rng rng(1234);
    for (int i = 0; i < 10000; ++i) {
        const Rgb rgb{rng.uniform(), rng.uniform(), rng.uniform()};
        const Tristimulus t = srgb_to_xyz(rgb);
        const Tristimulus back = lab_to_xyz(xyz_to_lab(t));
        const double scale = std::max({std::abs(t.X), std::abs(t.Y), std::abs(t.Z), 1e-30});
        CHECK(std::abs(back.X - t.X) / scale < 1e-9);
        CHECK(std::abs(back.Y - t.Y) / scale < 1e-9);
        CHECK(std::abs(back.Z - t.Z) / scale < 1e-9);

        const Lab lab{rng.uniform(0.0, 100.0), rng.uniform(-60.0, 60.0), rng.uniform(-60.0, 60.0)};
        const Lab lab_back = xyz_to_lab(lab_to_xyz(lab));
        CHECK(std::abs(lab_back.L - lab.L) < 1e-9 * 100.0);
        CHECK(std::abs(lab_back.a - lab.a) < 1e-7);
        CHECK(std::abs(lab_back.b - lab.b) < 1e-7);
    }
}

TEST_CASE("sRGB transfer round trip is the identity to 1e-9") {
    Rng rng(5);
    for (int i = 0; i <= 10000; ++i) {
        const double v = i < 5000 ? i / 5000.0 : rng.uniform();
        CHECK(std::abs(srgb_decode(srgb_encode(v)) - v) < 1e-9);
        CHECK(std::abs(srgb_encode(srgb_decode(v)) - v) < 1e-9);
    }
}

TEST_CASE("xyz_to_srgb endpoints") {
    const Rgb white = xyz_to_srgb({kD65.Xn, kD65.Yn, kD65.Zn});
    CHECK(std::abs(white.r - 1.0) < 1e-3);
    CHECK(std::abs(white.g - 1.0) < 1e-3);
    CHECK(std::abs(white.b - 1.0) < 1e-3);

    const Rgb black = xyz_to_srgb({0.0, 0.0, 0.0});
    CHECK(black.r == 0.0);
    CHECK(black.g == 0.0);
    CHECK(black.b == 0.0);
}

TEST_CASE("the 6500 K illuminant renders near-neutral") {
    const IlluminantRgb ill = illuminant_rgb(6500.0);
    const double mx = std::max({ill.r, ill.g, ill.b});
    const double mn = std::min({ill.r, ill.g, ill.b});
    CHECK(mx - mn < 0.08);
}

TEST_CASE("illuminant_rgb endpoints are warm and cool") {
    const IlluminantRgb warm = illuminant_rgb(3000.0);
    CHECK(warm.r > warm.g);
    CHECK(warm.g > warm.b);

    const IlluminantRgb cool = illuminant_rgb(15000.0);
    CHECK(cool.b > cool.g);
    CHECK(cool.g > cool.r);
}

TEST_CASE("r/b is strictly decreasing across the 25 sweep temperatures") {
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 25; ++i) {
        const IlluminantRgb ill = illuminant_rgb(3000.0 + 500.0 * i);
        const double ratio = ill.r / ill.b;
        CHECK(ratio < prev);
        prev = ratio;
    }
}

TEST_CASE("illuminants stay inside [0,1] and never vanish over the range") {
    Rng rng(77);
    for (int i = 0; i < 200; ++i) {
        const double t = rng.uniform(3000.0, 15000.0);
        const IlluminantRgb ill = illuminant_rgb(t);
        CHECK(ill.r >= 0.0);
        CHECK(ill.r <= 1.0);
        CHECK(ill.g >= 0.0);
        CHECK(ill.g <= 1.0);
        CHECK(ill.b >= 0.0);
        CHECK(ill.b <= 1.0);
        CHECK(std::max({ill.r, ill.g, ill.b}) > 0.0);
    }
}

TEST_CASE("illuminant_rgb agrees with an independent pipeline built on the CSV table") {
    for (int i = 0; i < 25; ++i) {
        const double t = 3000.0 + 500.0 * i;
        const Tristimulus raw = oracles::blackbody_xyz_from_csv(csv_table(), t);
        const Tristimulus norm{raw.X / raw.Y, 1.0, raw.Z / raw.Y};
        Lab lab = xyz_to_lab(norm);
        lab.L = 50.0;
        const Rgb expected = xyz_to_srgb(lab_to_xyz(lab));
        const IlluminantRgb got = illuminant_rgb(t);
        CHECK(std::abs(got.r - expected.r) < 1e-6);
        CHECK(std::abs(got.g - expected.g) < 1e-6);
        CHECK(std::abs(got.b - expected.b) < 1e-6);
    }
}

TEST_CASE("pre-sRGB sweep chromaticities trace a locus monotone in x") {
    double prev_x = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 25; ++i) {
        const double t = 3000.0 + 500.0 * i;
        const Chromaticity c =
            xy_chromaticity(spectrum_to_xyz(blackbody_spectrum(t), CmfTable::cie1931_2deg()));
        CHECK(c.x < prev_x);
        prev_x = c.x;
    }
}

TEST_CASE("white point and sRGB matrix match the shipped constants CSV") {
    std::ifstream in(PLANCKIAN_DATA_DIR "/srgb_d65_constants.csv");
    REQUIRE(in.good());
    std::string line;
    std::vector<std::array<double, 3>> rows;
    std::vector<std::string> kinds;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::stringstream ss(line);
        std::string kind;
        std::string name;
        std::string field;
        std::getline(ss, kind, ',');
        std::getline(ss, name, ',');
        std::array<double, 3> row{};
        for (int i = 0; i < 3; ++i) {
            std::getline(ss, field, ',');
            row[static_cast<std::size_t>(i)] = std::stod(field);
        }
        kinds.push_back(kind);
        rows.push_back(row);
    }
    REQUIRE(rows.size() == 7);
    CHECK(rows[0][0] == kD65.Xn);
    CHECK(rows[0][1] == kD65.Yn);
    CHECK(rows[0][2] == kD65.Zn);
    // rgb_to_xyz columns are the stimuli of the pure sRGB primaries
    const Tristimulus r = srgb_to_xyz({1.0, 0.0, 0.0});
    const Tristimulus g = srgb_to_xyz({0.0, 1.0, 0.0});
    const Tristimulus b = srgb_to_xyz({0.0, 0.0, 1.0});
    CHECK(r.X == rows[1][0]);
    CHECK(g.X == rows[1][1]);
    CHECK(b.X == rows[1][2]);
    CHECK(r.Y == rows[2][0]);
    CHECK(g.Y == rows[2][1]);
    CHECK(b.Y == rows[2][2]);
    CHECK(r.Z == rows[3][0]);
    CHECK(g.Z == rows[3][1]);
    CHECK(b.Z == rows[3][2]);
}

TEST_CASE("xy_chromaticity basics") {
    const Chromaticity equal = xy_chromaticity({1.0, 1.0, 1.0});
    CHECK(equal.x == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(equal.y == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    Rng rng(8);
    for (int i = 0; i < 100; ++i) {
        const Tristimulus t{rng.uniform(0.01, 1.0), rng.uniform(0.01, 1.0), rng.uniform(0.01, 1.0)};
        const double s = rng.uniform(0.1, 10.0);
        const Chromaticity a = xy_chromaticity(t);
        const Chromaticity b = xy_chromaticity({s * t.X, s * t.Y, s * t.Z});
        CHECK(std::abs(a.x - b.x) < 1e-12);
        CHECK(std::abs(a.y - b.y) < 1e-12);
    }

    const Chromaticity d65 = xy_chromaticity({kD65.Xn, kD65.Yn, kD65.Zn});
    CHECK(std::abs(d65.x - 0.3127) < 5e-4);
    CHECK(std::abs(d65.y - 0.3290) < 5e-4);

    CHECK_THROWS_AS(xy_chromaticity({0.0, 0.0, 0.0}), std::domain_error);
}
