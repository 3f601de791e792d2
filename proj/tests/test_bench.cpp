// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "planckian/bench.hpp"

using namespace planckian;
namespace fs = std::filesystem;

TEST_CASE("one BenchResult row per (resolution, algorithm) pair") {
    const auto results = bench::run_benchmark({16, 32}, 3, 7);
    REQUIRE(results.size() == 4);
    for (const auto& r : results) {
        CHECK(r.repeats == 3);
        CHECK(r.seconds.size() == 3);
        for (double s : r.seconds) {
            CHECK(s >= 0.0);
        }
    }
}

TEST_CASE("with one repeat the mean equals the single measurement") {
    const auto results = bench::run_benchmark({24}, 1, 3);
    REQUIRE(results.size() == 2);
    for (const auto& r : results) {
        REQUIRE(r.seconds.size() == 1);
        CHECK(r.mean == r.seconds[0]);
        CHECK(r.stddev == 0.0);
    }
}

TEST_CASE("the same seed produces the same input image for both pipelines") {
    const Image a = bench::bench_input_image(32, 1234, 0);
    const Image b = bench::bench_input_image(32, 1234, 0);
    CHECK(a == b);
    const Image c = bench::bench_input_image(32, 1235, 0);
    CHECK_FALSE(a == c);
}

TEST_CASE("mean time grows with resolution (10% slack for timer noise)") {
    const auto results = bench::run_benchmark({32, 128, 512}, 5, 11);
    double prev_pj = 0.0;
    double prev_cj = 0.0;
    for (const auto& r : results) {
        if (r.algorithm == "planckian") {
            CHECK(r.mean >= prev_pj * 0.9);
            prev_pj = r.mean;
        } else {
            CHECK(r.mean >= prev_cj * 0.9);
            prev_cj = r.mean;
        }
    }
}

TEST_CASE("CSV output shape") {
    const auto results = bench::run_benchmark({16}, 2, 5);
    const fs::path path = fs::temp_directory_path() / "planckian_bench_test.csv";
    bench::write_bench_csv(path, results);

    std::ifstream in(path);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "resolution,algorithm,repeat,seconds");
    int rows = 0;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            ++rows;
        }
    }
    CHECK(rows == 4);  // 1 resolution x 2 algorithms x 2 repeats
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(bench::run_benchmark({}, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(bench::run_benchmark({32}, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(bench::run_benchmark({0}, 3, 1), std::invalid_argument);
}
