#pragma once

// Benchmark sweep over structuring-element sizes.
//
// Images are prepared before timing; only the operator call itself sits
// between the two clock readings. Each case runs one untimed warm-up call
// followed by `iterations` timed calls and reports their arithmetic mean.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rlemorph/rle.hpp"
#include "rlemorph/synth.hpp"

namespace rlemorph {

using MorphFn = std::function<RleImage(const RleImage&, const RleImage&)>;

/// Milliseconds on some monotonic clock.
using BenchClock = std::function<double()>;

double steady_clock_ms();

struct BenchConfig {
    std::string se_shape = "square";   // square | diamond | file
    std::optional<RleImage> se_image;  // required when se_shape == "file"
    std::vector<Coord> se_sizes;
    std::vector<std::string> algorithms = {"fast-erode"};
    int iterations = 3;
    bool warmup = true;
};

struct BenchRow {
    std::string algorithm;  // fast | naive | runs
    std::string op;         // erode | dilate
    std::string se_shape;
    Coord se_size = 0;
    double mean_ms = 0.0;
    std::size_t runs_out = 0;
    Coord pixels_out = 0;
    std::string status = "ok";
};

/// Named operators, keyed "fast-erode", "naive-dilate", ...
std::map<std::string, MorphFn> default_algorithms();

/// Throws DomainError for an invalid configuration before anything is timed.
void validate(const BenchConfig& config, const std::map<std::string, MorphFn>& algorithms);

std::vector<BenchRow> run_bench(const BenchConfig& config, const RleImage& image,
                                const BenchClock& clock = steady_clock_ms,
                                const std::map<std::string, MorphFn>& algorithms = default_algorithms());

std::string bench_csv_header();
std::string to_csv(const std::vector<BenchRow>& rows);

}  // namespace rlemorph
