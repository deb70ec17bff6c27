#include "rlemorph/bench.hpp"

#include <chrono>
#include <cstdio>

#include "rlemorph/morphology.hpp"
#include "rlemorph/oracle.hpp"

namespace rlemorph {

double steady_clock_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

std::map<std::string, MorphFn> default_algorithms() {
    return {
        {"fast-erode", [](const RleImage& x, const RleImage& se) { return erode(x, se); }},
        {"fast-dilate", [](const RleImage& x, const RleImage& se) { return dilate(x, se); }},
        {"naive-erode", [](const RleImage& x, const RleImage& se) { return oracle::erode_naive(x, se); }},
        {"naive-dilate", [](const RleImage& x, const RleImage& se) { return oracle::dilate_naive(x, se); }},
        {"runs-erode", [](const RleImage& x, const RleImage& se) { return oracle::erode_runs(x, se); }},
        {"runs-dilate", [](const RleImage& x, const RleImage& se) { return oracle::dilate_runs(x, se); }},
    };
}

void validate(const BenchConfig& config, const std::map<std::string, MorphFn>& algorithms) {
    if (config.iterations < 1) throw DomainError("iterations must be at least 1");
    if (config.algorithms.empty()) throw DomainError("no algorithms selected");
    for (const auto& name : config.algorithms) {
        if (!algorithms.count(name)) throw DomainError("unknown algorithm '" + name + "'");
    }
    if (config.se_shape == "file") {
        if (!config.se_image || config.se_image->empty()) throw DomainError("se_shape=file needs a non-empty SE image");
        return;
    }
    if (config.se_shape != "square" && config.se_shape != "diamond") {
        throw DomainError("unknown SE shape '" + config.se_shape + "'");
    }
    if (config.se_sizes.empty()) throw DomainError("no SE sizes given");
    for (Coord s : config.se_sizes) {
        if (s < 1 || s % 2 == 0) throw DomainError("SE size " + std::to_string(s) + " is not a positive odd number");
    }
}

std::vector<BenchRow> run_bench(const BenchConfig& config, const RleImage& image, const BenchClock& clock,
                                const std::map<std::string, MorphFn>& algorithms) {
    validate(config, algorithms);

    std::vector<std::pair<Coord, RleImage>> ses;
    if (config.se_shape == "file") {
        const Rect box = *bounding_rect(*config.se_image);
        ses.emplace_back(std::max(box.width(), box.height()), *config.se_image);
    } else {
        const SeShape shape = config.se_shape == "square" ? SeShape::Square : SeShape::Diamond;
        for (Coord s : config.se_sizes) ses.emplace_back(s, make_se(shape, s));
    }

    std::vector<BenchRow> rows;
    for (const auto& name : config.algorithms) {
        const MorphFn& fn = algorithms.at(name);
        const auto dash = name.find('-');
        for (const auto& [size, se] : ses) {
            BenchRow row;
            row.algorithm = name.substr(0, dash);
            row.op = dash == std::string::npos ? "" : name.substr(dash + 1);
            row.se_shape = config.se_shape;
            row.se_size = size;
            try {
                RleImage out;
                if (config.warmup) out = fn(image, se);
                double total = 0.0;
                for (int i = 0; i < config.iterations; ++i) {
                    const double start = clock();
                    out = fn(image, se);
                    const double stop = clock();
                    total += stop - start;
                }
                row.mean_ms = total / config.iterations;
                row.runs_out = out.run_count();
                row.pixels_out = out.pixel_count();
            } catch (const std::exception& e) {
                row.status = std::string("error: ") + e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string bench_csv_header() { return "algorithm,op,se_shape,se_size,mean_ms,runs_out,pixels_out,status"; }

std::string to_csv(const std::vector<BenchRow>& rows) {
    std::string out = bench_csv_header() + "\n";
    for (const BenchRow& r : rows) {
        char mean[64];
        std::snprintf(mean, sizeof mean, "%.4f", r.mean_ms);
        std::string status = r.status;
        for (char& c : status) {
            if (c == ',' || c == '\n') c = ';';
        }
        out += r.algorithm + "," + r.op + "," + r.se_shape + "," + std::to_string(r.se_size) + "," + mean + "," +
               std::to_string(r.runs_out) + "," + std::to_string(r.pixels_out) + "," + status + "\n";
    }
    return out;
}

}  // namespace rlemorph
