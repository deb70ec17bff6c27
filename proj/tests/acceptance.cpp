// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rlemorph/bench.hpp"
#include "rlemorph/imgio.hpp"
#include "rlemorph/morphology.hpp"
#include "rlemorph/oracle.hpp"
#include "rlemorph/synth.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace rlemorph;
using testing::random_image_instance;
using testing::random_se_instance;

namespace {

// Tolerances and sizes, pinned.
constexpr int kCorpusSize = 500;
constexpr int kPropertyInstances = 100;
constexpr int kMembershipProbes = 1000;
constexpr int kIoRoundTrips = 200;
constexpr Coord kBenchSide = 1024;
constexpr double kTrendSlack = 1.5;
constexpr double kMinSpeedup = 10.0;
constexpr int kBenchIterations = 3;

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail << what;
        }
    }
};

struct Instance {
    RleImage x;
    RleImage se;
};

std::vector<Instance> corpus(std::uint64_t seed, int count, Coord max_side = 64) {
    Rng rng(seed);
    std::vector<Instance> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        RleImage x = random_image_instance(rng, max_side);
        RleImage se = random_se_instance(rng);
        out.push_back({std::move(x), std::move(se)});
    }
    return out;
}

RleImage solid(Coord l, Coord r, Coord t, Coord b) {
    RleBuilder builder;
    for (Coord y = t; y <= b; ++y) builder.add(l, r, y);
    return std::move(builder).build();
}

struct Recorder {
    std::vector<Point> probes;
    std::vector<std::pair<Point, Coord>> jumps;
    std::vector<std::pair<Point, Coord>> hits;

    void probe(Point h, const SkeletonEntry&) { probes.push_back(h); }
    void miss_jump(Point h, Coord k) { jumps.emplace_back(h, k); }
    void hit(Point h, Coord n) { hits.emplace_back(h, n); }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- criteria -------------------------------------------------------------------

Check oracle_equivalence() {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    int k = 0;
    for (const auto& [x, se] : corpus(1001, kCorpusSize)) {
        c.require(erode(x, se) == oracle::erode_naive(x, se), "erode differs on instance " + std::to_string(k));
        c.require(dilate(x, se) == oracle::dilate_naive(x, se), "dilate differs on instance " + std::to_string(k));
        ++k;
    }
    c.detail << (c.ok ? "" : "; ") << k << " instances in " << seconds_since(start) << " s";
    return c;
}

Check triple_agreement() {
    Check c;
    int k = 0;
    for (const auto& [x, se] : corpus(1001, kCorpusSize)) {
        const RleImage runs = oracle::erode_runs(x, se);
        c.require(runs == oracle::erode_naive(x, se), "runs vs naive differ on instance " + std::to_string(k));
        c.require(runs == erode(x, se), "runs vs fast differ on instance " + std::to_string(k));
        ++k;
    }
    c.detail << (c.ok ? "" : "; ") << k << " instances";
    return c;
}

Check property_suite() {
    Check c;
    Rng rng(3003);
    const RleImage a = oracle::horizontal_a();

    // translation law: erode(x_q, se) = erode(x, se)_q and erode(x, se_q) = erode(x, se)_{-q}
    for (int k = 0; k < kPropertyInstances; ++k) {
        const RleImage x = random_image_instance(rng);
        const RleImage se = random_se_instance(rng);
        const Point q{rng.between(-100, 100), rng.between(-100, 100)};
        const RleImage base = erode(x, se);
        c.require(erode(translate(x, q), se) == translate(base, q), "translation law (image shift)");
        c.require(erode(x, translate(se, q)) == translate(base, -q), "translation law (SE shift)");
    }

    // short runs never matter
    for (int k = 0; k < kPropertyInstances; ++k) {
        const RleImage x = random_image_instance(rng);
        const RleImage se = random_se_instance(rng);
        const SkeletonTable skel = generate_skeleton(se);
        c.require(oracle::erode_naive(drop_runs_shorter_than(x, skel.l_min), se) == oracle::erode_naive(x, se),
                  "short-run deletion changed the erosion");
    }

    // table recurrences and agreement with the naive transforms
    for (int k = 0; k < kPropertyInstances; ++k) {
        const RleImage x = random_image_instance(rng, 32);
        const ErosionTables t = build_tables(x, 1, 1);
        const auto fl = oracle::erosion_transform_naive(x, a);
        const auto fr = oracle::erosion_transform_naive(x, reflect(a));
        for (const Run& r : x.runs()) {
            for (Coord px = r.lx; px <= r.rx; ++px) {
                const Point p{px, r.y};
                c.require(t.left(p) == t.left(p - Point{1, 0}) + 1, "left recurrence");
                c.require(t.right(p) == t.right(p + Point{1, 0}) + 1, "right recurrence");
                c.require(t.left(p) == fl.at(p) && t.right(p) == fr.at(p), "tables vs naive transforms");
            }
        }
    }

    // skeleton: inequality holds and equals the rightmost pixel of each run
    for (int k = 0; k < kPropertyInstances; ++k) {
        const RleImage se = random_se_instance(rng);
        const auto f = oracle::erosion_transform_naive(se, a);
        const auto naive = oracle::skeleton_naive(se, a);
        std::vector<Point> rightmost;
        for (const Run& r : se.runs()) rightmost.push_back({r.rx, r.y});
        c.require(naive == rightmost, "naive skeleton is not rightmost-of-run");
        const SkeletonTable skel = generate_skeleton(se);
        c.require(skel.entries.size() == rightmost.size(), "skeleton size");
        for (std::size_t i = 0; i < skel.entries.size() && i < rightmost.size(); ++i) {
            const Point s = skel.entries[i].offset + skel.anchor;
            c.require(s == rightmost[i], "skeleton entry position");
            c.require(skel.entries[i].depth == f.at(s), "skeleton depth vs transform");
            c.require(f.at(s + Point{1, 0}) <= f.at(s), "skeleton inequality");
        }
    }

    // membership equals the skeleton probe test
    for (int k = 0; k < kMembershipProbes; ++k) {
        const RleImage x = random_image_instance(rng, 24);
        const RleImage se = random_se_instance(rng, 7);
        const Point h{rng.between(-20, 35), rng.between(-20, 35)};
        const bool member = oracle::erode_naive(x, se).contains(h);

        const auto fb = oracle::erosion_transform_naive(se, a);
        const auto fx = oracle::erosion_transform_naive(x, a);
        bool probe = true;
        for (const Point& s : oracle::skeleton_naive(se, a)) probe = probe && fb.at(s) <= fx.at(h + s);
        c.require(probe == member, "transform probe disagrees with membership");

        const SkeletonTable skel = generate_skeleton(se);
        const ErosionTables t = build_tables(x, skel.l_min, skel.l_max);
        c.require(erode_check_at(t, skel, h + skel.anchor) == member, "table probe disagrees with membership");
    }

    // jump instrumentation
    for (int k = 0; k < kPropertyInstances; ++k) {
        const RleImage x = random_image_instance(rng);
        const RleImage se = random_se_instance(rng);
        const SkeletonTable skel = generate_skeleton(se);
        const ErosionTables t = build_tables(x, skel.l_min, skel.l_max);
        Recorder rec;
        c.require(scan_erosion(t, skel, rec) == oracle::erode_naive(x, se), "instrumented scan result");
        const RleImage anchored = oracle::erode_naive(x, translate(se, -skel.anchor));
        for (const auto& [h, n] : rec.jumps) {
            for (Coord i = 0; i < n; ++i) c.require(!anchored.contains(h + Point{i, 0}), "skipped a hit");
        }
        for (const auto& [h, n] : rec.hits) {
            for (Coord i = 0; i < n; ++i) c.require(anchored.contains(h + Point{i, 0}), "hit run contains a miss");
            c.require(!anchored.contains(h + Point{n, 0}), "pixel after hit run is a hit");
        }
    }

    // dilation via complement, erosion and complement within the frame rectangles
    for (int k = 0; k < kPropertyInstances; ++k) {
        const RleImage x = random_image_instance(rng, 32);
        RleImage se = random_se_instance(rng);
        se = translate(se, -Point{se.runs().front().rx, se.runs().front().y});  // origin inside the SE
        if (x.empty()) continue;
        const DilationFrame frame = dilation_frame(*bounding_rect(x), *bounding_rect(se));
        const RleImage comp = complement_within(x, frame.rec_epsilon);
        const RleImage built = complement_within(oracle::erode_naive(comp, reflect(se)), frame.rec_delta);
        c.require(built == oracle::dilate_naive(x, se), "duality construction");
        c.require(dilate(x, se) == built, "dilate vs duality construction");
    }
    return c;
}

Check complexity_trend() {
    Check c;
    // Default generator blobs gate the size trend. Coarse blobs still leave
    // pixels after a 101x101 erosion, where every hit run costs one probe per
    // SE row; their trend is reported but only the speedup is gated.
    struct BenchImage {
        const char* label;
        BlobParams params;
        bool gate_trend;
    };
    const std::vector<BenchImage> images = {{"default blobs", BlobParams{}, true},
                                            {"coarse blobs", BlobParams{0, 8, 256}, false}};
    std::vector<std::string> summaries;
    for (const auto& [label, params, gate_trend] : images) {
        const RleImage image = blob_image(kBenchSide, kBenchSide, params, 4004);
        const std::string name(label);
        BenchConfig fast;
        fast.se_sizes = {11, 31, 51, 101};
        fast.algorithms = {"fast-erode"};
        fast.iterations = kBenchIterations;
        const auto fast_rows = run_bench(fast, image);

        BenchConfig naive;
        naive.se_sizes = {51};
        naive.algorithms = {"naive-erode"};
        naive.iterations = kBenchIterations;
        const auto naive_rows = run_bench(naive, image);

        for (const auto& r : fast_rows) c.require(r.status == "ok", name + ": fast run failed: " + r.status);
        c.require(naive_rows.at(0).status == "ok", name + ": naive run failed");
        const double t11 = fast_rows.at(0).mean_ms;
        const double t51 = fast_rows.at(2).mean_ms;
        const double t101 = fast_rows.at(3).mean_ms;
        const double n51 = naive_rows.at(0).mean_ms;
        if (gate_trend) c.require(t101 <= t11 * kTrendSlack, name + ": size 101 slower than 1.5x size 11");
        c.require(n51 >= t51 * kMinSpeedup, name + ": speedup at size 51 below 10x");
        std::ostringstream line;
        line << name << ": fast ms {11,31,51,101} = {" << t11 << ", " << fast_rows.at(1).mean_ms << ", " << t51
                 << ", " << t101 << "}, pixels at 101 = " << fast_rows.at(3).pixels_out << ", naive@51 = " << n51
                 << " ms, speedup " << n51 / t51 << "x" << (gate_trend ? "" : " (trend not gated)");
        summaries.push_back(line.str());
    }
    for (const auto& line : summaries) c.detail << (c.detail.tellp() > 0 ? "; " : "") << line;
    return c;
}

Check xcut_effectiveness() {
    Check c;
    for (const auto& [x, se] : corpus(5005, kCorpusSize)) {
        const SkeletonTable skel = generate_skeleton(se);
        const ErosionTables t = build_tables(x, skel.l_min, skel.l_max);
        Recorder rec;
        scan_erosion(t, skel, rec);
        const std::set<Point> candidates(rec.probes.begin(), rec.probes.end());
        c.require(static_cast<Coord>(candidates.size()) <= t.x_cut().pixel_count(), "more candidates than |x_cut|");
        for (const Point& p : candidates) c.require(t.x_cut().contains(p), "candidate outside x_cut");
    }

    for (Coord k : {3, 5}) {
        const RleImage x = solid(0, 9, 0, 9);
        const SkeletonTable skel = generate_skeleton(make_square(k));
        const ErosionTables t = build_tables(x, skel.l_min, skel.l_max);
        c.require(t.x_cut().pixel_count() == x.pixel_count() - (k - 1) * 10, "solid square |x_cut| formula");
    }

    const RleImage x = solid(0, 4, 0, 4);
    const SkeletonTable skel = generate_skeleton(make_square(3));
    const ErosionTables t = build_tables(x, skel.l_min, skel.l_max);
    Recorder rec;
    c.require(scan_erosion(t, skel, rec) == solid(1, 3, 1, 3), "5x5 erosion result");
    const std::set<Point> candidates(rec.probes.begin(), rec.probes.end());
    c.require(t.x_cut().pixel_count() == 15, "5x5/3x3 |x_cut| != 15");
    c.require(candidates.size() <= 15, "5x5/3x3 examined more than 15 candidates");
    c.detail << (c.ok ? "" : "; ") << "5x5/3x3: |x| = 25, |x_cut| = " << t.x_cut().pixel_count() << ", examined "
             << candidates.size();
    return c;
}

Check io_round_trips() {
    Check c;
    Rng rng(6006);
    for (int k = 0; k < kIoRoundTrips; ++k) {
        const Coord w = rng.between(1, 96);
        const Coord h = rng.between(1, 64);
        const RleImage a = testing::random_box(rng, w, h, rng.uniform(), {0, 0});
        const ImageFileMeta meta{w, h, {0, 0}};
        c.require(read_pbm(write_pbm(a, meta, PbmVariant::Plain)).image == a, "P1 round trip");
        c.require(read_pbm(write_pbm(a, meta, PbmVariant::Raw)).image == a, "P4 round trip");
        const RleImage shifted = translate(a, {rng.between(-50, 50), rng.between(-50, 50)});
        c.require(read_rle_text(write_rle_text(shifted)) == shifted, "RLE text round trip");
    }

    auto rejects = [](const std::function<void()>& f) {
        try {
            f();
        } catch (const ParseError&) {
            return true;
        } catch (...) {
            return false;
        }
        return false;
    };
    c.require(rejects([] { read_pbm("P4\n16 2\n\xff\xff\xff"); }), "truncated P4 accepted");
    c.require(rejects([] { read_pbm("P7\n1 1\n1\n"); }), "bad magic accepted");
    c.require(rejects([] { read_rle_text("0 5 2\n"); }), "lx > rx accepted");
    return c;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + RLEMORPH_CLI_PATH + "\" " + args + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return status;
}

Check cli_end_to_end() {
    Check c;
    const fs::path dir = fs::temp_directory_path() / "rlemorph_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    auto p = [&](const char* name) { return "\"" + (dir / name).string() + "\""; };

    write_file((dir / "x.pbm").string(), write_pbm(solid(0, 4, 0, 4), {5, 5, {0, 0}}, PbmVariant::Plain));
    c.require(run_cli("gen-se square 3 -o " + p("se.rle")) == 0, "gen-se failed");
    c.require(run_cli("erode " + p("x.pbm") + " " + p("se.rle") + " -o " + p("out.pbm")) == 0, "erode failed");
    if (c.ok) {
        c.require(read_pbm(read_file((dir / "out.pbm").string())).image == solid(1, 3, 1, 3),
                  "pipeline result is not the 3x3 solid");
    }

    c.require(run_cli("bench --input " + p("x.pbm") + " --se-sizes 3,5 --algos fast-erode,naive-erode --iterations " +
                      std::to_string(kBenchIterations) + " --csv " + p("bench.csv")) == 0,
              "bench failed");
    if (c.ok) {
        std::istringstream csv(read_file((dir / "bench.csv").string()));
        std::string line;
        std::getline(csv, line);
        c.require(line == bench_csv_header(), "CSV header");
        int rows = 0;
        while (std::getline(csv, line)) {
            ++rows;
            c.require(std::count(line.begin(), line.end(), ',') == 7, "CSV row field count");
            c.require(line.ends_with(",ok"), "CSV row status");
        }
        c.require(rows == 4, "CSV row count");
    }

    // the timed section wraps exactly `iterations` operator calls per row
    int clock_reads = 0;
    int op_calls = 0;
    auto algos = default_algorithms();
    const MorphFn real = algos.at("fast-erode");
    algos["fast-erode"] = [&](const RleImage& x, const RleImage& se) {
        ++op_calls;
        return real(x, se);
    };
    BenchConfig config;
    config.se_sizes = {3, 5};
    config.iterations = kBenchIterations;
    config.warmup = false;
    const auto rows = run_bench(
        config, solid(0, 4, 0, 4),
        [&] {
            ++clock_reads;
            return 0.0;
        },
        algos);
    c.require(rows.size() == 2 && op_calls == 2 * kBenchIterations && clock_reads == 4 * kBenchIterations,
              "timed call count");

    fs::remove_all(dir);
    return c;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Check()> run;
    };
    const std::vector<Criterion> criteria = {
        {"AC1 oracle equivalence (erode/dilate vs naive, exact)", oracle_equivalence},
        {"AC2 triple agreement (run-union erosion vs naive vs fast, exact)", triple_agreement},
        {"AC3 property suite (translation, short runs, tables, skeleton, membership, jumps, duality)",
         property_suite},
        {"AC4 complexity trend (t101 <= 1.5 t11, naive/fast >= 10 at 51)", complexity_trend},
        {"AC5 x_cut effectiveness (candidates <= |x_cut|, 5x5/3x3 -> 15)", xcut_effectiveness},
        {"AC6 IO round trips and malformed inputs", io_round_trips},
        {"AC7 CLI end-to-end and bench CSV", cli_end_to_end},
    };
    int failures = 0;
    for (const auto& criterion : criteria) {
        Check c;
        try {
            c = criterion.run();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail << "exception: " << e.what();
        }
        if (!c.ok) ++failures;
        std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << criterion.name;
        const std::string detail = c.detail.str();
        if (!detail.empty()) std::cout << " -- " << detail;
        std::cout << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " criteria passed" << std::endl;
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
