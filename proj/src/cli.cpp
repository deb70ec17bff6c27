#include "rlemorph/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "rlemorph/bench.hpp"
#include "rlemorph/imgio.hpp"
#include "rlemorph/morphology.hpp"
#include "rlemorph/synth.hpp"

namespace rlemorph::cli {

namespace {

enum class Format { Auto, Pbm1, Pbm4, Rle };

const std::map<std::string, Format> kFormatNames = {
    {"pbm1", Format::Pbm1}, {"pbm4", Format::Pbm4}, {"rle", Format::Rle}};

struct LoadedImage {
    RleImage image;
    std::optional<ImageFileMeta> canvas;  // set for PBM input
};

LoadedImage load_image(const std::string& path) {
    const std::string data = read_file(path);
    if (looks_like_pbm(data)) {
        PbmImage pbm = read_pbm(data);
        return {std::move(pbm.image), pbm.meta};
    }
    return {read_rle_text(data), std::nullopt};
}

Format resolve_format(Format requested, const std::string& path) {
    if (requested != Format::Auto) return requested;
    const std::string ext = std::filesystem::path(path).extension().string();
    if (ext == ".pbm") return Format::Pbm4;
    return Format::Rle;
}

// Canvas for an image that came without one: [0, max x] x [0, max y].
ImageFileMeta canvas_for(const RleImage& img) {
    auto box = bounding_rect(img);
    if (!box) return {1, 1, {0, 0}};
    for (const Run& r : img.runs()) {
        if (r.lx < 0 || r.y < 0) {
            throw BoundsError("run " + to_string(r) + " has negative coordinates and cannot be stored as PBM");
        }
    }
    return {box->r + 1, box->b + 1, {0, 0}};
}

void emit(const std::string& path, const std::string& data, std::ostream& out) {
    if (path == "-") {
        out << data;
    } else {
        write_file(path, data);
    }
}

// PBM output uses `canvas` when given, otherwise the smallest canvas at the origin.
void save_image(const std::string& path, Format format, const RleImage& img,
                const std::optional<ImageFileMeta>& canvas, std::ostream& out) {
    if (format == Format::Rle) {
        emit(path, write_rle_text(img), out);
        return;
    }
    const auto variant = format == Format::Pbm1 ? PbmVariant::Plain : PbmVariant::Raw;
    emit(path, write_pbm(img, canvas ? *canvas : canvas_for(img), variant), out);
}

std::vector<Coord> parse_sizes(const std::string& list) {
    std::vector<Coord> sizes;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            sizes.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw DomainError("bad SE size '" + item + "'");
        }
    }
    return sizes;
}

std::vector<std::string> split_list(const std::string& list) {
    std::vector<std::string> items;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

struct MorphOptions {
    std::string input;
    std::string se;
    std::string output;
    Format format = Format::Auto;
};

int do_morph(const MorphOptions& opt, bool erosion, std::ostream& out, std::ostream& err) {
    LoadedImage x = load_image(opt.input);
    LoadedImage se = load_image(opt.se);
    RleImage result = erosion ? erode(x.image, se.image) : dilate(x.image, se.image);

    const Format format = resolve_format(opt.format, opt.output);
    if (format != Format::Rle && x.canvas) {
        // PBM in, PBM out: keep the input canvas.
        result = intersect(result, Rect(0, x.canvas->width - 1, 0, x.canvas->height - 1));
    }
    save_image(opt.output, format, result, x.canvas, out);
    err << (erosion ? "erode" : "dilate") << ": " << result.run_count() << " runs, " << result.pixel_count()
        << " pixels\n";
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Erosion and dilation of run-length encoded binary images", "rlemorph"};
    app.require_subcommand(1);

    auto add_format = [](CLI::App* cmd, Format& format) {
        cmd->add_option("--format", format, "Output format (pbm1, pbm4, rle); default from the output extension")
            ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));
    };

    MorphOptions erode_opt;
    auto* erode_cmd = app.add_subcommand("erode", "Erode an image by a structuring element");
    erode_cmd->add_option("input", erode_opt.input, "Input image (PBM or RLE text)")->required();
    erode_cmd->add_option("se", erode_opt.se, "Structuring element (PBM or RLE text)")->required();
    erode_cmd->add_option("-o,--output", erode_opt.output, "Output path, '-' for stdout")->required();
    add_format(erode_cmd, erode_opt.format);

    MorphOptions dilate_opt;
    auto* dilate_cmd = app.add_subcommand("dilate", "Dilate an image by a structuring element");
    dilate_cmd->add_option("input", dilate_opt.input, "Input image (PBM or RLE text)")->required();
    dilate_cmd->add_option("se", dilate_opt.se, "Structuring element (PBM or RLE text)")->required();
    dilate_cmd->add_option("-o,--output", dilate_opt.output, "Output path, '-' for stdout")->required();
    add_format(dilate_cmd, dilate_opt.format);

    std::string se_shape;
    Coord se_size = 0;
    std::string se_output;
    Format se_format = Format::Rle;
    auto* gen_se_cmd = app.add_subcommand("gen-se", "Write a square or diamond structuring element");
    gen_se_cmd->add_option("shape", se_shape, "square or diamond")
        ->required()
        ->check(CLI::IsMember({"square", "diamond"}));
    gen_se_cmd->add_option("size", se_size, "Odd side length / diameter in pixels")->required();
    gen_se_cmd->add_option("-o,--output", se_output, "Output path, '-' for stdout")->required();
    add_format(gen_se_cmd, se_format);

    std::string gen_kind;
    Coord gen_width = 0;
    Coord gen_height = 0;
    double gen_density = 0.5;
    std::uint64_t seed = 1;
    BlobParams blobs;
    std::string gen_output;
    Format gen_format = Format::Auto;
    auto add_generator_options = [&](CLI::App* cmd) {
        cmd->add_option("--width", gen_width, "Image width");
        cmd->add_option("--height", gen_height, "Image height");
        cmd->add_option("--density", gen_density, "Foreground probability for 'random'");
        cmd->add_option("--seed", seed, "Random seed");
        cmd->add_option("--blobs", blobs.count, "Number of blobs (0 = automatic)");
        cmd->add_option("--min-size", blobs.min_size, "Smallest blob extent");
        cmd->add_option("--max-size", blobs.max_size, "Largest blob extent");
    };
    auto* gen_image_cmd = app.add_subcommand("gen-image", "Write a synthetic test image");
    gen_image_cmd->add_option("kind", gen_kind, "random or blobs")
        ->required()
        ->check(CLI::IsMember({"random", "blobs"}));
    add_generator_options(gen_image_cmd);
    gen_image_cmd->get_option("--width")->required();
    gen_image_cmd->get_option("--height")->required();
    gen_image_cmd->add_option("-o,--output", gen_output, "Output path, '-' for stdout")->required();
    add_format(gen_image_cmd, gen_format);

    std::string bench_input;
    std::string bench_gen;
    std::string bench_shape = "square";
    std::string bench_se_file;
    std::string bench_sizes;
    std::string bench_algos = "fast-erode";
    int bench_iterations = 3;
    bool bench_no_warmup = false;
    std::string bench_csv = "-";
    auto* bench_cmd = app.add_subcommand("bench", "Time operators over a sweep of SE sizes and write CSV");
    auto* input_opt = bench_cmd->add_option("--input", bench_input, "Input image file");
    auto* gen_opt = bench_cmd->add_option("--gen", bench_gen, "Synthetic input instead of a file (random or blobs)")
                        ->check(CLI::IsMember({"random", "blobs"}));
    input_opt->excludes(gen_opt);
    add_generator_options(bench_cmd);
    bench_cmd->add_option("--se-shape", bench_shape, "square, diamond or file")
        ->check(CLI::IsMember({"square", "diamond", "file"}));
    bench_cmd->add_option("--se-file", bench_se_file, "Structuring element for --se-shape file");
    bench_cmd->add_option("--se-sizes", bench_sizes, "Comma-separated odd SE sizes");
    bench_cmd->add_option("--algos", bench_algos, "Comma-separated list, e.g. fast-erode,naive-erode,runs-dilate");
    bench_cmd->add_option("--iterations", bench_iterations, "Timed calls per case");
    bench_cmd->add_flag("--no-warmup", bench_no_warmup, "Skip the untimed warm-up call");
    bench_cmd->add_option("--csv", bench_csv, "CSV output path, '-' for stdout");

    std::string conv_input;
    std::string conv_output;
    Format conv_format = Format::Auto;
    auto* convert_cmd = app.add_subcommand("convert", "Convert between PBM and RLE text");
    convert_cmd->add_option("input", conv_input, "Input image")->required();
    convert_cmd->add_option("-o,--output", conv_output, "Output path, '-' for stdout")->required();
    add_format(convert_cmd, conv_format);

    std::vector<std::string> argv_rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(argv_rest.begin(), argv_rest.end());  // CLI11 expects reversed vectors
    try {
        app.parse(argv_rest);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (*erode_cmd) return do_morph(erode_opt, true, out, err);
        if (*dilate_cmd) return do_morph(dilate_opt, false, out, err);

        if (*gen_se_cmd) {
            const RleImage se = make_se(se_shape == "square" ? SeShape::Square : SeShape::Diamond, se_size);
            save_image(se_output, se_format == Format::Auto ? Format::Rle : se_format, se, std::nullopt, out);
            return kSuccess;
        }

        auto generate = [&]() -> RleImage {
            if (gen_width < 1 || gen_height < 1) throw DomainError("--width and --height must be positive");
            const std::string& kind = *gen_image_cmd ? gen_kind : bench_gen;
            if (kind == "random") return random_image(gen_width, gen_height, gen_density, seed);
            return blob_image(gen_width, gen_height, blobs, seed);
        };

        if (*gen_image_cmd) {
            save_image(gen_output, resolve_format(gen_format, gen_output), generate(),
                       ImageFileMeta{gen_width, gen_height, {0, 0}}, out);
            return kSuccess;
        }

        if (*bench_cmd) {
            BenchConfig config;
            config.se_shape = bench_shape;
            config.se_sizes = parse_sizes(bench_sizes);
            config.algorithms = split_list(bench_algos);
            config.iterations = bench_iterations;
            config.warmup = !bench_no_warmup;
            if (bench_shape == "file") {
                if (bench_se_file.empty()) throw DomainError("--se-shape file needs --se-file");
                config.se_image = load_image(bench_se_file).image;
            }
            validate(config, default_algorithms());
            if (bench_input.empty() && bench_gen.empty()) throw DomainError("bench needs --input or --gen");
            const RleImage image = bench_input.empty() ? generate() : load_image(bench_input).image;
            emit(bench_csv, to_csv(run_bench(config, image)), out);
            return kSuccess;
        }

        if (*convert_cmd) {
            LoadedImage in = load_image(conv_input);
            save_image(conv_output, resolve_format(conv_format, conv_output), in.image, in.canvas, out);
            return kSuccess;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << " (at " << e.position() << ")\n";
        return kIoError;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const BoundsError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return kUsage;
}

}  // namespace rlemorph::cli
