#include "rlemorph/imgio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace rlemorph {

ParseError::ParseError(const std::string& what, std::size_t position)
    : Error(what), position_(position) {}

namespace {

class PbmCursor {
public:
    PbmCursor(std::string_view data, std::size_t start) : data_(data), pos_(start) {}

    std::size_t pos() const { return pos_; }
    bool at_end() const { return pos_ >= data_.size(); }
    unsigned char peek() const { return static_cast<unsigned char>(data_[pos_]); }
    unsigned char take() { return static_cast<unsigned char>(data_[pos_++]); }

    void skip_space_and_comments() {
        while (!at_end()) {
            if (peek() == '#') {
                while (!at_end() && peek() != '\n' && peek() != '\r') ++pos_;
            } else if (std::isspace(peek())) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    Coord read_dimension(const char* name) {
        skip_space_and_comments();
        const std::size_t start = pos_;
        Coord value = 0;
        while (!at_end() && std::isdigit(peek())) {
            value = value * 10 + (take() - '0');
            if (value > (Coord{1} << 31)) throw ParseError(std::string("PBM ") + name + " too large", start);
        }
        if (pos_ == start) throw ParseError(std::string("expected PBM ") + name, start);
        if (value < 1) throw ParseError(std::string("PBM ") + name + " must be positive", start);
        return value;
    }

private:
    std::string_view data_;
    std::size_t pos_ = 0;
};

void check_fits(const RleImage& img, const ImageFileMeta& meta) {
    for (const Run& r : img.runs()) {
        const Coord lx = r.lx - meta.origin_offset.x;
        const Coord rx = r.rx - meta.origin_offset.x;
        const Coord y = r.y - meta.origin_offset.y;
        if (lx < 0 || rx >= meta.width || y < 0 || y >= meta.height) {
            throw BoundsError("run " + to_string(r) + " lies outside the " + std::to_string(meta.width) + "x" +
                              std::to_string(meta.height) + " canvas");
        }
    }
}

}  // namespace

bool looks_like_pbm(std::string_view bytes) {
    return bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '1' || bytes[1] == '4');
}

PbmImage read_pbm(std::string_view bytes) {
    if (!looks_like_pbm(bytes)) throw ParseError("bad PBM magic number", 0);
    const bool raw = bytes[1] == '4';
    PbmCursor in(bytes, 2);

    if (!in.at_end() && !std::isspace(in.peek()) && in.peek() != '#') {
        throw ParseError("bad PBM magic number", 0);
    }
    PbmImage out;
    const Coord width = in.read_dimension("width");
    const Coord height = in.read_dimension("height");
    out.meta = {width, height, {0, 0}};

    RleBuilder builder;
    if (raw) {
        if (in.at_end() || !std::isspace(in.peek())) {
            throw ParseError("expected whitespace after PBM header", in.pos());
        }
        in.take();
        const Coord row_bytes = (width + 7) / 8;
        for (Coord y = 0; y < height; ++y) {
            Coord run_start = -1;
            for (Coord bx = 0; bx < row_bytes; ++bx) {
                if (in.at_end()) throw ParseError("truncated P4 raster", in.pos());
                const unsigned char byte = in.take();
                for (int bit = 0; bit < 8; ++bit) {
                    const Coord x = bx * 8 + bit;
                    if (x >= width) break;
                    const bool set = (byte >> (7 - bit)) & 1U;
                    if (set && run_start < 0) run_start = x;
                    if (!set && run_start >= 0) {
                        builder.add(run_start, x - 1, y);
                        run_start = -1;
                    }
                }
            }
            if (run_start >= 0) builder.add(run_start, width - 1, y);
        }
    } else {
        for (Coord y = 0; y < height; ++y) {
            Coord run_start = -1;
            for (Coord x = 0; x < width; ++x) {
                in.skip_space_and_comments();
                if (in.at_end()) throw ParseError("truncated P1 raster", in.pos());
                const std::size_t at = in.pos();
                const unsigned char c = in.take();
                if (c != '0' && c != '1') throw ParseError("invalid P1 pixel value", at);
                const bool set = c == '1';
                if (set && run_start < 0) run_start = x;
                if (!set && run_start >= 0) {
                    builder.add(run_start, x - 1, y);
                    run_start = -1;
                }
            }
            if (run_start >= 0) builder.add(run_start, width - 1, y);
        }
    }
    out.image = std::move(builder).build();
    return out;
}

std::string write_pbm(const RleImage& img, const ImageFileMeta& meta, PbmVariant variant) {
    if (meta.width < 1 || meta.height < 1) throw BoundsError("PBM canvas must be at least 1x1");
    check_fits(img, meta);

    std::string out = variant == PbmVariant::Raw ? "P4\n" : "P1\n";
    out += std::to_string(meta.width) + " " + std::to_string(meta.height) + "\n";

    const auto runs = img.runs();
    std::size_t k = 0;
    std::vector<std::uint8_t> row(static_cast<std::size_t>(meta.width));
    for (Coord y = 0; y < meta.height; ++y) {
        std::fill(row.begin(), row.end(), 0);
        for (; k < runs.size() && runs[k].y - meta.origin_offset.y == y; ++k) {
            for (Coord x = runs[k].lx; x <= runs[k].rx; ++x) row[static_cast<std::size_t>(x - meta.origin_offset.x)] = 1;
        }
        if (variant == PbmVariant::Raw) {
            for (Coord bx = 0; bx < meta.width; bx += 8) {
                unsigned byte = 0;
                for (int bit = 0; bit < 8 && bx + bit < meta.width; ++bit) {
                    if (row[static_cast<std::size_t>(bx + bit)]) byte |= 0x80U >> bit;
                }
                out.push_back(static_cast<char>(byte));
            }
        } else {
            // plain PBM lines should stay under 70 characters
            for (Coord x = 0; x < meta.width; ++x) {
                if (x > 0) out.push_back(x % 35 == 0 ? '\n' : ' ');
                out.push_back(row[static_cast<std::size_t>(x)] ? '1' : '0');
            }
            out.push_back('\n');
        }
    }
    return out;
}

RleImage read_rle_text(std::string_view text) {
    std::vector<Run> runs;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::size_t i = 0;
        auto skip_blank = [&] {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        };
        skip_blank();
        if (i == line.size() || line[i] == '#') continue;

        Coord values[3] = {0, 0, 0};
        for (Coord& v : values) {
            skip_blank();
            const char* first = line.data() + i;
            const char* last = line.data() + line.size();
            auto [ptr, ec] = std::from_chars(first, last, v);
            if (ec != std::errc{} || (ptr != last && *ptr != ' ' && *ptr != '\t')) {
                throw ParseError("line " + std::to_string(line_no) + ": expected integer", line_no);
            }
            i = static_cast<std::size_t>(ptr - line.data());
        }
        skip_blank();
        if (i != line.size()) throw ParseError("line " + std::to_string(line_no) + ": trailing data", line_no);
        const Run run{values[1], values[2], values[0]};
        if (run.lx > run.rx) throw ParseError("line " + std::to_string(line_no) + ": lx > rx", line_no);
        runs.push_back(run);
    }
    return RleImage::normalize(std::move(runs));
}

std::string write_rle_text(const RleImage& img) {
    std::string out;
    for (const Run& r : img.runs()) {
        out += std::to_string(r.y) + " " + std::to_string(r.lx) + " " + std::to_string(r.rx) + "\n";
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error reading " + path.string());
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw IoError("error writing " + path.string());
}

}  // namespace rlemorph
