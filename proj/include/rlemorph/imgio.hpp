#pragma once

// File codecs: netpbm PBM (P1 plain and P4 raw) and a plain-text run list.
//
// PBM foreground is black (bit 1). Column c of row r becomes the point (c, r).
//
// The run list format has one run per line, "y lx rx" as signed decimals.
// Lines starting with '#' and blank lines are ignored.

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "rlemorph/rle.hpp"

namespace rlemorph {

class ParseError : public Error {
public:
    /// `position` is a byte offset for PBM and a 1-based line number for run lists.
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Image does not fit the declared PBM canvas.
class BoundsError : public Error {
public:
    using Error::Error;
};

struct ImageFileMeta {
    Coord width = 0;
    Coord height = 0;
    Point origin_offset;
};

enum class PbmVariant { Plain, Raw };  // P1, P4

struct PbmImage {
    RleImage image;
    ImageFileMeta meta;
};

PbmImage read_pbm(std::string_view bytes);
std::string write_pbm(const RleImage& img, const ImageFileMeta& meta, PbmVariant variant);

RleImage read_rle_text(std::string_view text);
std::string write_rle_text(const RleImage& img);

/// True when the data starts with a PBM magic number.
bool looks_like_pbm(std::string_view bytes);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view data);

}  // namespace rlemorph
