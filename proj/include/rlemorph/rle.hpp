#pragma once

/// Run-length encoded binary images.
///
/// An image is a finite set of foreground pixels in Z^2, stored as horizontal
/// runs <lx, rx, y>. x grows to the right and y grows downward. Images are
/// always kept in compact form: runs sorted by (y, lx) and two runs on the
/// same row are separated by at least one background pixel. The compact form
/// of a pixel set is unique, so operator== is set equality.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rlemorph {

using Coord = std::int64_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Violated precondition on a domain value (malformed run, empty SE, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point operator-(Point a) { return {-a.x, -a.y}; }
    friend constexpr bool operator==(Point, Point) = default;
    friend constexpr auto operator<=>(Point a, Point b) {
        // row-major, matching run order
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
};

struct Run {
    Coord lx = 0;
    Coord rx = 0;
    Coord y = 0;

    constexpr Coord length() const { return rx - lx + 1; }
    constexpr bool contains(Point p) const { return p.y == y && p.x >= lx && p.x <= rx; }
    friend constexpr bool operator==(const Run&, const Run&) = default;
};

/// Inclusive integer rectangle [l, r] x [t, b]. Always non-empty; functions
/// that may have no rectangle to return use std::optional<Rect>.
struct Rect {
    Coord l = 0;
    Coord r = 0;
    Coord t = 0;
    Coord b = 0;

    Rect() = default;
    Rect(Coord left, Coord right, Coord top, Coord bottom);

    Coord width() const { return r - l + 1; }
    Coord height() const { return b - t + 1; }
    Coord area() const { return width() * height(); }
    bool contains(Point p) const { return p.x >= l && p.x <= r && p.y >= t && p.y <= b; }

    /// Grows the rectangle by dx columns on the left and right and dy rows on top and bottom.
    Rect grown(Coord dx, Coord dy) const { return Rect(l - dx, r + dx, t - dy, b + dy); }

    friend bool operator==(const Rect&, const Rect&) = default;
};

/// Dense boolean raster. cell(i, j) is column i, row j; it represents the
/// point origin + (i, j).
struct Raster {
    Coord width = 0;
    Coord height = 0;
    Point origin;
    std::vector<std::uint8_t> cells;  // row-major, 0 or 1

    Raster() = default;
    Raster(Coord w, Coord h, Point org = {});

    bool cell(Coord i, Coord j) const { return cells[static_cast<std::size_t>(j * width + i)] != 0; }
    void set(Coord i, Coord j, bool v = true) { cells[static_cast<std::size_t>(j * width + i)] = v ? 1 : 0; }

    /// True when the image point p lies inside the raster and is set.
    bool contains(Point p) const;
};

class RleImage {
public:
    RleImage() = default;

    /// Sorts and merges arbitrary runs into compact form.
    /// Throws DomainError if any run has lx > rx.
    static RleImage normalize(std::vector<Run> runs);

    /// Adopts runs that are already compact. Throws DomainError otherwise.
    static RleImage from_compact(std::vector<Run> runs);

    std::span<const Run> runs() const { return runs_; }
    std::size_t run_count() const { return runs_.size(); }
    bool empty() const { return runs_.empty(); }
    Coord pixel_count() const;
    bool contains(Point p) const;

    friend bool operator==(const RleImage&, const RleImage&) = default;

private:
    explicit RleImage(std::vector<Run> runs) : runs_(std::move(runs)) {}
    friend class RleBuilder;

    std::vector<Run> runs_;
};

/// Appends runs in (y, lx) order, merging touching or overlapping runs on the
/// fly. Out-of-order input is a logic error (checked).
class RleBuilder {
public:
    void reserve(std::size_t n) { runs_.reserve(n); }
    void add(const Run& run);
    void add(Coord lx, Coord rx, Coord y) { add(Run{lx, rx, y}); }
    RleImage build() &&;

private:
    std::vector<Run> runs_;
};

/// Checks every RleImage invariant on a raw run sequence.
bool is_compact(std::span<const Run> runs);

RleImage from_raster(const Raster& grid);
Raster to_raster(const RleImage& img);

RleImage translate(const RleImage& img, Point v);
RleImage reflect(const RleImage& img);
RleImage complement_within(const RleImage& img, const Rect& rect);
RleImage unite(const RleImage& a, const RleImage& b);
RleImage intersect(const RleImage& a, const RleImage& b);
RleImage intersect(const RleImage& img, const Rect& rect);
std::optional<Rect> bounding_rect(const RleImage& img);

/// Keeps only runs with length >= min_length.
RleImage drop_runs_shorter_than(const RleImage& img, Coord min_length);

std::string to_string(const Run& run);

}  // namespace rlemorph
