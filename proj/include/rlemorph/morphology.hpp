#pragma once

/// Fast erosion and dilation of run-length encoded images.
///
/// The structuring element (SE) is reduced to its skeleton with respect to
/// the horizontal set A = {(-1,0), (0,0)}: the rightmost pixel of each run,
/// labelled with the run length. The input image is turned into two distance
/// tables, `left` (1-based distance from the run's left end) and `right`
/// (1-based distance from the run's right end). A candidate position h is a
/// hit iff depth(s) <= left(h + s) for every skeleton point s. A failed probe
/// with deficit k rules out the next k positions (jump on miss); a successful
/// probe yields the whole eroded run at once, its length being the minimum of
/// right(h + s) (jump on hit).
///
/// Before scanning, the SE is translated so that the rightmost pixel of its
/// longest run sits at the origin. Only runs of the input at least as long as
/// the shortest SE run can support a hit, and in each run the first
/// (longest SE run - 1) pixels can never be hits; the remaining candidates
/// form `x_cut`.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "rlemorph/rle.hpp"

namespace rlemorph {

struct SkeletonEntry {
    Point offset;  // relative to the anchor
    Coord depth = 0;

    friend bool operator==(const SkeletonEntry&, const SkeletonEntry&) = default;
};

struct SkeletonTable {
    std::vector<SkeletonEntry> entries;  // in (y, lx) order of the SE runs
    Coord l_min = 0;
    Coord l_max = 0;
    Point anchor;  // rightmost pixel of the first longest run, in SE coordinates

    friend bool operator==(const SkeletonTable&, const SkeletonTable&) = default;
};

/// Skeleton of `se` anchored at the rightmost pixel of its first longest run.
/// Throws DomainError for an empty SE.
SkeletonTable generate_skeleton(const RleImage& se);

/// Skeleton of reflect(se), built directly from the runs of `se`.
SkeletonTable generate_reflected_skeleton(const RleImage& se);

class ErosionTables {
public:
    /// Both distances of one pixel, stored together so a probe touches one cell.
    struct Cell {
        std::int32_t left = 0;
        std::int32_t right = 0;
    };

    ErosionTables() = default;

    /// Left distance at p, 0 outside the retained runs (and outside the grid).
    Coord left(Point p) const { return at(p).left; }
    /// Right distance at p, 0 outside the retained runs.
    Coord right(Point p) const { return at(p).right; }

    Cell at(Point p) const {
        Coord i = p.x - offset_.x;
        Coord j = p.y - offset_.y;
        if (i < 0 || j < 0 || i >= width_ || j >= height_) return {};
        return cells_[static_cast<std::size_t>(j * width_ + i)];
    }

    /// Image coordinates of grid cell (0, 0).
    Point offset() const { return offset_; }
    Coord width() const { return width_; }
    Coord height() const { return height_; }
    const RleImage& x_cut() const { return x_cut_; }

private:
    friend class TableBuilder;

    std::vector<Cell> cells_;
    Point offset_;
    Coord width_ = 0;
    Coord height_ = 0;
    RleImage x_cut_;
};

/// Distance tables over bounding_rect(x) plus a one-cell zero margin.
/// Runs shorter than l_min are left out entirely; runs shorter than l_max
/// contribute nothing to x_cut.
ErosionTables build_tables(const RleImage& x, Coord l_min, Coord l_max);

/// Same as build_tables(complement_within(x, rect), l_min, l_max), but walks
/// the gaps between the runs of x directly.
ErosionTables build_complement_tables(const RleImage& x, const Rect& rect, Coord l_min, Coord l_max);

/// Skeleton membership test at candidate h, given in anchored coordinates
/// (h is a hit iff SE translated by h - anchor fits into the retained runs).
bool erode_check_at(const ErosionTables& tables, const SkeletonTable& skel, Point h);

/// Hooks into the scan loop. All positions are in anchored coordinates.
struct NullScanObserver {
    void probe(Point /*h*/, const SkeletonEntry& /*s*/) {}
    void miss_jump(Point /*h*/, Coord /*k*/) {}
    void hit(Point /*h*/, Coord /*n*/) {}
};

/// Runs the jump-miss/jump-hit scan over tables.x_cut() and returns the
/// erosion in original coordinates (i.e. translated back by -anchor).
template <class Observer = NullScanObserver>
RleImage scan_erosion(const ErosionTables& tables, const SkeletonTable& skel, Observer&& observer = {});

RleImage erode(const RleImage& x, const RleImage& se);
RleImage dilate(const RleImage& x, const RleImage& se);

/// Rectangles used by dilate() for an SE that contains the origin.
struct DilationFrame {
    Rect rec_delta;    // bounding_rect(x) grown by SE width/height
    Rect rec_epsilon;  // bounding_rect(x) grown by twice that
};
DilationFrame dilation_frame(const Rect& x_box, const Rect& se_box);

// ---------------------------------------------------------------------------

template <class Observer>
RleImage scan_erosion(const ErosionTables& tables, const SkeletonTable& skel, Observer&& observer) {
    RleBuilder hits;
    const auto& entries = skel.entries;
    const std::size_t n = entries.size();
    // Probing starts at the entry that failed last: it tends to fail again.
    std::size_t first = 0;
    for (const Run& run : tables.x_cut().runs()) {
        const Coord y = run.y;
        Coord x = run.lx;
        while (x <= run.rx) {
            bool miss = false;
            // The right distances read on the way give the hit length for free.
            Coord min_dist = std::numeric_limits<Coord>::max();
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t i = first + k < n ? first + k : first + k - n;
                const SkeletonEntry& s = entries[i];
                Point h{x, y};
                observer.probe(h, s);
                ErosionTables::Cell cell = tables.at(h + s.offset);
                Coord diff = s.depth - cell.left;
                while (diff > 0) {
                    observer.miss_jump(h, diff);
                    x += diff;
                    miss = true;
                    if (x > run.rx) break;
                    h = Point{x, y};
                    observer.probe(h, s);
                    cell = tables.at(h + s.offset);
                    diff = s.depth - cell.left;
                }
                if (miss) {
                    first = i;
                    break;
                }
                min_dist = std::min<Coord>(min_dist, cell.right);
            }
            if (miss) continue;

            observer.hit(Point{x, y}, min_dist);
            hits.add(x, x + min_dist - 1, y);
            x += min_dist + 1;
        }
    }
    return translate(std::move(hits).build(), -skel.anchor);
}

}  // namespace rlemorph
