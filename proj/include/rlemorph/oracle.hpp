#pragma once

// Slow reference implementations used as ground truth by the tests.
// Nothing here shares code with the fast path beyond the rle types and set
// operations.

#include <algorithm>
#include <map>
#include <vector>

#include "rlemorph/rle.hpp"

namespace rlemorph::oracle {

/// {p | se translated by p is a subset of x}, by exhaustive raster search.
RleImage erode_naive(const RleImage& x, const RleImage& se);

/// {p | reflect(se) translated by p meets x}, by exhaustive raster search.
RleImage dilate_naive(const RleImage& x, const RleImage& se);

/// Intersection over SE runs of the union over image runs of the run-by-run
/// erosions <c - a, d - b, yx - yb>.
RleImage erode_runs(const RleImage& x, const RleImage& se);

/// Union over all run pairs of <c + a, d + b, yx + yb>.
RleImage dilate_runs(const RleImage& x, const RleImage& se);

/// x eroded n times in succession by a.
RleImage n_fold_erode(const RleImage& x, const RleImage& a, int n);

/// Sparse erosion transform: only points of x are stored; everything else is 0.
class TransformMap {
public:
    Coord at(Point p) const {
        auto it = values_.find(p);
        return it == values_.end() ? 0 : it->second;
    }
    void set(Point p, Coord v) { values_[p] = v; }
    const std::map<Point, Coord>& values() const { return values_; }

private:
    std::map<Point, Coord> values_;
};

/// f(p) = max{n > 0 | p in n_fold_erode(x, a, n - 1)} for p in x.
/// Requires (0,0) in a and |a| > 1.
TransformMap erosion_transform_naive(const RleImage& x, const RleImage& a);

/// Points p of b with max over e in reflect(a) of f(p + e) <= f(p).
std::vector<Point> skeleton_naive(const RleImage& b, const RleImage& a);

/// A = {(-1,0), (0,0)}.
RleImage horizontal_a();

}  // namespace rlemorph::oracle
