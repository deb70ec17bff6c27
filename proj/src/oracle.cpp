#include "rlemorph/oracle.hpp"

namespace rlemorph::oracle {

namespace {

std::vector<Point> pixels_of(const RleImage& img) {
    std::vector<Point> out;
    for (const Run& r : img.runs()) {
        for (Coord x = r.lx; x <= r.rx; ++x) out.push_back({x, r.y});
    }
    return out;
}

void require_se(const RleImage& se) {
    if (se.empty()) throw DomainError("empty structuring element");
}

}  // namespace

RleImage erode_naive(const RleImage& x, const RleImage& se) {
    require_se(se);
    if (x.empty()) return {};
    const Rect xb = *bounding_rect(x);
    const Rect bb = *bounding_rect(se);
    const Raster grid = to_raster(x);
    const std::vector<Point> offsets = pixels_of(se);

    // Any p with p + b in x for some b lies in this box.
    const Rect candidates(xb.l - bb.r, xb.r - bb.l, xb.t - bb.b, xb.b - bb.t);
    Raster out(candidates.width(), candidates.height(), {candidates.l, candidates.t});
    for (Coord j = 0; j < candidates.height(); ++j) {
        for (Coord i = 0; i < candidates.width(); ++i) {
            const Point p{candidates.l + i, candidates.t + j};
            bool fits = true;
            for (const Point& b : offsets) {
                if (!grid.contains(p + b)) {
                    fits = false;
                    break;
                }
            }
            if (fits) out.set(i, j);
        }
    }
    return from_raster(out);
}

RleImage dilate_naive(const RleImage& x, const RleImage& se) {
    require_se(se);
    if (x.empty()) return {};
    const Rect xb = *bounding_rect(x);
    const Rect bb = *bounding_rect(se);
    const Raster grid = to_raster(x);
    const std::vector<Point> offsets = pixels_of(se);

    const Rect candidates(xb.l + bb.l, xb.r + bb.r, xb.t + bb.t, xb.b + bb.b);
    Raster out(candidates.width(), candidates.height(), {candidates.l, candidates.t});
    for (Coord j = 0; j < candidates.height(); ++j) {
        for (Coord i = 0; i < candidates.width(); ++i) {
            const Point p{candidates.l + i, candidates.t + j};
            for (const Point& b : offsets) {
                if (grid.contains(p - b)) {
                    out.set(i, j);
                    break;
                }
            }
        }
    }
    return from_raster(out);
}

RleImage erode_runs(const RleImage& x, const RleImage& se) {
    require_se(se);
    RleImage result;
    bool first = true;
    for (const Run& b : se.runs()) {
        std::vector<Run> eroded;
        for (const Run& r : x.runs()) {
            const Coord lo = r.lx - b.lx;
            const Coord hi = r.rx - b.rx;
            if (hi >= lo) eroded.push_back({lo, hi, r.y - b.y});
        }
        RleImage part = RleImage::normalize(std::move(eroded));
        result = first ? std::move(part) : intersect(result, part);
        first = false;
        if (result.empty()) break;
    }
    return result;
}

RleImage dilate_runs(const RleImage& x, const RleImage& se) {
    require_se(se);
    std::vector<Run> out;
    out.reserve(x.run_count() * se.run_count());
    for (const Run& b : se.runs()) {
        for (const Run& r : x.runs()) out.push_back({r.lx + b.lx, r.rx + b.rx, r.y + b.y});
    }
    return RleImage::normalize(std::move(out));
}

RleImage n_fold_erode(const RleImage& x, const RleImage& a, int n) {
    if (n < 0) throw DomainError("negative erosion count");
    RleImage cur = x;
    for (int i = 0; i < n && !cur.empty(); ++i) cur = erode_naive(cur, a);
    return cur;
}

TransformMap erosion_transform_naive(const RleImage& x, const RleImage& a) {
    if (!a.contains({0, 0}) || a.pixel_count() < 2) {
        throw DomainError("erosion transform needs the origin in A and |A| > 1");
    }
    TransformMap f;
    RleImage cur = x;  // x eroded n - 1 times
    for (Coord n = 1; !cur.empty(); ++n) {
        for (const Point& p : pixels_of(cur)) f.set(p, n);
        RleImage next = erode_naive(cur, a);
        if (next == cur) throw DomainError("erosion by A does not shrink the image");
        cur = std::move(next);
    }
    return f;
}

std::vector<Point> skeleton_naive(const RleImage& b, const RleImage& a) {
    const TransformMap f = erosion_transform_naive(b, a);
    const std::vector<Point> dirs = pixels_of(reflect(a));
    std::vector<Point> out;
    for (const Point& p : pixels_of(b)) {
        Coord best = 0;
        for (const Point& e : dirs) best = std::max(best, f.at(p + e));
        if (best <= f.at(p)) out.push_back(p);
    }
    return out;
}

RleImage horizontal_a() { return RleImage::from_compact({{-1, 0, 0}}); }

}  // namespace rlemorph::oracle
