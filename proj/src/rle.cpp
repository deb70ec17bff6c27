#include "rlemorph/rle.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace rlemorph {

namespace {

bool row_order_less(const Run& a, const Run& b) {
    return a.y != b.y ? a.y < b.y : a.lx < b.lx;
}

Coord checked_add(Coord a, Coord b) {
#ifndef NDEBUG
    Coord out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw DomainError("coordinate overflow in translate");
    return out;
#else
    return a + b;
#endif
}

// Index of the first run with y >= row.
std::size_t row_begin(std::span<const Run> runs, Coord row) {
    auto it = std::lower_bound(runs.begin(), runs.end(), row,
                               [](const Run& r, Coord y) { return r.y < y; });
    return static_cast<std::size_t>(it - runs.begin());
}

}  // namespace

Rect::Rect(Coord left, Coord right, Coord top, Coord bottom) : l(left), r(right), t(top), b(bottom) {
    if (l > r || t > b) throw DomainError("rectangle bounds out of order");
}

Raster::Raster(Coord w, Coord h, Point org) : width(w), height(h), origin(org) {
    if (w < 0 || h < 0) throw DomainError("negative raster dimensions");
    cells.assign(static_cast<std::size_t>(w * h), 0);
}

bool Raster::contains(Point p) const {
    Coord i = p.x - origin.x;
    Coord j = p.y - origin.y;
    return i >= 0 && j >= 0 && i < width && j < height && cell(i, j);
}

void RleBuilder::add(const Run& run) {
    if (run.lx > run.rx) throw DomainError("malformed run " + to_string(run));
    if (!runs_.empty()) {
        Run& last = runs_.back();
        assert(!row_order_less(run, Run{last.lx, last.lx, last.y}) && "runs added out of order");
        if (last.y == run.y && run.lx <= last.rx + 1) {
            last.rx = std::max(last.rx, run.rx);
            return;
        }
    }
    runs_.push_back(run);
}

RleImage RleBuilder::build() && { return RleImage(std::move(runs_)); }

RleImage RleImage::normalize(std::vector<Run> runs) {
    for (const Run& r : runs) {
        if (r.lx > r.rx) throw DomainError("malformed run " + to_string(r));
    }
    std::sort(runs.begin(), runs.end(), row_order_less);
    RleBuilder builder;
    builder.reserve(runs.size());
    for (const Run& r : runs) builder.add(r);
    return std::move(builder).build();
}

RleImage RleImage::from_compact(std::vector<Run> runs) {
    if (!is_compact(runs)) throw DomainError("run sequence is not compact");
    return RleImage(std::move(runs));
}

Coord RleImage::pixel_count() const {
    Coord n = 0;
    for (const Run& r : runs_) n += r.length();
    return n;
}

bool RleImage::contains(Point p) const {
    auto it = std::upper_bound(runs_.begin(), runs_.end(), p, [](Point q, const Run& r) {
        return q.y != r.y ? q.y < r.y : q.x < r.lx;
    });
    if (it == runs_.begin()) return false;
    return std::prev(it)->contains(p);
}

bool is_compact(std::span<const Run> runs) {
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (runs[i].lx > runs[i].rx) return false;
        if (i == 0) continue;
        const Run& a = runs[i - 1];
        const Run& b = runs[i];
        if (a.y > b.y) return false;
        if (a.y == b.y && a.rx + 1 >= b.lx) return false;
    }
    return true;
}

RleImage from_raster(const Raster& grid) {
    RleBuilder builder;
    for (Coord j = 0; j < grid.height; ++j) {
        Coord i = 0;
        while (i < grid.width) {
            if (!grid.cell(i, j)) {
                ++i;
                continue;
            }
            Coord start = i;
            while (i < grid.width && grid.cell(i, j)) ++i;
            builder.add(grid.origin.x + start, grid.origin.x + i - 1, grid.origin.y + j);
        }
    }
    return std::move(builder).build();
}

Raster to_raster(const RleImage& img) {
    auto box = bounding_rect(img);
    if (!box) return Raster{};
    Raster grid(box->width(), box->height(), Point{box->l, box->t});
    for (const Run& r : img.runs()) {
        for (Coord x = r.lx; x <= r.rx; ++x) grid.set(x - box->l, r.y - box->t);
    }
    return grid;
}

RleImage translate(const RleImage& img, Point v) {
    std::vector<Run> out;
    out.reserve(img.run_count());
    for (const Run& r : img.runs()) {
        out.push_back({checked_add(r.lx, v.x), checked_add(r.rx, v.x), checked_add(r.y, v.y)});
    }
    return RleImage::from_compact(std::move(out));
}

RleImage reflect(const RleImage& img) {
    // Reflection reverses (y, lx) order exactly.
    std::vector<Run> out;
    out.reserve(img.run_count());
    auto runs = img.runs();
    for (auto it = runs.rbegin(); it != runs.rend(); ++it) out.push_back({-it->rx, -it->lx, -it->y});
    return RleImage::from_compact(std::move(out));
}

RleImage complement_within(const RleImage& img, const Rect& rect) {
    auto runs = img.runs();
    RleBuilder builder;
    std::size_t k = row_begin(runs, rect.t);
    for (Coord y = rect.t; y <= rect.b; ++y) {
        Coord cursor = rect.l;  // first pixel not yet decided
        for (; k < runs.size() && runs[k].y == y; ++k) {
            const Run& r = runs[k];
            if (r.rx < cursor) continue;
            if (r.lx > rect.r) continue;
            if (r.lx > cursor) builder.add(cursor, r.lx - 1, y);
            cursor = std::max(cursor, r.rx + 1);
        }
        if (cursor <= rect.r) builder.add(cursor, rect.r, y);
    }
    return std::move(builder).build();
}

RleImage unite(const RleImage& a, const RleImage& b) {
    auto ra = a.runs();
    auto rb = b.runs();
    RleBuilder builder;
    builder.reserve(ra.size() + rb.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < ra.size() || j < rb.size()) {
        if (j == rb.size() || (i < ra.size() && !row_order_less(rb[j], ra[i]))) {
            builder.add(ra[i++]);
        } else {
            builder.add(rb[j++]);
        }
    }
    return std::move(builder).build();
}

RleImage intersect(const RleImage& a, const RleImage& b) {
    auto ra = a.runs();
    auto rb = b.runs();
    RleBuilder builder;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < ra.size() && j < rb.size()) {
        const Run& p = ra[i];
        const Run& q = rb[j];
        if (p.y != q.y) {
            (p.y < q.y ? i : j)++;
            continue;
        }
        Coord lo = std::max(p.lx, q.lx);
        Coord hi = std::min(p.rx, q.rx);
        if (lo <= hi) builder.add(lo, hi, p.y);
        // advance whichever run ends first
        if (p.rx < q.rx) {
            ++i;
        } else {
            ++j;
        }
    }
    return std::move(builder).build();
}

RleImage intersect(const RleImage& img, const Rect& rect) {
    auto runs = img.runs();
    RleBuilder builder;
    for (std::size_t k = row_begin(runs, rect.t); k < runs.size() && runs[k].y <= rect.b; ++k) {
        Coord lo = std::max(runs[k].lx, rect.l);
        Coord hi = std::min(runs[k].rx, rect.r);
        if (lo <= hi) builder.add(lo, hi, runs[k].y);
    }
    return std::move(builder).build();
}

std::optional<Rect> bounding_rect(const RleImage& img) {
    if (img.empty()) return std::nullopt;
    auto runs = img.runs();
    Coord l = std::numeric_limits<Coord>::max();
    Coord r = std::numeric_limits<Coord>::min();
    for (const Run& run : runs) {
        l = std::min(l, run.lx);
        r = std::max(r, run.rx);
    }
    return Rect(l, r, runs.front().y, runs.back().y);
}

RleImage drop_runs_shorter_than(const RleImage& img, Coord min_length) {
    std::vector<Run> kept;
    for (const Run& r : img.runs()) {
        if (r.length() >= min_length) kept.push_back(r);
    }
    return RleImage::from_compact(std::move(kept));
}

std::string to_string(const Run& run) {
    return "<" + std::to_string(run.lx) + ", " + std::to_string(run.rx) + ", " + std::to_string(run.y) + ">";
}

}  // namespace rlemorph
