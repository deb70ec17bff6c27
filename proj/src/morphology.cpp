#include "rlemorph/morphology.hpp"

#include <limits>

namespace rlemorph {

namespace {

void require_se(const RleImage& se) {
    if (se.empty()) throw DomainError("empty structuring element");
}

// Anchor = rightmost pixel of the first run reaching the maximum length.
// `rightmost` maps a run of the SE to the rightmost pixel of its image under
// the (possibly reflecting) embedding.
template <class Runs, class Rightmost>
SkeletonTable skeleton_from(const Runs& runs, Rightmost rightmost) {
    SkeletonTable skel;
    skel.l_min = std::numeric_limits<Coord>::max();
    for (const Run& r : runs) {
        if (skel.l_max < r.length()) {
            skel.l_max = r.length();
            skel.anchor = rightmost(r);
        }
        skel.l_min = std::min(skel.l_min, r.length());
    }
    skel.entries.reserve(runs.size());
    for (const Run& r : runs) skel.entries.push_back({rightmost(r) - skel.anchor, r.length()});
    return skel;
}

}  // namespace

SkeletonTable generate_skeleton(const RleImage& se) {
    require_se(se);
    return skeleton_from(se.runs(), [](const Run& r) { return Point{r.rx, r.y}; });
}

SkeletonTable generate_reflected_skeleton(const RleImage& se) {
    require_se(se);
    // <lx, rx, y> reflects to <-rx, -lx, -y>; iterating backwards keeps (y, lx) order.
    auto runs = se.runs();
    std::vector<Run> reversed(runs.rbegin(), runs.rend());
    return skeleton_from(reversed, [](const Run& r) { return Point{-r.lx, -r.y}; });
}

class TableBuilder {
public:
    TableBuilder(const Rect& extent, Coord l_min, Coord l_max) : l_min_(l_min), l_max_(l_max) {
        if (l_min < 1 || l_min > l_max) throw DomainError("invalid run length bounds for table construction");
        Rect grid = extent.grown(1, 1);
        tables_.offset_ = {grid.l, grid.t};
        tables_.width_ = grid.width();
        tables_.height_ = grid.height();
        auto cells = static_cast<std::size_t>(grid.area());
        tables_.cells_.assign(cells, {});
    }

    void add(const Run& run) {
        const Coord len = run.length();
        if (len < l_min_) return;
        if (len > std::numeric_limits<std::int32_t>::max()) throw DomainError("run too long for distance tables");
        if (len >= l_max_) cut_.add(run.lx + l_max_ - 1, run.rx, run.y);
        const Coord j = run.y - tables_.offset_.y;
        auto base = static_cast<std::size_t>(j * tables_.width_ + (run.lx - tables_.offset_.x));
        for (Coord k = 0; k < len; ++k) {
            tables_.cells_[base + static_cast<std::size_t>(k)] = {static_cast<std::int32_t>(k + 1),
                                                                  static_cast<std::int32_t>(len - k)};
        }
    }

    ErosionTables finish() && {
        tables_.x_cut_ = std::move(cut_).build();
        return std::move(tables_);
    }

private:
    Coord l_min_;
    Coord l_max_;
    ErosionTables tables_;
    RleBuilder cut_;
};

ErosionTables build_tables(const RleImage& x, Coord l_min, Coord l_max) {
    auto box = bounding_rect(x);
    if (!box) {
        if (l_min < 1 || l_min > l_max) throw DomainError("invalid run length bounds for table construction");
        return {};
    }
    TableBuilder builder(*box, l_min, l_max);
    for (const Run& r : x.runs()) builder.add(r);
    return std::move(builder).finish();
}

ErosionTables build_complement_tables(const RleImage& x, const Rect& rect, Coord l_min, Coord l_max) {
    TableBuilder builder(rect, l_min, l_max);
    auto runs = x.runs();
    std::size_t k = 0;
    while (k < runs.size() && runs[k].y < rect.t) ++k;
    for (Coord y = rect.t; y <= rect.b; ++y) {
        Coord cursor = rect.l;
        for (; k < runs.size() && runs[k].y == y; ++k) {
            const Run& r = runs[k];
            if (r.rx < cursor || r.lx > rect.r) continue;
            if (r.lx > cursor) builder.add({cursor, r.lx - 1, y});
            cursor = std::max(cursor, r.rx + 1);
        }
        if (cursor <= rect.r) builder.add({cursor, rect.r, y});
    }
    return std::move(builder).finish();
}

bool erode_check_at(const ErosionTables& tables, const SkeletonTable& skel, Point h) {
    for (const SkeletonEntry& s : skel.entries) {
        if (s.depth > tables.left(h + s.offset)) return false;
    }
    return true;
}

RleImage erode(const RleImage& x, const RleImage& se) {
    SkeletonTable skel = generate_skeleton(se);
    if (x.empty()) return {};
    ErosionTables tables = build_tables(x, skel.l_min, skel.l_max);
    return scan_erosion(tables, skel);
}

DilationFrame dilation_frame(const Rect& x_box, const Rect& se_box) {
    const Coord w = se_box.width();
    const Coord h = se_box.height();
    return {x_box.grown(w, h), x_box.grown(2 * w, 2 * h)};
}

RleImage dilate(const RleImage& x, const RleImage& se) {
    require_se(se);
    if (x.empty()) return {};

    // The rectangles are only large enough when the SE contains the origin,
    // so dilate by se translated to its anchor and shift the result back.
    const Point shift = generate_skeleton(se).anchor;
    const RleImage centred = translate(se, -shift);

    const DilationFrame frame = dilation_frame(*bounding_rect(x), *bounding_rect(centred));
    SkeletonTable skel = generate_reflected_skeleton(centred);
    ErosionTables tables = build_complement_tables(x, frame.rec_epsilon, skel.l_min, skel.l_max);
    RleImage background = scan_erosion(tables, skel);
    return translate(complement_within(background, frame.rec_delta), shift);
}

}  // namespace rlemorph
