#include "rlemorph/synth.hpp"

#include <algorithm>
#include <cmath>

namespace rlemorph {

namespace {

void require_odd(Coord size) {
    if (size < 1 || size % 2 == 0) throw DomainError("structuring element size must be odd and positive");
}

}  // namespace

RleImage make_square(Coord size) {
    require_odd(size);
    const Coord r = (size - 1) / 2;
    RleBuilder b;
    for (Coord y = -r; y <= r; ++y) b.add(-r, r, y);
    return std::move(b).build();
}

RleImage make_diamond(Coord size) {
    require_odd(size);
    const Coord r = (size - 1) / 2;
    RleBuilder b;
    for (Coord y = -r; y <= r; ++y) {
        const Coord half = r - std::abs(y);
        b.add(-half, half, y);
    }
    return std::move(b).build();
}

RleImage make_se(SeShape shape, Coord size) {
    return shape == SeShape::Square ? make_square(size) : make_diamond(size);
}

RleImage random_image(Coord width, Coord height, double density, std::uint64_t seed) {
    if (width < 1 || height < 1) throw DomainError("image dimensions must be positive");
    if (!(density >= 0.0 && density <= 1.0)) throw DomainError("density must lie in [0, 1]");
    Rng rng(seed);
    Raster grid(width, height);
    for (Coord j = 0; j < height; ++j) {
        for (Coord i = 0; i < width; ++i) grid.set(i, j, rng.chance(density));
    }
    return from_raster(grid);
}

RleImage blob_image(Coord width, Coord height, const BlobParams& params, std::uint64_t seed) {
    if (width < 1 || height < 1) throw DomainError("image dimensions must be positive");
    if (params.min_size < 1 || params.max_size < params.min_size) throw DomainError("invalid blob size range");
    if (params.count < 0) throw DomainError("negative blob count");
    Rng rng(seed);

    int count = params.count;
    if (count == 0) {
        const double mean_side = 0.5 * static_cast<double>(params.min_size + params.max_size);
        count = std::max(1, static_cast<int>(0.7 * static_cast<double>(width * height) / (mean_side * mean_side)));
    }

    Raster grid(width, height);
    for (int n = 0; n < count; ++n) {
        const Coord cx = rng.between(0, width - 1);
        const Coord cy = rng.between(0, height - 1);
        if (rng.chance(0.5)) {
            const Coord w = rng.between(params.min_size, params.max_size);
            const Coord h = rng.between(params.min_size, params.max_size);
            const Coord x0 = std::max<Coord>(0, cx - w / 2);
            const Coord x1 = std::min(width - 1, cx - w / 2 + w - 1);
            const Coord y0 = std::max<Coord>(0, cy - h / 2);
            const Coord y1 = std::min(height - 1, cy - h / 2 + h - 1);
            for (Coord y = y0; y <= y1; ++y) {
                for (Coord x = x0; x <= x1; ++x) grid.set(x, y);
            }
        } else {
            const Coord r = rng.between(params.min_size, params.max_size) / 2;
            for (Coord y = std::max<Coord>(0, cy - r); y <= std::min(height - 1, cy + r); ++y) {
                for (Coord x = std::max<Coord>(0, cx - r); x <= std::min(width - 1, cx + r); ++x) {
                    if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r) grid.set(x, y);
                }
            }
        }
    }
    return from_raster(grid);
}

}  // namespace rlemorph
