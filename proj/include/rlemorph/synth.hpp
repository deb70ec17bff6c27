#pragma once

// Structuring-element shapes and synthetic test images.

#include <cstdint>
#include <random>

#include "rlemorph/rle.hpp"

namespace rlemorph {

enum class SeShape { Square, Diamond };

/// size x size block centred at the origin. size must be odd.
RleImage make_square(Coord size);

/// {(x, y) : |x| + |y| <= (size - 1) / 2}. size must be odd.
RleImage make_diamond(Coord size);

RleImage make_se(SeShape shape, Coord size);

/// Deterministic generator: the same seed yields the same numbers on every
/// platform (std distributions are implementation-defined, so they are not used).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Uniform in [lo, hi].
    Coord between(Coord lo, Coord hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<Coord>(engine_() % span);
    }
    bool chance(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

/// Each pixel of [0, width) x [0, height) set independently with probability density.
RleImage random_image(Coord width, Coord height, double density, std::uint64_t seed);

struct BlobParams {
    int count = 0;  // 0 picks a count that covers roughly half the canvas
    Coord min_size = 4;
    Coord max_size = 64;
};

/// Union of random filled rectangles and discs clipped to the canvas.
RleImage blob_image(Coord width, Coord height, const BlobParams& params, std::uint64_t seed);

}  // namespace rlemorph
