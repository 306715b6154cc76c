#pragma once

#include <vector>

#include "hazelab/image.hpp"
#include "hazelab/synthesis.hpp"

namespace hazelab {

struct Region {
    int x = 0;
    int y = 0;
    int width = 0;
    int height = 0;

    bool empty() const { return width <= 0 || height <= 0; }
    friend bool operator==(const Region&, const Region&) = default;
};

/// Mean over channels of (mean - population stddev) inside `region`.
double region_score(const RgbImage& img, const Region& region);

/// Quadrants in TL, TR, BL, BR order; odd extents split ceil/floor.
std::vector<Region> split_quadrants(const Region& region);

struct AirlightSearch {
    AtmosphericLight airlight;
    Region region;  // finally selected region
    int depth = 0;  // number of quartering steps taken
};

inline constexpr int kDefaultStopSize = 32;

/// Hierarchical quadtree search for the atmospheric light.
///
/// Starting from the whole image, repeatedly quarters the current region
/// and keeps the quadrant with the highest region_score (first in TL, TR,
/// BL, BR order on ties) until the current region has min(w, h) below
/// `stop_size`. The pixel of that region closest to white is returned.
AirlightSearch search_airlight(const RgbImage& img, int stop_size = kDefaultStopSize);

AtmosphericLight estimate_airlight(const RgbImage& img, int stop_size = kDefaultStopSize);

}  // namespace hazelab
