#include "hazelab/airlight.hpp"

#include <cmath>
#include <limits>

#include "hazelab/error.hpp"

namespace hazelab {

double region_score(const RgbImage& img, const Region& region) {
    if (region.empty()) {
        throw InvalidInput("region_score: empty region");
    }
    if (region.x < 0 || region.y < 0 || region.x + region.width > img.width() ||
        region.y + region.height > img.height()) {
        throw InvalidInput("region_score: region outside image bounds");
    }
    const double count = static_cast<double>(region.width) * region.height;
    double score = 0.0;
    for (int c = 0; c < RgbImage::kChannels; ++c) {
        const GrayImage& p = img.plane(c);
        double sum = 0.0;
        for (int y = region.y; y < region.y + region.height; ++y) {
            for (int x = region.x; x < region.x + region.width; ++x) {
                sum += p.at(x, y);
            }
        }
        const double mean = sum / count;
        double sq = 0.0;
        for (int y = region.y; y < region.y + region.height; ++y) {
            for (int x = region.x; x < region.x + region.width; ++x) {
                const double d = p.at(x, y) - mean;
                sq += d * d;
            }
        }
        score += mean - std::sqrt(sq / count);
    }
    return score / 3.0;
}

std::vector<Region> split_quadrants(const Region& r) {
    const int left = (r.width + 1) / 2;
    const int top = (r.height + 1) / 2;
    return {
        Region{r.x, r.y, left, top},
        Region{r.x + left, r.y, r.width - left, top},
        Region{r.x, r.y + top, left, r.height - top},
        Region{r.x + left, r.y + top, r.width - left, r.height - top},
    };
}

AirlightSearch search_airlight(const RgbImage& img, int stop_size) {
    if (stop_size < 1) {
        throw InvalidInput("estimate_airlight: stop_size must be >= 1");
    }
    require_unit_rgb(img, "estimate_airlight");

    AirlightSearch result;
    Region current{0, 0, img.width(), img.height()};
    // A 1-pixel-wide region cannot be quartered without empty pieces.
    while (std::min(current.width, current.height) >= stop_size && current.width >= 2 && current.height >= 2) {
        double best = -std::numeric_limits<double>::infinity();
        Region chosen;
        for (const Region& q : split_quadrants(current)) {
            const double s = region_score(img, q);
            if (s > best) {
                best = s;
                chosen = q;
            }
        }
        current = chosen;
        ++result.depth;
    }

    double best_dist = std::numeric_limits<double>::infinity();
    for (int y = current.y; y < current.y + current.height; ++y) {
        for (int x = current.x; x < current.x + current.width; ++x) {
            const auto px = img.pixel(x, y);
            const double dr = px[0] - 1.0;
            const double dg = px[1] - 1.0;
            const double db = px[2] - 1.0;
            const double dist = dr * dr + dg * dg + db * db;
            if (dist < best_dist) {
                best_dist = dist;
                result.airlight.rgb = px;
            }
        }
    }
    result.region = current;
    return result;
}

AtmosphericLight estimate_airlight(const RgbImage& img, int stop_size) {
    return search_airlight(img, stop_size).airlight;
}

}  // namespace hazelab
