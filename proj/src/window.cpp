#include "hazelab/window.hpp"

#include <algorithm>
#include <vector>

#include "hazelab/error.hpp"
#include "hazelab/parallel.hpp"

namespace hazelab {

namespace {

// van Herk/Gil-Werman: over the replicate-padded line, block-wise prefix
// minima g and suffix minima h with block length k = 2r+1 give
// min(line[i .. i+k-1]) = min(h[i], g[i+k-1]).
void running_min(std::span<const double> line, int radius, std::span<double> out,
                 std::vector<double>& padded, std::vector<double>& prefix, std::vector<double>& suffix) {
    const int n = static_cast<int>(line.size());
    const int k = 2 * radius + 1;
    const int len = n + 2 * radius;
    padded.resize(static_cast<std::size_t>(len));
    prefix.resize(static_cast<std::size_t>(len));
    suffix.resize(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        padded[static_cast<std::size_t>(i)] = line[static_cast<std::size_t>(std::clamp(i - radius, 0, n - 1))];
    }
    for (int i = 0; i < len; ++i) {
        const auto u = static_cast<std::size_t>(i);
        prefix[u] = (i % k == 0) ? padded[u] : std::min(prefix[u - 1], padded[u]);
    }
    for (int i = len - 1; i >= 0; --i) {
        const auto u = static_cast<std::size_t>(i);
        suffix[u] = (i == len - 1 || (i + 1) % k == 0) ? padded[u] : std::min(suffix[u + 1], padded[u]);
    }
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] =
            std::min(suffix[static_cast<std::size_t>(i)], prefix[static_cast<std::size_t>(i + k - 1)]);
    }
}

}  // namespace

GrayImage windowed_min(const GrayImage& img, int radius) {
    if (radius < 0) {
        throw InvalidInput("windowed_min: radius must be >= 0");
    }
    if (radius == 0 || img.empty()) {
        return img;
    }
    const int w = img.width();
    const int h = img.height();

    GrayImage horizontal(w, h);
    parallel_for(h, [&](int y) {
        std::vector<double> padded, prefix, suffix;
        running_min(img.row(y), radius, horizontal.row(y), padded, prefix, suffix);
    });

    GrayImage out(w, h);
    parallel_for(w, [&](int x) {
        std::vector<double> column(static_cast<std::size_t>(h));
        std::vector<double> result(static_cast<std::size_t>(h));
        std::vector<double> padded, prefix, suffix;
        for (int y = 0; y < h; ++y) {
            column[static_cast<std::size_t>(y)] = horizontal.at(x, y);
        }
        running_min(column, radius, result, padded, prefix, suffix);
        for (int y = 0; y < h; ++y) {
            out.at(x, y) = result[static_cast<std::size_t>(y)];
        }
    });
    return out;
}

GrayImage channel_min(const RgbImage& img) {
    GrayImage out(img.width(), img.height());
    auto r = img.plane(0).samples();
    auto g = img.plane(1).samples();
    auto b = img.plane(2).samples();
    auto dst = out.samples();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] = std::min({r[i], g[i], b[i]});
    }
    return out;
}

}  // namespace hazelab
