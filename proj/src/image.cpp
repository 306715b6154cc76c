#include "hazelab/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hazelab/error.hpp"

namespace hazelab {

GrayImage::GrayImage(int width, int height, double fill) : width_(width), height_(height) {
    if (width < 0 || height < 0) {
        throw InvalidInput("GrayImage: negative dimensions");
    }
    data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

RgbImage::RgbImage(int width, int height, double fill)
    : planes_{GrayImage(width, height, fill), GrayImage(width, height, fill), GrayImage(width, height, fill)} {}

RgbImage::RgbImage(int width, int height, std::array<double, 3> fill)
    : planes_{GrayImage(width, height, fill[0]), GrayImage(width, height, fill[1]),
              GrayImage(width, height, fill[2])} {}

void require_unit_rgb(const RgbImage& img, std::string_view what) {
    if (img.width() < 2 || img.height() < 2) {
        throw InvalidInput(std::string(what) + ": image must be at least 2x2, got " + std::to_string(img.width()) +
                           "x" + std::to_string(img.height()));
    }
    for (int c = 0; c < RgbImage::kChannels; ++c) {
        for (double v : img.plane(c).samples()) {
            if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
                throw InvalidInput(std::string(what) + ": samples must be finite and in [0,1]");
            }
        }
    }
}

void require_finite(const GrayImage& img, std::string_view what) {
    for (double v : img.samples()) {
        if (!std::isfinite(v)) {
            throw InvalidInput(std::string(what) + ": non-finite sample");
        }
    }
}

GrayImage clamp_unit(const GrayImage& img) {
    GrayImage out = img;
    for (double& v : out.samples()) {
        v = std::clamp(v, 0.0, 1.0);
    }
    return out;
}

RgbImage clamp_unit(const RgbImage& img) {
    RgbImage out = img;
    for (int c = 0; c < RgbImage::kChannels; ++c) {
        out.plane(c) = clamp_unit(img.plane(c));
    }
    return out;
}

double max_abs_diff(const GrayImage& a, const GrayImage& b) {
    if (!a.same_shape(b)) {
        throw InvalidInput("max_abs_diff: shape mismatch");
    }
    double worst = 0.0;
    auto sa = a.samples();
    auto sb = b.samples();
    for (std::size_t i = 0; i < sa.size(); ++i) {
        worst = std::max(worst, std::abs(sa[i] - sb[i]));
    }
    return worst;
}

double max_abs_diff(const RgbImage& a, const RgbImage& b) {
    double worst = 0.0;
    for (int c = 0; c < RgbImage::kChannels; ++c) {
        worst = std::max(worst, max_abs_diff(a.plane(c), b.plane(c)));
    }
    return worst;
}

std::vector<double> flatten(const RgbImage& img) {
    std::vector<double> out;
    out.reserve(img.pixel_count() * 3);
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            for (int c = 0; c < RgbImage::kChannels; ++c) {
                out.push_back(img.at(c, x, y));
            }
        }
    }
    return out;
}

RgbImage unflatten(std::span<const double> values, int width, int height) {
    if (values.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3) {
        throw InvalidInput("unflatten: value count does not match 3*width*height");
    }
    RgbImage out(width, height);
    std::size_t i = 0;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            for (int c = 0; c < RgbImage::kChannels; ++c) {
                out.at(c, x, y) = values[i++];
            }
        }
    }
    return out;
}

}  // namespace hazelab
