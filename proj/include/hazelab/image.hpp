#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace hazelab {

/// Single-plane image of real samples, row-major.
///
/// Used for transmission maps, depth fields and any scalar per-pixel
/// quantity. Sample range is not constrained here; operations that need
/// [0,1] check it themselves.
class GrayImage {
public:
    GrayImage() = default;
    GrayImage(int width, int height, double fill = 0.0);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& at(int x, int y) { return data_[index(x, y)]; }
    double at(int x, int y) const { return data_[index(x, y)]; }

    std::span<double> row(int y) { return {data_.data() + index(0, y), static_cast<std::size_t>(width_)}; }
    std::span<const double> row(int y) const {
        return {data_.data() + index(0, y), static_cast<std::size_t>(width_)};
    }

    std::span<double> samples() { return data_; }
    std::span<const double> samples() const { return data_; }

    bool same_shape(const GrayImage& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<double> data_;
};

/// Planar three-channel image (R, G, B).
///
/// Display images live in [0,1]; intermediate fields such as Laplacian
/// levels or unclamped restorations reuse the same container with
/// arbitrary finite values. `require_unit_rgb` enforces the display
/// invariants at the boundaries that need them.
class RgbImage {
public:
    static constexpr int kChannels = 3;

    RgbImage() = default;
    RgbImage(int width, int height, double fill = 0.0);
    RgbImage(int width, int height, std::array<double, 3> fill);

    int width() const { return planes_[0].width(); }
    int height() const { return planes_[0].height(); }
    std::size_t pixel_count() const { return planes_[0].size(); }

    GrayImage& plane(int c) { return planes_[static_cast<std::size_t>(c)]; }
    const GrayImage& plane(int c) const { return planes_[static_cast<std::size_t>(c)]; }

    double& at(int c, int x, int y) { return plane(c).at(x, y); }
    double at(int c, int x, int y) const { return plane(c).at(x, y); }

    std::array<double, 3> pixel(int x, int y) const {
        return {at(0, x, y), at(1, x, y), at(2, x, y)};
    }

    bool same_shape(const RgbImage& other) const { return planes_[0].same_shape(other.planes_[0]); }
    bool same_shape(const GrayImage& other) const { return planes_[0].same_shape(other); }

    friend bool operator==(const RgbImage&, const RgbImage&) = default;

private:
    std::array<GrayImage, 3> planes_;
};

/// Throws InvalidInput unless `img` is at least 2x2 with finite samples in [0,1].
void require_unit_rgb(const RgbImage& img, std::string_view what);
/// Throws InvalidInput unless every sample is finite.
void require_finite(const GrayImage& img, std::string_view what);

RgbImage clamp_unit(const RgbImage& img);
GrayImage clamp_unit(const GrayImage& img);

/// Largest absolute per-sample difference; shapes must match.
double max_abs_diff(const RgbImage& a, const RgbImage& b);
double max_abs_diff(const GrayImage& a, const GrayImage& b);

/// Row-major channel-interleaved copy (R,G,B per pixel), for vector-space consumers.
std::vector<double> flatten(const RgbImage& img);
RgbImage unflatten(std::span<const double> values, int width, int height);

}  // namespace hazelab
