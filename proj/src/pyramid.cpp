#include "hazelab/pyramid.hpp"

#include <array>
#include <string>

#include "hazelab/error.hpp"
#include "hazelab/parallel.hpp"

namespace hazelab {

namespace {

constexpr std::array<double, 5> kBinomial = {1.0 / 16, 4.0 / 16, 6.0 / 16, 4.0 / 16, 1.0 / 16};

// dcb|abcd|cba
int reflect101(int i, int n) {
    if (n == 1) {
        return 0;
    }
    while (i < 0 || i >= n) {
        i = i < 0 ? -i : 2 * n - 2 - i;
    }
    return i;
}

GrayImage convolve_separable(const GrayImage& img, double gain) {
    const int w = img.width();
    const int h = img.height();
    GrayImage tmp(w, h);
    parallel_for(h, [&](int y) {
        auto src = img.row(y);
        auto dst = tmp.row(y);
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int k = -2; k <= 2; ++k) {
                acc += kBinomial[static_cast<std::size_t>(k + 2)] * src[static_cast<std::size_t>(reflect101(x + k, w))];
            }
            dst[static_cast<std::size_t>(x)] = gain * acc;
        }
    });
    GrayImage out(w, h);
    parallel_for(h, [&](int y) {
        auto dst = out.row(y);
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int k = -2; k <= 2; ++k) {
                acc += kBinomial[static_cast<std::size_t>(k + 2)] * tmp.at(x, reflect101(y + k, h));
            }
            dst[static_cast<std::size_t>(x)] = gain * acc;
        }
    });
    return out;
}

}  // namespace

GrayImage blur(const GrayImage& img) {
    return convolve_separable(img, 1.0);
}

GrayImage downsample(const GrayImage& img) {
    const int w = (img.width() + 1) / 2;
    const int h = (img.height() + 1) / 2;
    GrayImage out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            out.at(x, y) = img.at(2 * x, 2 * y);
        }
    }
    return out;
}

GrayImage upsample(const GrayImage& img, int width, int height) {
    if (img.width() != (width + 1) / 2 || img.height() != (height + 1) / 2) {
        throw InvalidInput("upsample: source " + std::to_string(img.width()) + "x" + std::to_string(img.height()) +
                           " is not the half size of " + std::to_string(width) + "x" + std::to_string(height));
    }
    GrayImage zeros(width, height);
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            zeros.at(2 * x, 2 * y) = img.at(x, y);
        }
    }
    return convolve_separable(zeros, 2.0);
}

GrayImage gaussian_level1(const GrayImage& img) {
    return downsample(blur(img));
}

RgbImage gaussian_level1(const RgbImage& img) {
    RgbImage out;
    for (int c = 0; c < RgbImage::kChannels; ++c) {
        GrayImage level = gaussian_level1(img.plane(c));
        if (c == 0) {
            out = RgbImage(level.width(), level.height());
        }
        out.plane(c) = std::move(level);
    }
    return out;
}

RgbImage upsample(const RgbImage& img, int width, int height) {
    RgbImage out(width, height);
    for (int c = 0; c < RgbImage::kChannels; ++c) {
        out.plane(c) = upsample(img.plane(c), width, height);
    }
    return out;
}

TwoLevelPyramid build_pyramid(const RgbImage& img) {
    require_unit_rgb(img, "build_pyramid");
    TwoLevelPyramid pyr;
    pyr.gaussian1 = gaussian_level1(img);
    RgbImage up = upsample(pyr.gaussian1, img.width(), img.height());
    pyr.laplacian0 = RgbImage(img.width(), img.height());
    for (int c = 0; c < RgbImage::kChannels; ++c) {
        auto src = img.plane(c).samples();
        auto base = up.plane(c).samples();
        auto dst = pyr.laplacian0.plane(c).samples();
        for (std::size_t i = 0; i < dst.size(); ++i) {
            dst[i] = src[i] - base[i];
        }
    }
    return pyr;
}

RgbImage collapse_pyramid(const TwoLevelPyramid& pyr) {
    const int w = pyr.laplacian0.width();
    const int h = pyr.laplacian0.height();
    if (w < 2 || h < 2 || pyr.gaussian1.width() != (w + 1) / 2 || pyr.gaussian1.height() != (h + 1) / 2) {
        throw InvalidInput("collapse_pyramid: gaussian1 is not the half size of laplacian0");
    }
    RgbImage out = upsample(pyr.gaussian1, w, h);
    for (int c = 0; c < RgbImage::kChannels; ++c) {
        auto detail = pyr.laplacian0.plane(c).samples();
        auto dst = out.plane(c).samples();
        for (std::size_t i = 0; i < dst.size(); ++i) {
            dst[i] += detail[i];
        }
    }
    return out;
}

}  // namespace hazelab
