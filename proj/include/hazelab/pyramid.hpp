#pragma once

#include "hazelab/image.hpp"

namespace hazelab {

/// Two-level Laplacian pyramid: a full-resolution band-pass residual and
/// the half-resolution Gaussian base.
struct TwoLevelPyramid {
    RgbImage laplacian0;  // values in roughly [-1, 1]
    RgbImage gaussian1;   // ceil(w/2) x ceil(h/2)
};

/// Separable (1,4,6,4,1)/16 binomial blur, reflect-101 borders.
GrayImage blur(const GrayImage& img);
/// Keeps even-indexed rows and columns: ceil(w/2) x ceil(h/2).
GrayImage downsample(const GrayImage& img);
/// Zero-insertion to width x height, then the binomial kernel scaled by 2 per axis.
GrayImage upsample(const GrayImage& img, int width, int height);

/// downsample(blur(img)); used for {t}_G^1 as well as each image channel.
GrayImage gaussian_level1(const GrayImage& img);
RgbImage gaussian_level1(const RgbImage& img);
RgbImage upsample(const RgbImage& img, int width, int height);

/// Builds the pyramid of a valid [0,1] image (at least 2x2).
TwoLevelPyramid build_pyramid(const RgbImage& img);

/// laplacian0 + upsample(gaussian1), not clamped. Apply clamp_unit for display.
RgbImage collapse_pyramid(const TwoLevelPyramid& pyr);

}  // namespace hazelab
