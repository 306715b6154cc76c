#pragma once

#include "hazelab/image.hpp"

namespace hazelab {

/// Minimum over the (2r+1)^2 square centred at each pixel, replicate borders.
///
/// Computed as a horizontal then vertical van Herk/Gil-Werman running
/// minimum, so the cost per sample is independent of the radius. Only
/// comparisons are involved, so the result is bit-identical to an
/// exhaustive window scan.
GrayImage windowed_min(const GrayImage& img, int radius);

/// Per-pixel minimum over the three channels.
GrayImage channel_min(const RgbImage& img);

}  // namespace hazelab
