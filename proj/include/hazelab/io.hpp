#pragma once

#include <filesystem>

#include "hazelab/image.hpp"

namespace hazelab {

// 8-bit PNG. Loading accepts gray, gray+alpha, RGB and RGBA at 8 or 16 bits
// (alpha dropped, gray replicated) and scales to [0,1] by 1/255 (1/65535).
RgbImage read_png(const std::filesystem::path& path);
/// Writes 8-bit RGB; samples are clamped to [0,1] and rounded to the nearest level.
void write_png(const std::filesystem::path& path, const RgbImage& img);

// Single-channel portable float map ("Pf"), stored bottom row first.
// Reading honours the sign of the scale (negative = little-endian);
// writing always produces little-endian with scale -1.
GrayImage read_pfm(const std::filesystem::path& path);
void write_pfm(const std::filesystem::path& path, const GrayImage& img);

/// 8-bit quantisation as performed by write_png, without the file.
RgbImage quantize_8bit(const RgbImage& img);

}  // namespace hazelab
