#pragma once

#include <array>
#include <cstdint>

#include "hazelab/image.hpp"

namespace hazelab {

/// Global colour of the scattered ambient light, each channel in [0,1].
struct AtmosphericLight {
    std::array<double, 3> rgb{1.0, 1.0, 1.0};

    double operator[](int c) const { return rgb[static_cast<std::size_t>(c)]; }
    friend bool operator==(const AtmosphericLight&, const AtmosphericLight&) = default;
};

/// Per-pixel transmission t(p) in [0,1], same shape as its image.
using TransmissionMap = GrayImage;

enum class HazeCohort { Light, Heavy };

struct SynthesisParams {
    double alpha = 1.0;
    AtmosphericLight airlight;
    std::uint64_t seed = 0;
    std::uint64_t index = 0;
    HazeCohort cohort = HazeCohort::Light;
};

/// Scattering-coefficient ranges of the training protocol.
inline constexpr double kLightAlphaMin = 1.2;
inline constexpr double kLightAlphaMax = 2.0;
inline constexpr double kHeavyAlphaMin = 2.5;
inline constexpr double kHeavyAlphaMax = 3.0;
inline constexpr double kAirlightMin = 0.625;
inline constexpr double kAirlightMax = 1.0;
/// One light-haze image per this many; matches a 100/400 light/heavy split.
inline constexpr std::uint64_t kCohortPeriod = 5;

/// t(p) = exp(-alpha * d(p)). Depth must be finite and non-negative, alpha > 0.
TransmissionMap transmission_from_depth(const GrayImage& depth, double alpha);

/// Z_c = I_c * t + A_c * (1 - t), clamped to [0,1].
RgbImage koschmieder_forward(const RgbImage& clean, const TransmissionMap& t, const AtmosphericLight& airlight);

/// Protocol cohort for dataset position `index`: every kCohortPeriod-th image is light haze.
HazeCohort cohort_for_index(std::uint64_t index);

/// Deterministic protocol draw for image `index` of a dataset seeded with `seed`.
///
/// alpha is uniform over the cohort's range; each airlight channel is an
/// independent uniform draw in [0.625, 1].
SynthesisParams sample_protocol_params(std::uint64_t seed, std::uint64_t index);

// Procedural depth fields, in arbitrary depth units.
GrayImage constant_depth(int width, int height, double value);
/// Linear in y: `far` on the top row down to `near` on the bottom row.
GrayImage ramp_depth(int width, int height, double near, double far);
/// `near` left of column `split`, `far` from it onward.
GrayImage step_depth(int width, int height, double near, double far, int split);
/// `near` at the centre growing linearly to `far` at the corners.
GrayImage radial_depth(int width, int height, double near, double far);

}  // namespace hazelab
