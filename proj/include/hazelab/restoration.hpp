#pragma once

#include <array>
#include <optional>

#include "hazelab/image.hpp"
#include "hazelab/synthesis.hpp"

namespace hazelab {

/// Clamp surrogate for |z|: |z| when |z| >= m, (z^2 + m^2) / (2m) otherwise.
/// Continuous and differentiable in z with minimum m/2 at z = 0.
double phi(double z, double m);

inline constexpr double kAirlightFloor = 3.0 / 8.0;
inline constexpr double kTransmissionFloor = 1.0 / 4.0;

/// Model-based estimate plus optional learned corrections:
/// A = A_m + A_d, t = t_m + t_d. Corrections default to zero.
struct AugmentedEstimate {
    AtmosphericLight a_model;
    TransmissionMap t_model;
    std::array<double, 3> a_delta{0.0, 0.0, 0.0};
    std::optional<GrayImage> t_delta;

    /// a_model + a_delta, clamped to [0,1] per channel.
    AtmosphericLight effective_airlight() const;
    /// clamp(t_model + t_delta, 0, 1); throws InvalidInput on a shape mismatch.
    TransmissionMap effective_transmission() const;
};

struct Restoration {
    RgbImage raw;        // collapsed output before clamping; feed this to metrics
    RgbImage gaussian1;  // restored {I}_G^1 (the single-scale path leaves it empty)

    RgbImage display() const { return clamp_unit(raw); }
};

/// Two-scale restoration: the Gaussian level is dehazed with the full
/// model and the Laplacian level divided by the transmission, each with
/// the phi clamps, before collapsing.
Restoration dual_scale_dehaze(const RgbImage& hazy, const AugmentedEstimate& est);

/// Per-pixel restoration with the same phi clamps and no pyramid.
Restoration single_scale_dehaze(const RgbImage& hazy, const AugmentedEstimate& est);

}  // namespace hazelab
