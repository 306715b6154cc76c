#pragma once

#include <array>
#include <optional>

#include "hazelab/airlight.hpp"
#include "hazelab/restoration.hpp"
#include "hazelab/transmission.hpp"

namespace hazelab {

struct PipelineOptions {
    int radius = kDefaultRadius;
    int directions = kDefaultDirections;
    int stop_size = kDefaultStopSize;
    bool single_scale = false;
    // Replace the model-based estimates (e.g. with synthesis ground truth).
    std::optional<AtmosphericLight> airlight;
    std::optional<TransmissionMap> transmission;
    // Data-driven corrections added to the model-based estimates.
    std::array<double, 3> a_delta{0.0, 0.0, 0.0};
    std::optional<GrayImage> t_delta;
};

struct PipelineResult {
    AtmosphericLight a_model;
    TransmissionMap t0;  // empty when the transmission was supplied
    TransmissionMap tm;
    AugmentedEstimate estimate;
    Restoration restored;
};

/// Model-based dehazing: airlight search, DDAP, haze-line averaging, then
/// the dual-scale (or single-scale) restoration with any supplied deltas.
PipelineResult run_pipeline(const RgbImage& hazy, const PipelineOptions& options = {});

}  // namespace hazelab
