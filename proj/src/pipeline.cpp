#include "hazelab/pipeline.hpp"

#include "hazelab/error.hpp"

namespace hazelab {

PipelineResult run_pipeline(const RgbImage& hazy, const PipelineOptions& options) {
    require_unit_rgb(hazy, "dehaze");
    PipelineResult out;
    out.a_model = options.airlight ? *options.airlight : estimate_airlight(hazy, options.stop_size);

    if (options.transmission) {
        if (!options.transmission->same_shape(hazy.plane(0))) {
            throw InvalidInput("dehaze: transmission map shape does not match image");
        }
        out.tm = *options.transmission;
    } else {
        ModelTransmission mt = estimate_transmission(hazy, out.a_model, options.radius, options.directions);
        out.t0 = std::move(mt.t0);
        out.tm = std::move(mt.tm);
    }

    if (options.t_delta && !options.t_delta->same_shape(hazy.plane(0))) {
        throw InvalidInput("dehaze: t-delta shape does not match image");
    }
    out.estimate.a_model = out.a_model;
    out.estimate.t_model = out.tm;
    out.estimate.a_delta = options.a_delta;
    out.estimate.t_delta = options.t_delta;

    out.restored = options.single_scale ? single_scale_dehaze(hazy, out.estimate) : dual_scale_dehaze(hazy, out.estimate);
    return out;
}

}  // namespace hazelab
