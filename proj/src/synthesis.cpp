#include "hazelab/synthesis.hpp"

#include <algorithm>
#include <cmath>

#include "hazelab/error.hpp"
#include "hazelab/rng.hpp"

namespace hazelab {

TransmissionMap transmission_from_depth(const GrayImage& depth, double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw InvalidInput("transmission_from_depth: alpha must be finite and > 0");
    }
    TransmissionMap t(depth.width(), depth.height());
    auto src = depth.samples();
    auto dst = t.samples();
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (!std::isfinite(src[i]) || src[i] < 0.0) {
            throw InvalidInput("transmission_from_depth: depth must be finite and >= 0");
        }
        dst[i] = std::exp(-alpha * src[i]);
    }
    return t;
}

RgbImage koschmieder_forward(const RgbImage& clean, const TransmissionMap& t, const AtmosphericLight& airlight) {
    if (!clean.same_shape(t)) {
        throw InvalidInput("koschmieder_forward: transmission shape does not match image");
    }
    RgbImage hazy(clean.width(), clean.height());
    auto tr = t.samples();
    for (int c = 0; c < RgbImage::kChannels; ++c) {
        auto src = clean.plane(c).samples();
        auto dst = hazy.plane(c).samples();
        const double a = airlight[c];
        for (std::size_t i = 0; i < dst.size(); ++i) {
            dst[i] = std::clamp(src[i] * tr[i] + a * (1.0 - tr[i]), 0.0, 1.0);
        }
    }
    return hazy;
}

HazeCohort cohort_for_index(std::uint64_t index) {
    return index % kCohortPeriod == 0 ? HazeCohort::Light : HazeCohort::Heavy;
}

SynthesisParams sample_protocol_params(std::uint64_t seed, std::uint64_t index) {
    Rng rng(mix_seed(seed, index));
    SynthesisParams p;
    p.seed = seed;
    p.index = index;
    p.cohort = cohort_for_index(index);
    p.alpha = p.cohort == HazeCohort::Light ? rng.uniform(kLightAlphaMin, kLightAlphaMax)
                                            : rng.uniform(kHeavyAlphaMin, kHeavyAlphaMax);
    for (double& a : p.airlight.rgb) {
        a = rng.uniform(kAirlightMin, kAirlightMax);
    }
    return p;
}

GrayImage constant_depth(int width, int height, double value) {
    return GrayImage(width, height, value);
}

GrayImage ramp_depth(int width, int height, double near, double far) {
    GrayImage d(width, height);
    for (int y = 0; y < height; ++y) {
        const double s = height > 1 ? static_cast<double>(y) / (height - 1) : 0.0;
        const double v = far + (near - far) * s;
        for (double& x : d.row(y)) {
            x = v;
        }
    }
    return d;
}

GrayImage step_depth(int width, int height, double near, double far, int split) {
    GrayImage d(width, height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            d.at(x, y) = x < split ? near : far;
        }
    }
    return d;
}

GrayImage radial_depth(int width, int height, double near, double far) {
    GrayImage d(width, height);
    const double cx = 0.5 * (width - 1);
    const double cy = 0.5 * (height - 1);
    const double reach = std::max(std::hypot(cx, cy), 1e-12);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            d.at(x, y) = near + (far - near) * std::hypot(x - cx, y - cy) / reach;
        }
    }
    return d;
}

}  // namespace hazelab
