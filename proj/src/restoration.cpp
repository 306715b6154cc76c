#include "hazelab/restoration.hpp"

#include <algorithm>
#include <cmath>

#include "hazelab/error.hpp"
#include "hazelab/pyramid.hpp"

namespace hazelab {

double phi(double z, double m) {
    if (!(m > 0.0)) {
        throw InvalidInput("phi: m must be > 0");
    }
    const double a = std::abs(z);
    return a >= m ? a : (z * z + m * m) / (2.0 * m);
}

AtmosphericLight AugmentedEstimate::effective_airlight() const {
    AtmosphericLight a;
    for (std::size_t c = 0; c < 3; ++c) {
        a.rgb[c] = std::clamp(a_model.rgb[c] + a_delta[c], 0.0, 1.0);
    }
    return a;
}

TransmissionMap AugmentedEstimate::effective_transmission() const {
    TransmissionMap t = t_model;
    if (t_delta) {
        if (!t_delta->same_shape(t_model)) {
            throw InvalidInput("AugmentedEstimate: t_delta shape does not match t_model");
        }
        auto d = t_delta->samples();
        auto dst = t.samples();
        for (std::size_t i = 0; i < dst.size(); ++i) {
            dst[i] += d[i];
        }
    }
    return clamp_unit(t);
}

namespace {

void check_inputs(const RgbImage& hazy, const AugmentedEstimate& est, const char* what) {
    require_unit_rgb(hazy, what);
    if (!hazy.same_shape(est.t_model)) {
        throw InvalidInput(std::string(what) + ": transmission shape does not match image");
    }
    require_finite(est.t_model, what);
    for (std::size_t c = 0; c < 3; ++c) {
        if (!std::isfinite(est.a_model.rgb[c]) || !std::isfinite(est.a_delta[c])) {
            throw InvalidInput(std::string(what) + ": non-finite airlight");
        }
    }
}

// (z - a) / phi(t, 1/4) + a, with a = phi(A_c, 3/8) in both places.
void restore_gaussian(const GrayImage& z, const GrayImage& t, double a, GrayImage& out) {
    auto zs = z.samples();
    auto ts = t.samples();
    auto dst = out.samples();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] = (zs[i] - a) / phi(ts[i], kTransmissionFloor) + a;
    }
}

}  // namespace

Restoration dual_scale_dehaze(const RgbImage& hazy, const AugmentedEstimate& est) {
    check_inputs(hazy, est, "dual_scale_dehaze");
    const AtmosphericLight a = est.effective_airlight();
    const TransmissionMap t0 = est.effective_transmission();
    const GrayImage t1 = gaussian_level1(t0);

    const TwoLevelPyramid zp = build_pyramid(hazy);
    TwoLevelPyramid ip{RgbImage(hazy.width(), hazy.height()), RgbImage(zp.gaussian1.width(), zp.gaussian1.height())};

    for (int c = 0; c < RgbImage::kChannels; ++c) {
        restore_gaussian(zp.gaussian1.plane(c), t1, phi(a[c], kAirlightFloor), ip.gaussian1.plane(c));

        auto detail = zp.laplacian0.plane(c).samples();
        auto ts = t0.samples();
        auto dst = ip.laplacian0.plane(c).samples();
        for (std::size_t i = 0; i < dst.size(); ++i) {
            dst[i] = detail[i] / phi(ts[i], kTransmissionFloor);
        }
    }

    Restoration out;
    out.raw = collapse_pyramid(ip);
    out.gaussian1 = std::move(ip.gaussian1);
    return out;
}

Restoration single_scale_dehaze(const RgbImage& hazy, const AugmentedEstimate& est) {
    check_inputs(hazy, est, "single_scale_dehaze");
    const AtmosphericLight a = est.effective_airlight();
    const TransmissionMap t = est.effective_transmission();

    Restoration out;
    out.raw = RgbImage(hazy.width(), hazy.height());
    for (int c = 0; c < RgbImage::kChannels; ++c) {
        restore_gaussian(hazy.plane(c), t, phi(a[c], kAirlightFloor), out.raw.plane(c));
    }
    return out;
}

}  // namespace hazelab
