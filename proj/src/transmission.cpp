#include "hazelab/transmission.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hazelab/error.hpp"
#include "hazelab/parallel.hpp"
#include "hazelab/window.hpp"

namespace hazelab {

namespace {

void require_airlight(const AtmosphericLight& a, const char* what) {
    for (double v : a.rgb) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw InvalidInput(std::string(what) + ": airlight channels must be > 0");
        }
    }
}

// Slack on the pruning bound absorbs rounding between the bound and the
// directly computed dot product.
constexpr double kBoundSlack = 1e-12;

}  // namespace

TransmissionMap ddap_init(const RgbImage& hazy, const AtmosphericLight& airlight, int radius) {
    require_airlight(airlight, "ddap_init");
    if (radius < 0) {
        throw InvalidInput("ddap_init: radius must be >= 0");
    }
    GrayImage ratio(hazy.width(), hazy.height());
    auto dst = ratio.samples();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        double m = hazy.plane(0).samples()[i] / airlight[0];
        m = std::min(m, hazy.plane(1).samples()[i] / airlight[1]);
        m = std::min(m, hazy.plane(2).samples()[i] / airlight[2]);
        dst[i] = m;
    }
    GrayImage t0 = windowed_min(ratio, radius);
    for (double& v : t0.samples()) {
        v = std::clamp(1.0 - v, 0.0, 1.0);
    }
    return t0;
}

std::vector<Direction> fibonacci_directions(int count) {
    if (count < 1) {
        throw InvalidInput("fibonacci_directions: count must be >= 1");
    }
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    std::vector<Direction> dirs(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / count;
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * i;
        dirs[static_cast<std::size_t>(i)] = {s * std::cos(phi), s * std::sin(phi), z};
    }
    return dirs;
}

int nearest_direction(const std::vector<Direction>& directions, const Direction& u) {
    const int k = static_cast<int>(directions.size());
    const double uz = std::clamp(u[2], -1.0, 1.0);
    const double us = std::sqrt(std::max(0.0, 1.0 - uz * uz));

    // Lattice row whose z is closest to uz.
    int start = static_cast<int>(std::lround(((1.0 - uz) * k - 1.0) / 2.0));
    start = std::clamp(start, 0, k - 1);

    int best = -1;
    double best_cos = -2.0;
    auto consider = [&](int i) {
        const Direction& d = directions[static_cast<std::size_t>(i)];
        const double c = u[0] * d[0] + u[1] * d[1] + u[2] * d[2];
        if (c > best_cos || (c == best_cos && i < best)) {
            best_cos = c;
            best = i;
        }
    };
    auto bound = [&](int i) {
        const Direction& d = directions[static_cast<std::size_t>(i)];
        const double ds = std::sqrt(std::max(0.0, 1.0 - d[2] * d[2]));
        return uz * d[2] + us * ds;
    };

    consider(start);
    for (int i = start - 1; i >= 0; --i) {
        if (bound(i) < best_cos - kBoundSlack) {
            break;
        }
        consider(i);
    }
    for (int i = start + 1; i < k; ++i) {
        if (bound(i) < best_cos - kBoundSlack) {
            break;
        }
        consider(i);
    }
    return best;
}

HazeLinePartition build_haze_lines(const RgbImage& hazy, const AtmosphericLight& airlight, int n_directions) {
    if (n_directions < 1) {
        throw InvalidInput("build_haze_lines: n_directions must be >= 1");
    }
    HazeLinePartition part;
    part.width = hazy.width();
    part.height = hazy.height();
    part.directions = fibonacci_directions(n_directions);
    part.radius = GrayImage(hazy.width(), hazy.height());
    part.cluster_of.assign(hazy.pixel_count(), 0);

    const int w = hazy.width();
    parallel_for(hazy.height(), [&](int y) {
        for (int x = 0; x < w; ++x) {
            const double vr = hazy.at(0, x, y) - airlight[0];
            const double vg = hazy.at(1, x, y) - airlight[1];
            const double vb = hazy.at(2, x, y) - airlight[2];
            const double r = std::sqrt(vr * vr + vg * vg + vb * vb);
            part.radius.at(x, y) = r;
            const auto idx = static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x);
            part.cluster_of[idx] =
                r > 0.0 ? nearest_direction(part.directions, {vr / r, vg / r, vb / r}) : n_directions;
        }
    });

    part.sum_r = cluster_sums(part, part.radius);
    part.count.assign(static_cast<std::size_t>(n_directions) + 1, 0);
    for (int c : part.cluster_of) {
        ++part.count[static_cast<std::size_t>(c)];
    }
    part.sum_t0.assign(part.count.size(), 0.0);
    return part;
}

HazeLinePartition build_haze_lines(const RgbImage& hazy, const AtmosphericLight& airlight, const TransmissionMap& t0,
                                   int n_directions) {
    if (!hazy.same_shape(t0)) {
        throw InvalidInput("build_haze_lines: t0 shape does not match image");
    }
    HazeLinePartition part = build_haze_lines(hazy, airlight, n_directions);
    part.sum_t0 = cluster_sums(part, t0);
    return part;
}

std::vector<double> cluster_sums(const HazeLinePartition& part, const GrayImage& field) {
    if (field.width() != part.width || field.height() != part.height) {
        throw InvalidInput("cluster_sums: field shape does not match partition");
    }
    std::vector<double> sums(static_cast<std::size_t>(part.cluster_count()) + 1, 0.0);
    auto values = field.samples();
    for (std::size_t i = 0; i < values.size(); ++i) {
        sums[static_cast<std::size_t>(part.cluster_of[i])] += values[i];
    }
    return sums;
}

std::vector<double> hla_ratios(const HazeLinePartition& part, const TransmissionMap& t0) {
    const std::vector<double> sum_t = cluster_sums(part, t0);
    std::vector<double> ratio(sum_t.size(), 0.0);
    for (int c = 0; c < part.cluster_count(); ++c) {
        const auto k = static_cast<std::size_t>(c);
        if (part.count[k] == 0) {
            continue;
        }
        // Members all have r > 0, so a non-empty cluster has a positive sum.
        if (!(part.sum_r[k] > 0.0)) {
            throw std::logic_error("hla_ratios: non-degenerate cluster with zero radius sum");
        }
        ratio[k] = sum_t[k] / part.sum_r[k];
    }
    return ratio;
}

GrayImage hla_refine_raw(const TransmissionMap& t0, const HazeLinePartition& part) {
    const std::vector<double> ratio = hla_ratios(part, t0);
    GrayImage out(t0.width(), t0.height());
    auto src = t0.samples();
    auto r = part.radius.samples();
    auto dst = out.samples();
    const int degenerate = part.degenerate_cluster();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        const int c = part.cluster_of[i];
        dst[i] = c == degenerate ? src[i] : ratio[static_cast<std::size_t>(c)] * r[i];
    }
    return out;
}

TransmissionMap hla_refine(const TransmissionMap& t0, const HazeLinePartition& part) {
    return clamp_unit(hla_refine_raw(t0, part));
}

ModelTransmission estimate_transmission(const RgbImage& hazy, const AtmosphericLight& airlight, int radius,
                                        int n_directions) {
    ModelTransmission out;
    out.t0 = ddap_init(hazy, airlight, radius);
    const HazeLinePartition part = build_haze_lines(hazy, airlight, out.t0, n_directions);
    out.tm = hla_refine(out.t0, part);
    return out;
}

}  // namespace hazelab
