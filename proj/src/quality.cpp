#include "hazelab/quality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "hazelab/error.hpp"
#include "hazelab/window.hpp"

namespace hazelab {

namespace {

void require_same_shape(const RgbImage& a, const RgbImage& b, const char* what) {
    if (!a.same_shape(b)) {
        throw InvalidInput(std::string(what) + ": dimension mismatch (" + std::to_string(a.width()) + "x" +
                           std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                           std::to_string(b.height()) + ")");
    }
}

constexpr int kSsimRadius = 5;
constexpr double kSsimSigma = 1.5;
constexpr double kSsimC1 = 0.01 * 0.01;
constexpr double kSsimC2 = 0.03 * 0.03;

std::array<double, 2 * kSsimRadius + 1> ssim_kernel() {
    std::array<double, 2 * kSsimRadius + 1> k{};
    double sum = 0.0;
    for (int i = -kSsimRadius; i <= kSsimRadius; ++i) {
        const double v = std::exp(-(i * i) / (2.0 * kSsimSigma * kSsimSigma));
        k[static_cast<std::size_t>(i + kSsimRadius)] = v;
        sum += v;
    }
    for (double& v : k) {
        v /= sum;
    }
    return k;
}

// Separable weighted mean over valid windows only; output is (w-10) x (h-10).
GrayImage filter_valid(const GrayImage& img) {
    static const auto k = ssim_kernel();
    const int n = 2 * kSsimRadius + 1;
    const int ow = img.width() - n + 1;
    const int oh = img.height() - n + 1;
    GrayImage tmp(ow, img.height());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < ow; ++x) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) {
                acc += k[static_cast<std::size_t>(j)] * img.at(x + j, y);
            }
            tmp.at(x, y) = acc;
        }
    }
    GrayImage out(ow, oh);
    for (int y = 0; y < oh; ++y) {
        for (int x = 0; x < ow; ++x) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) {
                acc += k[static_cast<std::size_t>(j)] * tmp.at(x, y + j);
            }
            out.at(x, y) = acc;
        }
    }
    return out;
}

GrayImage product(const GrayImage& a, const GrayImage& b) {
    GrayImage out(a.width(), a.height());
    auto sa = a.samples();
    auto sb = b.samples();
    auto dst = out.samples();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] = sa[i] * sb[i];
    }
    return out;
}

double gradient_l1(const RgbImage& a, const RgbImage& b) {
    const int w = a.width();
    const int h = a.height();
    double sum = 0.0;
    for (int c = 0; c < RgbImage::kChannels; ++c) {
        const GrayImage& pa = a.plane(c);
        const GrayImage& pb = b.plane(c);
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                if (x + 1 < w) {
                    sum += std::abs((pa.at(x + 1, y) - pa.at(x, y)) - (pb.at(x + 1, y) - pb.at(x, y)));
                }
                if (y + 1 < h) {
                    sum += std::abs((pa.at(x, y + 1) - pa.at(x, y)) - (pb.at(x, y + 1) - pb.at(x, y)));
                }
            }
        }
    }
    return sum;
}

double l1_sum(const RgbImage& a, const RgbImage& b) {
    double sum = 0.0;
    for (int c = 0; c < RgbImage::kChannels; ++c) {
        auto sa = a.plane(c).samples();
        auto sb = b.plane(c).samples();
        for (std::size_t i = 0; i < sa.size(); ++i) {
            sum += std::abs(sa[i] - sb[i]);
        }
    }
    return sum;
}

double mean_squared_difference(const GrayImage& a, const GrayImage& b) {
    auto sa = a.samples();
    auto sb = b.samples();
    double sum = 0.0;
    for (std::size_t i = 0; i < sa.size(); ++i) {
        const double d = sa[i] - sb[i];
        sum += d * d;
    }
    return sa.empty() ? 0.0 : sum / static_cast<double>(sa.size());
}

}  // namespace

double psnr(const RgbImage& a, const RgbImage& b) {
    require_same_shape(a, b, "psnr");
    double sum = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < RgbImage::kChannels; ++c) {
        auto sa = a.plane(c).samples();
        auto sb = b.plane(c).samples();
        for (std::size_t i = 0; i < sa.size(); ++i) {
            const double d = sa[i] - sb[i];
            sum += d * d;
        }
        n += sa.size();
    }
    if (n == 0) {
        throw InvalidInput("psnr: empty images");
    }
    const double mse = sum / static_cast<double>(n);
    if (mse == 0.0) {
        return kPsnrCap;
    }
    return std::min(kPsnrCap, 10.0 * std::log10(1.0 / mse));
}

double ssim(const RgbImage& a, const RgbImage& b) {
    require_same_shape(a, b, "ssim");
    const int n = 2 * kSsimRadius + 1;
    if (a.width() < n || a.height() < n) {
        throw InvalidInput("ssim: images must be at least 11x11");
    }
    double total = 0.0;
    std::size_t count = 0;
    for (int c = 0; c < RgbImage::kChannels; ++c) {
        const GrayImage& pa = a.plane(c);
        const GrayImage& pb = b.plane(c);
        const GrayImage mu_a = filter_valid(pa);
        const GrayImage mu_b = filter_valid(pb);
        const GrayImage e_aa = filter_valid(product(pa, pa));
        const GrayImage e_bb = filter_valid(product(pb, pb));
        const GrayImage e_ab = filter_valid(product(pa, pb));
        for (std::size_t i = 0; i < mu_a.size(); ++i) {
            const double ma = mu_a.samples()[i];
            const double mb = mu_b.samples()[i];
            const double va = e_aa.samples()[i] - ma * ma;
            const double vb = e_bb.samples()[i] - mb * mb;
            const double cov = e_ab.samples()[i] - ma * mb;
            total += ((2.0 * ma * mb + kSsimC1) * (2.0 * cov + kSsimC2)) /
                     ((ma * ma + mb * mb + kSsimC1) * (va + vb + kSsimC2));
        }
        count += mu_a.size();
    }
    return total / static_cast<double>(count);
}

GrayImage extreme_channel(const RgbImage& img, int radius) {
    GrayImage folded(img.width(), img.height());
    auto dst = folded.samples();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        double m = 1.0;
        for (int c = 0; c < RgbImage::kChannels; ++c) {
            const double v = img.plane(c).samples()[i];
            m = std::min({m, v, 1.0 - v});
        }
        dst[i] = m;
    }
    return windowed_min(folded, radius);
}

double loss_extreme(const RgbImage& restored, const RgbImage& truth, int radius) {
    require_same_shape(restored, truth, "loss_extreme");
    return mean_squared_difference(extreme_channel(restored, radius), extreme_channel(truth, radius));
}

double loss_gradient(const RgbImage& restored, const RgbImage& truth) {
    require_same_shape(restored, truth, "loss_gradient");
    return gradient_l1(restored, truth) / static_cast<double>(restored.pixel_count());
}

double loss_dual_recon(const RgbImage& restored, const RgbImage& restored_half, const RgbImage& truth,
                       const RgbImage& truth_half) {
    require_same_shape(restored, truth, "loss_dual_recon");
    require_same_shape(restored_half, truth_half, "loss_dual_recon (half scale)");
    if (restored_half.width() != (restored.width() + 1) / 2 || restored_half.height() != (restored.height() + 1) / 2) {
        throw InvalidInput("loss_dual_recon: half-scale images are not the half size of the full-scale ones");
    }
    const double wh = static_cast<double>(restored.pixel_count());
    return l1_sum(restored, truth) / wh + l1_sum(restored_half, truth_half) / wh;
}

double loss_cnn(double l_recon, double l_extreme, double l_gradient, const LossWeights& weights) {
    if (weights.recon < 0.0 || weights.extreme < 0.0) {
        throw InvalidInput("loss_cnn: weights must be non-negative");
    }
    return weights.recon * l_recon + weights.extreme * l_extreme + l_gradient;
}

std::vector<double> extreme_mse_vs_haze(const RgbImage& clean, const GrayImage& depth, std::span<const double> alphas,
                                        const AtmosphericLight& airlight, int radius) {
    if (!clean.same_shape(depth)) {
        throw InvalidInput("extreme_mse_vs_haze: depth shape does not match image");
    }
    if (!std::is_sorted(alphas.begin(), alphas.end())) {
        throw InvalidInput("extreme_mse_vs_haze: alphas must be ascending");
    }
    const GrayImage clean_extreme = extreme_channel(clean, radius);
    std::vector<double> out;
    out.reserve(alphas.size());
    for (double alpha : alphas) {
        if (!(alpha >= 0.0)) {
            throw InvalidInput("extreme_mse_vs_haze: alpha must be >= 0");
        }
        const TransmissionMap t = alpha == 0.0 ? GrayImage(depth.width(), depth.height(), 1.0)
                                               : transmission_from_depth(depth, alpha);
        const RgbImage hazy = koschmieder_forward(clean, t, airlight);
        out.push_back(mean_squared_difference(extreme_channel(hazy, radius), clean_extreme));
    }
    return out;
}

}  // namespace hazelab
