#pragma once

#include <span>
#include <vector>

#include "hazelab/image.hpp"
#include "hazelab/synthesis.hpp"

namespace hazelab {

inline constexpr double kPsnrCap = 100.0;

/// Peak-1 PSNR over all channels; identical images give kPsnrCap.
double psnr(const RgbImage& a, const RgbImage& b);

/// Mean SSIM over all valid 11x11 windows (Gaussian sigma 1.5, K1 = 0.01,
/// K2 = 0.03, peak 1) and over channels. Both sides must be at least 11.
double ssim(const RgbImage& a, const RgbImage& b);

/// Windowed minimum (replicate borders) of min_c min(I_c, 1 - I_c).
GrayImage extreme_channel(const RgbImage& img, int radius = 7);

/// Mean squared difference of the extreme channels (radius 7).
double loss_extreme(const RgbImage& restored, const RgbImage& truth, int radius = 7);

/// Sum over pixels and channels of |dh I - dh T| + |dv I - dv T|, divided by W*H.
/// Forward differences; the last column/row difference is zero.
double loss_gradient(const RgbImage& restored, const RgbImage& truth);

/// Full-resolution L1 plus half-resolution L1, both divided by the
/// full-resolution pixel count W*H.
double loss_dual_recon(const RgbImage& restored, const RgbImage& restored_half, const RgbImage& truth,
                       const RgbImage& truth_half);

struct LossWeights {
    double recon = 100.0;
    double extreme = 100.0;
};

/// recon * L_r + extreme * L_e + L_t. Negative weights are rejected.
double loss_cnn(double l_recon, double l_extreme, double l_gradient, const LossWeights& weights = {});

/// For each alpha, hazes `clean` with t = exp(-alpha * depth) and `airlight`
/// and returns the MSE between the extreme channels of the hazy and clean
/// images. alpha = 0 is allowed (no haze). `alphas` must be ascending.
std::vector<double> extreme_mse_vs_haze(const RgbImage& clean, const GrayImage& depth, std::span<const double> alphas,
                                        const AtmosphericLight& airlight, int radius = 7);

}  // namespace hazelab
