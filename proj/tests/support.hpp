#pragma once

// Test-only helpers: seeded scene generators and brute-force reference
// implementations that deliberately avoid the library's fast paths.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "hazelab/image.hpp"
#include "hazelab/rng.hpp"
#include "hazelab/synthesis.hpp"
#include "hazelab/transmission.hpp"

namespace hazelab::testing {

inline RgbImage random_image(int w, int h, std::uint64_t seed, double lo = 0.0, double hi = 1.0) {
    Rng rng(mix_seed(seed, 0xabc));
    RgbImage img(w, h);
    for (int c = 0; c < 3; ++c) {
        for (double& v : img.plane(c).samples()) {
            v = rng.uniform(lo, hi);
        }
    }
    return img;
}

inline GrayImage random_gray(int w, int h, std::uint64_t seed, double lo = 0.0, double hi = 1.0) {
    Rng rng(mix_seed(seed, 0xdef));
    GrayImage img(w, h);
    for (double& v : img.samples()) {
        v = rng.uniform(lo, hi);
    }
    return img;
}

/// Smooth clean image: sums of low-frequency sinusoids per channel, in [0.05, 0.95].
inline RgbImage smooth_image(int w, int h, std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0x51));
    RgbImage img(w, h);
    for (int c = 0; c < 3; ++c) {
        const double fx = rng.uniform(0.5, 3.0);
        const double fy = rng.uniform(0.5, 3.0);
        const double px = rng.uniform(0.0, 6.28);
        const double py = rng.uniform(0.0, 6.28);
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                const double u = static_cast<double>(x) / w;
                const double v = static_cast<double>(y) / h;
                img.at(c, x, y) = 0.5 + 0.22 * std::sin(6.28 * fx * u + px) + 0.22 * std::cos(6.28 * fy * v + py);
            }
        }
    }
    return img;
}

inline int reflect101(int i, int n) {
    if (n == 1) return 0;
    while (i < 0 || i >= n) i = i < 0 ? -i : 2 * n - 2 - i;
    return i;
}

/// Direct 5x5 2-D convolution with the outer-product binomial kernel.
inline GrayImage blur_reference(const GrayImage& img) {
    const double k[5] = {1, 4, 6, 4, 1};
    GrayImage out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            double acc = 0.0;
            for (int j = -2; j <= 2; ++j) {
                for (int i = -2; i <= 2; ++i) {
                    acc += k[i + 2] * k[j + 2] * img.at(reflect101(x + i, img.width()), reflect101(y + j, img.height()));
                }
            }
            out.at(x, y) = acc / 256.0;
        }
    }
    return out;
}

/// Upsampling by its zero-insertion definition, evaluated per output pixel.
inline GrayImage upsample_reference(const GrayImage& src, int w, int h) {
    const double k[5] = {1, 4, 6, 4, 1};
    GrayImage out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int j = -2; j <= 2; ++j) {
                for (int i = -2; i <= 2; ++i) {
                    const int sx = reflect101(x + i, w);
                    const int sy = reflect101(y + j, h);
                    if (sx % 2 == 0 && sy % 2 == 0) {
                        acc += k[i + 2] * k[j + 2] * src.at(sx / 2, sy / 2);
                    }
                }
            }
            out.at(x, y) = 4.0 * acc / 256.0;
        }
    }
    return out;
}

inline GrayImage windowed_min_reference(const GrayImage& img, int r) {
    GrayImage out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            double m = std::numeric_limits<double>::infinity();
            for (int j = -r; j <= r; ++j) {
                for (int i = -r; i <= r; ++i) {
                    const int sx = std::clamp(x + i, 0, img.width() - 1);
                    const int sy = std::clamp(y + j, 0, img.height() - 1);
                    m = std::min(m, img.at(sx, sy));
                }
            }
            out.at(x, y) = m;
        }
    }
    return out;
}

inline GrayImage ddap_reference(const RgbImage& z, const AtmosphericLight& a, int r) {
    GrayImage out(z.width(), z.height());
    for (int y = 0; y < z.height(); ++y) {
        for (int x = 0; x < z.width(); ++x) {
            double m = std::numeric_limits<double>::infinity();
            for (int j = -r; j <= r; ++j) {
                for (int i = -r; i <= r; ++i) {
                    const int sx = std::clamp(x + i, 0, z.width() - 1);
                    const int sy = std::clamp(y + j, 0, z.height() - 1);
                    for (int c = 0; c < 3; ++c) {
                        m = std::min(m, z.at(c, sx, sy) / a[c]);
                    }
                }
            }
            out.at(x, y) = std::clamp(1.0 - m, 0.0, 1.0);
        }
    }
    return out;
}

/// Exhaustive argmax of the cosine, lowest index on ties.
inline int nearest_direction_reference(const std::vector<Direction>& dirs, const Direction& u) {
    int best = 0;
    double best_cos = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        const double c = u[0] * dirs[i][0] + u[1] * dirs[i][1] + u[2] * dirs[i][2];
        if (c > best_cos) {
            best_cos = c;
            best = static_cast<int>(i);
        }
    }
    return best;
}

inline GrayImage extreme_channel_reference(const RgbImage& img, int r) {
    GrayImage out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            double m = std::numeric_limits<double>::infinity();
            for (int j = -r; j <= r; ++j) {
                for (int i = -r; i <= r; ++i) {
                    const int sx = std::clamp(x + i, 0, img.width() - 1);
                    const int sy = std::clamp(y + j, 0, img.height() - 1);
                    for (int c = 0; c < 3; ++c) {
                        const double v = img.at(c, sx, sy);
                        m = std::min({m, v, 1.0 - v});
                    }
                }
            }
            out.at(x, y) = m;
        }
    }
    return out;
}

inline double loss_extreme_reference(const RgbImage& a, const RgbImage& b, int r = 7) {
    const GrayImage ea = extreme_channel_reference(a, r);
    const GrayImage eb = extreme_channel_reference(b, r);
    double s = 0.0;
    for (int y = 0; y < a.height(); ++y)
        for (int x = 0; x < a.width(); ++x) s += (ea.at(x, y) - eb.at(x, y)) * (ea.at(x, y) - eb.at(x, y));
    return s / (a.width() * a.height());
}

inline double loss_gradient_reference(const RgbImage& a, const RgbImage& b) {
    const int w = a.width(), h = a.height();
    auto gh = [&](const RgbImage& m, int c, int x, int y) { return x + 1 < w ? m.at(c, x + 1, y) - m.at(c, x, y) : 0.0; };
    auto gv = [&](const RgbImage& m, int c, int x, int y) { return y + 1 < h ? m.at(c, x, y + 1) - m.at(c, x, y) : 0.0; };
    double s = 0.0;
    for (int c = 0; c < 3; ++c)
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x)
                s += std::abs(gh(a, c, x, y) - gh(b, c, x, y)) + std::abs(gv(a, c, x, y) - gv(b, c, x, y));
    return s / (w * h);
}

inline double l1_reference(const RgbImage& a, const RgbImage& b) {
    double s = 0.0;
    for (int c = 0; c < 3; ++c)
        for (int y = 0; y < a.height(); ++y)
            for (int x = 0; x < a.width(); ++x) s += std::abs(a.at(c, x, y) - b.at(c, x, y));
    return s;
}

inline double psnr_reference(const RgbImage& a, const RgbImage& b) {
    double s = 0.0;
    for (int c = 0; c < 3; ++c)
        for (int y = 0; y < a.height(); ++y)
            for (int x = 0; x < a.width(); ++x) s += (a.at(c, x, y) - b.at(c, x, y)) * (a.at(c, x, y) - b.at(c, x, y));
    const double mse = s / (3.0 * a.width() * a.height());
    return mse == 0.0 ? 100.0 : std::min(100.0, -10.0 * std::log10(mse));
}

/// SSIM with the 2-D window statistics evaluated directly at each valid position.
inline double ssim_reference(const RgbImage& a, const RgbImage& b) {
    double w2[11][11];
    double norm = 0.0;
    for (int j = 0; j < 11; ++j)
        for (int i = 0; i < 11; ++i) {
            w2[j][i] = std::exp(-((i - 5) * (i - 5) + (j - 5) * (j - 5)) / (2 * 1.5 * 1.5));
            norm += w2[j][i];
        }
    const double c1 = 1e-4, c2 = 9e-4;
    double total = 0.0;
    int count = 0;
    for (int c = 0; c < 3; ++c) {
        for (int y = 0; y + 11 <= a.height(); ++y) {
            for (int x = 0; x + 11 <= a.width(); ++x) {
                double ma = 0, mb = 0;
                for (int j = 0; j < 11; ++j)
                    for (int i = 0; i < 11; ++i) {
                        ma += w2[j][i] / norm * a.at(c, x + i, y + j);
                        mb += w2[j][i] / norm * b.at(c, x + i, y + j);
                    }
                double va = 0, vb = 0, cov = 0;
                for (int j = 0; j < 11; ++j)
                    for (int i = 0; i < 11; ++i) {
                        const double da = a.at(c, x + i, y + j) - ma;
                        const double db = b.at(c, x + i, y + j) - mb;
                        va += w2[j][i] / norm * da * da;
                        vb += w2[j][i] / norm * db * db;
                        cov += w2[j][i] / norm * da * db;
                    }
                total += ((2 * ma * mb + c1) * (2 * cov + c2)) / ((ma * ma + mb * mb + c1) * (va + vb + c2));
                ++count;
            }
        }
    }
    return total / count;
}

}  // namespace hazelab::testing
