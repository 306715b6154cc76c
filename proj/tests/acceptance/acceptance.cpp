// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hazelab/airlight.hpp"
#include "hazelab/cli.hpp"
#include "hazelab/dynamics.hpp"
#include "hazelab/io.hpp"
#include "hazelab/pyramid.hpp"
#include "hazelab/quality.hpp"
#include "hazelab/restoration.hpp"
#include "hazelab/rng.hpp"
#include "hazelab/synthesis.hpp"
#include "hazelab/transmission.hpp"
#include "hazelab/window.hpp"
#include "support.hpp"
#include "tempdir.hpp"

using namespace hazelab;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void report(const char* name, const std::function<Verdict()>& body) {
    Verdict v;
    const auto start = Clock::now();
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (!v.ok) ++failures;
    std::printf("%s  %-22s %s (%.2f s)\n", v.ok ? "PASS" : "FAIL", name, v.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

double mse(const GrayImage& a, const GrayImage& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a.samples()[i] - b.samples()[i];
        s += d * d;
    }
    return s / static_cast<double>(a.size());
}

double score_reference(const RgbImage& img, const Region& r) {
    double total = 0.0;
    for (int c = 0; c < 3; ++c) {
        double sum = 0.0;
        for (int y = r.y; y < r.y + r.height; ++y)
            for (int x = r.x; x < r.x + r.width; ++x) sum += img.at(c, x, y);
        const double n = static_cast<double>(r.width) * r.height;
        const double mu = sum / n;
        double var = 0.0;
        for (int y = r.y; y < r.y + r.height; ++y)
            for (int x = r.x; x < r.x + r.width; ++x) var += (img.at(c, x, y) - mu) * (img.at(c, x, y) - mu);
        total += mu - std::sqrt(var / n);
    }
    return total / 3.0;
}

Verdict pyramid_identity() {
    const auto start = Clock::now();
    Rng rng(mix_seed(2024, 0));
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        int w = 33 + static_cast<int>(rng.uniform() * (256 - 33 + 1));
        int h = 47 + static_cast<int>(rng.uniform() * (256 - 47 + 1));
        if (k == 0) w = 33, h = 47;
        if (k == 1) w = 256, h = 256;
        w = std::min(w, 256);
        h = std::min(h, 256);
        const RgbImage img = testing::random_image(w, h, 100 + k);
        worst = std::max(worst, max_abs_diff(collapse_pyramid(build_pyramid(img)), img));
    }
    const double secs = seconds_since(start);
    return {worst <= 1e-6 && secs < 5.0, fmt("max err %.3g, %.2f s of 5 s", worst, secs)};
}

Verdict brute_force() {
    std::vector<std::string> broken;
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond) broken.push_back(what);
    };
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const RgbImage a = testing::random_image(16, 16, seed);
        const RgbImage b = testing::random_image(16, 16, seed + 100);
        const GrayImage g = testing::random_gray(16, 16, seed + 200);
        for (int r : {0, 1, 3, 7}) {
            expect(windowed_min(g, r) == testing::windowed_min_reference(g, r), "windowed_min");
        }
        const AtmosphericLight air{{0.9, 0.8, 0.85}};
        expect(ddap_init(a, air) == testing::ddap_reference(a, air, kDefaultRadius), "ddap_init");

        for (const Region& reg : {Region{0, 0, 16, 16}, Region{3, 1, 9, 12}, Region{8, 8, 8, 8}}) {
            expect(std::abs(region_score(a, reg) - score_reference(a, reg)) <= 1e-9, "region_score");
        }

        const auto dirs = fibonacci_directions(kDefaultDirections);
        const HazeLinePartition part = build_haze_lines(a, air);
        bool assign_ok = true;
        for (int y = 0; y < 16; ++y) {
            for (int x = 0; x < 16; ++x) {
                const Direction d{a.at(0, x, y) - air.rgb[0], a.at(1, x, y) - air.rgb[1], a.at(2, x, y) - air.rgb[2]};
                const double n = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
                const int expected =
                    n == 0.0 ? kDefaultDirections
                             : testing::nearest_direction_reference(dirs, {d[0] / n, d[1] / n, d[2] / n});
                assign_ok = assign_ok && part.cluster_of[static_cast<std::size_t>(y) * 16 + x] == expected;
            }
        }
        expect(assign_ok, "haze-line assignment");

        expect(std::abs(loss_extreme(a, b) - testing::loss_extreme_reference(a, b)) <= 1e-9, "L_e");
        expect(std::abs(loss_gradient(a, b) - testing::loss_gradient_reference(a, b)) <= 1e-9, "L_t");
        const RgbImage ah = gaussian_level1(a), bh = gaussian_level1(b);
        const double lr = testing::l1_reference(a, b) / 256.0 + testing::l1_reference(ah, bh) / 256.0;
        expect(std::abs(loss_dual_recon(a, ah, b, bh) - lr) <= 1e-9, "L_r");
        const double le = testing::loss_extreme_reference(a, b), lt = testing::loss_gradient_reference(a, b);
        expect(std::abs(loss_cnn(lr, le, lt) - (100.0 * lr + 100.0 * le + lt)) <= 1e-9, "L_cnn");
        expect(std::abs(psnr(a, b) - testing::psnr_reference(a, b)) <= 1e-9, "psnr");
        expect(std::abs(ssim(a, b) - testing::ssim_reference(a, b)) <= 1e-9, "ssim");
    }
    std::string detail = "all evaluators match oracles";
    if (!broken.empty()) {
        detail = "mismatch:";
        for (const auto& s : broken) detail += " " + s;
    }
    return {broken.empty(), detail};
}

Verdict forward_inverse() {
    const int n = 256;
    const RgbImage clean = testing::random_image(n, n, 77);
    const AtmosphericLight air{{0.8, 0.8, 0.8}};

    auto start = Clock::now();
    const TransmissionMap t_const(n, n, 0.6);
    const RgbImage hazy_const = koschmieder_forward(clean, t_const, air);
    const double p_const = psnr(dual_scale_dehaze(hazy_const, {air, t_const, {}, {}}).display(), clean);
    const double secs_const = seconds_since(start);

    start = Clock::now();
    const TransmissionMap t_radial = transmission_from_depth(radial_depth(n, n, 0.1, 1.0), 1.2);
    const RgbImage hazy_radial = koschmieder_forward(clean, t_radial, air);
    const double p_radial = psnr(dual_scale_dehaze(hazy_radial, {air, t_radial, {}, {}}).display(), clean);
    const double secs_radial = seconds_since(start);

    const bool ok = p_const >= 50.0 && p_radial >= 30.0 && secs_const < 10.0 && secs_radial < 10.0;
    return {ok, fmt("constant t %.2f dB, radial t %.2f dB", p_const, p_radial) +
                    fmt(", slowest run %.2f s of 10 s", std::max(secs_const, secs_radial))};
}

// Sky occupies one aligned corner quadrant; the rest is textured scenery under moderate haze.
Verdict airlight_recovery() {
    double worst = 0.0;
    int within = 0;
    const int n = 128;
    for (int k = 0; k < 20; ++k) {
        const SynthesisParams p = sample_protocol_params(31, static_cast<std::uint64_t>(k));
        const RgbImage clean = testing::random_image(n, n, 500 + k, 0.0, 0.6);
        const int qx = (k % 2) * (n / 2), qy = ((k / 2) % 2) * (n / 2);
        GrayImage depth = ramp_depth(n, n, 0.1, 0.6);
        const double sky_depth = std::log(1.0 / 0.01) / p.alpha + 0.05;
        for (int y = qy; y < qy + n / 2; ++y)
            for (int x = qx; x < qx + n / 2; ++x) depth.at(x, y) = sky_depth;
        const RgbImage hazy = koschmieder_forward(clean, transmission_from_depth(depth, p.alpha), p.airlight);
        const AtmosphericLight est = estimate_airlight(hazy);
        double err = 0.0;
        for (int c = 0; c < 3; ++c) err = std::max(err, std::abs(est.rgb[c] - p.airlight.rgb[c]));
        worst = std::max(worst, err);
        if (err <= 0.02) ++within;
    }
    return {within == 20, fmt("%g of 20 scenes within 0.02, worst %.4f", within, worst)};
}

// Clean scenes are tiles drawn from a small palette of colours with a dark channel <= 0.05.
Verdict hla_reduction() {
    int wins = 0;
    std::string log;
    const int n = 96, tile = 16;
    for (int k = 0; k < 10; ++k) {
        Rng rng(mix_seed(41, static_cast<std::uint64_t>(k)));
        std::vector<std::array<double, 3>> palette(6);
        for (auto& col : palette) {
            for (double& v : col) v = rng.uniform(0.15, 0.9);
            col[static_cast<std::size_t>(rng.uniform() * 3) % 3] = rng.uniform(0.0, 0.05);
        }
        RgbImage clean(n, n);
        GrayImage depth(n, n);
        const int blocks = n / tile;
        std::vector<double> block_depth(static_cast<std::size_t>(blocks * blocks));
        for (double& d : block_depth) d = rng.uniform(0.1, 0.8);
        std::vector<int> tile_colour(static_cast<std::size_t>(blocks * blocks * 4));
        for (int& c : tile_colour) c = static_cast<int>(rng.uniform() * 6) % 6;
        for (int y = 0; y < n; ++y) {
            for (int x = 0; x < n; ++x) {
                const int bx = x / tile, by = y / tile;
                const int sub = (x % tile) / (tile / 2) + 2 * ((y % tile) / (tile / 2));
                const auto& col = palette[static_cast<std::size_t>(tile_colour[static_cast<std::size_t>(
                    (by * blocks + bx) * 4 + sub)])];
                for (int c = 0; c < 3; ++c) clean.at(c, x, y) = col[static_cast<std::size_t>(c)];
                depth.at(x, y) = block_depth[static_cast<std::size_t>(by * blocks + bx)];
            }
        }
        const SynthesisParams p = sample_protocol_params(41, static_cast<std::uint64_t>(k) * 5);
        const TransmissionMap t_true = transmission_from_depth(depth, p.alpha);
        const RgbImage hazy = koschmieder_forward(clean, t_true, p.airlight);
        const ModelTransmission mt = estimate_transmission(hazy, p.airlight);
        const double e0 = mse(mt.t0, t_true), em = mse(mt.tm, t_true);
        if (em <= e0) ++wins;
        log += fmt(" %.4f/%.4f", em, e0);
    }
    return {wins >= 9, fmt("t_m no worse than t0 in %g of 10;", wins) + log};
}

Verdict phi_contract() {
    const double m = 0.25;
    double lowest = INFINITY;
    const int points = 1000000;
    for (int i = 0; i < points; ++i) {
        const double z = -2.0 + 4.0 * i / (points - 1);
        lowest = std::min(lowest, phi(z, m));
    }
    double gap = 0.0;
    for (double s : {1.0, -1.0}) {
        const double edge = s * m;
        gap = std::max(gap, std::abs(phi(std::nextafter(edge, 0.0), m) - phi(edge, m)));
    }
    double deriv_err = 0.0;
    const double h = 1e-6;
    for (double z = -2.0; z <= 2.0; z += 0.01) {
        if (std::abs(std::abs(z) - m) < 2 * h) continue;
        const double fd = (phi(z + h, m) - phi(z - h, m)) / (2 * h);
        const double exact = std::abs(z) >= m ? (z > 0 ? 1.0 : -1.0) : z / m;
        deriv_err = std::max(deriv_err, std::abs(fd - exact));
    }
    const bool ok = lowest >= 0.125 && gap < 1e-12 && deriv_err <= 1e-4;
    return {ok, fmt("min %.6g, continuity gap %.3g, derivative err %.3g", lowest, gap, deriv_err)};
}

// Saturated palette: every channel is near 0 or near 1, so the clean extreme channel is ~0 and
// every haze level pushes it upwards.
Verdict haze_trend() {
    const int n = 64;
    RgbImage clean(n, n);
    Rng rng(mix_seed(61, 0));
    for (int y = 0; y < n; y += 8)
        for (int x = 0; x < n; x += 8) {
            std::array<double, 3> col{};
            for (double& v : col) v = rng.uniform() < 0.5 ? rng.uniform(0.0, 0.05) : rng.uniform(0.95, 1.0);
            for (int j = 0; j < 8; ++j)
                for (int i = 0; i < 8; ++i)
                    for (int c = 0; c < 3; ++c) clean.at(c, x + i, y + j) = col[static_cast<std::size_t>(c)];
        }
    const GrayImage depth = ramp_depth(n, n, 0.05, 0.35);
    const std::vector<double> alphas{0.4, 0.8, 1.2, 1.6, 2.0, 2.5, 3.0};
    const std::vector<double> curve = extreme_mse_vs_haze(clean, depth, alphas, AtmosphericLight{{0.7, 0.7, 0.7}});
    bool ok = true;
    std::string detail = "curve";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        if (i > 0 && curve[i] < curve[i - 1]) ok = false;
        detail += fmt(" %.5f", curve[i]);
    }
    return {ok, detail};
}

Verdict dynamics() {
    const auto start = Clock::now();
    const int n = 16;
    DynamicsConfig cfg;
    cfg.theta0 = random_psd_kernel(n, 8);
    cfg.eta = 1.0;
    cfg.horizon = 5.0;
    cfg.samples = 50;

    Rng rng(mix_seed(8, 1));
    Eigen::VectorXd target(n), i0(n);
    for (int i = 0; i < n; ++i) {
        target[i] = rng.uniform();
        i0[i] = rng.uniform();
    }
    const Eigen::VectorXd r0 = i0 - target;

    auto run_error = [&](double step) {
        DynamicsConfig c = cfg;
        c.step = step;
        const TrajectoryRecord rec = euler_trajectory(c, i0, target);
        double rel = 0.0;
        for (std::size_t j = 0; j < rec.times.size(); ++j) {
            const double exact = closed_form_residual(c, r0, rec.times[j]).norm();
            rel = std::max(rel, std::abs(rec.residual_norms[j] - exact) / exact);
        }
        const Eigen::VectorXd exact_final = closed_form_residual(c, r0, c.horizon);
        rel = std::max(rel, (rec.final_residual - exact_final).norm() / exact_final.norm());
        return rel;
    };
    const double e1 = run_error(1e-3);
    const double e2 = run_error(2e-3);
    const double e4 = run_error(4e-3);
    const double order1 = std::log2(e2 / e1), order2 = std::log2(e4 / e2);
    const bool first_order = std::abs(order1 - 1.0) < 0.15 && std::abs(order2 - 1.0) < 0.15;

    DynamicsConfig scalar;
    const double sigma2 = 0.7;
    scalar.theta0 = identity_kernel(n, sigma2);
    scalar.eta = 1.0;
    scalar.horizon = 5.0;
    scalar.step = 1e-3;
    Eigen::VectorXd u(n);
    for (int i = 0; i < n; ++i) u[i] = rng.normal();
    const Eigen::VectorXd i_model = target + 0.5 * target.norm() * u.normalized();
    const DynamicsComparison cmp = compare_augmented_vs_datadriven(scalar, i_model, target);
    bool faster = true;
    for (std::size_t j = 0; j < cmp.augmented.times.size(); ++j) {
        if (cmp.augmented.times[j] > 0.0 && !(cmp.augmented.residual_norms[j] < cmp.data_driven.residual_norms[j]))
            faster = false;
    }
    const double secs = seconds_since(start);
    const bool ok = e1 <= 1e-3 && first_order && faster && secs < 2.0;
    return {ok, fmt("rel err %.3g at step 1e-3, observed orders %.3f and %.3f", e1, order1, order2) +
                    (faster ? ", augmented below data-driven" : ", augmented NOT below data-driven") +
                    fmt(", %.2f s of 2 s", secs)};
}

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"hazelab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    return cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
}

Verdict determinism() {
    testing::TempDir dir("acceptance");
    write_png(dir / "clean.png", quantize_8bit(testing::smooth_image(80, 64, 4)));
    std::ofstream(dir / "sim.json") << R"({"kernel": "random_psd", "dimension": 16, "seed": 12, "schedule": "cosine"})";

    const std::vector<std::string> files{"syn/hazy.png",  "syn/transmission.pfm", "syn/params.json",
                                         "dehaze/restored.png", "dehaze/t0.pfm", "dehaze/tm.pfm",
                                         "dehaze/airlight.json", "report.csv", "sim/dynamics.csv"};
    // Both runs write to the same directory so that paths echoed into the outputs agree.
    const std::string root = (dir / "run").string();
    std::vector<std::vector<std::string>> snapshots;
    for (int run = 0; run < 2; ++run) {
        std::filesystem::remove_all(root);
        int code = run_cli({"synthesize", "--input", (dir / "clean.png").string(), "--depth", "radial:0.2:1.2",
                            "--seed", "99", "--index", "3", "--output-dir", root + "/syn"});
        code |= run_cli({"dehaze", "--input", root + "/syn/hazy.png", "--save-intermediates", "--output-dir",
                         root + "/dehaze"});
        code |= run_cli({"evaluate", "--pair", root + "/dehaze/restored.png," + (dir / "clean.png").string(),
                         "--output", root + "/report.csv"});
        code |= run_cli({"simulate-dynamics", "--config", (dir / "sim.json").string(), "--output-dir", root + "/sim"});
        if (code != 0) return {false, "a command exited with a nonzero status"};
        std::vector<std::string> snap;
        for (const auto& f : files) snap.push_back(testing::slurp(root + "/" + f));
        snapshots.push_back(std::move(snap));
    }
    std::vector<std::string> differing;
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (snapshots[0][i].empty() || snapshots[0][i] != snapshots[1][i]) differing.push_back(files[i]);
    }
    const double compared = static_cast<double>(files.size());
    std::string detail = fmt("%g output files byte-identical across runs", compared);
    if (!differing.empty()) {
        detail = "differing:";
        for (const auto& s : differing) detail += " " + s;
    }
    return {differing.empty(), detail};
}

}  // namespace

int main() {
    report("pyramid-identity", pyramid_identity);
    report("brute-force-oracles", brute_force);
    report("forward-inverse", forward_inverse);
    report("airlight-recovery", airlight_recovery);
    report("hla-artifacts", hla_reduction);
    report("phi-contract", phi_contract);
    report("haze-trend", haze_trend);
    report("dynamics", dynamics);
    report("determinism", determinism);
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
