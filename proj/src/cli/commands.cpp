#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hazelab/cli.hpp"
#include "hazelab/error.hpp"
#include "hazelab/io.hpp"
#include "hazelab/pipeline.hpp"
#include "hazelab/pyramid.hpp"
#include "hazelab/rng.hpp"
#include "hazelab/synthesis.hpp"

namespace hazelab::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) {
        parts.push_back(part);
    }
    return parts;
}

double to_number(const std::string& s, const std::string& context) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used == s.size() && std::isfinite(v)) {
            return v;
        }
    } catch (const std::logic_error&) {
    }
    throw InvalidInput("not a number: '" + s + "' in '" + context + "'");
}

void ensure_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw IoError("cannot create output directory '" + dir.string() + "'");
    }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw IoError("cannot write '" + path.string() + "'");
    }
}

void require_unit_triple(const std::array<double, 3>& v, const char* what) {
    for (double x : v) {
        if (!(x >= 0.0 && x <= 1.0)) {
            throw InvalidInput(std::string(what) + ": each channel must be in [0,1]");
        }
    }
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

Json triple_json(const std::array<double, 3>& v) {
    return Json::array({v[0], v[1], v[2]});
}

}  // namespace

GrayImage make_depth(const std::string& spec, int width, int height) {
    const auto parts = split(spec, ':');
    const std::string& kind = parts.empty() ? spec : parts.front();
    auto arg = [&](std::size_t i) { return to_number(parts.at(i), spec); };
    GrayImage depth;
    if (kind == "constant" && parts.size() == 2) {
        depth = constant_depth(width, height, arg(1));
    } else if (kind == "ramp" && parts.size() == 3) {
        depth = ramp_depth(width, height, arg(1), arg(2));
    } else if (kind == "step" && (parts.size() == 3 || parts.size() == 4)) {
        const int column = parts.size() == 4 ? static_cast<int>(arg(3)) : width / 2;
        depth = step_depth(width, height, arg(1), arg(2), column);
    } else if (kind == "radial" && parts.size() == 3) {
        depth = radial_depth(width, height, arg(1), arg(2));
    } else if (kind == "constant" || kind == "ramp" || kind == "step" || kind == "radial") {
        throw InvalidInput("malformed procedural depth '" + spec + "'");
    } else {
        depth = read_pfm(spec);
        if (depth.width() != width || depth.height() != height) {
            throw InvalidInput("depth '" + spec + "' is " + std::to_string(depth.width()) + "x" +
                               std::to_string(depth.height()) + ", image is " + std::to_string(width) + "x" +
                               std::to_string(height));
        }
    }
    return depth;
}

void cmd_synthesize(const SynthesizeConfig& cfg) {
    const RgbImage clean = read_png(cfg.input);
    require_unit_rgb(clean, "synthesize");
    const GrayImage depth = make_depth(cfg.depth, clean.width(), clean.height());

    SynthesisParams params = sample_protocol_params(cfg.seed, cfg.index);
    if (cfg.alpha) {
        params.alpha = *cfg.alpha;
    }
    if (cfg.airlight) {
        require_unit_triple(*cfg.airlight, "synthesize: airlight");
        params.airlight.rgb = *cfg.airlight;
    }
    const TransmissionMap t = transmission_from_depth(depth, params.alpha);
    const RgbImage hazy = koschmieder_forward(clean, t, params.airlight);

    ensure_directory(cfg.output_dir);
    write_png(cfg.output_dir / "hazy.png", hazy);
    write_pfm(cfg.output_dir / "transmission.pfm", t);

    Json sidecar;
    sidecar["alpha"] = params.alpha;
    sidecar["airlight"] = triple_json(params.airlight.rgb);
    sidecar["seed"] = params.seed;
    sidecar["index"] = params.index;
    sidecar["cohort"] = params.cohort == HazeCohort::Light ? "light" : "heavy";
    sidecar["depth"] = cfg.depth;
    write_text(cfg.output_dir / "params.json", sidecar.dump(2) + "\n");
}

void cmd_dehaze(const DehazeConfig& cfg) {
    const RgbImage hazy = read_png(cfg.input);

    PipelineOptions options;
    options.radius = cfg.radius;
    options.directions = cfg.directions;
    options.stop_size = cfg.stop_size;
    options.single_scale = cfg.single_scale;
    if (cfg.airlight) {
        require_unit_triple(*cfg.airlight, "dehaze: airlight");
        options.airlight = AtmosphericLight{*cfg.airlight};
    }
    if (cfg.transmission) {
        options.transmission = read_pfm(*cfg.transmission);
    }
    if (cfg.a_delta) {
        options.a_delta = *cfg.a_delta;
    }
    if (cfg.t_delta) {
        options.t_delta = read_pfm(*cfg.t_delta);
    }

    const PipelineResult result = run_pipeline(hazy, options);

    ensure_directory(cfg.output_dir);
    write_png(cfg.output_dir / "restored.png", result.restored.display());
    if (cfg.save_intermediates) {
        if (!result.t0.empty()) {
            write_pfm(cfg.output_dir / "t0.pfm", result.t0);
        }
        write_pfm(cfg.output_dir / "tm.pfm", result.tm);
        Json a;
        a["a_model"] = triple_json(result.a_model.rgb);
        a["a_effective"] = triple_json(result.estimate.effective_airlight().rgb);
        write_text(cfg.output_dir / "airlight.json", a.dump(2) + "\n");
    }
}

void cmd_evaluate(const EvaluateConfig& cfg, std::ostream& out) {
    std::ostringstream csv;
    csv << "restored,reference,psnr,ssim,l_e,l_t,l_r,l_cnn\n";
    std::array<double, 6> sums{};
    for (const auto& [restored_path, reference_path] : cfg.pairs) {
        const RgbImage restored = read_png(restored_path);
        const RgbImage reference = read_png(reference_path);
        if (!restored.same_shape(reference)) {
            throw InvalidInput("evaluate: '" + restored_path.string() + "' and '" + reference_path.string() +
                               "' differ in size");
        }
        const double l_e = loss_extreme(restored, reference);
        const double l_t = loss_gradient(restored, reference);
        const double l_r =
            loss_dual_recon(restored, gaussian_level1(restored), reference, gaussian_level1(reference));
        const std::array<double, 6> row{psnr(restored, reference), ssim(restored, reference), l_e, l_t, l_r,
                                        loss_cnn(l_r, l_e, l_t, cfg.weights)};
        csv << restored_path.string() << ',' << reference_path.string();
        for (std::size_t i = 0; i < row.size(); ++i) {
            csv << ',' << format_number(row[i]);
            sums[i] += row[i];
        }
        csv << '\n';
    }
    csv << "mean,";
    for (double s : sums) {
        csv << ',' << format_number(s / static_cast<double>(cfg.pairs.size()));
    }
    csv << '\n';

    out << csv.str();
    if (cfg.output) {
        if (cfg.output->has_parent_path()) {
            ensure_directory(cfg.output->parent_path());
        }
        write_text(*cfg.output, csv.str());
    }
}

DynamicsProblem make_dynamics_problem(const SimulateConfig& cfg) {
    DynamicsProblem p;
    DynamicsConfig& d = p.config;
    if (cfg.kernel == "random_psd") {
        d.theta0 = random_psd_kernel(cfg.dimension, cfg.seed);
    } else if (cfg.kernel == "identity") {
        d.theta0 = identity_kernel(cfg.dimension, cfg.kernel_scale);
    } else if (cfg.kernel == "diagonal") {
        d.theta0 = diagonal_kernel(cfg.spectrum);
    } else {
        throw InvalidInput("simulate-dynamics: unknown kernel '" + cfg.kernel + "'");
    }
    if (cfg.schedule == "constant") {
        d.schedule = LearningRateSchedule::Constant;
    } else if (cfg.schedule == "cosine") {
        d.schedule = LearningRateSchedule::Cosine;
    } else {
        throw InvalidInput("simulate-dynamics: unknown schedule '" + cfg.schedule + "'");
    }
    d.eta = cfg.eta;
    d.eta_min = cfg.eta_min;
    d.horizon = cfg.horizon;
    d.step = cfg.step;
    d.samples = cfg.samples;
    validate(d);

    const auto n = d.theta0.rows();
    auto to_vector = [n](const std::vector<double>& v, const char* what) {
        if (static_cast<Eigen::Index>(v.size()) != n) {
            throw InvalidInput(std::string("simulate-dynamics: ") + what + " length does not match the kernel");
        }
        return Eigen::Map<const Eigen::VectorXd>(v.data(), n).eval();
    };

    if (!cfg.target.empty()) {
        p.target = to_vector(cfg.target, "target");
    } else {
        Rng rng(mix_seed(cfg.seed, 1));
        p.target.resize(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            p.target[i] = rng.uniform();
        }
    }

    if (!cfg.model.empty()) {
        p.model = to_vector(cfg.model, "model");
    } else if (cfg.collinear) {
        p.model = p.target - cfg.residual_ratio * p.target;
    } else {
        Rng rng(mix_seed(cfg.seed, 2));
        Eigen::VectorXd u(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            u[i] = rng.normal();
        }
        p.model = p.target + (cfg.residual_ratio * p.target.norm() / u.norm()) * u;
    }
    return p;
}

void cmd_simulate_dynamics(const SimulateConfig& cfg) {
    const DynamicsProblem p = make_dynamics_problem(cfg);
    const DynamicsComparison cmp = compare_augmented_vs_datadriven(p.config, p.model, p.target);
    std::ostringstream csv;
    write_trajectory_csv(csv, cmp);
    ensure_directory(cfg.output_dir);
    write_text(cfg.output_dir / "dynamics.csv", csv.str());
}

}  // namespace hazelab::cli
