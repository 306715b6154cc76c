#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hazelab/dynamics.hpp"
#include "hazelab/image.hpp"
#include "hazelab/quality.hpp"
#include "json.hpp"

namespace hazelab::cli {

using Json = nlohmann::json;

enum ExitCode : int { kOk = 0, kInvalidInput = 2, kIoFailure = 3, kNumericFailure = 4 };

struct SynthesizeConfig {
    std::filesystem::path input;
    std::string depth;  // PFM path or constant:V, ramp:NEAR:FAR, step:NEAR:FAR[:SPLIT], radial:NEAR:FAR
    std::filesystem::path output_dir = ".";
    std::uint64_t seed = 0;
    std::uint64_t index = 0;
    std::optional<double> alpha;
    std::optional<std::array<double, 3>> airlight;
};

struct DehazeConfig {
    std::filesystem::path input;
    std::filesystem::path output_dir = ".";
    int radius = 7;
    int directions = 1000;
    int stop_size = 32;
    bool single_scale = false;
    bool save_intermediates = false;
    std::optional<std::array<double, 3>> airlight;
    std::optional<std::filesystem::path> transmission;
    std::optional<std::array<double, 3>> a_delta;
    std::optional<std::filesystem::path> t_delta;
};

struct EvaluateConfig {
    std::vector<std::pair<std::filesystem::path, std::filesystem::path>> pairs;  // (restored, reference)
    std::optional<std::filesystem::path> output;
    LossWeights weights;
};

struct SimulateConfig {
    int dimension = 16;
    std::string kernel = "random_psd";  // random_psd | identity | diagonal
    double kernel_scale = 1.0;          // identity: Theta0 = scale * I
    std::vector<double> spectrum;       // diagonal
    std::uint64_t seed = 0;
    double eta = 1.0;
    std::string schedule = "constant";  // constant | cosine
    double eta_min = 0.0;
    double horizon = 5.0;
    double step = 1e-3;
    int samples = 50;
    double residual_ratio = 0.5;  // |I_m - T| / |T| when the model vector is generated
    bool collinear = false;       // generated I_m - T parallel to -T
    std::vector<double> target;   // optional explicit T
    std::vector<double> model;    // optional explicit I_m
    std::filesystem::path output_dir = ".";
};

SynthesizeConfig synthesize_config(const Json& j);
DehazeConfig dehaze_config(const Json& j);
EvaluateConfig evaluate_config(const Json& j);
SimulateConfig simulate_config(const Json& j);

/// Parses "R,G,B" into three doubles.
std::array<double, 3> parse_triple(const std::string& text);
/// Procedural depth from its spec string, or the PFM file it names.
GrayImage make_depth(const std::string& spec, int width, int height);

/// Writes hazy.png, transmission.pfm and params.json into the output directory.
void cmd_synthesize(const SynthesizeConfig& cfg);
/// Writes restored.png, plus t0.pfm, tm.pfm and airlight.json on request.
void cmd_dehaze(const DehazeConfig& cfg);
/// Writes the metric table to `out` (and to cfg.output when set).
void cmd_evaluate(const EvaluateConfig& cfg, std::ostream& out);
/// Writes dynamics.csv into the output directory.
void cmd_simulate_dynamics(const SimulateConfig& cfg);

/// Kernel, schedule and vectors described by a simulate config.
struct DynamicsProblem {
    DynamicsConfig config;
    Eigen::VectorXd target;
    Eigen::VectorXd model;
};
DynamicsProblem make_dynamics_problem(const SimulateConfig& cfg);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hazelab::cli
