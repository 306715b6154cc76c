#include <fstream>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "hazelab/cli.hpp"
#include "hazelab/error.hpp"

namespace hazelab::cli {

namespace {

// Flags are collected as overrides on top of the optional JSON config;
// only flags that appear on the command line are applied.
class Overrides {
public:
    explicit Overrides(CLI::App* app) : app_(app) {}

    template <typename T>
    void option(const std::string& flag, const std::string& key, const std::string& help) {
        auto value = std::make_shared<T>();
        CLI::Option* opt = app_->add_option(flag, *value, help);
        apply_.push_back([opt, value, key](Json& j) {
            if (opt->count() > 0) {
                j[key] = *value;
            }
        });
    }

    void flag(const std::string& name, const std::string& key, const std::string& help) {
        CLI::Option* opt = app_->add_flag(name, help);
        apply_.push_back([opt, key](Json& j) {
            if (opt->count() > 0) {
                j[key] = true;
            }
        });
    }

    void config() { config_opt_ = app_->add_option("--config", config_path_, "JSON config file; flags override it"); }

    Json resolve() const {
        Json j = Json::object();
        if (config_opt_ && config_opt_->count() > 0) {
            std::ifstream in(config_path_);
            if (!in) {
                throw IoError("cannot open config '" + config_path_ + "'");
            }
            try {
                j = Json::parse(in);
            } catch (const Json::exception& e) {
                throw InvalidInput("config '" + config_path_ + "': " + e.what());
            }
            if (!j.is_object()) {
                throw InvalidInput("config '" + config_path_ + "' must hold a JSON object");
            }
        }
        for (const auto& apply : apply_) {
            apply(j);
        }
        return j;
    }

    bool parsed() const { return app_->parsed(); }

private:
    CLI::App* app_;
    CLI::Option* config_opt_ = nullptr;
    std::string config_path_;
    std::vector<std::function<void(Json&)>> apply_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Model-based single image dehazing toolkit", "hazelab"};
    app.require_subcommand(1);

    CLI::App* synth = app.add_subcommand("synthesize", "Haze a clean image from a depth field");
    Overrides synth_opts(synth);
    synth_opts.config();
    synth_opts.option<std::string>("--input", "input", "clean PNG");
    synth_opts.option<std::string>("--depth", "depth", "depth PFM or constant:V | ramp:N:F | step:N:F[:X] | radial:N:F");
    synth_opts.option<std::string>("--output-dir", "output_dir", "output directory");
    synth_opts.option<std::uint64_t>("--seed", "seed", "protocol sampler seed");
    synth_opts.option<std::uint64_t>("--index", "index", "dataset position (selects the haze cohort)");
    synth_opts.option<double>("--alpha", "alpha", "scattering coefficient (overrides the sampler)");
    synth_opts.option<std::string>("--airlight", "airlight", "R,G,B airlight (overrides the sampler)");

    CLI::App* dehaze = app.add_subcommand("dehaze", "Restore a hazy image");
    Overrides dehaze_opts(dehaze);
    dehaze_opts.config();
    dehaze_opts.option<std::string>("--input", "input", "hazy PNG");
    dehaze_opts.option<std::string>("--output-dir", "output_dir", "output directory");
    dehaze_opts.option<int>("--radius", "radius", "DDAP window radius (default 7)");
    dehaze_opts.option<int>("--directions", "directions", "haze-line directions (default 1000)");
    dehaze_opts.option<int>("--stop-size", "stop_size", "airlight quadtree stop size (default 32)");
    dehaze_opts.flag("--single-scale", "single_scale", "use the single-scale restoration");
    dehaze_opts.flag("--save-intermediates", "save_intermediates", "also write t0.pfm, tm.pfm, airlight.json");
    dehaze_opts.option<std::string>("--airlight", "airlight", "R,G,B airlight replacing the estimate");
    dehaze_opts.option<std::string>("--transmission", "transmission", "PFM transmission replacing the estimate");
    dehaze_opts.option<std::string>("--a-delta", "a_delta", "R,G,B correction added to the airlight");
    dehaze_opts.option<std::string>("--t-delta", "t_delta", "PFM correction added to the transmission");

    CLI::App* evaluate = app.add_subcommand("evaluate", "Score restored images against references");
    Overrides eval_opts(evaluate);
    eval_opts.config();
    eval_opts.option<std::vector<std::string>>("--pair", "pairs", "RESTORED,REFERENCE (repeatable)");
    eval_opts.option<std::string>("--output", "output", "also write the CSV here");
    eval_opts.option<double>("--w-r", "w_r", "weight of the reconstruction loss (default 100)");
    eval_opts.option<double>("--w-e", "w_e", "weight of the extreme-channel loss (default 100)");

    CLI::App* simulate = app.add_subcommand("simulate-dynamics", "Linearised training-dynamics comparison");
    Overrides sim_opts(simulate);
    sim_opts.config();
    sim_opts.option<std::string>("--output-dir", "output_dir", "output directory");
    sim_opts.option<std::uint64_t>("--seed", "seed", "kernel / vector seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "hazelab: " << e.what() << "\n";
        return kInvalidInput;
    }

    try {
        if (synth->parsed()) {
            cmd_synthesize(synthesize_config(synth_opts.resolve()));
        } else if (dehaze->parsed()) {
            cmd_dehaze(dehaze_config(dehaze_opts.resolve()));
        } else if (evaluate->parsed()) {
            cmd_evaluate(evaluate_config(eval_opts.resolve()), out);
        } else if (simulate->parsed()) {
            cmd_simulate_dynamics(simulate_config(sim_opts.resolve()));
        }
    } catch (const InvalidInput& e) {
        err << "hazelab: invalid input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const IoError& e) {
        err << "hazelab: I/O error: " << e.what() << "\n";
        return kIoFailure;
    } catch (const NumericError& e) {
        err << "hazelab: numeric failure: " << e.what() << "\n";
        return kNumericFailure;
    }
    return kOk;
}

}  // namespace hazelab::cli
