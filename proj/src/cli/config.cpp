#include <cmath>
#include <sstream>

#include "hazelab/cli.hpp"
#include "hazelab/error.hpp"

namespace hazelab::cli {

namespace {

std::array<double, 3> triple_from_json(const Json& v, const char* key) {
    if (v.is_string()) {
        return parse_triple(v.get<std::string>());
    }
    if (v.is_array() && v.size() == 3) {
        return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
    }
    throw InvalidInput(std::string(key) + ": expected \"R,G,B\" or a 3-element array");
}

template <typename T>
void read(const Json& j, const char* key, T& target) {
    if (auto it = j.find(key); it != j.end() && !it->is_null()) {
        target = it->get<T>();
    }
}

template <typename T>
void read(const Json& j, const char* key, std::optional<T>& target) {
    if (auto it = j.find(key); it != j.end() && !it->is_null()) {
        target = it->get<T>();
    }
}

void read_triple(const Json& j, const char* key, std::optional<std::array<double, 3>>& target) {
    if (auto it = j.find(key); it != j.end() && !it->is_null()) {
        target = triple_from_json(*it, key);
    }
}

template <typename F>
auto guarded(F&& parse) {
    try {
        return parse();
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("config: ") + e.what());
    }
}

}  // namespace

std::array<double, 3> parse_triple(const std::string& text) {
    std::array<double, 3> out{};
    std::stringstream ss(text);
    std::string part;
    std::size_t n = 0;
    while (std::getline(ss, part, ',')) {
        if (n == 3) {
            throw InvalidInput("expected three comma-separated values, got '" + text + "'");
        }
        try {
            std::size_t used = 0;
            out[n] = std::stod(part, &used);
            if (used != part.size() || !std::isfinite(out[n])) {
                throw std::invalid_argument(part);
            }
        } catch (const std::logic_error&) {
            throw InvalidInput("not a number: '" + part + "' in '" + text + "'");
        }
        ++n;
    }
    if (n != 3) {
        throw InvalidInput("expected three comma-separated values, got '" + text + "'");
    }
    return out;
}

SynthesizeConfig synthesize_config(const Json& j) {
    return guarded([&] {
        SynthesizeConfig c;
        std::string input, output_dir = c.output_dir.string();
        read(j, "input", input);
        read(j, "output_dir", output_dir);
        c.input = input;
        c.output_dir = output_dir;
        read(j, "depth", c.depth);
        read(j, "seed", c.seed);
        read(j, "index", c.index);
        read(j, "alpha", c.alpha);
        read_triple(j, "airlight", c.airlight);
        if (c.input.empty()) {
            throw InvalidInput("synthesize: --input is required");
        }
        if (c.depth.empty()) {
            throw InvalidInput("synthesize: --depth is required");
        }
        return c;
    });
}

DehazeConfig dehaze_config(const Json& j) {
    return guarded([&] {
        DehazeConfig c;
        std::string input, output_dir = c.output_dir.string();
        std::optional<std::string> transmission, t_delta;
        read(j, "input", input);
        read(j, "output_dir", output_dir);
        read(j, "radius", c.radius);
        read(j, "directions", c.directions);
        read(j, "stop_size", c.stop_size);
        read(j, "single_scale", c.single_scale);
        read(j, "save_intermediates", c.save_intermediates);
        read_triple(j, "airlight", c.airlight);
        read_triple(j, "a_delta", c.a_delta);
        read(j, "transmission", transmission);
        read(j, "t_delta", t_delta);
        c.input = input;
        c.output_dir = output_dir;
        if (transmission) {
            c.transmission = *transmission;
        }
        if (t_delta) {
            c.t_delta = *t_delta;
        }
        if (c.input.empty()) {
            throw InvalidInput("dehaze: --input is required");
        }
        if (c.radius < 0 || c.directions < 1 || c.stop_size < 1) {
            throw InvalidInput("dehaze: need radius >= 0, directions >= 1, stop-size >= 1");
        }
        return c;
    });
}

EvaluateConfig evaluate_config(const Json& j) {
    return guarded([&] {
        EvaluateConfig c;
        if (auto it = j.find("pairs"); it != j.end()) {
            for (const Json& p : *it) {
                if (p.is_string()) {
                    const auto s = p.get<std::string>();
                    const auto comma = s.find(',');
                    if (comma == std::string::npos) {
                        throw InvalidInput("evaluate: pair '" + s + "' must be RESTORED,REFERENCE");
                    }
                    c.pairs.emplace_back(s.substr(0, comma), s.substr(comma + 1));
                } else if (p.is_array() && p.size() == 2) {
                    c.pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
                } else {
                    throw InvalidInput("evaluate: each pair must be \"A,B\" or [A, B]");
                }
            }
        }
        std::optional<std::string> output;
        read(j, "output", output);
        if (output) {
            c.output = *output;
        }
        read(j, "w_r", c.weights.recon);
        read(j, "w_e", c.weights.extreme);
        if (c.pairs.empty()) {
            throw InvalidInput("evaluate: at least one --pair is required");
        }
        return c;
    });
}

SimulateConfig simulate_config(const Json& j) {
    return guarded([&] {
        SimulateConfig c;
        std::string output_dir = c.output_dir.string();
        read(j, "dimension", c.dimension);
        read(j, "kernel", c.kernel);
        read(j, "kernel_scale", c.kernel_scale);
        read(j, "spectrum", c.spectrum);
        read(j, "seed", c.seed);
        read(j, "eta", c.eta);
        read(j, "schedule", c.schedule);
        read(j, "eta_min", c.eta_min);
        read(j, "horizon", c.horizon);
        read(j, "step", c.step);
        read(j, "samples", c.samples);
        read(j, "residual_ratio", c.residual_ratio);
        read(j, "collinear", c.collinear);
        read(j, "target", c.target);
        read(j, "model", c.model);
        read(j, "output_dir", output_dir);
        c.output_dir = output_dir;
        return c;
    });
}

}  // namespace hazelab::cli
