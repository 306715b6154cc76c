#include "hazelab/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

#include "hazelab/error.hpp"
#include "hazelab/rng.hpp"

namespace hazelab {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kEigenFloor = -1e-10;

Eigen::VectorXd eigenvalues(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericError("eigendecomposition failed");
    }
    return solver.eigenvalues();
}

void require_dimension(const DynamicsConfig& cfg, const Eigen::VectorXd& v, const char* what) {
    if (v.size() != cfg.theta0.rows()) {
        throw InvalidInput(std::string(what) + ": vector length " + std::to_string(v.size()) +
                           " does not match kernel size " + std::to_string(cfg.theta0.rows()));
    }
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

void validate(const DynamicsConfig& cfg) {
    const auto& t = cfg.theta0;
    if (t.rows() == 0 || t.rows() != t.cols()) {
        throw InvalidInput("dynamics: theta0 must be a non-empty square matrix");
    }
    if (!t.allFinite()) {
        throw InvalidInput("dynamics: theta0 has non-finite entries");
    }
    if ((t - t.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol) {
        throw InvalidInput("dynamics: theta0 is not symmetric");
    }
    if (eigenvalues(t).minCoeff() < kEigenFloor) {
        throw InvalidInput("dynamics: theta0 is not positive semidefinite");
    }
    if (!(cfg.eta > 0.0) || !(cfg.step > 0.0) || !(cfg.horizon > 0.0)) {
        throw InvalidInput("dynamics: eta, step and horizon must be > 0");
    }
    if (cfg.eta_min < 0.0 || cfg.eta_min > cfg.eta) {
        throw InvalidInput("dynamics: eta_min must lie in [0, eta]");
    }
    if (cfg.samples < 1) {
        throw InvalidInput("dynamics: samples must be >= 1");
    }
}

double learning_rate(const DynamicsConfig& cfg, double tau) {
    if (cfg.schedule == LearningRateSchedule::Constant) {
        return cfg.eta;
    }
    return cfg.eta_min + 0.5 * (cfg.eta - cfg.eta_min) * (1.0 + std::cos(std::numbers::pi * tau / cfg.horizon));
}

Eigen::VectorXd closed_form_residual(const DynamicsConfig& cfg, const Eigen::VectorXd& r0, double tau) {
    validate(cfg);
    require_dimension(cfg, r0, "closed_form_residual");
    if (cfg.schedule != LearningRateSchedule::Constant) {
        throw InvalidInput("closed_form_residual: only defined for a constant learning rate");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cfg.theta0);
    if (solver.info() != Eigen::Success) {
        throw NumericError("closed_form_residual: eigendecomposition failed");
    }
    const Eigen::MatrixXd& q = solver.eigenvectors();
    const Eigen::VectorXd decay = (-cfg.eta * tau * solver.eigenvalues().array()).exp().matrix();
    return q * decay.asDiagonal() * (q.transpose() * r0);
}

TrajectoryRecord euler_trajectory(const DynamicsConfig& cfg, const Eigen::VectorXd& i0, const Eigen::VectorXd& target) {
    validate(cfg);
    require_dimension(cfg, i0, "euler_trajectory");
    require_dimension(cfg, target, "euler_trajectory");

    // The cosine schedule starts at eta and only decreases, so eta bounds every step.
    const Eigen::VectorXd lambda = eigenvalues(cfg.theta0);
    double amplification = 0.0;
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        amplification = std::max(amplification, std::abs(1.0 - cfg.eta * cfg.step * lambda[i]));
    }
    if (amplification > 1.0 + 1e-12) {
        throw NumericError("euler_trajectory: unstable step, |I - eta*step*Theta0| = " + format_number(amplification) +
                           " > 1");
    }

    const long long n_steps = std::max(1LL, std::llround(cfg.horizon / cfg.step));
    const long long samples = std::min<long long>(cfg.samples, n_steps);

    TrajectoryRecord rec;
    Eigen::VectorXd r = i0 - target;
    rec.initial_residual = r.norm();
    rec.times.reserve(static_cast<std::size_t>(samples) + 1);
    rec.residual_norms.reserve(static_cast<std::size_t>(samples) + 1);

    long long next_sample = 0;
    long long recorded = 0;
    for (long long k = 0; k <= n_steps; ++k) {
        if (k == next_sample) {
            rec.times.push_back(static_cast<double>(k) * cfg.step);
            rec.residual_norms.push_back(r.norm());
            ++recorded;
            next_sample = recorded <= samples ? (recorded * n_steps + samples / 2) / samples : -1;
        }
        if (k == n_steps) {
            break;
        }
        const double eta = learning_rate(cfg, static_cast<double>(k) * cfg.step);
        r -= (eta * cfg.step) * (cfg.theta0 * r);
    }
    rec.final_residual = std::move(r);
    return rec;
}

DynamicsComparison compare_augmented_vs_datadriven(const DynamicsConfig& cfg, const Eigen::VectorXd& i_model,
                                                   const Eigen::VectorXd& target) {
    DynamicsComparison out;
    out.augmented = euler_trajectory(cfg, i_model, target);
    out.data_driven = euler_trajectory(cfg, Eigen::VectorXd::Zero(target.size()), target);
    return out;
}

Eigen::MatrixXd identity_kernel(int n, double scale) {
    if (n < 1 || scale < 0.0) {
        throw InvalidInput("identity_kernel: need n >= 1 and scale >= 0");
    }
    return scale * Eigen::MatrixXd::Identity(n, n);
}

Eigen::MatrixXd random_psd_kernel(int n, std::uint64_t seed) {
    if (n < 1) {
        throw InvalidInput("random_psd_kernel: n must be >= 1");
    }
    Rng rng(mix_seed(seed, 0x7e7a));
    Eigen::MatrixXd g(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            g(i, j) = scale * rng.normal();
        }
    }
    Eigen::MatrixXd k = g.transpose() * g;
    // Exact symmetry regardless of summation order.
    return 0.5 * (k + k.transpose());
}

Eigen::MatrixXd diagonal_kernel(const std::vector<double>& spectrum) {
    if (spectrum.empty()) {
        throw InvalidInput("diagonal_kernel: empty spectrum");
    }
    Eigen::VectorXd d(static_cast<Eigen::Index>(spectrum.size()));
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        d[static_cast<Eigen::Index>(i)] = spectrum[i];
    }
    return d.asDiagonal();
}

void write_trajectory_csv(std::ostream& os, const DynamicsComparison& cmp) {
    const auto& a = cmp.augmented;
    const auto& d = cmp.data_driven;
    if (a.times.size() != d.times.size()) {
        throw InvalidInput("write_trajectory_csv: trajectories have different sample counts");
    }
    os << "tau,residual_norm_augmented,residual_norm_datadriven\n";
    for (std::size_t i = 0; i < a.times.size(); ++i) {
        os << format_number(a.times[i]) << ',' << format_number(a.residual_norms[i]) << ','
           << format_number(d.residual_norms[i]) << '\n';
    }
}

}  // namespace hazelab
