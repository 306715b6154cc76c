#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace hazelab {

enum class LearningRateSchedule { Constant, Cosine };

/// Linearised training dynamics dI/dtau = -eta(tau) * Theta0 * (I - T).
struct DynamicsConfig {
    Eigen::MatrixXd theta0;  // symmetric positive semidefinite tangent kernel
    double eta = 1.0;        // initial (or constant) learning rate
    LearningRateSchedule schedule = LearningRateSchedule::Constant;
    double eta_min = 0.0;    // cosine floor
    double horizon = 5.0;    // tau_max
    double step = 1e-3;      // explicit Euler step
    int samples = 50;        // recorded intervals; samples + 1 points including tau = 0
};

/// Throws InvalidInput unless theta0 is square, symmetric within 1e-12,
/// has eigenvalues >= -1e-10, and eta, step and horizon are positive.
void validate(const DynamicsConfig& cfg);

/// eta for a constant schedule; otherwise
/// eta_min + (eta - eta_min) * (1 + cos(pi * tau / horizon)) / 2.
double learning_rate(const DynamicsConfig& cfg, double tau);

struct TrajectoryRecord {
    std::vector<double> times;
    std::vector<double> residual_norms;  // |I_tau - T|_2 at `times`
    double initial_residual = 0.0;
    Eigen::VectorXd final_residual;
};

/// exp(-eta * Theta0 * tau) * r0 via symmetric eigendecomposition.
/// Only defined for the constant schedule.
Eigen::VectorXd closed_form_residual(const DynamicsConfig& cfg, const Eigen::VectorXd& r0, double tau);

/// Explicit Euler integration of the residual from I = i0 towards `target`.
/// Throws NumericError when |1 - eta * step * lambda| > 1 for some eigenvalue.
TrajectoryRecord euler_trajectory(const DynamicsConfig& cfg, const Eigen::VectorXd& i0, const Eigen::VectorXd& target);

struct DynamicsComparison {
    TrajectoryRecord augmented;    // starts at the model-based estimate
    TrajectoryRecord data_driven;  // starts from zero
};

/// Same kernel and schedule, two starting points: I_m and 0.
DynamicsComparison compare_augmented_vs_datadriven(const DynamicsConfig& cfg, const Eigen::VectorXd& i_model,
                                                   const Eigen::VectorXd& target);

// Tangent-kernel generators.
Eigen::MatrixXd identity_kernel(int n, double scale = 1.0);
/// G^T G with G an n x n matrix of N(0, 1/n) entries from the seeded stream.
Eigen::MatrixXd random_psd_kernel(int n, std::uint64_t seed);
Eigen::MatrixXd diagonal_kernel(const std::vector<double>& spectrum);

/// Header "tau,residual_norm_augmented,residual_norm_datadriven", one row per sample.
void write_trajectory_csv(std::ostream& os, const DynamicsComparison& cmp);

}  // namespace hazelab
