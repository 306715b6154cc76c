#pragma once

#include <array>
#include <vector>

#include "hazelab/image.hpp"
#include "hazelab/synthesis.hpp"

namespace hazelab {

inline constexpr int kDefaultRadius = 7;
inline constexpr int kDefaultDirections = 1000;

using Direction = std::array<double, 3>;

/// Dark-direct-attenuation initial transmission:
/// t0(p) = 1 - min over the window of min_c Z_c / A_c, clamped to [0,1].
TransmissionMap ddap_init(const RgbImage& hazy, const AtmosphericLight& airlight, int radius = kDefaultRadius);

/// `count` near-uniform unit vectors on the whole sphere (spherical
/// Fibonacci lattice). Direction i has z = 1 - (2i+1)/count, so the polar
/// angle increases strictly with i.
std::vector<Direction> fibonacci_directions(int count);

/// Pixels grouped by the direction of their colour shift Z(p) - A.
///
/// Clusters 0..K-1 correspond to `directions`; cluster K collects pixels
/// with r(p) == 0, whose shift has no direction.
struct HazeLinePartition {
    int width = 0;
    int height = 0;
    std::vector<Direction> directions;
    std::vector<int> cluster_of;  // per pixel, row-major
    GrayImage radius;             // r(p) = |Z(p) - A|
    std::vector<double> sum_r;    // per cluster, K + 1 entries
    std::vector<double> sum_t0;   // per cluster; filled when built with a t0 map
    std::vector<int> count;       // per cluster

    int cluster_count() const { return static_cast<int>(directions.size()); }
    int degenerate_cluster() const { return cluster_count(); }
};

/// Index of the direction with the largest cosine to the unit vector `u`;
/// the lowest index wins exact ties.
///
/// The search walks outward from the lattice row nearest u's polar angle
/// and stops on each side once cos(polar-angle gap), an upper bound on the
/// cosine of anything further away, drops below the best found.
int nearest_direction(const std::vector<Direction>& directions, const Direction& u);

HazeLinePartition build_haze_lines(const RgbImage& hazy, const AtmosphericLight& airlight,
                                   int n_directions = kDefaultDirections);
/// As above, also accumulating per-cluster sums of `t0`.
HazeLinePartition build_haze_lines(const RgbImage& hazy, const AtmosphericLight& airlight, const TransmissionMap& t0,
                                   int n_directions = kDefaultDirections);

/// Per-cluster sums of `field` over the partition's members (K + 1 entries).
std::vector<double> cluster_sums(const HazeLinePartition& part, const GrayImage& field);

/// Per-cluster ratio sum(t0) / sum(r); zero for empty and degenerate clusters.
std::vector<double> hla_ratios(const HazeLinePartition& part, const TransmissionMap& t0);

/// Haze-line averaging before clamping: t(p) = ratio(cluster(p)) * r(p),
/// with t0 kept for the degenerate cluster.
GrayImage hla_refine_raw(const TransmissionMap& t0, const HazeLinePartition& part);

/// hla_refine_raw clamped to [0,1].
TransmissionMap hla_refine(const TransmissionMap& t0, const HazeLinePartition& part);

struct ModelTransmission {
    TransmissionMap t0;
    TransmissionMap tm;
};

/// DDAP initialisation followed by haze-line averaging.
ModelTransmission estimate_transmission(const RgbImage& hazy, const AtmosphericLight& airlight,
                                        int radius = kDefaultRadius, int n_directions = kDefaultDirections);

}  // namespace hazelab
