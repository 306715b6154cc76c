#pragma once

#include <cstdint>
#include <random>

namespace hazelab {

/// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream = 0);

/// Seedable generator with a platform-independent stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The standard distributions are not, so the conversions to
/// uniform and normal variates are done here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Standard normal via Box-Muller, one variate per call.
    double normal();

private:
    std::mt19937_64 engine_;
};

}  // namespace hazelab
