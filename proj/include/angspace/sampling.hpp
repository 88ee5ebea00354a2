#pragma once

#include <cstdint>
#include <functional>

#include "angspace/vec2.hpp"

namespace angspace {

/// Counter-seeded random stream. Each (seed, index) pair gets its own
/// independent stream, so a scan's i-th sample does not depend on how many
/// draws earlier samples made, and parallel or sequential scans agree.
class SampleStream {
public:
    SampleStream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64();
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Euclidean unit vector with uniformly distributed angle.
    Vec2 direction();

private:
    std::uint64_t state_;
};

using VectorSampler = std::function<Vec2(SampleStream&)>;

/// Uniform direction, Euclidean length log-uniform in [r_min, r_max].
VectorSampler uniform_vectors(double r_min = 0.1, double r_max = 10.0);

}  // namespace angspace
