#include "angspace/sampling.hpp"

#include <cmath>
#include <numbers>

namespace angspace {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed;
    const std::uint64_t a = splitmix64(s);
    std::uint64_t t = index ^ 0xD1B54A32D192ED03ULL;
    state_ = a ^ splitmix64(t);
}

std::uint64_t SampleStream::next_u64() { return splitmix64(state_); }

double SampleStream::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

Vec2 SampleStream::direction() {
    const double phi = uniform(0.0, 2.0 * std::numbers::pi);
    return {std::cos(phi), std::sin(phi)};
}

VectorSampler uniform_vectors(double r_min, double r_max) {
    const double lo = std::log(r_min);
    const double hi = std::log(r_max);
    return [lo, hi](SampleStream& s) {
        const Vec2 d = s.direction();
        return std::exp(s.uniform(lo, hi)) * d;
    };
}

}  // namespace angspace
