#pragma once

#include <cstdint>
#include <string_view>

namespace sphframe {

/// Counter-based pseudo-random stream built on SplitMix64.
///
/// Every draw is a pure function of (seed, stream, counter), so runs are
/// reproducible across platforms and independent of evaluation order.
/// Streams are derived from a root seed and a label, letting callers give
/// each purpose (node selection, signs, test points, ...) its own
/// non-overlapping sequence.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(mix(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)))) {}

    /// Derive a child stream from a label, e.g. rng.fork("signs").
    Rng fork(std::string_view label) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (char c : label) {
            h ^= static_cast<std::uint8_t>(c);
            h *= 0x100000001b3ULL;
        }
        return Rng(state_, h);
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        // Multiply-shift rejection-free bound; bias is < 2^-64, irrelevant here.
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// Random sign, +1 or -1.
    double sign() { return (next_u64() & 1) ? 1.0 : -1.0; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace sphframe
